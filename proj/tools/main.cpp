// Command-line frontend: membership checks, channel simulation, decoding,
// bound curves, and the property-verification harness.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "swapcodes/asymptotics.hpp"
#include "swapcodes/errors.hpp"
#include "swapcodes/metric.hpp"
#include "swapcodes/qstring.hpp"
#include "swapcodes/single_codes.hpp"
#include "swapcodes/verify.hpp"
#include "swapcodes/zero_error.hpp"

namespace {

using namespace swapcodes;

std::string fixed9(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(9) << value;
  return os.str();
}

std::string sci9(double value) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(9) << value;
  return os.str();
}

std::uint64_t budget_for(bool force) {
  if (force) {
    std::cerr << "warning: resource limits overridden by --force; this may "
                 "take long and use significant memory\n";
    return std::numeric_limits<std::uint64_t>::max();
  }
  return limits::kDefaultBudget;
}

std::string join_ints(const std::vector<int>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << values[i];
  }
  return os.str();
}

std::vector<int> parse_locations(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string field = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      const int value = std::stoi(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
      out.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad location '" + field + "' in pattern");
    }
    pos = comma + 1;
  }
  return out;
}

// Flags shared by the check and decode subcommands.
struct ConstructionFlags {
  std::string construction;
  int q = 2;
  int n = 0;
  int p = 0;  // syndrome modulus; 0 selects the smallest valid prime
  int s1 = 0;
  int s2 = 0;
  int s = 0;  // parity offset of the binary construction
  std::string inner = "standard";
  std::string partition;  // zero_error classes, e.g. "0,1|2,3"
};

void add_construction_flags(CLI::App* cmd, ConstructionFlags& flags) {
  cmd->add_option("--construction", flags.construction, "code family")
      ->required()
      ->check(CLI::IsMember({"syndrome", "binary", "zero_error"}));
  cmd->add_option("--q", flags.q, "alphabet size");
  cmd->add_option("--n", flags.n, "block length")->required();
  cmd->add_option("--p", flags.p,
                  "syndrome modulus (default: smallest valid prime)");
  cmd->add_option("--s1", flags.s1, "first syndrome offset");
  cmd->add_option("--s2", flags.s2, "second syndrome offset");
  cmd->add_option("--s", flags.s, "binary parity offset (0 or 1)");
  cmd->add_option("--inner", flags.inner, "binary inner code")
      ->check(CLI::IsMember({"standard", "repetition", "hamming"}));
  cmd->add_option("--partition", flags.partition,
                  "zero_error classes, e.g. 0,1|2,3 (default: halves)");
}

QarySyndromeCode make_syndrome(const ConstructionFlags& f) {
  if (f.p != 0) return QarySyndromeCode(f.q, f.n, f.s1, f.s2, f.p);
  return QarySyndromeCode(f.q, f.n, f.s1, f.s2);
}

BinarySyndromeCode make_binary(const ConstructionFlags& f) {
  if (f.n < 2 || f.n % 2 != 0)
    throw std::invalid_argument("binary construction requires even n >= 2");
  const int m = f.n / 2;
  InnerCode inner = f.inner == "repetition"  ? InnerCode::repetition(m)
                    : f.inner == "hamming"   ? InnerCode::shortened_hamming(m)
                                             : InnerCode::standard(m);
  return BinarySyndromeCode(f.n, f.s, inner);
}

ZeroErrorCodebook make_zero_error(const ConstructionFlags& f) {
  AlphabetPartition partition =
      f.partition.empty() ? AlphabetPartition::halves(f.q)
                          : AlphabetPartition::parse(f.q, f.partition);
  return ZeroErrorCodebook(f.n, std::move(partition));
}

int run_check(const ConstructionFlags& f, const std::string& x_text, bool list,
              bool force) {
  if (x_text.empty() && !list)
    throw std::invalid_argument("check: provide --x and/or --list");
  const std::uint64_t budget = budget_for(force);
  const int q = f.construction == "binary" ? 2 : f.q;
  std::optional<QaryString> x;
  if (!x_text.empty()) {
    x = QaryString::parse(q, x_text);
    if (x->length() != f.n)
      throw std::invalid_argument("check: --x length does not match --n");
  }
  std::vector<QaryString> codewords;
  if (f.construction == "syndrome") {
    const QarySyndromeCode code = make_syndrome(f);
    if (x) std::cout << (is_codeword(*x, code) ? "true" : "false") << "\n";
    if (list) codewords = enumerate_codewords(code, budget).codewords();
  } else if (f.construction == "binary") {
    const BinarySyndromeCode code = make_binary(f);
    if (x) std::cout << (is_codeword(*x, code) ? "true" : "false") << "\n";
    if (list) codewords = enumerate_codewords(code, budget).codewords();
  } else {
    const ZeroErrorCodebook book = make_zero_error(f);
    if (x) std::cout << (book.contains(*x) ? "true" : "false") << "\n";
    if (list) codewords = book.enumerate(budget);
  }
  for (const QaryString& w : codewords) std::cout << w.to_string() << "\n";
  return 0;
}

int run_decode(const ConstructionFlags& f, const std::string& y_text,
               bool force) {
  const int q = f.construction == "binary" ? 2 : f.q;
  const QaryString y = QaryString::parse(q, y_text);
  if (y.length() != f.n)
    throw std::invalid_argument("decode: --y length does not match --n");
  QaryString x = y;
  if (f.construction == "syndrome") {
    x = decode_one_swap(y, make_syndrome(f));
  } else if (f.construction == "binary") {
    x = decode_one_swap(y, make_binary(f));
  } else {
    if (force) budget_for(force);  // emit the warning once
    const ZeroErrorDecoder decoder(make_zero_error(f), force);
    x = decoder.decode(y);
  }
  std::cout << x.to_string() << "\n";
  return 0;
}

int run_channel(int q, const std::string& x_text, const std::string& pattern_text,
                int t, const std::string& model_name, std::uint64_t seed) {
  const QaryString x = QaryString::parse(q, x_text);
  const ChannelModel model = model_name == "successive"
                                 ? ChannelModel::kSuccessive
                                 : ChannelModel::kDisjoint;
  TranspositionPattern pattern = TranspositionPattern::disjoint({});
  if (!pattern_text.empty()) {
    const std::vector<int> locations = parse_locations(pattern_text);
    pattern = model == ChannelModel::kDisjoint
                  ? TranspositionPattern::disjoint(locations)
                  : TranspositionPattern::successive(locations);
  } else {
    if (t < 0) throw std::invalid_argument("channel: provide --pattern or --t");
    pattern = random_pattern(x.length(), t, model, seed);
  }
  const QaryString y = apply_pattern(x, pattern);
  std::cout << "y: " << y.to_string() << "\n";
  std::cout << "pattern: "
            << (pattern.count() == 0 ? std::string("-")
                                     : join_ints(pattern.locations()))
            << "\n";
  std::cout << "model: "
            << (model == ChannelModel::kDisjoint ? "disjoint" : "successive")
            << "\n";
  return 0;
}

struct GridSpec {
  double from;
  double to;
  double step;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec grid{};
  const std::size_t first = text.find(':');
  const std::size_t second =
      first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("grid must look like from:to:step");
  try {
    grid.from = std::stod(text.substr(0, first));
    grid.to = std::stod(text.substr(first + 1, second - first - 1));
    grid.step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must hold three numbers: from:to:step");
  }
  if (grid.step <= 0.0 || grid.to < grid.from)
    throw std::invalid_argument("grid needs step > 0 and to >= from");
  return grid;
}

int run_bounds(int q, const std::string& what, const std::string& grid_text,
               std::optional<double> point, int n, int t) {
  if (what == "cardinality") {
    if (n <= 0 || t <= 0)
      throw std::invalid_argument("bounds cardinality requires --n and --t");
    const CardinalityBounds bounds =
        t == 1 ? cardinality_bounds_t1(q, n) : cardinality_bounds_t(q, n, t);
    std::cout << "n,t,lower,upper\n";
    std::cout << n << "," << t << "," << sci9(bounds.lower) << ","
              << sci9(bounds.upper) << "\n";
    return 0;
  }
  if (grid_text.empty() == !point.has_value())
    throw std::invalid_argument("bounds: provide exactly one of --grid/--point");
  if (what == "combined") {
    std::cout << "delta,r_gv,r_zero_error,r_half_log,r_combined\n";
    const auto emit = [](const RateCurvePoint& p) {
      std::cout << fixed9(p.delta) << "," << fixed9(p.r_gv) << ","
                << fixed9(p.r_zero_error) << "," << fixed9(p.r_half_log) << ","
                << fixed9(p.r_combined) << "\n";
    };
    if (point) {
      emit(combined_rate(q, *point));
    } else {
      const GridSpec grid = parse_grid(grid_text);
      for (const RateCurvePoint& p : rate_curve(q, grid.from, grid.to, grid.step))
        emit(p);
    }
    return 0;
  }
  const auto evaluate = [&](double at) {
    if (what == "alpha") return alpha(q, at);
    if (what == "beta") return beta(q, at);
    return gv_rate(q, at);
  };
  if (point) {
    std::cout << fixed9(evaluate(*point)) << "\n";
    return 0;
  }
  const GridSpec grid = parse_grid(grid_text);
  std::cout << (what == "gv" ? "delta,value" : "rho,value") << "\n";
  // Index-based stepping keeps the grid free of drift from repeated addition;
  // the last point is clamped so rounding never pushes it out of the domain.
  for (int i = 0;; ++i) {
    const double at = grid.from + i * grid.step;
    if (at > grid.to + grid.step * 1e-9) break;
    const double clamped = std::min(at, grid.to);
    std::cout << fixed9(clamped) << "," << fixed9(evaluate(clamped)) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int q, int max_n, bool force) {
  verify::SuiteCaps caps;
  caps.q = q;
  caps.max_n = max_n;
  caps.force = force;
  if (force) budget_for(force);  // emit the warning once
  std::vector<std::string> suites;
  if (suite.empty()) {
    suites = verify::suite_names();
  } else {
    suites.push_back(suite);
  }
  std::cout << "property,instances,verdict\n";
  bool all_passed = true;
  for (const std::string& name : suites) {
    for (const verify::PropertyResult& result : verify::run_suite(name, caps)) {
      std::cout << result.property << "," << result.instances << ","
                << (result.passed ? "pass" : "fail") << "\n";
      if (!result.passed) {
        all_passed = false;
        std::cerr << "# " << result.property << ": " << result.detail << "\n";
      }
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for codes correcting adjacent-symbol swaps"};
  app.require_subcommand(1);

  ConstructionFlags check_flags;
  std::string check_x;
  bool check_list = false;
  bool check_force = false;
  CLI::App* check = app.add_subcommand("check", "membership / codebook listing");
  add_construction_flags(check, check_flags);
  check->add_option("--x", check_x, "string to test, comma-separated symbols");
  check->add_flag("--list", check_list, "print every codeword");
  check->add_flag("--force", check_force, "override resource limits");

  int channel_q = 2;
  std::string channel_x;
  std::string channel_pattern;
  int channel_t = -1;
  std::string channel_model = "disjoint";
  std::uint64_t channel_seed = 0;
  CLI::App* channel = app.add_subcommand("channel", "apply swap patterns");
  channel->add_option("--q", channel_q, "alphabet size");
  channel->add_option("--x", channel_x, "input string")->required();
  channel->add_option("--pattern", channel_pattern,
                      "explicit swap locations, e.g. 1,4,9");
  channel->add_option("--t", channel_t, "number of random swaps");
  channel->add_option("--model", channel_model, "channel model")
      ->check(CLI::IsMember({"disjoint", "successive"}));
  channel->add_option("--seed", channel_seed, "PRNG seed for --t");

  ConstructionFlags decode_flags;
  std::string decode_y;
  bool decode_force = false;
  CLI::App* decode = app.add_subcommand("decode", "recover the sent codeword");
  add_construction_flags(decode, decode_flags);
  decode->add_option("--y", decode_y, "received string")->required();
  decode->add_flag("--force", decode_force, "override resource limits");

  int bounds_q = 2;
  std::string bounds_what;
  std::string bounds_grid;
  std::optional<double> bounds_point;
  int bounds_n = 0;
  int bounds_t = 0;
  CLI::App* bounds = app.add_subcommand("bounds", "rate bounds and curves");
  bounds->add_option("--q", bounds_q, "alphabet size")->required();
  bounds->add_option("--what", bounds_what, "which bound")
      ->required()
      ->check(CLI::IsMember({"alpha", "beta", "gv", "combined", "cardinality"}));
  bounds->add_option("--grid", bounds_grid, "grid as from:to:step");
  bounds->add_option("--point", bounds_point, "single evaluation point");
  bounds->add_option("--n", bounds_n, "length for cardinality bounds");
  bounds->add_option("--t", bounds_t, "radius for cardinality bounds");

  std::string verify_suite;
  int verify_q = 0;
  int verify_max_n = 0;
  bool verify_force = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run property suites");
  verify_cmd->add_option("--suite", verify_suite, "suite to run (default: all)")
      ->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--q", verify_q, "restrict to one alphabet size");
  verify_cmd->add_option("--max-n", verify_max_n, "override the length cap");
  verify_cmd->add_flag("--force", verify_force, "override resource limits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed())
      return run_check(check_flags, check_x, check_list, check_force);
    if (channel->parsed())
      return run_channel(channel_q, channel_x, channel_pattern, channel_t,
                         channel_model, channel_seed);
    if (decode->parsed()) return run_decode(decode_flags, decode_y, decode_force);
    if (bounds->parsed())
      return run_bounds(bounds_q, bounds_what, bounds_grid, bounds_point,
                        bounds_n, bounds_t);
    if (verify_cmd->parsed())
      return run_verify(verify_suite, verify_q, verify_max_n, verify_force);
  } catch (const UncorrectableInput& e) {
    std::cerr << "error: uncorrectable input (" << e.what() << ")\n";
    return 1;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "refusal: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
