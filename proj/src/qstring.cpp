#include "swapcodes/qstring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "swapcodes/bigint.hpp"
#include "swapcodes/prng.hpp"

namespace swapcodes {

QaryString::QaryString(int q, std::vector<int> symbols)
    : q_(q), symbols_(std::move(symbols)) {
  if (q < 2) throw std::invalid_argument("QaryString: alphabet size must be >= 2");
  for (int s : symbols_) {
    if (s < 0 || s >= q)
      throw std::invalid_argument("QaryString: symbol out of range [0, q)");
  }
}

QaryString QaryString::parse(int q, std::string_view text) {
  std::vector<int> symbols;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("QaryString::parse: bad symbol '" +
                                  std::string(field) + "'");
    symbols.push_back(value);
    pos = comma + 1;
  }
  return QaryString(q, std::move(symbols));
}

std::string QaryString::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i > 0) out << ',';
    out << symbols_[i];
  }
  return out.str();
}

TranspositionPattern TranspositionPattern::disjoint(std::vector<int> locations) {
  for (std::size_t i = 0; i < locations.size(); ++i) {
    if (locations[i] < 1)
      throw std::invalid_argument("disjoint pattern: locations are 1-based");
    if (i > 0 && locations[i] - locations[i - 1] < 2)
      throw std::invalid_argument(
          "disjoint pattern: locations must be increasing with gaps >= 2");
  }
  return TranspositionPattern(ChannelModel::kDisjoint, std::move(locations));
}

TranspositionPattern TranspositionPattern::successive(std::vector<int> locations) {
  for (int k : locations) {
    if (k < 1)
      throw std::invalid_argument("successive pattern: locations are 1-based");
  }
  return TranspositionPattern(ChannelModel::kSuccessive, std::move(locations));
}

int run_count(const QaryString& x) {
  if (x.length() == 0)
    throw std::invalid_argument("run_count: undefined for the empty string");
  int runs = 1;
  for (int i = 1; i < x.length(); ++i)
    if (x.symbol(i) != x.symbol(i - 1)) ++runs;
  return runs;
}

namespace {

void check_location(int k, int n, const char* who) {
  if (k < 1 || k > n - 1)
    throw std::invalid_argument(std::string(who) +
                                ": location outside 1..n-1");
}

}  // namespace

QaryString apply_disjoint(const QaryString& x, const TranspositionPattern& p) {
  if (p.model() != ChannelModel::kDisjoint)
    throw std::invalid_argument("apply_disjoint: pattern model mismatch");
  std::vector<int> symbols = x.symbols();
  for (int k : p.locations()) {
    check_location(k, x.length(), "apply_disjoint");
    std::swap(symbols[k - 1], symbols[k]);
  }
  return QaryString(x.q(), std::move(symbols));
}

QaryString apply_successive(const QaryString& x, const TranspositionPattern& p) {
  if (p.model() != ChannelModel::kSuccessive)
    throw std::invalid_argument("apply_successive: pattern model mismatch");
  std::vector<int> symbols = x.symbols();
  for (int k : p.locations()) {
    check_location(k, x.length(), "apply_successive");
    std::swap(symbols[k - 1], symbols[k]);
  }
  return QaryString(x.q(), std::move(symbols));
}

QaryString apply_pattern(const QaryString& x, const TranspositionPattern& p) {
  return p.model() == ChannelModel::kDisjoint ? apply_disjoint(x, p)
                                              : apply_successive(x, p);
}

TranspositionPattern random_pattern(int n, int t, ChannelModel model,
                                    std::uint64_t seed) {
  if (t < 0) throw std::invalid_argument("random_pattern: t must be >= 0");
  std::mt19937_64 rng(seed);
  if (model == ChannelModel::kSuccessive) {
    if (t > 0 && n < 2)
      throw std::invalid_argument("random_pattern: no locations exist for n < 2");
    std::vector<int> locations(static_cast<std::size_t>(t));
    for (int& k : locations)
      k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 1)));
    return TranspositionPattern::successive(std::move(locations));
  }
  // A disjoint location set {k_1 < ... < k_t} with gaps >= 2 corresponds to
  // the plain t-subset {k_j - (j-1)} of {1, ..., n-t}; sampling the subset
  // uniformly and mapping back gives the uniform distribution over patterns.
  if (2 * t > n)
    throw std::invalid_argument("random_pattern: more than n/2 disjoint swaps");
  std::vector<int> pool(static_cast<std::size_t>(n - t));
  for (int i = 0; i < n - t; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int j = 0; j < t; ++j) {
    const auto pick =
        j + static_cast<int>(uniform_below(
                rng, static_cast<std::uint64_t>(n - t - j)));
    std::swap(pool[static_cast<std::size_t>(j)], pool[static_cast<std::size_t>(pick)]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + t);
  std::sort(chosen.begin(), chosen.end());
  for (int j = 0; j < t; ++j) chosen[static_cast<std::size_t>(j)] += j;
  return TranspositionPattern::disjoint(std::move(chosen));
}

void for_each_disjoint_pattern(
    int n, int max_locations,
    const std::function<void(const std::vector<int>&)>& visit) {
  const int cap = max_locations < 0 ? n / 2 : max_locations;
  std::vector<int> current;
  auto step = [&](auto&& self, int from) -> void {
    visit(current);
    if (static_cast<int>(current.size()) >= cap) return;
    for (int k = from; k <= n - 1; ++k) {
      current.push_back(k);
      self(self, k + 2);
      current.pop_back();
    }
  };
  step(step, 1);
}

std::uint64_t disjoint_pattern_count(int n, int s) {
  return binomial(n - s, s).convert_to<std::uint64_t>();
}

void for_each_symbol_vector(
    int q, int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> symbols(static_cast<std::size_t>(n), 0);
  for (;;) {
    visit(symbols);
    int i = n - 1;
    while (i >= 0 && symbols[static_cast<std::size_t>(i)] == q - 1) {
      symbols[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return;
    ++symbols[static_cast<std::size_t>(i)];
  }
}

}  // namespace swapcodes
