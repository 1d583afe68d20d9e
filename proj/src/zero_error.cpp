#include "swapcodes/zero_error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "swapcodes/metric.hpp"

namespace swapcodes {

AlphabetPartition::AlphabetPartition(int q, std::vector<int> class0,
                                     std::vector<int> class1)
    : q_(q), class0_(std::move(class0)), class1_(std::move(class1)),
      lookup_(static_cast<std::size_t>(q), -1) {
  if (q < 2) throw std::invalid_argument("AlphabetPartition: q must be >= 2");
  if (class0_.empty() || class1_.empty())
    throw std::invalid_argument("AlphabetPartition: both classes must be nonempty");
  for (int s : class0_) {
    if (s < 0 || s >= q || lookup_[static_cast<std::size_t>(s)] != -1)
      throw std::invalid_argument("AlphabetPartition: classes must partition the alphabet");
    lookup_[static_cast<std::size_t>(s)] = 0;
  }
  for (int s : class1_) {
    if (s < 0 || s >= q || lookup_[static_cast<std::size_t>(s)] != -1)
      throw std::invalid_argument("AlphabetPartition: classes must partition the alphabet");
    lookup_[static_cast<std::size_t>(s)] = 1;
  }
  for (int value : lookup_)
    if (value == -1)
      throw std::invalid_argument("AlphabetPartition: classes must partition the alphabet");
  std::sort(class0_.begin(), class0_.end());
  std::sort(class1_.begin(), class1_.end());
}

AlphabetPartition AlphabetPartition::halves(int q) {
  if (q < 2) throw std::invalid_argument("AlphabetPartition::halves: q must be >= 2");
  std::vector<int> low, high;
  for (int s = 0; s < q; ++s) (s < q / 2 ? low : high).push_back(s);
  return AlphabetPartition(q, std::move(low), std::move(high));
}

AlphabetPartition AlphabetPartition::parse(int q, std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos)
    throw std::invalid_argument("AlphabetPartition::parse: expected 'a,b|c,d' format");
  auto parse_list = [&](std::string_view part) {
    // Copy out of the temporary before it is destroyed; iterating the
    // reference returned by symbols() directly would dangle.
    return std::vector<int>(QaryString::parse(q, part).symbols());
  };
  return AlphabetPartition(q, parse_list(text.substr(0, bar)),
                           parse_list(text.substr(bar + 1)));
}

int AlphabetPartition::class_of(int symbol) const {
  if (symbol < 0 || symbol >= q_)
    throw std::invalid_argument("AlphabetPartition::class_of: symbol out of range");
  return lookup_[static_cast<std::size_t>(symbol)];
}

namespace {

// Block shapes, described on the class indicator: length, size of the head
// run, and the class of the head run. The tail run (when present) has the
// opposite class. Shapes: ccc (3,3), c c'c'c' (4,1), cc c'c'c'c' (6,2).
struct BlockShape {
  int length;
  int head;
  int head_class;
};

constexpr BlockShape kShapes[] = {
    {3, 3, 0}, {3, 3, 1}, {4, 1, 0}, {4, 1, 1}, {6, 2, 0}, {6, 2, 1},
};

// The indicator of a codeword determines its block decomposition: after
// position p, the first block is fixed by the next two or three classes
// (c1 != c2 forces the length-4 shape; c2 == c3 the length-3 one; c2 != c3
// the length-6 one). Returns the block spans, or nothing if parsing fails.
std::optional<std::vector<std::pair<int, int>>> parse_spans(
    const std::vector<int>& indicator) {
  std::vector<std::pair<int, int>> spans;
  const int n = static_cast<int>(indicator.size());
  int pos = 0;
  while (pos < n) {
    if (n - pos < 3) return std::nullopt;
    const int c1 = indicator[static_cast<std::size_t>(pos)];
    const int c2 = indicator[static_cast<std::size_t>(pos + 1)];
    int length;
    if (c2 != c1) {
      length = 4;
    } else {
      const int c3 = indicator[static_cast<std::size_t>(pos + 2)];
      length = c3 == c1 ? 3 : 6;
    }
    if (pos + length > n) return std::nullopt;
    const int head = length == 3 ? 3 : (length == 4 ? 1 : 2);
    for (int i = 0; i < length; ++i) {
      const int expected = i < head ? c1 : 1 - c1;
      if (indicator[static_cast<std::size_t>(pos + i)] != expected)
        return std::nullopt;
    }
    spans.emplace_back(pos + 1, pos + length);  // 1-based, inclusive
    pos += length;
  }
  return spans;
}

std::vector<int> indicator_of(const QaryString& x,
                              const AlphabetPartition& partition) {
  std::vector<int> indicator;
  indicator.reserve(static_cast<std::size_t>(x.length()));
  for (int s : x.symbols()) indicator.push_back(partition.class_of(s));
  return indicator;
}

// Checks the concrete symbols of x against the parsed spans: each block is
// one or two runs of a repeated symbol with the right classes.
bool symbols_match_spans(const QaryString& x,
                         const AlphabetPartition& partition,
                         const std::vector<std::pair<int, int>>& spans) {
  for (const auto& [first, last] : spans) {
    const int length = last - first + 1;
    const int head = length == 3 ? 3 : (length == 4 ? 1 : 2);
    const int head_symbol = x.symbol(first - 1);
    for (int i = 1; i < head; ++i)
      if (x.symbol(first - 1 + i) != head_symbol) return false;
    if (length > head) {
      const int tail_symbol = x.symbol(first - 1 + head);
      if (partition.class_of(tail_symbol) == partition.class_of(head_symbol))
        return false;
      for (int i = head + 1; i < length; ++i)
        if (x.symbol(first - 1 + i) != tail_symbol) return false;
    }
  }
  return true;
}

}  // namespace

ZeroErrorCodebook::ZeroErrorCodebook(int n, AlphabetPartition partition)
    : n_(n), partition_(std::move(partition)) {
  if (n < 1) throw std::invalid_argument("ZeroErrorCodebook: n must be >= 1");
}

bool ZeroErrorCodebook::contains(const QaryString& x) const {
  if (x.q() != q() || x.length() != n_)
    throw std::invalid_argument("ZeroErrorCodebook::contains: string does not match");
  const auto spans = parse_spans(indicator_of(x, partition_));
  return spans && symbols_match_spans(x, partition_, *spans);
}

std::vector<QaryString> ZeroErrorCodebook::enumerate(
    std::uint64_t budget) const {
  const std::uint64_t effective =
      budget == limits::kDefaultBudget ? limits::kSpaceBudget : budget;
  const BigInt total = count();
  if (total > effective) {
    std::ostringstream msg;
    msg << "ZeroErrorCodebook::enumerate: " << total
        << " codewords, above the enumeration budget of " << effective;
    throw InstanceTooLarge(msg.str());
  }
  // Concrete blocks: (head symbol, tail symbol or -1, shape).
  std::vector<std::vector<int>> blocks;
  auto add_block = [&](int head, int head_symbol, int length, int tail_symbol) {
    std::vector<int> block;
    for (int i = 0; i < head; ++i) block.push_back(head_symbol);
    for (int i = head; i < length; ++i) block.push_back(tail_symbol);
    blocks.push_back(std::move(block));
  };
  const auto& a = partition_.class0();
  const auto& b = partition_.class1();
  for (int u : a) add_block(3, u, 3, -1);
  for (int v : b) add_block(3, v, 3, -1);
  for (int u : a)
    for (int v : b) {
      add_block(1, u, 4, v);
      add_block(1, v, 4, u);
      add_block(2, u, 6, v);
      add_block(2, v, 6, u);
    }
  std::vector<QaryString> words;
  std::vector<int> current;
  auto build = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == n_) {
      words.emplace_back(q(), current);
      return;
    }
    for (const auto& block : blocks) {
      if (static_cast<int>(current.size() + block.size()) > n_) continue;
      current.insert(current.end(), block.begin(), block.end());
      self(self);
      current.resize(current.size() - block.size());
    }
  };
  build(build);
  std::sort(words.begin(), words.end());
  return words;
}

BigInt ZeroErrorCodebook::count() const {
  return count_codewords(static_cast<int>(partition_.class0().size()),
                         static_cast<int>(partition_.class1().size()), n_);
}

BigInt count_codewords(int class0_size, int class1_size, int n) {
  if (class0_size < 1 || class1_size < 1)
    throw std::invalid_argument("count_codewords: class sizes must be >= 1");
  if (n < 0) return 0;
  const BigInt q = class0_size + class1_size;
  const BigInt cross = BigInt(2) * class0_size * class1_size;
  std::vector<BigInt> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int k = 1; k <= n; ++k) {
    BigInt value = 0;
    if (k >= 3) value += q * table[static_cast<std::size_t>(k - 3)];
    if (k >= 4) value += cross * table[static_cast<std::size_t>(k - 4)];
    if (k >= 6) value += cross * table[static_cast<std::size_t>(k - 6)];
    table[static_cast<std::size_t>(k)] = value;
  }
  return table[static_cast<std::size_t>(n)];
}

ZeroErrorDecoder::ZeroErrorDecoder(const ZeroErrorCodebook& codebook,
                                   bool force)
    : n_(codebook.n()), partition_(codebook.partition()) {
  require_ball_budget(2, n_, force, "ZeroErrorDecoder");
  // The class indicator commutes with swaps, so decoding first identifies
  // the indicator codeword whose descendants contain the received
  // indicator. Distinct images have disjoint descendant sets.
  const ZeroErrorCodebook binary(
      n_, AlphabetPartition(2, std::vector<int>{0}, std::vector<int>{1}));
  for (const QaryString& word : binary.enumerate(UINT64_MAX)) {
    const auto spans = parse_spans(word.symbols());
    if (!spans)
      throw std::logic_error("ZeroErrorDecoder: unparsable codebook word");
    const int index = static_cast<int>(indicator_words_.size());
    indicator_words_.push_back(word.symbols());
    spans_.push_back(*spans);
    const DescendantMap descendants = DescendantMap::build(word);
    for (const auto& [descendant, swaps] : descendants.entries()) {
      if (!owner_.emplace(descendant.symbols(), index).second)
        throw std::logic_error(
            "ZeroErrorDecoder: descendant sets of two codewords overlap");
    }
  }
}

QaryString ZeroErrorDecoder::decode(const QaryString& y) const {
  if (y.q() != partition_.q() || y.length() != n_)
    throw std::invalid_argument("ZeroErrorDecoder::decode: string does not match");
  const std::vector<int> received = indicator_of(y, partition_);
  const auto owner = owner_.find(received);
  if (owner == owner_.end())
    throw UncorrectableInput("decode: indicator is not reachable from any codeword");
  const std::vector<int>& sent = indicator_words_[static_cast<std::size_t>(owner->second)];
  const auto& spans = spans_[static_cast<std::size_t>(owner->second)];

  std::vector<int> locations;
  std::vector<int> symbols = y.symbols();
  // Indicator mismatches come in adjacent transposed pairs, one per swap
  // that crossed the classes; undo those swaps on the received string.
  for (int i = 0; i < n_; ++i) {
    if (received[static_cast<std::size_t>(i)] == sent[static_cast<std::size_t>(i)])
      continue;
    if (i + 1 >= n_ ||
        received[static_cast<std::size_t>(i)] != sent[static_cast<std::size_t>(i + 1)] ||
        received[static_cast<std::size_t>(i + 1)] != sent[static_cast<std::size_t>(i)])
      throw UncorrectableInput("decode: indicator damage is not a disjoint swap pattern");
    std::swap(symbols[static_cast<std::size_t>(i)],
              symbols[static_cast<std::size_t>(i + 1)]);
    locations.push_back(i + 1);  // 1-based location
    ++i;
  }

  // What remains are swaps invisible to the indicator. Inside a block they
  // permute equal symbols; across a boundary of equal classes they exchange
  // the tail symbol of one block with the head symbol of the next. The
  // second-to-last position of a block is never touched, so it exposes the
  // true tail symbol.
  for (std::size_t j = 0; j + 1 < spans.size(); ++j) {
    const int last = spans[j].second;              // 1-based
    const int witness = symbols[static_cast<std::size_t>(last - 2)];
    if (symbols[static_cast<std::size_t>(last - 1)] == witness) continue;
    if (sent[static_cast<std::size_t>(last - 1)] != sent[static_cast<std::size_t>(last)])
      throw UncorrectableInput("decode: tail symbol damaged across class boundary");
    std::swap(symbols[static_cast<std::size_t>(last - 1)],
              symbols[static_cast<std::size_t>(last)]);
    if (symbols[static_cast<std::size_t>(last - 1)] != witness)
      throw UncorrectableInput("decode: boundary repair failed");
    locations.push_back(last);
  }

  std::sort(locations.begin(), locations.end());
  for (std::size_t i = 0; i + 1 < locations.size(); ++i)
    if (locations[i + 1] - locations[i] < 2)
      throw UncorrectableInput("decode: recovered swaps are not disjoint");

  QaryString decoded(y.q(), std::move(symbols));
  const ZeroErrorCodebook codebook(n_, partition_);
  if (!codebook.contains(decoded))
    throw UncorrectableInput("decode: repaired string is not a codeword");
  std::vector<int> check = decoded.symbols();
  for (int k : locations)
    std::swap(check[static_cast<std::size_t>(k - 1)],
              check[static_cast<std::size_t>(k)]);
  if (check != y.symbols())
    throw UncorrectableInput("decode: recovered pattern does not reproduce the input");
  return decoded;
}

double growth_root(int class0_size, int class1_size) {
  if (class0_size < 1 || class1_size < 1)
    throw std::invalid_argument("growth_root: class sizes must be >= 1");
  const double q = class0_size + class1_size;
  const double cross = 2.0 * class0_size * class1_size;
  const auto poly = [&](double x) {
    const double x2 = x * x;
    const double x3 = x2 * x;
    return x3 * x3 - q * x3 - cross * x2 - cross;
  };
  double lo = 1.0;
  double hi = q + 1.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = (lo + hi) / 2;
    (poly(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

double growth_root(int q) {
  return growth_root(q / 2, q - q / 2);
}

double zero_error_rate(int q) { return std::log2(growth_root(q)); }

}  // namespace swapcodes
