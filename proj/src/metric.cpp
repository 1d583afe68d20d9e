#include "swapcodes/metric.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace swapcodes {

Distance Distance::of(int steps) {
  if (steps < 0) throw std::invalid_argument("Distance::of: negative step count");
  return Distance(steps);
}

int Distance::steps() const {
  if (!steps_) throw std::logic_error("Distance::steps: value is infinite");
  return *steps_;
}

std::string Distance::to_string() const {
  return steps_ ? std::to_string(*steps_) : "inf";
}

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
  if (a.steps_ && b.steps_) return *a.steps_ <=> *b.steps_;
  if (a.steps_) return std::strong_ordering::less;
  if (b.steps_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Code::Code(int q, int n, std::vector<QaryString> codewords)
    : q_(q), n_(n), codewords_(std::move(codewords)) {
  if (q < 2 || n < 0)
    throw std::invalid_argument("Code: q must be >= 2 and n >= 0");
  for (const QaryString& c : codewords_) {
    if (c.q() != q_ || c.length() != n_)
      throw std::invalid_argument("Code: codeword with mismatched q or length");
  }
  std::sort(codewords_.begin(), codewords_.end());
  if (std::adjacent_find(codewords_.begin(), codewords_.end()) !=
      codewords_.end())
    throw std::invalid_argument("Code: duplicate codeword");
}

namespace {

// Applies a disjoint location set to x without constructing a pattern
// object; locations are assumed admissible.
std::vector<int> apply_locations(const QaryString& x,
                                 const std::vector<int>& locations) {
  std::vector<int> symbols = x.symbols();
  for (int k : locations)
    std::swap(symbols[static_cast<std::size_t>(k - 1)],
              symbols[static_cast<std::size_t>(k)]);
  return symbols;
}

std::map<QaryString, int> descend_entries(const QaryString& origin,
                                          int max_swaps) {
  std::map<QaryString, int> entries;
  for_each_disjoint_pattern(
      origin.length(), max_swaps, [&](const std::vector<int>& locations) {
        QaryString image(origin.q(), apply_locations(origin, locations));
        const int count = static_cast<int>(locations.size());
        auto [it, inserted] = entries.try_emplace(std::move(image), count);
        if (!inserted && it->second > count) it->second = count;
      });
  return entries;
}

std::vector<QaryString> keys_of(const std::map<QaryString, int>& entries) {
  std::vector<QaryString> keys;
  keys.reserve(entries.size());
  for (const auto& [str, swaps] : entries) keys.push_back(str);
  return keys;
}

void require_comparable(const QaryString& x, const QaryString& y,
                        const char* who) {
  if (x.q() != y.q() || x.length() != y.length())
    throw std::invalid_argument(std::string(who) +
                                ": strings must share q and length");
}

bool sorted_ranges_intersect(const std::vector<QaryString>& a,
                             const std::vector<QaryString>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

}  // namespace

DescendantMap DescendantMap::build(const QaryString& origin, int max_swaps) {
  return DescendantMap(origin, descend_entries(origin, max_swaps));
}

std::optional<int> DescendantMap::swaps_to(const QaryString& target) const {
  const auto it = entries_.find(target);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::vector<QaryString> ball_disjoint(const QaryString& x, int t) {
  if (t < 0) throw std::invalid_argument("ball_disjoint: negative radius");
  return keys_of(descend_entries(x, t));
}

std::vector<QaryString> ball_successive(const QaryString& x, int t) {
  if (t < 0) throw std::invalid_argument("ball_successive: negative radius");
  std::set<QaryString> seen{x};
  std::deque<std::pair<QaryString, int>> queue{{x, 0}};
  while (!queue.empty()) {
    auto [current, depth] = queue.front();
    queue.pop_front();
    if (depth == t) continue;
    for (int k = 1; k <= x.length() - 1; ++k) {
      std::vector<int> symbols = current.symbols();
      std::swap(symbols[static_cast<std::size_t>(k - 1)],
                symbols[static_cast<std::size_t>(k)]);
      QaryString next(x.q(), std::move(symbols));
      if (seen.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return std::vector<QaryString>(seen.begin(), seen.end());
}

std::vector<QaryString> ball_distance(const QaryString& x, int t) {
  if (t < 0) throw std::invalid_argument("ball_distance: negative radius");
  // A disjoint pattern is an involution, so z lies in the descendant set of
  // y exactly when y lies in the descendant set of z. Hence every y with
  // distance(x, y) <= t arises by applying one location set to x and a
  // second one to the result, with at most t locations in total.
  const int n = x.length();
  const int q = x.q();
  std::vector<std::vector<int>> sets;
  for_each_disjoint_pattern(
      n, t, [&](const std::vector<int>& locations) { sets.push_back(locations); });
  std::stable_sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  // sets_within[k]: how many location sets have at most k locations.
  std::vector<std::size_t> sets_within(static_cast<std::size_t>(t) + 1, 0);
  for (const auto& s : sets)
    for (std::size_t k = s.size(); k <= static_cast<std::size_t>(t); ++k)
      ++sets_within[k];

  if (space_size(q, n) == std::uint64_t{1} << 63) {
    // Too large for the packed representation; take the direct route.
    std::set<QaryString> members;
    for (const auto& first : sets) {
      const QaryString z(q, apply_locations(x, first));
      const int left = t - static_cast<int>(first.size());
      for (std::size_t j = 0; j < sets_within[static_cast<std::size_t>(left)];
           ++j)
        members.emplace(q, apply_locations(z, sets[j]));
    }
    return std::vector<QaryString>(members.begin(), members.end());
  }

  // Pack each string into one integer, most significant symbol first, so
  // numeric order coincides with lexicographic order.
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i)
    weight[static_cast<std::size_t>(i)] =
        weight[static_cast<std::size_t>(i + 1)] * static_cast<std::uint64_t>(q);
  std::vector<std::uint64_t> codes;
  std::vector<int> scratch;
  for (const auto& first : sets) {
    const std::vector<int> z = apply_locations(x, first);
    const int left = t - static_cast<int>(first.size());
    for (std::size_t j = 0; j < sets_within[static_cast<std::size_t>(left)];
         ++j) {
      scratch = z;
      for (int k : sets[j])
        std::swap(scratch[static_cast<std::size_t>(k - 1)],
                  scratch[static_cast<std::size_t>(k)]);
      std::uint64_t code = 0;
      for (int i = 0; i < n; ++i)
        code += static_cast<std::uint64_t>(scratch[static_cast<std::size_t>(i)]) *
                weight[static_cast<std::size_t>(i)];
      codes.push_back(code);
    }
  }
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<QaryString> members;
  members.reserve(codes.size());
  for (std::uint64_t code : codes) {
    std::vector<int> symbols(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      symbols[static_cast<std::size_t>(i)] =
          static_cast<int>(code % static_cast<std::uint64_t>(q));
      code /= static_cast<std::uint64_t>(q);
    }
    members.emplace_back(q, std::move(symbols));
  }
  return members;
}

Distance distance(const QaryString& x, const QaryString& y) {
  require_comparable(x, y, "distance");
  if (x == y) return Distance::of(0);
  const auto from_x = descend_entries(x, -1);
  const auto from_y = descend_entries(y, -1);
  const auto& small = from_x.size() <= from_y.size() ? from_x : from_y;
  const auto& large = from_x.size() <= from_y.size() ? from_y : from_x;
  std::optional<int> best;
  for (const auto& [z, a] : small) {
    const auto it = large.find(z);
    if (it == large.end()) continue;
    const int total = a + it->second;
    if (!best || total < *best) best = total;
  }
  return best ? Distance::of(*best) : Distance::infinity();
}

Distance distance_successive(const QaryString& x, const QaryString& y) {
  require_comparable(x, y, "distance_successive");
  std::vector<int> mx = x.symbols();
  std::vector<int> my = y.symbols();
  std::sort(mx.begin(), mx.end());
  std::sort(my.begin(), my.end());
  if (mx != my) return Distance::infinity();
  if (x == y) return Distance::of(0);
  std::map<QaryString, int> dist{{x, 0}};
  std::deque<QaryString> queue{x};
  while (!queue.empty()) {
    const QaryString current = queue.front();
    queue.pop_front();
    const int depth = dist.at(current);
    for (int k = 1; k <= x.length() - 1; ++k) {
      std::vector<int> symbols = current.symbols();
      std::swap(symbols[static_cast<std::size_t>(k - 1)],
                symbols[static_cast<std::size_t>(k)]);
      QaryString next(x.q(), std::move(symbols));
      if (next == y) return Distance::of(depth + 1);
      if (dist.emplace(next, depth + 1).second) queue.push_back(std::move(next));
    }
  }
  // Unreachable: adjacent swaps connect all rearrangements of a multiset.
  return Distance::infinity();
}

Distance min_distance(const Code& code, DistanceKind kind) {
  const auto& words = code.codewords();
  Distance best = Distance::infinity();
  if (kind == DistanceKind::kSuccessive) {
    for (std::size_t i = 0; i < words.size(); ++i)
      for (std::size_t j = i + 1; j < words.size(); ++j)
        best = std::min(best, distance_successive(words[i], words[j]));
    return best;
  }
  std::vector<std::map<QaryString, int>> maps;
  maps.reserve(words.size());
  for (const QaryString& w : words) maps.push_back(descend_entries(w, -1));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const auto& small = maps[i].size() <= maps[j].size() ? maps[i] : maps[j];
      const auto& large = maps[i].size() <= maps[j].size() ? maps[j] : maps[i];
      for (const auto& [z, a] : small) {
        const auto it = large.find(z);
        if (it == large.end()) continue;
        best = std::min(best, Distance::of(a + it->second));
      }
    }
  }
  return best;
}

bool corrects(const Code& code, int t, ChannelModel model) {
  if (t < 0) throw std::invalid_argument("corrects: negative t");
  std::vector<std::vector<QaryString>> balls;
  balls.reserve(code.size());
  for (const QaryString& w : code.codewords())
    balls.push_back(model == ChannelModel::kDisjoint ? ball_disjoint(w, t)
                                                     : ball_successive(w, t));
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j)
      if (sorted_ranges_intersect(balls[i], balls[j])) return false;
  return true;
}

namespace {

// Strings grouped by symbol multiset. Swaps preserve the multiset, so all
// ball intersections happen inside one group.
std::map<std::vector<int>, std::vector<QaryString>> multiset_classes(int q,
                                                                     int n) {
  std::map<std::vector<int>, std::vector<QaryString>> classes;
  for_each_symbol_vector(q, n, [&](const std::vector<int>& symbols) {
    std::vector<int> key = symbols;
    std::sort(key.begin(), key.end());
    classes[std::move(key)].emplace_back(q, symbols);
  });
  return classes;
}

class MisSolver {
 public:
  MisSolver(int vertex_count, std::vector<std::vector<std::uint64_t>> adjacency)
      : nv_(vertex_count), adjacency_(std::move(adjacency)) {}

  std::vector<int> solve() {
    std::vector<std::uint64_t> all(words(), 0);
    for (int v = 0; v < nv_; ++v) set_bit(all, v);
    best_.clear();
    current_.clear();
    descend(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::size_t words() const {
    return static_cast<std::size_t>((nv_ + 63) / 64);
  }

  static void set_bit(std::vector<std::uint64_t>& bits, int v) {
    bits[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
  }

  static void clear_bit(std::vector<std::uint64_t>& bits, int v) {
    bits[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  static int popcount(const std::vector<std::uint64_t>& bits) {
    int total = 0;
    for (std::uint64_t w : bits) total += std::popcount(w);
    return total;
  }

  int degree_within(int v, const std::vector<std::uint64_t>& cand) const {
    int deg = 0;
    const auto& row = adjacency_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < row.size(); ++i)
      deg += std::popcount(row[i] & cand[i]);
    return deg;
  }

  void descend(std::vector<std::uint64_t> cand) {
    const int remaining = popcount(cand);
    if (static_cast<int>(current_.size()) + remaining <=
        static_cast<int>(best_.size()))
      return;
    if (remaining == 0) {
      best_ = current_;
      return;
    }
    int pivot = -1;
    int pivot_degree = -1;
    for (std::size_t w = 0; w < cand.size(); ++w) {
      std::uint64_t bits = cand[w];
      while (bits != 0) {
        const int v = static_cast<int>(w) * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const int deg = degree_within(v, cand);
        if (deg > pivot_degree) {
          pivot_degree = deg;
          pivot = v;
        }
      }
    }
    if (pivot_degree == 0) {
      // No edges left: everything remaining joins the set.
      for (std::size_t w = 0; w < cand.size(); ++w) {
        std::uint64_t bits = cand[w];
        while (bits != 0) {
          current_.push_back(static_cast<int>(w) * 64 + std::countr_zero(bits));
          bits &= bits - 1;
        }
      }
      if (current_.size() > best_.size()) best_ = current_;
      current_.resize(current_.size() - static_cast<std::size_t>(remaining));
      return;
    }
    std::vector<std::uint64_t> with_pivot = cand;
    clear_bit(with_pivot, pivot);
    const auto& row = adjacency_[static_cast<std::size_t>(pivot)];
    for (std::size_t i = 0; i < with_pivot.size(); ++i) with_pivot[i] &= ~row[i];
    current_.push_back(pivot);
    descend(std::move(with_pivot));
    current_.pop_back();
    clear_bit(cand, pivot);
    descend(std::move(cand));
  }

  int nv_;
  std::vector<std::vector<std::uint64_t>> adjacency_;
  std::vector<int> best_;
  std::vector<int> current_;
};

}  // namespace

int max_finite_distance(int q, int n, std::uint64_t budget) {
  require_space_budget(q, n, budget, "max_finite_distance");
  int best = 0;
  for (const auto& [key, members] : multiset_classes(q, n)) {
    if (members.size() < 2) continue;
    std::vector<std::map<QaryString, int>> maps;
    maps.reserve(members.size());
    for (const QaryString& s : members) maps.push_back(descend_entries(s, -1));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        for (const auto& [z, a] : maps[i]) {
          const auto it = maps[j].find(z);
          if (it != maps[j].end()) best = std::max(best, a + it->second);
        }
      }
    }
  }
  return best;
}

OptimalCodeResult optimal_code_search(int q, int n, int t, ChannelModel model,
                                      bool force) {
  if (t < 0) throw std::invalid_argument("optimal_code_search: negative t");
  require_ball_budget(q, n, force, "optimal_code_search");
  std::vector<QaryString> chosen;
  for (const auto& [key, members] : multiset_classes(q, n)) {
    const int count = static_cast<int>(members.size());
    std::vector<std::vector<QaryString>> balls;
    balls.reserve(members.size());
    for (const QaryString& s : members)
      balls.push_back(model == ChannelModel::kDisjoint ? ball_disjoint(s, t)
                                                       : ball_successive(s, t));
    const std::size_t word_count = static_cast<std::size_t>((count + 63) / 64);
    std::vector<std::vector<std::uint64_t>> adjacency(
        static_cast<std::size_t>(count),
        std::vector<std::uint64_t>(word_count, 0));
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        if (sorted_ranges_intersect(balls[static_cast<std::size_t>(i)],
                                    balls[static_cast<std::size_t>(j)])) {
          adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) / 64] |=
              std::uint64_t{1} << (j % 64);
          adjacency[static_cast<std::size_t>(j)][static_cast<std::size_t>(i) / 64] |=
              std::uint64_t{1} << (i % 64);
        }
      }
    }
    for (int v : MisSolver(count, std::move(adjacency)).solve())
      chosen.push_back(members[static_cast<std::size_t>(v)]);
  }
  Code witness(q, n, std::move(chosen));
  return OptimalCodeResult{witness.size(), std::move(witness)};
}

}  // namespace swapcodes
