#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace alab {

/// Fixed-size bitset over 0..n-1 with the handful of operations the clique
/// search needs.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return n_; }
  void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(std::size_t i) const { return words_[i >> 6] >> (i & 63) & 1ull; }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  /// Clear the bits of `o` from this set.
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  /// Lowest set bit, or size() when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct CliqueResult {
  std::vector<std::size_t> clique;  // best clique found, ascending ids
  std::size_t upper_bound = 0;      // certified bound on the maximum
  bool exact = false;
  std::uint64_t nodes = 0;
};

/// Branch-and-bound maximum clique with greedy-coloring bounds. Stops after
/// `budget` branch nodes (reporting certified bounds) or as soon as a clique
/// of size `target` is found.
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const std::vector<Bitset>& adj) : n_(adj.size()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::size_t> deg(n_);
    for (std::size_t v = 0; v < n_; ++v) deg[v] = adj[v].count();
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t v = 0; v < n_; ++v)
      adj[v].for_each([&](std::size_t w) {
        if (w != v) adj_[pos[v]].set(pos[w]);
      });
  }

  CliqueResult solve(std::uint64_t budget = std::numeric_limits<std::uint64_t>::max(),
                     std::size_t target = std::numeric_limits<std::size_t>::max()) {
    budget_ = budget;
    target_ = target;
    nodes_ = 0;
    aborted_ = false;
    best_.clear();
    current_.clear();

    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    greedy_seed(all);
    const std::size_t root_bound = n_ == 0 ? 0 : color_count(all);
    if (best_.size() < root_bound && best_.size() < target_) expand(all);

    CliqueResult res;
    for (auto v : best_) res.clique.push_back(order_[v]);
    std::sort(res.clique.begin(), res.clique.end());
    res.nodes = nodes_;
    const bool complete = !aborted_ && best_.size() < target_;
    res.exact = complete || best_.size() >= root_bound;
    res.upper_bound = res.exact ? best_.size() : std::max(root_bound, best_.size());
    return res;
  }

 private:
  void greedy_seed(Bitset cand) {
    std::vector<std::size_t> c;
    while (!cand.none()) {
      const std::size_t v = cand.first();
      c.push_back(v);
      cand &= adj_[v];
    }
    best_ = c;
  }

  std::size_t color_count(const Bitset& p) const {
    std::size_t colors = 0;
    Bitset uncolored = p;
    while (!uncolored.none()) {
      ++colors;
      Bitset q = uncolored;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncolored.reset(v);
      }
    }
    return colors;
  }

  // Greedy sequential coloring; vertices returned in color order.
  void color_sort(const Bitset& p, std::vector<std::size_t>& verts,
                  std::vector<std::size_t>& bounds) const {
    verts.clear();
    bounds.clear();
    Bitset uncolored = p;
    std::size_t color = 0;
    while (!uncolored.none()) {
      ++color;
      Bitset q = uncolored;
      while (!q.none()) {
        const std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_[v]);
        uncolored.reset(v);
        verts.push_back(v);
        bounds.push_back(color);
      }
    }
  }

  void expand(Bitset p) {
    std::vector<std::size_t> verts, bounds;
    color_sort(p, verts, bounds);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (aborted_ || best_.size() >= target_) return;
      if (current_.size() + bounds[i] <= best_.size()) return;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      const std::size_t v = verts[i];
      current_.push_back(v);
      Bitset np = p & adj_[v];
      if (np.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(np));
      }
      current_.pop_back();
      p.reset(v);
    }
  }

  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_, current_;
  std::uint64_t budget_ = 0, nodes_ = 0;
  std::size_t target_ = 0;
  bool aborted_ = false;
};

/// Maximum independent set of the graph given by `conflicts` (symmetric
/// adjacency bitsets), via maximum clique on the complement.
inline CliqueResult max_independent_set(const std::vector<Bitset>& conflicts,
                                        std::uint64_t budget = std::numeric_limits<std::uint64_t>::max()) {
  const std::size_t n = conflicts.size();
  std::vector<Bitset> comp(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w && !conflicts[v].test(w)) comp[v].set(w);
  return MaxCliqueSolver(comp).solve(budget);
}

}  // namespace alab
