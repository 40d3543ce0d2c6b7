#ifndef GDSPREAD_CLIQUES_HPP
#define GDSPREAD_CLIQUES_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "gdspread/errors.hpp"
#include "gdspread/graph.hpp"

namespace gdspread {

inline constexpr int kDefaultExactSearchCap = 40;

struct CliqueResult {
  int size = 0;
  std::vector<std::vector<int>> cliques;  // every maximum clique, each sorted, list sorted
};

struct IndependentSetResult {
  int size = 0;
  std::vector<int> set;  // lexicographically first maximum independent set
};

namespace detail {

using VertexMask = std::uint64_t;

// Bron-Kerbosch over bitmasks, pruned when |R| + |P| cannot reach the best
// size found so far. Ties are kept so that every maximum clique is reported.
class MaxCliqueSearch {
public:
  explicit MaxCliqueSearch(const Graph &g) : n_(g.order()), adj_(g.order(), 0) {
    for (const auto &[u, v] : g.edges()) {
      adj_[u] |= VertexMask{1} << v;
      adj_[v] |= VertexMask{1} << u;
    }
  }

  CliqueResult run() {
    const VertexMask all = n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
    expand(0, 0, all, 0);
    CliqueResult r;
    r.size = best_;
    for (VertexMask m : found_) {
      std::vector<int> c;
      for (VertexMask x = m; x; x &= x - 1)
        c.push_back(std::countr_zero(x));
      r.cliques.push_back(std::move(c));
    }
    std::sort(r.cliques.begin(), r.cliques.end());
    return r;
  }

private:
  void expand(VertexMask r, int r_size, VertexMask p, VertexMask x) {
    if (r_size + std::popcount(p) < best_)
      return;
    if (!p && !x) {
      if (r_size > best_) {
        best_ = r_size;
        found_.clear();
      }
      if (r_size == best_)
        found_.push_back(r);
      return;
    }
    if (!p)
      return;
    // Pivot on the vertex of P | X with most neighbours in P.
    int pivot = -1;
    int pivot_deg = -1;
    for (VertexMask m = p | x; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int d = std::popcount(p & adj_[u]);
      if (d > pivot_deg) {
        pivot = u;
        pivot_deg = d;
      }
    }
    for (VertexMask cand = p & ~adj_[pivot]; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const VertexMask bit = VertexMask{1} << v;
      expand(r | bit, r_size + 1, p & adj_[v], x & adj_[v]);
      p &= ~bit;
      x |= bit;
    }
  }

  int n_;
  std::vector<VertexMask> adj_;
  int best_ = 0;
  std::vector<VertexMask> found_;
};

inline void check_cap(const Graph &g, int cap) {
  if (g.order() > std::min(cap, 64))
    throw PreconditionError("exact clique search capped at " + std::to_string(std::min(cap, 64)) +
                            " vertices; graph has " + std::to_string(g.order()));
}

} // namespace detail

/// Clique number together with all cliques attaining it.
inline CliqueResult clique_number(const Graph &g, int cap = kDefaultExactSearchCap) {
  detail::check_cap(g, cap);
  return detail::MaxCliqueSearch(g).run();
}

inline IndependentSetResult independence_number(const Graph &g, int cap = kDefaultExactSearchCap) {
  detail::check_cap(g, cap);
  auto r = detail::MaxCliqueSearch(g.complement()).run();
  return {r.size, r.cliques.front()};
}

} // namespace gdspread

#endif // GDSPREAD_CLIQUES_HPP
