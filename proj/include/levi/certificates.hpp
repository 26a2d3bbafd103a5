#pragma once

// Stand-alone checkers for the certificates produced by the classification
// searches. They read only the graph adjacency and the facet list, so a
// certificate can be re-verified without trusting the searcher.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "levi/bipartite.hpp"
#include "levi/complex.hpp"

namespace levi {

/// Position p holds the pair (x[p], y[p]).
struct VertexOrder {
  std::vector<int> x;
  std::vector<int> y;

  std::size_t size() const { return x.size(); }
  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;
};

namespace cert {

inline bool is_bijection(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int t : v) {
    if (t < 0 || t >= n || hit[t]) return false;
    hit[t] = 1;
  }
  return true;
}

/// (a) x_i y_i ∈ E and (b) x_i y_j ∈ E ⇒ i <= j.
inline bool is_pure_order(const BipartiteGraph& g, const VertexOrder& o) {
  const int n = g.x_count();
  if (g.y_count() != n || !is_bijection(o.x, n) || !is_bijection(o.y, n)) return false;
  for (int i = 0; i < n; ++i) {
    if (!g.adjacent(o.x[i], o.y[i])) return false;
    for (int j = 0; j < i; ++j) {
      if (g.adjacent(o.x[i], o.y[j])) return false;
    }
  }
  return true;
}

/// Pure order plus (c): x_i y_j, x_j y_k ∈ E ⇒ x_i y_k ∈ E.
inline bool satisfies_herzog_hibi(const BipartiteGraph& g, const VertexOrder& o) {
  if (!is_pure_order(g, o)) return false;
  const int n = static_cast<int>(o.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (g.adjacent(o.x[i], o.y[j]) && g.adjacent(o.x[j], o.y[k]) && !g.adjacent(o.x[i], o.y[k])) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Literal two-sided cross: x_i y_j and x_j y_i both edges for some i != j.
inline bool has_swap_cross(const BipartiteGraph& g, const VertexOrder& o) {
  const int n = static_cast<int>(o.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && g.adjacent(o.x[i], o.y[j]) && g.adjacent(o.x[j], o.y[i])) return true;
    }
  }
  return false;
}

/// Broken-triangle cross: i < j < k with x_i y_j, x_j y_k ∈ E but x_i y_k ∉ E.
inline bool has_triangle_cross(const BipartiteGraph& g, const VertexOrder& o) {
  const int n = static_cast<int>(o.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacent(o.x[i], o.y[j])) continue;
      for (int k = j + 1; k < n; ++k) {
        if (g.adjacent(o.x[j], o.y[k]) && !g.adjacent(o.x[i], o.y[k])) return true;
      }
    }
  }
  return false;
}

/// Shelling of a possibly non-pure complex: every facet F_j (j >= 2) meets the
/// earlier facets in a complex whose maximal faces all have size |F_j| - 1.
inline bool is_shelling(const std::vector<Face>& facets, const std::vector<Face>& order) {
  std::vector<Face> a = facets, b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Face fj = order[j];
    const int want = std::popcount(fj) - 1;
    std::vector<Face> meets;
    for (std::size_t i = 0; i < j; ++i) meets.push_back(order[i] & fj);
    for (Face m : meets) {
      bool dominated = false;
      for (Face other : meets) {
        if (other != m && (m & ~other) == 0) dominated = true;
      }
      if (!dominated && std::popcount(m) != want) return false;
    }
  }
  return true;
}

}  // namespace cert
}  // namespace levi
