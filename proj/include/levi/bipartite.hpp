#pragma once

// Levi graphs and the matching algorithms the regularity bounds consume.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/errors.hpp"

namespace levi {

using Edge = std::pair<int, int>;  // (x-index, y-index)

/// Simple bipartite graph with parts x_0..x_{s-1} (points) and y_0..y_{k-1}
/// (curves). Isolated vertices are allowed. Edges are kept sorted.
class BipartiteGraph {
 public:
  static constexpr int kMaxPart = 64;

  BipartiteGraph(int s, int k, std::vector<Edge> edges) : s_(s), k_(k), edges_(std::move(edges)) {
    if (s < 0 || k < 0) throw InputError("part sizes must be nonnegative");
    if (s > kMaxPart || k > kMaxPart) {
      throw CapExceeded("bipartite parts are limited to " + std::to_string(kMaxPart) + " vertices");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [x, y] = edges_[i];
      if (x < 0 || x >= s || y < 0 || y >= k) {
        throw InputError("edge (" + std::to_string(x) + "," + std::to_string(y) + ") out of range");
      }
      if (i > 0 && edges_[i - 1] == edges_[i]) {
        throw InputError("duplicate edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
    x_nbrs_.assign(s, 0);
    y_nbrs_.assign(k, 0);
    for (auto [x, y] : edges_) {
      x_nbrs_[x] |= std::uint64_t{1} << y;
      y_nbrs_[y] |= std::uint64_t{1} << x;
    }
  }

  int x_count() const { return s_; }
  int y_count() const { return k_; }
  int vertex_count() const { return s_ + k_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int x, int y) const { return (x_nbrs_[x] >> y) & 1U; }
  /// Bitmask over y-indices.
  std::uint64_t x_neighbors(int x) const { return x_nbrs_[x]; }
  /// Bitmask over x-indices.
  std::uint64_t y_neighbors(int y) const { return y_nbrs_[y]; }

  int x_degree(int x) const { return std::popcount(x_nbrs_[x]); }
  int y_degree(int y) const { return std::popcount(y_nbrs_[y]); }

  /// Variable names: x1..xs, then y1..yk.
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (int i = 0; i < s_; ++i) out.push_back("x" + std::to_string(i + 1));
    for (int j = 0; j < k_; ++j) out.push_back("y" + std::to_string(j + 1));
    return out;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.s_ == b.s_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }

 private:
  int s_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> x_nbrs_;
  std::vector<std::uint64_t> y_nbrs_;
};

/// Incidence graph of an arrangement: x_i joined to y_j iff point i lies on curve j.
inline BipartiteGraph levi_graph(const Arrangement& a) {
  std::vector<Edge> edges;
  for (int i = 0; i < a.point_count(); ++i) {
    for (int c : a.points()[i].curves) edges.emplace_back(i, c);
  }
  return BipartiteGraph(a.point_count(), a.curve_count(), std::move(edges));
}

// --- maximum matching -------------------------------------------------------

struct Matching {
  int size = 0;
  std::vector<Edge> edges;  // sorted by x
};

namespace detail {

// Augmenting-path search from y-vertices (Kuhn). match_x[x] = y or -1.
struct Kuhn {
  const BipartiteGraph& g;
  std::vector<int> match_x;
  std::vector<int> match_y;
  std::vector<char> seen_x;

  explicit Kuhn(const BipartiteGraph& graph)
      : g(graph), match_x(graph.x_count(), -1), match_y(graph.y_count(), -1) {}

  bool augment(int y) {
    for (int x = 0; x < g.x_count(); ++x) {
      if (!g.adjacent(x, y) || seen_x[x]) continue;
      seen_x[x] = 1;
      if (match_x[x] < 0 || augment(match_x[x])) {
        match_x[x] = y;
        match_y[y] = x;
        return true;
      }
    }
    return false;
  }

  void run() {
    for (int y = 0; y < g.y_count(); ++y) {
      seen_x.assign(g.x_count(), 0);
      augment(y);
    }
  }
};

}  // namespace detail

inline Matching max_matching(const BipartiteGraph& g) {
  detail::Kuhn kuhn(g);
  kuhn.run();
  Matching m;
  for (int x = 0; x < g.x_count(); ++x) {
    if (kuhn.match_x[x] >= 0) m.edges.emplace_back(x, kuhn.match_x[x]);
  }
  m.size = static_cast<int>(m.edges.size());
  return m;
}

enum class Side { x, y };

struct HallResult {
  bool pass = true;
  std::vector<int> violating;  // indices on the checked side, sorted
  int neighborhood_size = 0;   // |N(violating)|
};

/// Hall's condition on one side. A violating set is read off the alternating
/// forest grown from an unsaturated vertex of a maximum matching.
inline HallResult hall_check(const BipartiteGraph& g, Side side) {
  // Work with the checked side as "left" (rows of the adjacency).
  const int left = side == Side::y ? g.y_count() : g.x_count();
  const int right = side == Side::y ? g.x_count() : g.y_count();
  auto nbrs = [&](int v) {
    return side == Side::y ? g.y_neighbors(v) : g.x_neighbors(v);
  };

  std::vector<int> match_left(left, -1), match_right(right, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) {
    std::uint64_t n = nbrs(u);
    for (int v = 0; v < right; ++v) {
      if (!((n >> v) & 1U) || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = u;
        match_left[u] = v;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < left; ++u) {
    seen.assign(right, 0);
    augment(u);
  }

  HallResult result;
  auto free_it = std::find(match_left.begin(), match_left.end(), -1);
  if (free_it == match_left.end()) return result;

  // Alternating reachability from the first unsaturated vertex.
  std::vector<char> in_set(left, 0), reached(right, 0);
  std::vector<int> stack{static_cast<int>(free_it - match_left.begin())};
  in_set[stack.back()] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    std::uint64_t n = nbrs(u);
    for (int v = 0; v < right; ++v) {
      if (!((n >> v) & 1U) || reached[v]) continue;
      reached[v] = 1;
      int w = match_right[v];  // always matched, else the matching was not maximum
      if (w >= 0 && !in_set[w]) {
        in_set[w] = 1;
        stack.push_back(w);
      }
    }
  }
  result.pass = false;
  for (int u = 0; u < left; ++u) {
    if (in_set[u]) result.violating.push_back(u);
  }
  result.neighborhood_size = static_cast<int>(std::count(reached.begin(), reached.end(), 1));
  return result;
}

// --- induced matching -------------------------------------------------------

/// Maximum induced matching by exact backtracking. Throws CapExceeded when the
/// edge count is above `edge_cap`.
inline int induced_matching(const BipartiteGraph& g, int edge_cap = 40) {
  const auto& e = g.edges();
  const int m = static_cast<int>(e.size());
  if (m > edge_cap) {
    throw CapExceeded("induced matching: " + std::to_string(m) + " edges exceeds cap " +
                      std::to_string(edge_cap));
  }
  // ok[a][b]: edges a and b can both sit in an induced matching.
  std::vector<std::vector<char>> ok(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      auto [xa, ya] = e[a];
      auto [xb, yb] = e[b];
      ok[a][b] = xa != xb && ya != yb && !g.adjacent(xa, yb) && !g.adjacent(xb, ya);
    }
  }
  int best = 0;
  std::vector<int> chosen;
  std::function<void(int)> search = [&](int next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    if (static_cast<int>(chosen.size()) + (m - next) <= best) return;
    for (int c = next; c < m; ++c) {
      bool fits = std::all_of(chosen.begin(), chosen.end(), [&](int a) { return ok[a][c]; });
      if (!fits) continue;
      chosen.push_back(c);
      search(c + 1);
      chosen.pop_back();
      if (static_cast<int>(chosen.size()) + (m - c - 1) <= best) return;
    }
  };
  search(0);
  return best;
}

// --- degrees ----------------------------------------------------------------

struct DegreeProfile {
  std::vector<int> x_degrees;
  std::vector<int> y_degrees;
  int min_x_degree = 0;  // 0 when the part is empty
  int min_y_degree = 0;
  int max_degree = 0;
  std::vector<std::string> degree_one;  // vertex labels
  std::vector<std::string> isolated;
};

inline DegreeProfile degree_profile(const BipartiteGraph& g) {
  DegreeProfile p;
  auto labels = g.labels();
  for (int x = 0; x < g.x_count(); ++x) p.x_degrees.push_back(g.x_degree(x));
  for (int y = 0; y < g.y_count(); ++y) p.y_degrees.push_back(g.y_degree(y));
  if (!p.x_degrees.empty()) p.min_x_degree = *std::min_element(p.x_degrees.begin(), p.x_degrees.end());
  if (!p.y_degrees.empty()) p.min_y_degree = *std::min_element(p.y_degrees.begin(), p.y_degrees.end());
  std::vector<int> all = p.x_degrees;
  all.insert(all.end(), p.y_degrees.begin(), p.y_degrees.end());
  for (std::size_t v = 0; v < all.size(); ++v) {
    p.max_degree = std::max(p.max_degree, all[v]);
    if (all[v] == 1) p.degree_one.push_back(labels[v]);
    if (all[v] == 0) p.isolated.push_back(labels[v]);
  }
  return p;
}

/// The graph without its isolated vertices; `x_index[i]` and `y_index[j]` give
/// the original index of each kept vertex.
struct StrippedGraph {
  BipartiteGraph graph;
  std::vector<int> x_index;
  std::vector<int> y_index;
};

inline StrippedGraph strip_isolated(const BipartiteGraph& g) {
  std::vector<int> xs, ys, x_new(g.x_count(), -1), y_new(g.y_count(), -1);
  for (int x = 0; x < g.x_count(); ++x) {
    if (g.x_degree(x) > 0) {
      x_new[x] = static_cast<int>(xs.size());
      xs.push_back(x);
    }
  }
  for (int y = 0; y < g.y_count(); ++y) {
    if (g.y_degree(y) > 0) {
      y_new[y] = static_cast<int>(ys.size());
      ys.push_back(y);
    }
  }
  std::vector<Edge> edges;
  for (auto [x, y] : g.edges()) edges.emplace_back(x_new[x], y_new[y]);
  BipartiteGraph core(static_cast<int>(xs.size()), static_cast<int>(ys.size()), std::move(edges));
  return {std::move(core), std::move(xs), std::move(ys)};
}

}  // namespace levi
