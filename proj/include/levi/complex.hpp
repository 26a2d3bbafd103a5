#pragma once

// Simplicial complexes on at most 63 vertices (faces are bitmasks) and the
// functors linking them to monomial ideals: independence complex,
// Stanley-Reisner correspondence, Alexander duality, lcm-lattice intervals.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "levi/bipartite.hpp"
#include "levi/errors.hpp"
#include "levi/monomial.hpp"

namespace levi {

using Face = std::uint64_t;

inline constexpr std::size_t kDefaultFaceCap = std::size_t{1} << 18;

inline Face bit(int v) { return Face{1} << v; }

inline bool face_less(Face a, Face b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  return pa != pb ? pa < pb : a < b;
}

/// A complex stored by its facets. Two degenerate values are distinct: the
/// void complex (no faces at all) and the irrelevant complex {∅}.
class SimplicialComplex {
 public:
  static constexpr int kMaxVertices = 63;

  SimplicialComplex() = default;

  /// Reduces `facets` to its maximal elements. An empty list is the void complex.
  SimplicialComplex(int n, std::vector<Face> facets) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
      throw CapExceeded("simplicial complexes are limited to 63 vertices");
    }
    const Face all = n == 0 ? 0 : (~Face{0} >> (64 - n));
    for (Face f : facets) {
      if ((f & ~all) != 0) throw InputError("facet uses a vertex outside 0..n-1");
    }
    std::sort(facets.begin(), facets.end(), [](Face a, Face b) { return face_less(b, a); });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (Face f : facets) {
      bool covered = std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return (f & ~g) == 0; });
      if (!covered) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());
  }

  static SimplicialComplex void_complex(int n) { return {n, {}}; }
  static SimplicialComplex irrelevant(int n) { return {n, {0}}; }
  static SimplicialComplex simplex(int n) { return {n, {n == 0 ? 0 : (~Face{0} >> (64 - n))}}; }

  int vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }

  /// -1 for {∅}; -2 stands in for the void complex.
  int dimension() const {
    int best = -2;
    for (Face f : facets_) best = std::max(best, std::popcount(f) - 1);
    return best;
  }

  bool contains(Face f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return (f & ~g) == 0; });
  }

  /// Every face, sorted by size then value. Throws CapExceeded past `cap`.
  std::vector<Face> faces(std::size_t cap = kDefaultFaceCap) const {
    std::vector<Face> out;
    if (is_void()) return out;
    std::function<void(Face, int, const std::vector<Face>&)> grow =
        [&](Face face, int next, const std::vector<Face>& holders) {
          out.push_back(face);
          if (out.size() > cap) {
            throw CapExceeded("complex has more than " + std::to_string(cap) + " faces");
          }
          for (int v = next; v < n_; ++v) {
            std::vector<Face> sub;
            for (Face h : holders) {
              if (h & bit(v)) sub.push_back(h);
            }
            if (!sub.empty()) grow(face | bit(v), v + 1, sub);
          }
        };
    grow(0, 0, facets_);
    std::sort(out.begin(), out.end(), face_less);
    return out;
  }

  /// f-vector indexed by dimension + 1 (entry 0 counts the empty face).
  std::vector<long long> f_vector(std::size_t cap = kDefaultFaceCap) const {
    std::vector<long long> f;
    for (Face face : faces(cap)) {
      std::size_t slot = static_cast<std::size_t>(std::popcount(face));
      if (f.size() <= slot) f.resize(slot + 1, 0);
      ++f[slot];
    }
    return f;
  }

  /// Restriction to the vertex set `w` (same vertex numbering).
  SimplicialComplex induced(Face w) const {
    if (is_void()) return *this;
    std::vector<Face> restricted;
    for (Face f : facets_) restricted.push_back(f & w);
    return {n_, std::move(restricted)};
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<Face> facets_;
};

// --- graph and ideal functors ----------------------------------------------

/// Edge ideal in variables x1..xs, y1..yk.
inline MonomialIdeal edge_ideal(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<Monomial> gens;
  for (auto [x, y] : g.edges()) {
    Monomial m(n, 0);
    m[x] = 1;
    m[g.x_count() + y] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(g.labels(), std::move(gens));
}

/// Maximal independent sets, by Bron-Kerbosch with pivoting on the complement
/// graph. Vertex numbering: x_i -> i, y_j -> s + j.
inline SimplicialComplex independence_complex(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  if (n > SimplicialComplex::kMaxVertices) {
    throw CapExceeded("independence complex limited to 63 vertices");
  }
  const int s = g.x_count();
  const Face all = n == 0 ? 0 : (~Face{0} >> (64 - n));
  // free_of[v]: vertices that may share an independent set with v.
  std::vector<Face> free_of(n);
  for (int x = 0; x < s; ++x) free_of[x] = all & ~(g.x_neighbors(x) << s) & ~bit(x);
  for (int y = 0; y < g.y_count(); ++y) free_of[s + y] = all & ~g.y_neighbors(y) & ~bit(s + y);

  std::vector<Face> facets;
  std::function<void(Face, Face, Face)> expand = [&](Face r, Face p, Face x) {
    if (p == 0 && x == 0) {
      facets.push_back(r);
      return;
    }
    Face pool = p | x;
    int pivot = std::countr_zero(pool);
    int best = -1;
    for (Face t = pool; t; t &= t - 1) {
      int u = std::countr_zero(t);
      int c = std::popcount(p & free_of[u]);
      if (c > best) best = c, pivot = u;
    }
    for (Face cand = p & ~free_of[pivot]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      expand(r | bit(v), p & free_of[v], x & free_of[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  expand(0, all, 0);
  return {n, std::move(facets)};
}

/// Minimal non-faces as squarefree generators. The void complex gives <1>.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& delta,
                                           std::vector<std::string> labels = {},
                                           std::size_t cap = kDefaultFaceCap) {
  const int n = delta.vertex_count();
  if (labels.empty()) labels = default_labels(n);
  if (delta.is_void()) return MonomialIdeal(std::move(labels), {Monomial(n, 0)});
  std::vector<Face> faces = delta.faces(cap);
  std::vector<Face> by_value = faces;
  std::sort(by_value.begin(), by_value.end());
  auto is_face = [&](Face f) { return std::binary_search(by_value.begin(), by_value.end(), f); };

  std::vector<Monomial> gens;
  for (Face f : faces) {
    int start = f == 0 ? 0 : 64 - std::countl_zero(f);
    for (int v = start; v < n; ++v) {
      Face candidate = f | bit(v);
      if (is_face(candidate)) continue;
      bool minimal = true;
      for (Face t = f; t && minimal; t &= t - 1) {
        minimal = is_face(candidate & ~(t & -t));
      }
      if (minimal) gens.push_back(monomial_of_support(candidate, n));
    }
  }
  return MonomialIdeal(std::move(labels), std::move(gens));
}

/// Complex whose Stanley-Reisner ideal is `ideal`.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, std::size_t cap = kDefaultFaceCap) {
  if (!ideal.is_squarefree()) throw NonSquarefree();
  const int n = ideal.variable_count();
  if (ideal.is_unit()) return SimplicialComplex::void_complex(n);
  const std::vector<Face> nonfaces = ideal.supports();
  auto hits = [&](Face f) {
    return std::any_of(nonfaces.begin(), nonfaces.end(), [&](Face g) { return (g & ~f) == 0; });
  };
  std::vector<Face> facets;
  std::size_t visited = 0;
  std::function<void(Face, int)> grow = [&](Face face, int next) {
    if (++visited > cap) throw CapExceeded("complex has more than " + std::to_string(cap) + " faces");
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      if ((face & bit(v)) || hits(face | bit(v))) continue;
      maximal = false;
      if (v >= next) grow(face | bit(v), v + 1);
    }
    if (maximal) facets.push_back(face);
  };
  grow(0, 0);
  return {n, std::move(facets)};
}

/// Generators are the complements of the facets of the complex of `ideal`.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal, std::size_t cap = kDefaultFaceCap) {
  if (!ideal.is_squarefree()) throw NonSquarefree();
  const int n = ideal.variable_count();
  const Face all = n == 0 ? 0 : (~Face{0} >> (64 - n));
  SimplicialComplex delta = complex_of_ideal(ideal, cap);
  std::vector<Monomial> gens;
  for (Face f : delta.facets()) gens.push_back(monomial_of_support(all & ~f, n));
  return MonomialIdeal(ideal.labels(), std::move(gens));
}

// --- lcm lattice intervals --------------------------------------------------

/// Order complex of the open interval (0̂, m) of the lcm lattice; vertex v is
/// the v-th lattice element strictly below m, in lattice order.
inline SimplicialComplex open_interval_complex(const LcmLattice& lattice, const Monomial& m,
                                               std::size_t cap = kDefaultFaceCap) {
  std::vector<const Monomial*> below;
  for (const auto& e : lattice.elements) {
    if (e != m && divides(e, m)) below.push_back(&e);
  }
  const int n = static_cast<int>(below.size());
  if (n > SimplicialComplex::kMaxVertices) {
    throw CapExceeded("open interval has more than 63 elements");
  }
  // Lattice order is a linear extension, so chains are increasing index runs.
  std::vector<Face> up(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (divides(*below[a], *below[b])) up[a] |= bit(b);
    }
  }
  std::vector<Face> facets;
  std::size_t visited = 0;
  // A chain is maximal iff nothing fits below its minimum, between
  // consecutive members, or above its maximum.
  std::function<void(Face, int)> grow = [&](Face chain, int last) {
    if (++visited > cap) throw CapExceeded("order complex exceeds face cap");
    Face ext = last < 0 ? (n == 0 ? 0 : ~Face{0} >> (64 - n)) : up[last];
    if (ext == 0) {
      bool maximal = true;
      int prev = -1;
      for (Face t = chain; t && maximal; t &= t - 1) {
        int v = std::countr_zero(t);
        for (int w = prev + 1; w < v && maximal; ++w) {
          bool above_prev = prev < 0 || ((up[prev] >> w) & 1U);
          if (above_prev && ((up[w] >> v) & 1U)) maximal = false;
        }
        prev = v;
      }
      if (maximal) facets.push_back(chain);
      return;
    }
    for (Face t = ext; t; t &= t - 1) {
      int v = std::countr_zero(t);
      grow(chain | bit(v), v);
    }
  };
  grow(0, -1);
  return {n, std::move(facets)};
}

/// Upper Koszul simplicial complex K^m(I) = {F ⊆ supp m : m / x^F ∈ I}.
/// Its reduced homology in degree i - 2 is the multidegree-m part of the
/// i-th Betti number of S/I.
inline SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& m,
                                        std::size_t cap = kDefaultFaceCap) {
  const int n = ideal.variable_count();
  if (!ideal.contains(m)) return SimplicialComplex::void_complex(n);
  const Face supp = support(m);
  std::vector<Face> facets;
  std::size_t visited = 0;
  Monomial work = m;
  std::function<void(Face, int)> grow = [&](Face face, int next) {
    if (++visited > cap) throw CapExceeded("Koszul complex exceeds face cap");
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      if (!((supp >> v) & 1U) || (face & bit(v))) continue;
      --work[v];
      bool inside = ideal.contains(work);
      if (inside) {
        maximal = false;
        if (v >= next) grow(face | bit(v), v + 1);
      }
      ++work[v];
    }
    if (maximal) facets.push_back(face);
  };
  grow(0, 0);
  return {n, std::move(facets)};
}

}  // namespace levi
