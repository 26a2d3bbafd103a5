#pragma once

// Cohen-Macaulay and sequentially Cohen-Macaulay classification of bipartite
// edge rings, with re-checkable certificates, plus the projective dimension
// and regularity bounds for arrangement Levi graphs.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/rational.hpp>

#include "levi/arrangement.hpp"
#include "levi/bipartite.hpp"
#include "levi/certificates.hpp"
#include "levi/complex.hpp"
#include "levi/errors.hpp"
#include "levi/resolution.hpp"

namespace levi {

using Rational = boost::rational<long long>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// --- Cohen-Macaulay: ordering criterion -------------------------------------

struct HerzogHibiResult {
  std::optional<VertexOrder> order;
  std::string witness;  // why no ordering exists, when order is empty
  long long matchings_examined = 0;
};

namespace detail {

inline std::string pair_label(int x, int y) {
  return "x" + std::to_string(x + 1) + "y" + std::to_string(y + 1);
}

inline void require_part_cap(const BipartiteGraph& g, int cap) {
  if (g.x_count() > cap) {
    throw CapExceeded("ordering search: parts of size " + std::to_string(g.x_count()) + " exceed cap " +
                      std::to_string(cap));
  }
}

}  // namespace detail

/// Searches for orderings x_1..x_n, y_1..y_n with (a) x_i y_i ∈ E,
/// (b) x_i y_j ∈ E ⇒ i <= j, (c) x_i y_j, x_j y_k ∈ E ⇒ x_i y_k ∈ E.
///
/// (a) fixes a perfect matching; given one, (b) and (c) say the relation
/// "x_a adjacent to y_b" between matched pairs is a strict partial order, and
/// the ordering is any linear extension. The search enumerates perfect
/// matchings pair by pair, pruning as soon as the assigned pairs contain a
/// two-cycle or an intransitive triple.
inline HerzogHibiResult herzog_hibi_search(const BipartiteGraph& g, int part_cap = 12) {
  HerzogHibiResult result;
  const int n = g.x_count();
  if (n != g.y_count()) {
    result.witness = "parts differ in size (" + std::to_string(n) + " points, " + std::to_string(g.y_count()) +
                     " curves)";
    return result;
  }
  detail::require_part_cap(g, part_cap);
  if (HallResult hall = hall_check(g, Side::x); !hall.pass) {
    result.witness = "no perfect matching: " + std::to_string(hall.violating.size()) + " x-vertices have only " +
                     std::to_string(hall.neighborhood_size) + " neighbours";
    return result;
  }

  std::vector<int> partner(n, -1);  // partner[x] = y
  std::uint64_t used_y = 0;
  std::vector<int> assigned;
  // rel(a, b): pair of x_a points at pair of x_b.
  auto rel = [&](int a, int b) { return g.adjacent(a, partner[b]); };

  auto conflict = [&](int c) -> std::string {
    for (int a : assigned) {
      if (a == c) continue;
      if (rel(a, c) && rel(c, a)) return detail::pair_label(a, partner[c]) + " and " + detail::pair_label(c, partner[a]) + " form a cycle";
      for (int b : assigned) {
        if (b == a || b == c) continue;
        // Every intransitive triple that involves c.
        const int t[3][3] = {{a, b, c}, {a, c, b}, {c, a, b}};
        for (const auto& [i, j, k] : t) {
          if (rel(i, j) && rel(j, k) && !rel(i, k)) {
            return detail::pair_label(i, partner[j]) + ", " + detail::pair_label(j, partner[k]) + " in E but " +
                   detail::pair_label(i, partner[k]) + " not";
          }
        }
      }
    }
    return {};
  };

  bool found = false;
  std::function<void(int)> assign = [&](int x) {
    if (found) return;
    if (x == n) {
      ++result.matchings_examined;
      found = true;
      return;
    }
    for (int y = 0; y < n && !found; ++y) {
      if (!g.adjacent(x, y) || ((used_y >> y) & 1U)) continue;
      partner[x] = y;
      used_y |= std::uint64_t{1} << y;
      assigned.push_back(x);
      std::string why = conflict(x);
      if (why.empty()) {
        assign(x + 1);
      } else if (result.witness.empty()) {
        result.witness = why;
      }
      if (found) return;
      assigned.pop_back();
      used_y &= ~(std::uint64_t{1} << y);
      partner[x] = -1;
    }
  };
  assign(0);
  if (!found) {
    if (result.witness.empty()) result.witness = "no admissible perfect matching";
    result.witness = "every perfect matching fails; first conflict: " + result.witness;
    return result;
  }

  // Linear extension, smallest available x first.
  VertexOrder order;
  std::vector<char> placed(n, 0);
  for (int step = 0; step < n; ++step) {
    for (int a = 0; a < n; ++a) {
      if (placed[a]) continue;
      bool minimal = true;
      for (int b = 0; b < n && minimal; ++b) {
        if (b != a && !placed[b] && rel(b, a)) minimal = false;
      }
      if (minimal) {
        placed[a] = 1;
        order.x.push_back(a);
        order.y.push_back(partner[a]);
        break;
      }
    }
  }
  result.order = std::move(order);
  result.witness.clear();
  return result;
}

/// Pure order (a), (b) free of crosses. A two-sided cross x_i y_j, x_j y_i is
/// already excluded by (b), so crosses are also taken in the broken-triangle
/// sense x_i y_j, x_j y_k ∈ E, x_i y_k ∉ E for i < j < k. Pairs are placed
/// position by position; dead states (set of placed pairs) are memoized.
inline std::optional<VertexOrder> cross_free_pure_order(const BipartiteGraph& g, int part_cap = 12) {
  const int n = g.x_count();
  if (n != g.y_count()) return std::nullopt;
  detail::require_part_cap(g, part_cap);

  std::vector<int> y_of(n, -1);  // placed x -> its y
  VertexOrder order;
  std::uint64_t used_x = 0, used_y = 0;
  std::unordered_set<std::string> dead;
  auto key = [&] { return std::string(y_of.begin(), y_of.end()); };

  std::function<bool()> place = [&]() -> bool {
    if (static_cast<int>(order.size()) == n) return true;
    std::string k = key();
    if (dead.count(k)) return false;
    for (int x = 0; x < n; ++x) {
      if ((used_x >> x) & 1U) continue;
      if (g.x_neighbors(x) & used_y) continue;  // (b) against earlier positions
      for (int y = 0; y < n; ++y) {
        if (((used_y >> y) & 1U) || !g.adjacent(x, y)) continue;
        bool crossed = false;
        const int m = static_cast<int>(order.size());
        for (int j = 0; j < m && !crossed; ++j) {
          if (!g.adjacent(order.x[j], y)) continue;
          for (int i = 0; i < j && !crossed; ++i) {
            crossed = g.adjacent(order.x[i], order.y[j]) && !g.adjacent(order.x[i], y);
          }
        }
        if (crossed) continue;
        order.x.push_back(x);
        order.y.push_back(y);
        y_of[x] = y;
        used_x |= std::uint64_t{1} << x;
        used_y |= std::uint64_t{1} << y;
        if (place()) return true;
        used_x &= ~(std::uint64_t{1} << x);
        used_y &= ~(std::uint64_t{1} << y);
        y_of[x] = -1;
        order.x.pop_back();
        order.y.pop_back();
      }
    }
    dead.insert(std::move(k));
    return false;
  };
  if (!place()) return std::nullopt;
  return order;
}

// --- sequentially Cohen-Macaulay: shellability ------------------------------

struct ShellabilityVerdict {
  bool shellable = false;
  int stage = 0;                // 1 trivial, 2 degree-1 rejection, 3 exhaustive search
  std::vector<Face> shelling;   // facets of the independence complex, in order
  std::string obstruction;
};

/// Shellability of the independence complex of a bipartite graph.
///
/// Isolated vertices are cone points and do not affect shellability. Without
/// them, a shellable bipartite graph has a vertex of degree one, which gives a
/// quick rejection. Otherwise the facets are searched exhaustively; by the
/// rearrangement lemma for non-pure shellings it suffices to try orders of
/// weakly decreasing facet size.
inline ShellabilityVerdict is_shellable(const BipartiteGraph& g, std::size_t facet_cap = 24) {
  ShellabilityVerdict v;
  if (g.edges().empty()) {
    v.shellable = true;
    v.stage = 1;
    v.shelling = independence_complex(g).facets();
    return v;
  }
  if (degree_profile(g).degree_one.empty()) {
    v.stage = 2;
    v.obstruction = "no degree-1 vertex once isolated vertices are removed";
    return v;
  }

  v.stage = 3;
  const SimplicialComplex delta = independence_complex(g);
  std::vector<Face> facets = delta.facets();
  if (facets.size() > facet_cap) {
    throw CapExceeded("shelling search: " + std::to_string(facets.size()) + " facets exceed cap " +
                      std::to_string(facet_cap));
  }
  std::stable_sort(facets.begin(), facets.end(),
                   [](Face a, Face b) { return std::popcount(a) > std::popcount(b); });
  const int m = static_cast<int>(facets.size());

  auto extends = [&](std::uint64_t chosen, int next) {
    if (chosen == 0) return true;
    const Face f = facets[next];
    const int want = std::popcount(f) - 1;
    for (std::uint64_t t = chosen; t; t &= t - 1) {
      const Face meet = facets[std::countr_zero(t)] & f;
      bool inside_ridge = false;
      for (std::uint64_t u = chosen; u && !inside_ridge; u &= u - 1) {
        const Face other = facets[std::countr_zero(u)] & f;
        inside_ridge = std::popcount(other) == want && (meet & ~other) == 0;
      }
      if (!inside_ridge) return false;
    }
    return true;
  };

  std::unordered_set<std::uint64_t> dead;
  std::vector<int> order;
  std::function<bool(std::uint64_t)> search = [&](std::uint64_t chosen) -> bool {
    if (static_cast<int>(order.size()) == m) return true;
    if (dead.count(chosen)) return false;
    const int cur = order.empty() ? 64 : std::popcount(facets[order.back()]);
    for (int f = 0; f < m; ++f) {
      if ((chosen >> f) & 1U) continue;
      if (std::popcount(facets[f]) > cur) continue;
      if (!extends(chosen, f)) continue;
      order.push_back(f);
      if (search(chosen | (std::uint64_t{1} << f))) return true;
      order.pop_back();
    }
    dead.insert(chosen);
    return false;
  };
  if (search(0)) {
    v.shellable = true;
    for (int f : order) v.shelling.push_back(facets[f]);
  } else {
    v.obstruction = "exhaustive search over " + std::to_string(m) + " facets found no shelling";
  }
  return v;
}

// --- combined verdict -------------------------------------------------------

struct ClassifyOptions {
  int part_cap = 12;
  std::size_t facet_cap = 24;
};

/// Orders refer to the original vertex indices and list only non-isolated
/// vertices; isolated vertices are cone points and are set aside first.
struct ClassificationVerdict {
  std::vector<std::string> isolated;
  bool is_cm = false;
  bool is_buchsbaum = false;  // CM, or complete bipartite without isolated vertices
  HerzogHibiResult ordering;
  std::optional<VertexOrder> cross_free;
  bool is_scm = false;
  ShellabilityVerdict shelling;
  std::string note;
};

inline const char* kBipartiteEquivalenceNote =
    "for bipartite edge rings: Cohen-Macaulay <=> Buchsbaum (non-complete bipartite G) <=> "
    "k-Buchsbaum for some k; sequentially Cohen-Macaulay <=> shellable";

inline ClassificationVerdict classify(const BipartiteGraph& g, const ClassifyOptions& opt = {}) {
  ClassificationVerdict v;
  v.isolated = degree_profile(g).isolated;
  const StrippedGraph core = strip_isolated(g);
  auto restore = [&](VertexOrder& o) {
    for (int& x : o.x) x = core.x_index[x];
    for (int& y : o.y) y = core.y_index[y];
  };
  v.ordering = herzog_hibi_search(core.graph, opt.part_cap);
  if (v.ordering.order) restore(*v.ordering.order);
  v.is_cm = v.ordering.order.has_value();
  const bool complete = v.isolated.empty() &&
                        static_cast<long long>(g.edges().size()) == static_cast<long long>(g.x_count()) * g.y_count();
  v.is_buchsbaum = v.is_cm || (complete && !g.edges().empty());
  v.cross_free = cross_free_pure_order(core.graph, opt.part_cap);
  if (v.cross_free) restore(*v.cross_free);
  v.shelling = is_shellable(g, opt.facet_cap);
  v.is_scm = v.shelling.shellable;
  v.note = kBipartiteEquivalenceNote;
  return v;
}

// --- family sweeps ----------------------------------------------------------

struct NeverCmMember {
  std::string name;
  bool no_ordering = false;              // herzog_hibi_search returned nothing
  std::optional<bool> pd_differs_codim;  // set when within the Hochster cap
  std::string witness;
};

struct NeverCmOptions {
  int max_k = 8;
  int max_generic_k = 6;
  std::vector<int> plane_orders{2, 3};
  int part_cap = 13;
  PrimeField field{2};
  ResolutionOptions resolution{};
};

/// Never Cohen-Macaulay: no admissible ordering for quasi-pencils, projective
/// planes and generic lines; pd != codim confirms within the Hochster cap.
inline std::vector<NeverCmMember> verify_never_cohen_macaulay(const NeverCmOptions& opt = {}) {
  std::vector<std::pair<std::string, Arrangement>> family;
  for (int k = 3; k <= opt.max_k; ++k) family.emplace_back("quasi-pencil k=" + std::to_string(k), gen_quasi_pencil(k));
  for (int q : opt.plane_orders) family.emplace_back("PG(2," + std::to_string(q) + ")", gen_projective_plane(q));
  for (int k = 3; k <= opt.max_generic_k; ++k) {
    family.emplace_back("generic lines k=" + std::to_string(k), gen_generic_lines(k));
  }
  std::vector<NeverCmMember> out;
  for (const auto& [name, a] : family) {
    const BipartiteGraph g = levi_graph(a);
    NeverCmMember m;
    m.name = name;
    HerzogHibiResult hh = herzog_hibi_search(g, opt.part_cap);
    m.no_ordering = !hh.order.has_value();
    m.witness = hh.witness;
    if (g.vertex_count() <= opt.resolution.hochster_vertex_cap) {
      const SimplicialComplex delta = independence_complex(g);
      const HomologicalSummary s = summarize(betti_squarefree(delta, opt.field, opt.resolution), delta);
      m.pd_differs_codim = s.pd != s.codim;
    }
    out.push_back(std::move(m));
  }
  return out;
}

struct ScmPencilResult {
  bool is_pencil = false;
  bool shellable = false;

  bool agree() const { return is_pencil == shellable; }
};

/// Sequentially Cohen-Macaulay exactly for pencils of lines.
inline ScmPencilResult verify_scm_iff_pencil(const Arrangement& a, std::size_t facet_cap = 24) {
  if (a.mode() != Mode::strict_d_arrangement) throw InputError("the pencil check applies to strict d-arrangements");
  return {is_pencil(a), is_shellable(levi_graph(a), facet_cap).shellable};
}

// --- bounds -----------------------------------------------------------------

struct BoundReport {
  int s = 0;
  int k = 0;
  int d = 0;
  int n = 0;
  bool tk_zero = false;  // no point on every curve
  long long pd_lower = 0;
  Rational pd_upper;
  int max_degree = 0;
  Rational dhs_upper;
  int matching_number = 0;
  int reg_upper_matching = 0;
  int reg_upper_global = 0;
  int rees_reg = 0;
  bool power_bound_applicable = false;  // requires k <= s

  int power_bound(int q) const { return 2 * q + k - 1; }
};

/// Graph-only bounds. The arrangement bounds stay inapplicable (t_k unknown).
inline BoundReport bounds_report(const BipartiteGraph& g) {
  BoundReport r;
  r.s = g.x_count();
  r.k = g.y_count();
  r.n = r.s + r.k;
  r.pd_lower = (r.n + 1) / 2;
  r.max_degree = degree_profile(g).max_degree;
  r.dhs_upper = r.max_degree > 0 ? Rational(r.n) * (Rational(1) - Rational(1, 2 * r.max_degree)) : Rational(0);
  r.matching_number = max_matching(g).size;
  r.reg_upper_matching = r.matching_number + 1;
  r.reg_upper_global = r.k + 1;
  r.rees_reg = r.k;
  r.power_bound_applicable = r.k <= r.s;
  return r;
}

inline BoundReport bounds_report(const Arrangement& a) {
  BoundReport r = bounds_report(levi_graph(a));
  r.d = a.degree();
  r.tk_zero = t_vector(a).at(r.k) == 0;
  const long long d2 = static_cast<long long>(r.d) * r.d;
  r.pd_upper = Rational(r.n) * (Rational(1) - Rational(1, 2 * d2 * (r.k - 1)));
  return r;
}

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::string detail;
};

/// Compares every applicable bound with computed pd and reg. `induced` is the
/// induced matching number when known (lower bound reg(I) >= ν' + 1).
inline std::vector<BoundCheck> bounds_verify(const BoundReport& r, const HomologicalSummary& s, int nu,
                                             std::optional<int> induced = std::nullopt) {
  std::vector<BoundCheck> out;
  auto add = [&](std::string name, bool applicable, bool pass, std::string detail) {
    out.push_back({std::move(name), applicable, applicable ? pass : true, std::move(detail)});
  };
  const std::string pd = std::to_string(s.pd);
  const std::string reg = std::to_string(s.reg_ideal);
  add("pd >= ceil((s+k)/2)", r.tk_zero, s.pd >= r.pd_lower, pd + " >= " + std::to_string(r.pd_lower));
  add("pd <= (s+k)(1 - 1/(2 d^2 (k-1)))", r.tk_zero, Rational(s.pd) <= r.pd_upper, pd + " <= " + to_string(r.pd_upper));
  add("pd <= n(1 - 1/(2m))", r.max_degree > 0, Rational(s.pd) <= r.dhs_upper, pd + " <= " + to_string(r.dhs_upper));
  add("reg(I) <= nu + 1", true, s.reg_ideal <= nu + 1, reg + " <= " + std::to_string(nu + 1));
  add("nu + 1 <= k + 1", r.tk_zero, nu <= r.k, std::to_string(nu + 1) + " <= " + std::to_string(r.k + 1));
  add("reg(I) <= k + 1", r.tk_zero, s.reg_ideal <= r.k + 1, reg + " <= " + std::to_string(r.k + 1));
  add("nu = k", r.tk_zero, nu == r.k, std::to_string(nu) + " = " + std::to_string(r.k));
  if (induced) {
    add("reg(I) >= nu' + 1", true, s.reg_ideal >= *induced + 1, reg + " >= " + std::to_string(*induced + 1));
  }
  return out;
}

inline std::vector<BoundCheck> bounds_verify(const Arrangement& a, const HomologicalSummary& s, int nu,
                                             std::optional<int> induced = std::nullopt) {
  return bounds_verify(bounds_report(a), s, nu, induced);
}

struct PowerBoundResult {
  int q = 1;
  int reg = 0;    // reg(I^q)
  int bound = 0;  // 2q + k - 1
  bool pass = false;
};

/// reg(I(G)^q) from the lcm-lattice Betti table against 2q + k - 1.
inline PowerBoundResult power_bound_check(const BipartiteGraph& g, int q, const PrimeField& field,
                                          const ResolutionOptions& opt = {}) {
  const MonomialIdeal iq = power(edge_ideal(g), q);
  PowerBoundResult r;
  r.q = q;
  r.reg = betti_general(iq, field, opt).reg_ideal();
  r.bound = 2 * q + g.y_count() - 1;
  r.pass = r.reg <= r.bound;
  return r;
}

}  // namespace levi
