#pragma once

// Graded Betti tables of quotients S/I by monomial ideals.
//
// Squarefree ideals go through Hochster's formula, summing reduced homology
// of induced subcomplexes over vertex subsets. Arbitrary monomial ideals go
// through the lcm lattice: only lattice elements can carry Betti numbers, and
// each one is evaluated by the homology of a simplicial complex attached to
// it. All tables describe the quotient S/I, so beta_{0,0} = 1.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "levi/bipartite.hpp"
#include "levi/complex.hpp"
#include "levi/errors.hpp"
#include "levi/homology.hpp"
#include "levi/monomial.hpp"

namespace levi {

class BettiTable {
 public:
  using Key = std::pair<int, int>;  // (homological index i, internal degree j)

  BettiTable() = default;
  explicit BettiTable(int n) : n_(n) {}

  void add(int i, int j, long long value) {
    if (value == 0) return;
    entries_[{i, j}] += value;
  }

  long long at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  int variable_count() const { return n_; }
  const std::map<Key, long long>& entries() const { return entries_; }

  int pd() const {
    int best = 0;
    for (const auto& [key, v] : entries_) best = std::max(best, key.first);
    return best;
  }

  /// Regularity of the quotient, max (j - i).
  int reg() const {
    int best = 0;
    for (const auto& [key, v] : entries_) best = std::max(best, key.second - key.first);
    return best;
  }

  /// Regularity of the ideal itself, reg(S/I) + 1.
  int reg_ideal() const { return reg() + 1; }

  long long row(int r, int i) const { return at(i, i + r); }

  std::vector<long long> totals() const {
    std::vector<long long> t(static_cast<std::size_t>(pd() + 1), 0);
    for (const auto& [key, v] : entries_) t[static_cast<std::size_t>(key.first)] += v;
    return t;
  }

  /// Singular-style diagram: columns i, rows j - i, '-' for zero, totals last.
  std::string to_diagram() const {
    const int cols = pd() + 1;
    const int rows = reg() + 1;
    const auto tot = totals();
    std::size_t widest = 1;
    for (long long v : tot) widest = std::max(widest, std::to_string(v).size());
    const int w = static_cast<int>(std::max<std::size_t>(6, widest + 1));
    const int label = 6;
    std::ostringstream out;
    out << std::string(label, ' ');
    for (int i = 0; i < cols; ++i) out << std::setw(w) << i;
    out << '\n';
    const std::string rule(static_cast<std::size_t>(label + w * cols), '-');
    out << rule << '\n';
    for (int r = 0; r < rows; ++r) {
      out << std::setw(label - 1) << r << ':';
      for (int i = 0; i < cols; ++i) {
        long long v = row(r, i);
        if (v == 0) {
          out << std::setw(w) << '-';
        } else {
          out << std::setw(w) << v;
        }
      }
      out << '\n';
    }
    out << rule << '\n';
    out << "total:";
    for (long long v : tot) out << std::setw(w) << v;
    out << '\n';
    return out.str();
  }

  void merge(const BettiTable& other) {
    for (const auto& [key, v] : other.entries_) entries_[key] += v;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  std::map<Key, long long> entries_;
};

struct ResolutionOptions {
  int hochster_vertex_cap = 16;
  std::size_t lattice_cap = std::size_t{1} << 14;
  std::size_t face_cap = kDefaultFaceCap;
  unsigned threads = 1;
  /// Skip vertex subsets whose induced subcomplex is a cone.
  bool prune_cones = true;
};

namespace detail {

/// Runs body(worker, index) for index in [0, count) on `threads` workers with
/// a strided split; each worker owns one partial table, merged in order.
template <typename Body>
BettiTable parallel_tables(int n, std::size_t count, unsigned threads, Body body) {
  threads = std::max(1U, threads);
  std::vector<BettiTable> partial(threads, BettiTable(n));
  if (threads == 1) {
    for (std::size_t idx = 0; idx < count; ++idx) body(partial[0], idx);
  } else {
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t idx = t; idx < count; idx += threads) body(partial[t], idx);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }
  BettiTable out(n);
  for (const auto& p : partial) out.merge(p);
  return out;
}

}  // namespace detail

/// Hochster: beta_{i,j}(S/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W).
inline BettiTable betti_squarefree(const SimplicialComplex& delta, const PrimeField& field,
                                   const ResolutionOptions& opt = {}) {
  const int n = delta.vertex_count();
  if (n > opt.hochster_vertex_cap) {
    throw CapExceeded("Hochster enumeration: " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(opt.hochster_vertex_cap));
  }
  if (delta.is_void()) throw InputError("unit ideal: the quotient ring is zero");

  const std::vector<Face> faces = delta.faces(opt.face_cap);
  std::vector<Face> nonfaces;
  if (opt.prune_cones) nonfaces = stanley_reisner_ideal(delta, {}, opt.face_cap).supports();

  const std::size_t subsets = std::size_t{1} << n;
  return detail::parallel_tables(n, subsets, opt.threads, [&](BettiTable& table, std::size_t idx) {
    const Face w = static_cast<Face>(idx);
    if (opt.prune_cones && w != 0) {
      // Δ|_W is a cone unless every vertex of W lies in a non-face inside W.
      Face covered = 0;
      for (Face nf : nonfaces) {
        if ((nf & ~w) == 0) covered |= nf;
      }
      if (covered != w) return;
    }
    std::vector<Face> local;
    for (Face f : faces) {
      if ((f & ~w) == 0) local.push_back(f);
    }
    const ReducedHomology h = reduced_homology(local, field);
    const int j = std::popcount(w);
    for (int r = -1; r + 1 < static_cast<int>(h.dims.size()); ++r) {
      table.add(j - r - 1, j, h.at(r));
    }
  });
}

/// lcm-lattice route for any monomial ideal. beta_{i,m}(S/I) is the reduced
/// homology in degree i - 2 of the upper Koszul complex K^m(I), which has the
/// homology of the order complex of the open interval (0̂, m).
inline BettiTable betti_general(const MonomialIdeal& ideal, const PrimeField& field,
                                const ResolutionOptions& opt = {}) {
  if (ideal.is_zero()) throw ZeroIdeal();
  if (ideal.is_unit()) throw InputError("unit ideal: the quotient ring is zero");
  const int n = ideal.variable_count();
  const LcmLattice lattice = lcm_lattice(ideal, opt.lattice_cap);
  BettiTable table = detail::parallel_tables(
      n, lattice.elements.size(), opt.threads, [&](BettiTable& part, std::size_t idx) {
        const Monomial& m = lattice.elements[idx];
        const ReducedHomology h = reduced_betti(koszul_complex(ideal, m, opt.face_cap), field, opt.face_cap);
        for (int r = -1; r + 1 < static_cast<int>(h.dims.size()); ++r) part.add(r + 2, degree(m), h.at(r));
      });
  table.add(0, 0, 1);
  return table;
}

/// Reference route straight from the order complexes of the open intervals
/// (0̂, m). Exponentially slower than betti_general; for cross-checks on
/// small ideals.
inline BettiTable betti_order_complex(const MonomialIdeal& ideal, const PrimeField& field,
                                      const ResolutionOptions& opt = {}) {
  if (ideal.is_zero()) throw ZeroIdeal();
  const LcmLattice lattice = lcm_lattice(ideal, opt.lattice_cap);
  BettiTable table(ideal.variable_count());
  table.add(0, 0, 1);
  for (const auto& m : lattice.elements) {
    const ReducedHomology h = reduced_betti(open_interval_complex(lattice, m, opt.face_cap), field, opt.face_cap);
    for (int r = -1; r + 1 < static_cast<int>(h.dims.size()); ++r) table.add(r + 2, degree(m), h.at(r));
  }
  return table;
}

/// Betti table of S/I(G) for a bipartite graph.
inline BettiTable betti_of_graph(const BipartiteGraph& g, const PrimeField& field,
                                 const ResolutionOptions& opt = {}) {
  if (g.edges().empty()) throw ZeroIdeal();
  return betti_squarefree(independence_complex(g), field, opt);
}

struct HomologicalSummary {
  int n = 0;
  int pd = 0;
  int reg_quotient = 0;
  int reg_ideal = 0;
  int dim = 0;    // Krull dimension of S/I
  int depth = 0;  // n - pd
  int codim = 0;  // n - dim
  bool is_cm = false;
};

inline HomologicalSummary summarize(const BettiTable& t, const SimplicialComplex& delta) {
  HomologicalSummary s;
  s.n = delta.vertex_count();
  s.pd = t.pd();
  s.reg_quotient = t.reg();
  s.reg_ideal = t.reg_ideal();
  s.dim = delta.dimension() + 1;
  s.depth = s.n - s.pd;
  s.codim = s.n - s.dim;
  s.is_cm = s.depth == s.dim;
  return s;
}

inline bool is_linear_table(const BettiTable& t, int generator_degree) {
  for (const auto& [key, v] : t.entries()) {
    auto [i, j] = key;
    if (i >= 1 && j != i + generator_degree - 1) return false;
  }
  return true;
}

/// True iff I is generated in one degree d0 and S/I has nonzero
/// beta_{i,j} (i >= 1) only at j = i + d0 - 1.
inline bool has_linear_resolution(const MonomialIdeal& ideal, const PrimeField& field,
                                  const ResolutionOptions& opt = {}) {
  const int d0 = ideal.generator_degree();
  if (d0 < 1) return false;
  const BettiTable t = ideal.is_squarefree() ? betti_squarefree(complex_of_ideal(ideal, opt.face_cap), field, opt)
                                             : betti_general(ideal, field, opt);
  return is_linear_table(t, d0);
}

struct EagonReinerResult {
  bool is_cm_direct = false;
  bool dual_linear = false;

  bool agree() const { return is_cm_direct == dual_linear; }
};

/// Cohen-Macaulayness of S/I(G) two ways: pd = codim on the Hochster table,
/// and linearity of the resolution of the Alexander dual.
inline EagonReinerResult eagon_reiner_check(const BipartiteGraph& g, const PrimeField& field,
                                            const ResolutionOptions& opt = {}) {
  if (g.edges().empty()) throw ZeroIdeal();
  const SimplicialComplex delta = independence_complex(g);
  EagonReinerResult r;
  r.is_cm_direct = summarize(betti_squarefree(delta, field, opt), delta).is_cm;
  r.dual_linear = has_linear_resolution(alexander_dual(edge_ideal(g), opt.face_cap), field, opt);
  return r;
}

}  // namespace levi
