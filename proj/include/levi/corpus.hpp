#pragma once

// The acceptance corpus: every published Betti diagram, the classification
// sweeps and the bound suite, each as one pass/fail criterion. Shared by the
// acceptance test binary and `levi corpus`.

#include <cctype>
#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "levi/arrangement.hpp"
#include "levi/bipartite.hpp"
#include "levi/classify.hpp"
#include "levi/complex.hpp"
#include "levi/resolution.hpp"
#include "levi/testing/properties.hpp"

namespace levi::corpus {

/// Parses rows "r: v v - v ..." of a Singular diagram (column i, row j - i).
inline BettiTable parse_diagram(int n, const std::string& text) {
  BettiTable t(n);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string head;
    if (!(cells >> head) || head.back() != ':' || !std::isdigit(static_cast<unsigned char>(head.front()))) continue;
    const int r = std::stoi(head.substr(0, head.size() - 1));
    std::string cell;
    for (int i = 0; cells >> cell; ++i) {
      if (cell != "-") t.add(i, i + r, std::stoll(cell));
    }
  }
  return t;
}

inline const char* kQuasiPencil4Diagram = R"(
    0:     1     -     -     -     -     -     -
    1:     -     9    12     2     -     -     -
    2:     -     -     9    24    18     6     1
    3:     -     -     -     1     2     1     -
)";

inline const char* kGenericLines5Diagram = R"(
    0:   1     -     -     -     -     -     -     -     -     -     -     -
    1:   -    20    40    20     5     -     -     -     -     -     -     -
    2:   -     -    90   360   515   330   100    10     -     -     -     -
    3:   -     -     -    80   470  1135  1370   897   295    40     -     -
    4:   -     -     -     -     5    35   105   185   205   120    35     4
)";

inline const char* kConic65Diagram = R"(
    0:     1     -     -     -     -     -     -     -     -     -     -
    1:     -    30   120   210   180    62     -     -     -     -     -
    2:     -     -    15   120   400   720   765   500   204    48     5
)";

/// Three points, three lines, one triple point and two simple points.
inline BipartiteGraph triple_point_configuration() {
  return BipartiteGraph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}});
}

/// Dual generators y1y2y3, y1y3x2, y3x1x2, y1x2x3, x1x2x3 in x1,x2,x3,y1,y2,y3.
inline MonomialIdeal triple_point_dual_expected() {
  return MonomialIdeal(triple_point_configuration().labels(), {{0, 0, 0, 1, 1, 1},
                                                               {0, 1, 0, 1, 0, 1},
                                                               {1, 1, 0, 0, 0, 1},
                                                               {0, 1, 1, 1, 0, 0},
                                                               {1, 1, 1, 0, 0, 0}});
}

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct CorpusOptions {
  unsigned threads = 1;
  std::vector<std::uint32_t> fields{2, 3, 32003};
  int property_instances = 60;
  std::uint64_t seed = testing::kDefaultSeed;
};

namespace detail {

inline std::string totals_string(const BettiTable& t) {
  std::string out;
  for (long long v : t.totals()) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

class Recorder {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      failures_ += (failures_.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { notes_ += (notes_.empty() ? "" : "; ") + what; }
  bool pass() const { return pass_; }
  std::string detail() const { return pass_ ? notes_ : failures_; }

 private:
  bool pass_ = true;
  std::string failures_;
  std::string notes_;
};

inline double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

/// Runs every acceptance criterion; `on_result` is called as each finishes.
inline std::vector<CriterionResult> run(const CorpusOptions& opt = {},
                                        const std::function<void(const CriterionResult&)>& on_result = {}) {
  using detail::Recorder;
  ResolutionOptions ro;
  ro.threads = opt.threads;
  const PrimeField gf2(2);
  std::vector<CriterionResult> results;

  auto criterion = [&](int id, std::string title, double time_limit, auto body) {
    CriterionResult r{id, std::move(title), false, {}, 0};
    Recorder rec;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(rec);
    } catch (const std::exception& e) {
      rec.check(false, std::string("exception: ") + e.what());
    }
    r.seconds = detail::elapsed(start);
    rec.check(r.seconds < time_limit, "runtime " + std::to_string(r.seconds) + " s over " +
                                          std::to_string(time_limit) + " s");
    r.pass = rec.pass();
    r.detail = rec.detail();
    results.push_back(r);
    if (on_result) on_result(r);
  };

  auto table_of = [&](const Arrangement& a, const PrimeField& f) { return betti_of_graph(levi_graph(a), f, ro); };

  criterion(1, "quasi-pencil k=4 Betti diagram, reg(I) = 4, pd = 6", 1.0, [&](Recorder& rec) {
    const BettiTable t = table_of(gen_quasi_pencil(4), gf2);
    rec.check(t == parse_diagram(8, kQuasiPencil4Diagram), "table differs: totals " + detail::totals_string(t));
    rec.check(t.reg_ideal() == 4, "reg(I) = " + std::to_string(t.reg_ideal()));
    rec.check(t.pd() == 6, "pd = " + std::to_string(t.pd()));
    rec.note("totals " + detail::totals_string(t));
  });

  criterion(2, "5 generic lines Betti diagram, pd = 11 in [8, 105/8], reg(S/I) = 4", 300.0, [&](Recorder& rec) {
    const Arrangement a = gen_generic_lines(5);
    const BettiTable t = table_of(a, gf2);
    rec.check(t == parse_diagram(15, kGenericLines5Diagram), "table differs: totals " + detail::totals_string(t));
    rec.check(t.pd() == 11, "pd = " + std::to_string(t.pd()));
    rec.check(t.reg() == 4, "reg(S/I) = " + std::to_string(t.reg()));
    const BoundReport b = bounds_report(a);
    rec.check(b.pd_lower == 8 && b.pd_upper == Rational(105, 8), "interval [" + std::to_string(b.pd_lower) + ", " +
                                                                     to_string(b.pd_upper) + "]");
    rec.check(t.pd() >= b.pd_lower && Rational(t.pd()) <= b.pd_upper, "pd outside interval");
    rec.note("totals " + detail::totals_string(t));
  });

  criterion(3, "(6_5,6_5) conic configuration Betti diagram, pd = 10, reg(S/I) = 2, not CM", 60.0,
            [&](Recorder& rec) {
              const BipartiteGraph g = levi_graph(gen_conic_6_5());
              const SimplicialComplex delta = independence_complex(g);
              const BettiTable t = betti_squarefree(delta, gf2, ro);
              rec.check(t == parse_diagram(12, kConic65Diagram), "table differs: totals " + detail::totals_string(t));
              rec.check(t.pd() == 10, "pd = " + std::to_string(t.pd()));
              rec.check(t.reg() == 2, "reg(S/I) = " + std::to_string(t.reg()));
              rec.check(!summarize(t, delta).is_cm, "reported Cohen-Macaulay");
              rec.note("totals " + detail::totals_string(t));
            });

  criterion(4, "triple-point configuration: dual generators, linear resolution 1,5,5,1, CM agreement", 1.0,
            [&](Recorder& rec) {
              const BipartiteGraph g = triple_point_configuration();
              const MonomialIdeal dual = alexander_dual(edge_ideal(g));
              rec.check(dual == triple_point_dual_expected(), "dual generators differ:\n" + dual.to_text());
              const BettiTable dt = betti_general(dual, gf2, ro);
              BettiTable expected(6);
              expected.add(0, 0, 1);
              expected.add(1, 3, 5);
              expected.add(2, 4, 5);
              expected.add(3, 5, 1);
              rec.check(dt == expected, "dual resolution differs: totals " + detail::totals_string(dt));
              rec.check(has_linear_resolution(dual, gf2, ro), "dual resolution not linear");
              const SimplicialComplex delta = independence_complex(g);
              const HomologicalSummary s = summarize(betti_squarefree(delta, gf2, ro), delta);
              rec.check(s.is_cm && s.pd == s.codim, "direct check: pd " + std::to_string(s.pd) + ", codim " +
                                                        std::to_string(s.codim));
              rec.check(eagon_reiner_check(g, gf2, ro).agree(), "Eagon-Reiner routes disagree");
            });

  criterion(5, "never Cohen-Macaulay: quasi-pencils k=3..8, PG(2,2), PG(2,3)", 120.0, [&](Recorder& rec) {
    NeverCmOptions ta;
    ta.max_k = 8;
    ta.max_generic_k = 6;
    ta.part_cap = 13;
    ta.resolution = ro;
    for (const auto& m : verify_never_cohen_macaulay(ta)) {
      rec.check(m.no_ordering, m.name + " admits an ordering");
      if (m.name == "PG(2,2)") {
        rec.check(m.pd_differs_codim.value_or(false), "PG(2,2): pd = codim or not computed");
      }
    }
  });

  criterion(6, "sequentially CM exactly for pencils (k=3..8, conic configuration)", 60.0, [&](Recorder& rec) {
    for (int k = 3; k <= 8; ++k) {
      for (const auto& a : {gen_pencil(k), gen_quasi_pencil(k), gen_generic_lines(k)}) {
        const ScmPencilResult r = verify_scm_iff_pencil(a);
        rec.check(r.agree(), "k=" + std::to_string(k) + " pencil=" + std::to_string(r.is_pencil) +
                                 " shellable=" + std::to_string(r.shellable));
        const ShellabilityVerdict v = is_shellable(levi_graph(a));
        if (v.shellable) {
          rec.check(cert::is_shelling(independence_complex(levi_graph(a)).facets(), v.shelling),
                    "shelling certificate fails, k=" + std::to_string(k));
        }
      }
    }
    const ScmPencilResult conic = verify_scm_iff_pencil(gen_conic_6_5());
    rec.check(!conic.shellable && conic.agree(), "conic configuration reported shellable");
  });

  criterion(7, "bound suite: pd interval, reg(I) <= nu+1 <= k+1, nu = k; pencils nu = 1, reg(I) = 2", 120.0,
            [&](Recorder& rec) {
              std::vector<Arrangement> members;
              for (int k = 3; k <= 8; ++k) members.push_back(gen_quasi_pencil(k));
              for (int k = 3; k <= 6; ++k) members.push_back(gen_generic_lines(k));
              members.push_back(gen_projective_plane(2));
              members.push_back(gen_projective_plane(3));
              members.push_back(gen_conic_6_5());
              int computed = 0;
              for (const auto& a : members) {
                if (a.mode() != Mode::strict_d_arrangement) continue;
                const BipartiteGraph g = levi_graph(a);
                const int nu = max_matching(g).size;
                const BoundReport b = bounds_report(a);
                const std::string tag = "d=" + std::to_string(a.degree()) + " k=" + std::to_string(a.curve_count()) +
                                        " s=" + std::to_string(a.point_count());
                rec.check(b.tk_zero, tag + ": t_k != 0");
                rec.check(nu == a.curve_count(), tag + ": nu = " + std::to_string(nu));
                if (g.vertex_count() > ro.hochster_vertex_cap) continue;  // bounds-only beyond the cap
                ++computed;
                const SimplicialComplex delta = independence_complex(g);
                const HomologicalSummary s = summarize(betti_squarefree(delta, gf2, ro), delta);
                for (const BoundCheck& c : bounds_verify(a, s, nu)) {
                  rec.check(c.pass, tag + ": " + c.name + " (" + c.detail + ")");
                }
              }
              for (int k = 3; k <= 8; ++k) {
                const BipartiteGraph g = levi_graph(gen_pencil(k));
                rec.check(max_matching(g).size == 1, "pencil k=" + std::to_string(k) + ": nu != 1");
                rec.check(betti_of_graph(g, gf2, ro).reg_ideal() == 2, "pencil k=" + std::to_string(k) + ": reg != 2");
              }
              rec.note(std::to_string(computed) + " members with computed pd/reg, " +
                       std::to_string(members.size() - computed) + " bounds-only");
            });

  criterion(8, "power bound reg(I^2) <= 2*2+k-1 (pencil/quasi-pencil k=3); lcm route = Hochster route", 60.0,
            [&](Recorder& rec) {
              for (const auto& a : {gen_pencil(3), gen_quasi_pencil(3)}) {
                const PowerBoundResult p = power_bound_check(levi_graph(a), 2, gf2, ro);
                rec.check(p.pass, "reg(I^2) = " + std::to_string(p.reg) + " > " + std::to_string(p.bound));
                rec.note("reg(I^2) = " + std::to_string(p.reg) + " <= " + std::to_string(p.bound));
              }
              std::vector<MonomialIdeal> ideals;
              for (int k = 3; k <= 5; ++k) {
                ideals.push_back(edge_ideal(levi_graph(gen_pencil(k))));
                ideals.push_back(edge_ideal(levi_graph(gen_quasi_pencil(k))));
              }
              ideals.push_back(edge_ideal(levi_graph(gen_generic_lines(4))));
              ideals.push_back(edge_ideal(levi_graph(gen_conic_6_5())));
              ideals.push_back(edge_ideal(triple_point_configuration()));
              ideals.push_back(alexander_dual(edge_ideal(triple_point_configuration())));
              ideals.push_back(alexander_dual(edge_ideal(levi_graph(gen_quasi_pencil(4)))));
              for (const auto& i : ideals) {
                const BettiTable lattice_route = betti_general(i, gf2, ro);
                const BettiTable hochster_route = betti_squarefree(complex_of_ideal(i), gf2, ro);
                rec.check(lattice_route == hochster_route,
                          "routes differ on ideal with " + std::to_string(i.gens().size()) + " generators");
              }
              rec.note(std::to_string(ideals.size()) + " squarefree ideals cross-checked");
            });

  criterion(9, "criteria 1-4 tables identical over every configured characteristic", 600.0, [&](Recorder& rec) {
    const BipartiteGraph tp = triple_point_configuration();
    const MonomialIdeal tp_dual = alexander_dual(edge_ideal(tp));
    auto tables = [&](const PrimeField& f) {
      return std::vector<BettiTable>{table_of(gen_quasi_pencil(4), f), table_of(gen_generic_lines(5), f),
                                     table_of(gen_conic_6_5(), f), betti_of_graph(tp, f, ro),
                                     betti_general(tp_dual, f, ro)};
    };
    const std::vector<BettiTable> reference = tables(PrimeField(opt.fields.front()));
    for (std::size_t idx = 1; idx < opt.fields.size(); ++idx) {
      const std::vector<BettiTable> other = tables(PrimeField(opt.fields[idx]));
      for (std::size_t t = 0; t < reference.size(); ++t) {
        rec.check(reference[t] == other[t], "table " + std::to_string(t) + " differs at p=" +
                                                 std::to_string(opt.fields[idx]));
      }
    }
    std::string ps;
    for (auto p : opt.fields) ps += (ps.empty() ? "p=" : ",") + std::to_string(p);
    rec.note(ps);
  });

  criterion(10, "property suites (seeded, >= 50 instances each)", 300.0, [&](Recorder& rec) {
    for (const auto& p : testing::run_property_suites(opt.property_instances, opt.seed)) {
      rec.check(p.instances >= 50, p.name + ": only " + std::to_string(p.instances) + " instances");
      rec.check(p.ok(), p.name + ": " + p.first_failure);
      rec.note(p.name + " x" + std::to_string(p.instances));
    }
  });

  return results;
}

}  // namespace levi::corpus
