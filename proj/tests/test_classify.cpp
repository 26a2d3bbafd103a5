#include <gtest/gtest.h>

#include "levi/classify.hpp"
#include "levi/corpus.hpp"

using namespace levi;

namespace {

BipartiteGraph star(int k) {
  std::vector<Edge> e;
  for (int y = 0; y < k; ++y) e.emplace_back(0, y);
  return BipartiteGraph(1, k, e);
}

BipartiteGraph path(int n) {  // x1 y1 x2 y2 ... as a path
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, i);
    if (i + 1 < n) e.emplace_back(i + 1, i);
  }
  return BipartiteGraph(n, n, e);
}

}  // namespace

TEST(OrderingSearch, TriplePointHasOrdering) {
  const BipartiteGraph g = corpus::triple_point_configuration();
  const HerzogHibiResult r = herzog_hibi_search(g);
  ASSERT_TRUE(r.order);
  EXPECT_TRUE(cert::satisfies_herzog_hibi(g, *r.order));
}

TEST(OrderingSearch, QuasiPencilsAndPlanesHaveNone) {
  for (int k = 3; k <= 8; ++k) {
    const HerzogHibiResult r = herzog_hibi_search(levi_graph(gen_quasi_pencil(k)));
    EXPECT_FALSE(r.order) << "k=" << k;
    EXPECT_FALSE(r.witness.empty());
  }
  EXPECT_FALSE(herzog_hibi_search(levi_graph(gen_projective_plane(2))).order);
  EXPECT_FALSE(herzog_hibi_search(levi_graph(gen_projective_plane(3)), 13).order);
}

TEST(OrderingSearch, UnequalPartsFailImmediately) {
  const HerzogHibiResult r = herzog_hibi_search(levi_graph(gen_generic_lines(4)));
  EXPECT_FALSE(r.order);
  EXPECT_EQ(r.matchings_examined, 0);
  EXPECT_NE(r.witness.find("parts differ"), std::string::npos);
}

TEST(OrderingSearch, CapEnforced) {
  EXPECT_THROW(herzog_hibi_search(levi_graph(gen_projective_plane(3))), CapExceeded);
  EXPECT_THROW(cross_free_pure_order(levi_graph(gen_projective_plane(3))), CapExceeded);
}

TEST(OrderingSearch, PathsAgreeWithHochster) {
  for (int n = 1; n <= 5; ++n) {
    const BipartiteGraph g = path(n);
    const SimplicialComplex delta = independence_complex(g);
    const bool cm = summarize(betti_squarefree(delta, PrimeField(2)), delta).is_cm;
    const auto r = herzog_hibi_search(g);
    EXPECT_EQ(r.order.has_value(), cm) << "n=" << n;
    EXPECT_EQ(cross_free_pure_order(g).has_value(), cm) << "n=" << n;
    if (r.order) {
      EXPECT_TRUE(cert::satisfies_herzog_hibi(g, *r.order));
    }
  }
  EXPECT_TRUE(herzog_hibi_search(path(2)).order);
  EXPECT_FALSE(herzog_hibi_search(path(3)).order);
}

TEST(PureOrder, PerfectMatchingGraph) {
  const BipartiteGraph g(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  const auto o = cross_free_pure_order(g);
  ASSERT_TRUE(o);
  EXPECT_TRUE(cert::is_pure_order(g, *o));
}

TEST(PureOrder, FourCycleHasNone) {
  const BipartiteGraph g(2, 2, {{0, 1}, {1, 0}, {0, 0}, {1, 1}});
  EXPECT_FALSE(cross_free_pure_order(g));
  EXPECT_FALSE(herzog_hibi_search(g).order);
}

TEST(PureOrder, QuasiPencilHasNone) { EXPECT_FALSE(cross_free_pure_order(levi_graph(gen_quasi_pencil(4)))); }

TEST(PureOrder, BrokenTriangleIsTheObstruction) {
  // The path y1 x1 y2 x2 y3 x3 has pure orders, none of them with a two-sided
  // cross, yet it is not Cohen-Macaulay: every pure order has a broken triangle.
  const BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}});
  const VertexOrder identity{{0, 1, 2}, {0, 1, 2}};
  EXPECT_TRUE(cert::is_pure_order(g, identity));
  EXPECT_TRUE(cert::has_triangle_cross(g, identity));
  EXPECT_FALSE(cert::has_swap_cross(g, identity));
  EXPECT_FALSE(cross_free_pure_order(g));
  EXPECT_FALSE(herzog_hibi_search(g).order);
  const SimplicialComplex delta = independence_complex(g);
  EXPECT_FALSE(summarize(betti_squarefree(delta, PrimeField(2)), delta).is_cm);
}

TEST(Certificates, CheckersRejectBadOrders) {
  const BipartiteGraph g = corpus::triple_point_configuration();
  EXPECT_FALSE(cert::is_pure_order(g, {{0, 0, 1}, {0, 1, 2}}));
  EXPECT_FALSE(cert::is_pure_order(g, {{0, 1}, {0, 1}}));
  EXPECT_FALSE(cert::is_pure_order(g, {{2, 1, 0}, {2, 1, 0}}));
  EXPECT_FALSE(cert::is_shelling({0b01, 0b10}, {0b01}));
}

TEST(Shellability, Star) {
  for (int k = 1; k <= 6; ++k) {
    const ShellabilityVerdict v = is_shellable(star(k));
    EXPECT_TRUE(v.shellable);
    EXPECT_TRUE(cert::is_shelling(independence_complex(star(k)).facets(), v.shelling));
  }
}

TEST(Shellability, DegreeOneRejection) {
  for (const auto& a : {gen_quasi_pencil(4), gen_quasi_pencil(5), gen_conic_6_5()}) {
    const ShellabilityVerdict v = is_shellable(levi_graph(a));
    EXPECT_FALSE(v.shellable);
    EXPECT_EQ(v.stage, 2);
  }
}

TEST(Shellability, ExhaustiveSearch) {
  const BipartiteGraph p(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  const ShellabilityVerdict v = is_shellable(p);
  EXPECT_TRUE(v.shellable);
  EXPECT_EQ(v.stage, 3);
  EXPECT_TRUE(cert::is_shelling(independence_complex(p).facets(), v.shelling));
  // Three disjoint edges: the boundary of an octahedron.
  const BipartiteGraph m(3, 3, {{0, 0}, {1, 1}, {2, 2}});
  EXPECT_TRUE(is_shellable(m).shellable);
}

TEST(Shellability, SearchCanFail) {
  // A 4-cycle plus a disjoint edge: the complex is two disjoint segments
  // joined with two points, which is pure and not shellable. The disjoint
  // edge supplies degree-1 vertices, so only the search can decide.
  const BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}});
  const ShellabilityVerdict v = is_shellable(g);
  EXPECT_EQ(v.stage, 3);
  EXPECT_FALSE(v.shellable);
}

TEST(Shellability, FacetCap) {
  EXPECT_THROW(is_shellable(BipartiteGraph(6, 6, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}), 24),
               CapExceeded);
}

TEST(Classify, PencilVerdict) {
  const ClassificationVerdict v = classify(levi_graph(gen_pencil(5)));
  EXPECT_FALSE(v.is_cm);
  EXPECT_TRUE(v.is_buchsbaum);
  EXPECT_TRUE(v.is_scm);
}

TEST(Classify, QuasiPencilVerdict) {
  const ClassificationVerdict v = classify(levi_graph(gen_quasi_pencil(5)));
  EXPECT_FALSE(v.is_cm);
  EXPECT_FALSE(v.is_buchsbaum);
  EXPECT_FALSE(v.is_scm);
  EXPECT_FALSE(v.cross_free);
}

TEST(Classify, IsolatedVerticesAreSetAside) {
  const BipartiteGraph g(3, 3, {{2, 0}});
  const ClassificationVerdict v = classify(g);
  EXPECT_EQ(v.isolated, (std::vector<std::string>{"x1", "x2", "y2", "y3"}));
  EXPECT_TRUE(v.is_cm);
  ASSERT_TRUE(v.ordering.order);
  EXPECT_EQ(v.ordering.order->x, (std::vector<int>{2}));
  EXPECT_EQ(v.ordering.order->y, (std::vector<int>{0}));
}

TEST(Sweeps, NeverCohenMacaulay) {
  for (const auto& m : verify_never_cohen_macaulay()) {
    EXPECT_TRUE(m.no_ordering) << m.name;
    if (m.pd_differs_codim) {
      EXPECT_TRUE(*m.pd_differs_codim) << m.name;
    }
    if (m.name == "PG(2,2)") {
      EXPECT_TRUE(m.pd_differs_codim.has_value());
    }
  }
}

TEST(Sweeps, SequentiallyCohenMacaulayOnlyForPencils) {
  for (int k = 3; k <= 8; ++k) {
    EXPECT_TRUE(verify_scm_iff_pencil(gen_pencil(k)).shellable);
    EXPECT_TRUE(verify_scm_iff_pencil(gen_quasi_pencil(k)).agree());
    EXPECT_TRUE(verify_scm_iff_pencil(gen_generic_lines(k)).agree());
  }
  EXPECT_FALSE(verify_scm_iff_pencil(gen_conic_6_5()).shellable);
  const Arrangement config(1, 3, {{"p", {0}}, {"q", {0, 1, 2}}}, Mode::configuration);
  EXPECT_THROW(verify_scm_iff_pencil(config), InputError);
}

TEST(Bounds, GenericFiveLinesInterval) {
  const BoundReport r = bounds_report(gen_generic_lines(5));
  EXPECT_TRUE(r.tk_zero);
  EXPECT_EQ(r.pd_lower, 8);
  EXPECT_EQ(r.pd_upper, Rational(105, 8));
  EXPECT_EQ(to_string(r.pd_upper), "105/8");
  EXPECT_EQ(r.max_degree, 4);
  EXPECT_EQ(r.dhs_upper, Rational(105, 8));
  EXPECT_EQ(r.matching_number, 5);
  EXPECT_TRUE(r.power_bound_applicable);
}

TEST(Bounds, ConicConfiguration) {
  const BoundReport r = bounds_report(gen_conic_6_5());
  EXPECT_EQ(r.pd_lower, 6);
  EXPECT_EQ(r.pd_upper, Rational(117, 10));
  EXPECT_EQ(r.reg_upper_global, 7);
}

TEST(Bounds, QuasiPencilChecksPass) {
  const Arrangement a = gen_quasi_pencil(4);
  const BipartiteGraph g = levi_graph(a);
  const SimplicialComplex delta = independence_complex(g);
  const HomologicalSummary s = summarize(betti_squarefree(delta, PrimeField(2)), delta);
  EXPECT_EQ(s.reg_ideal, 4);
  const int nu = max_matching(g).size;
  EXPECT_EQ(nu, 4);
  for (const auto& c : bounds_verify(a, s, nu, induced_matching(g))) EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
}

TEST(Bounds, PencilNotCountedForArrangementBounds) {
  const BoundReport r = bounds_report(gen_pencil(4));
  EXPECT_FALSE(r.tk_zero);
  EXPECT_FALSE(r.power_bound_applicable);
}

TEST(Bounds, GraphOnlyReport) {
  const BoundReport r = bounds_report(corpus::triple_point_configuration());
  EXPECT_FALSE(r.tk_zero);
  EXPECT_EQ(r.matching_number, 3);
  EXPECT_EQ(r.max_degree, 3);
  EXPECT_EQ(r.dhs_upper, Rational(5));
}

TEST(PowerBound, SmallFamilies) {
  const PrimeField f(2);
  const PowerBoundResult p = power_bound_check(levi_graph(gen_pencil(3)), 2, f);
  EXPECT_EQ(p.reg, 4);
  EXPECT_EQ(p.bound, 6);
  EXPECT_TRUE(p.pass);
  const PowerBoundResult q = power_bound_check(levi_graph(gen_quasi_pencil(3)), 2, f);
  EXPECT_EQ(q.reg, 5);
  EXPECT_TRUE(q.pass);
  const PowerBoundResult first = power_bound_check(levi_graph(gen_pencil(3)), 1, f);
  EXPECT_EQ(first.reg, 2);
  EXPECT_EQ(first.bound, 4);
}
