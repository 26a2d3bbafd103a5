#include <gtest/gtest.h>

#include "levi/complex.hpp"
#include "levi/testing/oracles.hpp"

using namespace levi;

namespace {

BipartiteGraph star(int k) {
  std::vector<Edge> e;
  for (int y = 0; y < k; ++y) e.emplace_back(0, y);
  return BipartiteGraph(1, k, e);
}

BipartiteGraph triple_point() { return BipartiteGraph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}}); }

// Variables ordered x1 x2 x3 y1 y2 y3.
Monomial mono(std::initializer_list<int> vars, int n = 6) {
  Monomial m(n, 0);
  for (int v : vars) m[v] = 1;
  return m;
}

}  // namespace

TEST(SimplicialComplex, ReducesToAntichain) {
  const SimplicialComplex c(3, {0b011, 0b001, 0b011, 0b100});
  EXPECT_EQ(c.facets(), (std::vector<Face>{0b011, 0b100}));
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_TRUE(c.contains(0b010));
  EXPECT_FALSE(c.contains(0b110));
  EXPECT_EQ(c.f_vector(), (std::vector<long long>{1, 3, 1}));
}

TEST(SimplicialComplex, DegenerateComplexes) {
  EXPECT_EQ(SimplicialComplex::void_complex(3).dimension(), -2);
  EXPECT_EQ(SimplicialComplex::irrelevant(3).dimension(), -1);
  EXPECT_EQ(SimplicialComplex::simplex(4).dimension(), 3);
  EXPECT_EQ(SimplicialComplex::irrelevant(3).faces(), (std::vector<Face>{0}));
  EXPECT_TRUE(SimplicialComplex::void_complex(3).faces().empty());
}

TEST(SimplicialComplex, FaceCap) { EXPECT_THROW(SimplicialComplex::simplex(20).faces(1000), CapExceeded); }

TEST(SimplicialComplex, Induced) {
  const SimplicialComplex c(4, {0b0111, 0b1100});
  EXPECT_EQ(c.induced(0b1010).facets(), (std::vector<Face>{0b0010, 0b1000}));
  EXPECT_EQ(c.induced(0).facets(), (std::vector<Face>{0}));
}

TEST(EdgeIdeal, TriplePointGenerators) {
  const MonomialIdeal i = edge_ideal(triple_point());
  const MonomialIdeal expected(triple_point().labels(),
                               {mono({0, 3}), mono({1, 3}), mono({1, 4}), mono({1, 5}), mono({2, 5})});
  EXPECT_EQ(i, expected);
  EXPECT_EQ(i.to_text(), "x1*y1\nx2*y1\nx2*y2\nx2*y3\nx3*y3\n");
}

TEST(EdgeIdeal, QuasiPencilGeneratorCount) {
  for (int k = 3; k <= 8; ++k) EXPECT_EQ(edge_ideal(levi_graph(gen_quasi_pencil(k))).gens().size(), 3U * k - 3);
}

TEST(EdgeIdeal, EmptyGraphIsZero) { EXPECT_TRUE(edge_ideal(BipartiteGraph(2, 2, {})).is_zero()); }

TEST(IndependenceComplex, Star) {
  const SimplicialComplex c = independence_complex(star(3));
  EXPECT_EQ(c.facets(), (std::vector<Face>{0b0001, 0b1110}));
}

TEST(IndependenceComplex, SingleEdge) {
  EXPECT_EQ(independence_complex(BipartiteGraph(1, 1, {{0, 0}})).facets(), (std::vector<Face>{0b01, 0b10}));
}

TEST(IndependenceComplex, GenericLinesPointsFormFacet) {
  const SimplicialComplex c = independence_complex(levi_graph(gen_generic_lines(5)));
  EXPECT_TRUE(std::find(c.facets().begin(), c.facets().end(), Face{0x3FF}) != c.facets().end());
  EXPECT_EQ(c.dimension(), 9);
}

TEST(IndependenceComplex, FaceCountMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const BipartiteGraph g = levi::testing::random_bipartite(rng, 1 + t % 5, 1 + t % 6, 0.4);
    EXPECT_EQ(static_cast<long long>(independence_complex(g).faces().size()), levi::testing::count_independent_sets(g));
  }
}

TEST(StanleyReisner, IrrelevantComplexGivesMaximalIdeal) {
  const MonomialIdeal i = stanley_reisner_ideal(SimplicialComplex::irrelevant(3));
  EXPECT_EQ(i.gens().size(), 3U);
  EXPECT_EQ(i.generator_degree(), 1);
}

TEST(StanleyReisner, VoidComplexGivesUnitIdeal) {
  EXPECT_TRUE(stanley_reisner_ideal(SimplicialComplex::void_complex(2)).is_unit());
  EXPECT_TRUE(complex_of_ideal(MonomialIdeal(default_labels(2), {{0, 0}})).is_void());
}

TEST(StanleyReisner, SingleGeneratorGivesTwoPoints) {
  const SimplicialComplex c = complex_of_ideal(MonomialIdeal(default_labels(2), {{1, 1}}));
  EXPECT_EQ(c.facets(), (std::vector<Face>{0b01, 0b10}));
}

TEST(StanleyReisner, ZeroIdealGivesSimplex) {
  EXPECT_EQ(complex_of_ideal(MonomialIdeal(default_labels(3), {})), SimplicialComplex::simplex(3));
}

TEST(StanleyReisner, NonSquarefreeRejected) {
  EXPECT_THROW(complex_of_ideal(MonomialIdeal(default_labels(2), {{2, 0}})), NonSquarefree);
  EXPECT_THROW(alexander_dual(MonomialIdeal(default_labels(2), {{2, 0}})), NonSquarefree);
}

TEST(AlexanderDual, TriplePointConfiguration) {
  const MonomialIdeal dual = alexander_dual(edge_ideal(triple_point()));
  const MonomialIdeal expected(triple_point().labels(), {mono({3, 4, 5}), mono({1, 3, 5}), mono({0, 1, 5}),
                                                         mono({1, 2, 3}), mono({0, 1, 2})});
  EXPECT_EQ(dual, expected);
}

TEST(AlexanderDual, SingleEdge) {
  const MonomialIdeal dual = alexander_dual(MonomialIdeal(default_labels(2), {{1, 1}}));
  EXPECT_EQ(dual, MonomialIdeal(default_labels(2), {{1, 0}, {0, 1}}));
}

TEST(OpenInterval, TwoAtoms) {
  const MonomialIdeal i(default_labels(2), {{1, 0}, {0, 1}});
  const LcmLattice l = lcm_lattice(i);
  const SimplicialComplex top = open_interval_complex(l, {1, 1});
  EXPECT_EQ(top.vertex_count(), 2);
  EXPECT_EQ(top.facets(), (std::vector<Face>{0b01, 0b10}));
  EXPECT_TRUE(open_interval_complex(l, {1, 0}).is_irrelevant());
}

TEST(OpenInterval, ChainsAreMaximal) {
  // Lattice of <a, b, c>: open interval below abc is the boundary of a hexagon.
  const MonomialIdeal i(default_labels(3), {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const LcmLattice l = lcm_lattice(i);
  const SimplicialComplex c = open_interval_complex(l, {1, 1, 1});
  EXPECT_EQ(c.vertex_count(), 6);
  EXPECT_EQ(c.facets().size(), 6U);
  EXPECT_EQ(c.dimension(), 1);
}

TEST(KoszulComplex, OutsideIdealIsVoid) {
  const MonomialIdeal i(default_labels(2), {{1, 1}});
  EXPECT_TRUE(koszul_complex(i, {1, 0}).is_void());
  EXPECT_TRUE(koszul_complex(i, {1, 1}).is_irrelevant());
}
