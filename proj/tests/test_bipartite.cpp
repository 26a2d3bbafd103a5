#include <gtest/gtest.h>

#include "levi/bipartite.hpp"
#include "levi/testing/oracles.hpp"

using namespace levi;

namespace {

BipartiteGraph star(int k) {
  std::vector<Edge> e;
  for (int y = 0; y < k; ++y) e.emplace_back(0, y);
  return BipartiteGraph(1, k, e);
}

BipartiteGraph triple_point() { return BipartiteGraph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}}); }

}  // namespace

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}}), InputError);
  EXPECT_THROW(BipartiteGraph(2, 2, {{-1, 0}}), InputError);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 0}, {0, 0}}), InputError);
}

TEST(Graph, Labels) {
  EXPECT_EQ(BipartiteGraph(2, 1, {}).labels(), (std::vector<std::string>{"x1", "x2", "y1"}));
}

TEST(LeviGraph, PencilIsStar) {
  const BipartiteGraph g = levi_graph(gen_pencil(5));
  EXPECT_EQ(g.x_count(), 1);
  EXPECT_EQ(g.y_count(), 5);
  EXPECT_EQ(g.edges().size(), 5U);
  EXPECT_EQ(g.x_degree(0), 5);
}

TEST(LeviGraph, GenericFiveLines) {
  const BipartiteGraph g = levi_graph(gen_generic_lines(5));
  EXPECT_EQ(g.vertex_count(), 15);
  EXPECT_EQ(g.edges().size(), 20U);
  const DegreeProfile p = degree_profile(g);
  for (int d : p.x_degrees) EXPECT_EQ(d, 2);
  for (int d : p.y_degrees) EXPECT_EQ(d, 4);
}

TEST(LeviGraph, TriplePointConfiguration) {
  const Arrangement a(1, 3, {{"p1", {0}}, {"p2", {0, 1, 2}}, {"p3", {2}}}, Mode::configuration);
  const BipartiteGraph g = levi_graph(a);
  EXPECT_EQ(g.vertex_count(), 6);
  EXPECT_EQ(g.edges().size(), 5U);
}

TEST(Matching, KnownSizes) {
  for (int k = 3; k <= 8; ++k) {
    EXPECT_EQ(max_matching(levi_graph(gen_quasi_pencil(k))).size, k);
    EXPECT_EQ(max_matching(levi_graph(gen_pencil(k))).size, 1);
  }
  EXPECT_EQ(max_matching(levi_graph(gen_projective_plane(2))).size, 7);
  EXPECT_EQ(max_matching(BipartiteGraph(2, 2, {})).size, 0);
}

TEST(Matching, WitnessIsAMatching) {
  const BipartiteGraph g = levi_graph(gen_projective_plane(3));
  const Matching m = max_matching(g);
  EXPECT_EQ(m.size, 13);
  ASSERT_EQ(m.edges.size(), 13U);
  std::vector<int> xs, ys;
  for (auto [x, y] : m.edges) {
    EXPECT_TRUE(g.adjacent(x, y));
    xs.push_back(x);
    ys.push_back(y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  EXPECT_EQ(std::adjacent_find(xs.begin(), xs.end()), xs.end());
  EXPECT_EQ(std::adjacent_find(ys.begin(), ys.end()), ys.end());
}

TEST(Hall, StrictArrangementsSaturateCurves) {
  for (int k = 3; k <= 7; ++k) {
    EXPECT_TRUE(hall_check(levi_graph(gen_quasi_pencil(k)), Side::y).pass);
    EXPECT_TRUE(hall_check(levi_graph(gen_generic_lines(k)), Side::y).pass);
  }
  EXPECT_TRUE(hall_check(levi_graph(gen_conic_6_5()), Side::y).pass);
  EXPECT_TRUE(hall_check(levi_graph(gen_projective_plane(3)), Side::y).pass);
}

TEST(Hall, StarViolation) {
  const HallResult r = hall_check(star(4), Side::y);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.violating, (std::vector<int>{0, 1}));
  EXPECT_EQ(r.neighborhood_size, 1);
}

TEST(Hall, TriplePointPasses) {
  EXPECT_TRUE(hall_check(triple_point(), Side::y).pass);
  EXPECT_TRUE(hall_check(triple_point(), Side::x).pass);
}

TEST(Hall, ViolatorIsGenuine) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const BipartiteGraph g = levi::testing::random_bipartite(rng, 2 + t % 4, 2 + t % 5, 0.35);
    for (Side side : {Side::x, Side::y}) {
      const HallResult r = hall_check(g, side);
      if (r.pass) continue;
      EXPECT_LT(r.neighborhood_size, static_cast<int>(r.violating.size()));
    }
  }
}

TEST(InducedMatching, Small) {
  EXPECT_EQ(induced_matching(star(5)), 1);
  EXPECT_EQ(induced_matching(levi_graph(gen_generic_lines(3))), 2);
  EXPECT_EQ(induced_matching(BipartiteGraph(2, 2, {{0, 0}, {1, 1}})), 2);
  EXPECT_EQ(induced_matching(BipartiteGraph(2, 2, {})), 0);
}

TEST(InducedMatching, CapEnforced) {
  EXPECT_THROW(induced_matching(levi_graph(gen_projective_plane(3)), 40), CapExceeded);
}

TEST(Degrees, Profiles) {
  const DegreeProfile q = degree_profile(levi_graph(gen_quasi_pencil(4)));
  EXPECT_TRUE(q.degree_one.empty());
  EXPECT_EQ(q.min_x_degree, 2);
  EXPECT_EQ(q.min_y_degree, 2);
  const DegreeProfile s = degree_profile(star(3));
  EXPECT_EQ(s.degree_one, (std::vector<std::string>{"y1", "y2", "y3"}));
  const DegreeProfile c = degree_profile(levi_graph(gen_conic_6_5()));
  for (int d : c.y_degrees) EXPECT_EQ(d, 5);
  const DegreeProfile iso = degree_profile(BipartiteGraph(2, 2, {{0, 0}}));
  EXPECT_EQ(iso.isolated, (std::vector<std::string>{"x2", "y2"}));
}

TEST(Degrees, StripIsolated) {
  const StrippedGraph s = strip_isolated(BipartiteGraph(3, 3, {{2, 0}, {2, 2}}));
  EXPECT_EQ(s.graph.x_count(), 1);
  EXPECT_EQ(s.graph.y_count(), 2);
  EXPECT_EQ(s.x_index, (std::vector<int>{2}));
  EXPECT_EQ(s.y_index, (std::vector<int>{0, 2}));
  EXPECT_TRUE(s.graph.adjacent(0, 1));
}
