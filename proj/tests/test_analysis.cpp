#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehlcp/analysis.hpp"
#include "ehlcp/harness.hpp"
#include "ehlcp/rng.hpp"

using namespace ehlcp;

namespace {

Instance hlcp(Matrix c0, Matrix c1, Vec q) {
  return Instance(MatrixTuple({std::move(c0), std::move(c1)}), {}, std::move(q));
}

}  // namespace

TEST_CASE("ray solution set: one piece, unbounded, connected") {
  const SolutionSet ss = solve_all(hlcp(Matrix{{1}}, Matrix{{0}}, {0}));
  REQUIRE(ss.pieces.size() == 1);  // the point branch is contained in the ray branch
  CHECK_FALSE(is_bounded(ss));
  CHECK(is_connected(ss));
  CHECK_FALSE(is_unique(ss));
}

TEST_CASE("two isolated points: bounded, not unique, not connected") {
  const SolutionSet ss = solve_all(hlcp(Matrix{{1}}, Matrix{{-1}}, {1}));
  REQUIRE(ss.pieces.size() == 2);
  CHECK(is_bounded(ss));
  CHECK_FALSE(is_unique(ss));
  CHECK_FALSE(is_connected(ss));
  const PieceGraph g = piece_graph(ss);
  CHECK(g.edges.empty());
  const auto comp = graph_components(ss, g);
  CHECK(comp == std::vector<int>{0, 1});
  CHECK(component_bounded(ss, comp, 0));
  CHECK(component_bounded(ss, comp, 1));
}

TEST_CASE("unique single point") {
  const SolutionSet ss = solve_all(hlcp(Matrix::identity(2), Matrix::identity(2), {1, -1}));
  CHECK(is_bounded(ss));
  CHECK(is_unique(ss));
  CHECK(is_connected(ss));
  const AnalysisReport r = analyze(ss);
  CHECK(r.pieces == 1);
  CHECK(r.bounded);
  CHECK(r.unique);
  CHECK(r.connected);
  CHECK_FALSE(r.empty);
}

TEST_CASE("empty solution set conventions") {
  const SolutionSet ss = solve_all(hlcp(Matrix{{1}}, Matrix{{0}}, {-1}));
  REQUIRE(ss.empty());
  const AnalysisReport r = analyze(ss);
  CHECK(r.bounded);
  CHECK_FALSE(r.unique);
  CHECK(r.connected);
  CHECK(r.empty);
}

TEST_CASE("touching pieces are connected") {
  // q = 0 with C1 = -1: branches meet at the origin
  const SolutionSet ss = solve_all(hlcp(Matrix{{1}}, Matrix{{-1}}, {0}));
  CHECK(is_connected(ss));
  CHECK(is_unique(ss));  // only the origin solves
}

TEST_CASE("segment plus ray: connected, not unique, unbounded") {
  // zero columns leave x1 ranging in [0, d1] and x2 on a ray; the two pieces
  // touch at (0, d1, 0)
  const Instance inst(MatrixTuple({Matrix{{1}}, Matrix{{0}}, Matrix{{0}}}), {Vec{2}}, Vec{0});
  const SolutionSet ss = solve_all(inst);
  CHECK_FALSE(ss.empty());
  CHECK(is_connected(ss));
  CHECK_FALSE(is_unique(ss));
  CHECK_FALSE(is_bounded(ss));  // level-2 branch leaves x2 unbounded (zero column)
}

TEST_CASE("M-matrix tuple at positive q gives the trivial singleton when connected") {
  SplitRng rng(53);
  int connected_hits = 0;
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorSpec spec;
    spec.n = int(rng.uniform_int(1, 2));
    spec.k = int(rng.uniform_int(1, 2));
    spec.kind = TupleKind::MZero;
    spec.seed = rng.next_u64();
    const MatrixTuple c = gen_tuple(spec);
    const Instance inst = gen_instance(c, QMode::Positive, DMode::RandomPositive, rng.next_u64());
    const SolutionSet ss = solve_all(inst);
    if (!is_connected(ss)) continue;
    ++connected_hits;
    const auto inv = inverse(c.c(0));
    REQUIRE(inv.has_value());
    Vec expect = *inv * inst.q;
    expect.resize(static_cast<size_t>((c.k + 1) * c.n));
    CHECK(is_unique(ss));
    CHECK(piece_membership(ss, expect));
  }
  CHECK(connected_hits >= 5);
}
