#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehlcp/harness.hpp"
#include "ehlcp/rng.hpp"
#include "ehlcp/solver.hpp"
#include "oracle_helpers.hpp"

using namespace ehlcp;

namespace {

Instance hlcp(Matrix c0, Matrix c1, Vec q) {
  return Instance(MatrixTuple({std::move(c0), std::move(c1)}), {}, std::move(q));
}

Instance worked_k2() {
  return Instance(MatrixTuple({Matrix{{1}}, Matrix{{1}}, Matrix{{1}}}), {Vec{1}}, Vec{Rational(-3, 2)});
}

}  // namespace

TEST_CASE("ehlcp_residual fixtures") {
  const MatrixTuple ii({Matrix::identity(2), Matrix::identity(2)});
  CHECK(ehlcp_residual(ii, {}, SolutionTuple({{1, 0}, {0, 1}})) == Vec{1, -1, 0, 0});
  CHECK(ehlcp_residual(ii, {}, SolutionTuple({{0, 0}, {0, 0}})) == Vec{0, 0, 0, 0});

  const MatrixTuple ones({Matrix{{1}}, Matrix{{1}}, Matrix{{1}}});
  CHECK(ehlcp_residual(ones, {Vec{1}}, SolutionTuple({{0}, {1}, {Rational(1, 2)}})) ==
        Vec{Rational(-3, 2), 0, 0});

  CHECK_THROWS_AS(ehlcp_residual(ii, {Vec{1, 1}}, SolutionTuple({{0, 0}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("solve_all fixtures") {
  {
    const Instance inst = hlcp(Matrix::identity(2), Matrix::identity(2), {1, -1});
    const SolutionSet ss = solve_all(inst);
    REQUIRE(ss.pieces.size() == 1);
    CHECK(ss.pieces[0].sample.xs == std::vector<Vec>{{1, 0}, {0, 1}});
  }
  {
    const Instance inst = hlcp(Matrix{{1}}, Matrix{{-1}}, {1});
    const SolutionSet ss = solve_all(inst);
    REQUIRE(ss.pieces.size() == 2);
    CHECK(ss.pieces[0].sample.xs == std::vector<Vec>{{1}, {0}});
    CHECK(ss.pieces[1].sample.xs == std::vector<Vec>{{0}, {1}});
  }
  {
    const SolutionSet ss = solve_all(worked_k2());
    REQUIRE(ss.pieces.size() == 1);
    CHECK(ss.pieces[0].sample.xs == std::vector<Vec>{{0}, {1}, {Rational(1, 2)}});
  }
  {
    // no solution: x0 = -1 < 0 forced
    const SolutionSet ss = solve_all(hlcp(Matrix{{1}}, Matrix{{0}}, {-1}));
    CHECK(ss.empty());
  }
}

TEST_CASE("solve_all samples verify and satisfy the chain lemma") {
  SplitRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratorSpec spec;
    spec.n = int(rng.uniform_int(1, 2));
    spec.k = int(rng.uniform_int(1, 2));
    spec.kind = TupleKind::General;
    spec.seed = rng.next_u64();
    const MatrixTuple c = gen_tuple(spec);
    const Instance inst = gen_instance(c, QMode::Any, DMode::RandomPositive, rng.next_u64());
    for (const auto& p : solve_all(inst).pieces) {
      CHECK(verify_solution(inst, p.sample));
      CHECK(check_chain_lemma(inst, p.sample));
      CHECK(satisfies(p.cons, stack(p.sample)));
    }
  }
}

TEST_CASE("solve_all membership agrees with direct verification on a grid") {
  SplitRng rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = int(rng.uniform_int(1, 2));
    const int k = int(rng.uniform_int(1, 2));
    std::vector<Matrix> mats;
    for (int i = 0; i <= k; ++i) mats.push_back(testing::random_matrix(rng, n, -2, 2, 1));
    std::vector<Vec> d(static_cast<size_t>(k - 1), Vec(static_cast<size_t>(n), Rational(2)));
    Vec q(static_cast<size_t>(n));
    for (auto& v : q) v = rng.uniform_int(-2, 2);
    const Instance inst(MatrixTuple(std::move(mats)), std::move(d), std::move(q));
    const SolutionSet ss = solve_all(inst);
    testing::for_each_grid_point((k + 1) * n, -1, 2, 2, [&](const Vec& pt) {
      CHECK(verify_solution(inst, unstack(pt, n, k)) == piece_membership(ss, pt));
    });
  }
}

TEST_CASE("degree fixtures") {
  {
    const DegreeResult d1 = degree(MatrixTuple({Matrix{{1}}, Matrix{{1}}}), {}, 42);
    REQUIRE(d1.defined());
    CHECK(d1.value == 1);
    CHECK(d1.counted.size() == 1);
  }
  {
    const DegreeResult d2 = degree(MatrixTuple({Matrix::identity(2), Matrix::identity(2)}), {}, 42);
    REQUIRE(d2.defined());
    CHECK(d2.value == 1);
  }
  {
    const DegreeResult und = degree(MatrixTuple({Matrix{{1}}, Matrix{{0}}}), {}, 42);
    CHECK(und.kind == DegreeResult::Kind::UndefinedNotR0W);
  }
  {
    // preimages with opposite Jacobian signs cancel exactly: two solutions
    // for a positive target, none for a negative one, degree 0 either way
    const DegreeResult zero = degree(MatrixTuple({Matrix{{1}}, Matrix{{-1}}}), {}, 42);
    REQUIRE(zero.defined());
    CHECK(zero.value == 0);
    CHECK(zero.counted.size() % 2 == 0);
  }
  {
    // SSM-W fixture tuple: nonzero degree with all-ones bounds
    const DegreeResult d42 = degree(fixture_ones_members(), {Vec{1, 1}}, 42);
    REQUIRE(d42.defined());
    CHECK(d42.value != 0);
  }
}

TEST_CASE("degree is independent of the generic point seed") {
  SplitRng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    GeneratorSpec spec;
    spec.n = int(rng.uniform_int(1, 2));
    spec.k = int(rng.uniform_int(1, 2));
    spec.kind = trial % 2 ? TupleKind::ColumnW : TupleKind::General;
    spec.seed = rng.next_u64();
    const MatrixTuple c = gen_tuple(spec);
    if (!r0_w(c).yes()) continue;
    std::vector<Vec> d(static_cast<size_t>(c.k - 1), Vec(static_cast<size_t>(c.n), Rational(1)));
    const DegreeResult a = degree(c, d, 1);
    const DegreeResult b = degree(c, d, 2);
    const DegreeResult e = degree(c, d, 3);
    REQUIRE(a.defined());
    CHECK(a.value == b.value);
    CHECK(a.value == e.value);
  }
}

TEST_CASE("degree counted solutions lie strictly inside their cells") {
  const DegreeResult d = degree(fixture_ones_members(), {Vec{1, 1}}, 7);
  REQUIRE(d.defined());
  long long total = 0;
  for (const auto& [cell, sgn] : d.counted) {
    CHECK((sgn == 1 || sgn == -1));
    total += sgn;
  }
  CHECK(total == d.value);
}

TEST_CASE("solve_newton fixtures") {
  {
    const Instance inst = hlcp(Matrix::identity(2), Matrix::identity(2), {1, -1});
    const NewtonResult r = solve_newton(inst, SolutionTuple::zero(2, 1), 1e-12, 100);
    REQUIRE(r.success);
    CHECK(r.exact_verified);
    CHECK(r.x.xs == std::vector<Vec>{{1, 0}, {0, 1}});
  }
  {
    // infeasible instance: x0 = -1 < 0
    const Instance inst = hlcp(Matrix{{1}}, Matrix{{0}}, {-1});
    const NewtonResult r = solve_newton(inst, SolutionTuple::zero(1, 1), 1e-12, 60);
    CHECK_FALSE(r.success);
  }
  CHECK_THROWS_AS(solve_newton(hlcp(Matrix{{1}}, Matrix{{1}}, {1}), SolutionTuple::zero(1, 1), -1.0, 10),
                  std::invalid_argument);
}

TEST_CASE("solve_newton matches solve_all on column W instances") {
  SplitRng rng(29);
  int successes = 0;
  for (int trial = 0; trial < 40; ++trial) {
    GeneratorSpec spec;
    spec.n = int(rng.uniform_int(1, 3));
    spec.k = int(rng.uniform_int(1, 2));
    spec.kind = TupleKind::ColumnW;
    spec.seed = rng.next_u64();
    const MatrixTuple c = gen_tuple(spec);
    const Instance inst = gen_instance(c, QMode::Any, DMode::RandomPositive, rng.next_u64());
    const NewtonResult r = solve_newton(inst, SolutionTuple::zero(c.n, c.k), 1e-10, 200);
    if (!r.success) continue;
    ++successes;
    const SolutionSet ss = solve_all(inst);
    REQUIRE(ss.pieces.size() == 1);
    const Vec want = stack(ss.pieces[0].sample);
    const Vec got = stack(r.x);
    for (size_t i = 0; i < want.size(); ++i)
      CHECK(std::abs(to_double(got[i]) - to_double(want[i])) < 1e-8);
  }
  CHECK(successes >= 30);
}
