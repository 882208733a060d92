#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehlcp/matclass.hpp"
#include "ehlcp/rng.hpp"
#include "oracle_helpers.hpp"

using namespace ehlcp;

TEST_CASE("is_Z fixtures") {
  CHECK(is_Z(Matrix::identity(2)));
  CHECK_FALSE(is_Z(Matrix{{1, 1}, {1, 1}}));
  CHECK(is_Z(Matrix{{1, -2}, {0, 1}}));
  CHECK(is_Z(Matrix{{-5}}));  // diagonal sign is unrestricted
}

TEST_CASE("is_P fixtures") {
  CHECK(is_P(Matrix{{1, -2}, {0, 1}}).yes());
  CHECK(is_P(Matrix::identity(3)).yes());

  const ClassVerdict v = is_P(Matrix{{0, 1}, {1, 0}});
  REQUIRE(v.no());
  REQUIRE(v.witness.has_value());
  CHECK(reverifies_not_P(Matrix{{0, 1}, {1, 0}}, *v.witness));
}

TEST_CASE("is_SSM fixtures") {
  CHECK(is_SSM(Matrix::identity(2)).yes());
  CHECK(is_SSM(Matrix{{1, 1}, {1, 1}}).yes());

  const Matrix flip{{0, 1}, {1, 0}};
  const ClassVerdict v = is_SSM(flip);
  REQUIRE(v.no());
  REQUIRE(v.witness.has_value());
  CHECK(reverifies_not_SSM(flip, *v.witness));

  CHECK(is_SSM(Matrix{{-1}}).no());
}

TEST_CASE("is_M_matrix fixtures") {
  CHECK(is_M_matrix(Matrix::identity(2)).yes());
  CHECK(is_M_matrix(Matrix{{1, -1}, {0, 1}}).yes());
  CHECK(is_M_matrix(Matrix{{1, 1}, {1, 1}}).no());
  CHECK(is_M_matrix(Matrix{{1, -2}, {-2, 1}}).no());  // Z but inverse has negatives
}

TEST_CASE("P implies SSM on sampled matrices") {
  SplitRng rng(5);
  int p_count = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = int(rng.uniform_int(1, 3));
    const Matrix m = testing::random_matrix(rng, n, -3, 3, 2);
    const ClassVerdict p = is_P(m);
    if (p.yes()) {
      ++p_count;
      CHECK(is_SSM(m).yes());
    } else {
      CHECK(reverifies_not_P(m, *p.witness));
    }
  }
  CHECK(p_count > 5);
}

TEST_CASE("P equals SSM for Z matrices") {
  SplitRng rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = int(rng.uniform_int(1, 3));
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = (i == j) ? rng.rational(-2, 3, 2) : rng.rational(-2, 0, 2);
    REQUIRE(is_Z(m));
    CHECK(is_P(m).yes() == is_SSM(m).yes());
  }
}

TEST_CASE("SSM witnesses re-verify on sampled failures") {
  SplitRng rng(23);
  int no_count = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = int(rng.uniform_int(1, 3));
    const Matrix m = testing::random_matrix(rng, n, -3, 3, 2);
    const ClassVerdict v = is_SSM(m);
    if (v.no()) {
      ++no_count;
      CHECK(reverifies_not_SSM(m, *v.witness));
    }
  }
  CHECK(no_count > 10);
}
