#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehlcp/harness.hpp"
#include "ehlcp/json_io.hpp"

using namespace ehlcp;

TEST_CASE("rational json forms") {
  CHECK(rational_to_json(Rational(5)) == Json(5));
  CHECK(rational_to_json(Rational(3, 2)) == Json("3/2"));
  CHECK(rational_from_json(Json(-7)) == Rational(-7));
  CHECK(rational_from_json(Json("3/2")) == Rational(3, 2));
  CHECK(rational_from_json(Json("4")) == Rational(4));
  CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(Json("x/y")), std::invalid_argument);
}

TEST_CASE("instance json round trip") {
  const Instance inst(MatrixTuple({Matrix{{1, Rational(1, 2)}, {0, 1}}, Matrix{{2, -1}, {1, 1}},
                                   Matrix{{0, 1}, {1, 0}}}),
                      {Vec{Rational(3, 2), 1}}, Vec{-1, Rational(5, 4)});
  const Json j = instance_to_json(inst);
  const Instance back = instance_from_json(j);
  CHECK(back.tuple.mats == inst.tuple.mats);
  CHECK(back.d == inst.d);
  CHECK(back.q == inst.q);
  CHECK(instance_to_json(back) == j);  // byte-identical re-emission
  CHECK(instance_to_json(back).dump() == j.dump());
}

TEST_CASE("parse_input distinguishes tuples from instances") {
  const auto inst = parse_input(R"({"n":1,"k":1,"C":[[[1]],[[-1]]],"q":[1],"d":[]})");
  CHECK(inst.has_q);
  CHECK(inst.instance.k() == 1);
  CHECK(inst.instance.q == Vec{1});

  const auto tup = parse_input(R"({"C":[[[1]],[[-1]]]})");
  CHECK_FALSE(tup.has_q);
  CHECK(tup.instance.tuple.k == 1);

  // rational strings parse exactly
  const auto rat = parse_input(R"({"C":[[["3/2"]],[[1]]],"q":["-1/2"]})");
  CHECK(rat.instance.tuple.c(0).at(0, 0) == Rational(3, 2));
  CHECK(rat.instance.q == Vec{Rational(-1, 2)});
}

TEST_CASE("parse_input error paths are distinct") {
  CHECK_THROWS_WITH_AS(parse_input("{not json"), doctest::Contains("malformed JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_input(R"({"n":1,"k":1,"C":[[[1]],[[1]]],"q":[1,2]})"),
                       doctest::Contains("length mismatch"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_input(R"({"n":1,"k":2,"C":[[[1]],[[1]],[[1]]],"d":[[0]],"q":[1]})"),
      doctest::Contains("positive"), std::invalid_argument);
  CHECK_THROWS_AS(parse_input(R"({"q":[1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_input("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("verdict serialization carries certificates") {
  const Verdict no41 = ssm_w(fixture_p_members());
  const Json j = verdict_to_json("ssm_w", no41);
  CHECK(j["property"] == "ssm_w");
  CHECK(j["status"] == "No");
  REQUIRE(j["certificate"].contains("witness"));
  const SolutionTuple w = solution_tuple_from_json(j["certificate"]["witness"]);
  CHECK(reverifies_not_ssm_w(fixture_p_members(), w));

  const Verdict cw = column_w(fixture_ones_members());
  const Json jc = verdict_to_json("column_w", cw);
  CHECK(jc["certificate"]["representatives"]["first"]["det"] == Json(0));
}

TEST_CASE("solution set and analysis serialization smoke") {
  const Instance inst(MatrixTuple({Matrix{{1}}, Matrix{{-1}}}), {}, Vec{1});
  const SolutionSet ss = solve_all(inst);
  const Json j = solution_set_to_json(ss);
  CHECK(j["count"] == 2);
  CHECK(j["pieces"].size() == 2);
  for (const auto& p : j["pieces"]) {
    const SolutionTuple sample = solution_tuple_from_json(p["sample"]);
    CHECK(verify_solution(inst, sample));
  }

  const Json a = analysis_to_json(analyze(ss));
  CHECK(a["connected"] == false);
  CHECK(a["bounded"] == true);
  CHECK(a["pieces"] == 2);

  const Json d = degree_to_json(degree(inst.tuple, {}, 11));
  CHECK(d["kind"] == "value");
}

TEST_CASE("identical inputs give byte-identical reports") {
  const Instance inst(MatrixTuple({Matrix::identity(2), Matrix::identity(2)}), {}, Vec{1, -1});
  CHECK(solution_set_to_json(solve_all(inst)).dump() == solution_set_to_json(solve_all(inst)).dump());
  const SuiteReport r1 = run_suite("S-T22", 10, SuiteSizes{2, 1}, 31337);
  const SuiteReport r2 = run_suite("S-T22", 10, SuiteSizes{2, 1}, 31337);
  CHECK(r1.passes == r2.passes);
}
