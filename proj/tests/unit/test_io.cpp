#include <random>

#include "dfinite/errors.hpp"
#include "dfinite/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dfinite;
using namespace fx;
using io::json;

TEST_CASE("rationals must be canonical strings") {
  CHECK(io::rational_from_json(json("-3/4")) == Rat(-3, 4));
  CHECK(io::rational_from_json(json(7)) == 7);
  CHECK_THROWS_AS(io::rational_from_json(json("2/4")), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json("1/-2")), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), InputError);
  CHECK_THROWS_AS(io::rational_from_json(json("x")), InputError);
}

TEST_CASE("problem files") {
  auto p = io::parse_problem_text(R"({"operator": {"coefficients": [["-1", 2], [], ["3"]], "denominator": "6"},
                                      "init": ["1/2", "0"],
                                      "assertions": {"globally_bounded": true,
                                                     "asymptotic": {"r": null, "beta_algebraic": true}}})");
  REQUIRE(p.op);
  CHECK(*p.op == op({Pq({"-1/6", "1/3"}), P({}), Pq({"1/2"})}));
  CHECK(p.init == TruncSeries({Rat(1, 2), Rat(0)}));
  CHECK(p.assertions.globally_bounded);
  REQUIRE(p.assertions.asymptotic);
  CHECK(!p.assertions.asymptotic->r);
  CHECK(flajolet_check(*p.assertions.asymptotic) == FlajoletVerdict::Transcendental);

  CHECK_THROWS_AS(io::parse_problem_text("{"), InputError);
  CHECK_THROWS_AS(io::parse_problem_text("[]"), InputError);
  CHECK_THROWS_AS(io::parse_problem_text(R"({"operator": {"coefficients": [["1"]]}})"), InputError);
  CHECK_THROWS_AS(io::parse_problem_text(R"({"operator": {"coefficients": [["1/2"], ["1"]]}})"), InputError);
  CHECK_THROWS_AS(io::parse_problem_text(R"({"operator": {"coefficients": [["1"], ["1"]], "denominator": 0}})"),
                  InputError);
  CHECK_THROWS_AS(io::parse_problem_text(R"({"assertions": {"globally_bounded": "yes"}})"), InputError);
}

TEST_CASE("property: problem files round trip") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-50, 50), d(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Poly> cs;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> v;
      for (int k = 0; k < 3; ++k) {
        Rat x(c(rng), d(rng));
        x.canonicalize();
        v.push_back(x);
      }
      cs.emplace_back(v);
    }
    if (cs.back().is_zero()) continue;
    io::ProblemFile p;
    p.op = DiffOp(cs);
    std::vector<Rat> in;
    for (int k = 0; k < 4; ++k) {
      Rat x(c(rng), d(rng));
      x.canonicalize();
      in.push_back(x);
    }
    p.init = TruncSeries(in);
    p.assertions.globally_bounded = trial % 2;
    json j = io::problem_to_json(p);
    auto q = io::parse_problem_text(j.dump());
    REQUIRE(q.op);
    CHECK(*q.op == *p.op);
    CHECK(q.init == p.init);
    CHECK(q.assertions.globally_bounded == p.assertions.globally_bounded);
    CHECK(io::problem_to_json(q) == j);
  }
}

TEST_CASE("reports replay") {
  auto r = transcendence_test(apery(), S({1, 5, 73}));
  json j = json::parse(io::report_to_json(r, false).dump());
  CHECK(j["verdict"] == "T");
  CHECK(j["confidence"] == "certified-modulo-minimality");
  CHECK(j["certificate"][1] == "NonsplittingIndicial(0, lambda^3)");
  auto v = io::verify_report(j, apery(), S({1, 5, 73}));
  REQUIRE(v);
  CHECK(*v == Verdict::Transcendental);

  json forged = j;
  forged["certificate"][1] = "NonsplittingIndicial(1, lambda^3)";
  CHECK(!io::verify_report(forged, apery(), S({1, 5, 73})));
  forged = j;
  forged["verdict"] = "FAIL";
  CHECK(!io::verify_report(forged, apery(), S({1, 5, 73})));
  // An operator that does not annihilate the solution is rejected.
  forged = j;
  forged["operator"] = io::polys_to_json(log_op().coeffs());
  CHECK(!io::verify_report(forged, apery(), S({1, 5, 73})));

  auto gb = globally_bounded_test(sqrt_plus_z(), S({1, -1}));
  json jg = io::report_to_json(gb, true);
  auto vg = io::verify_report(jg, sqrt_plus_z(), S({1, -1}));
  REQUIRE(vg);
  CHECK(*vg == Verdict::Algebraic);
}

TEST_CASE("series text keeps large integers exact") {
  TruncSeries f({Rat(Int("123456789012345678901234567890")), Rat(1, 3), Rat(-2)});
  CHECK(io::series_to_json_text(f) == "[123456789012345678901234567890,\"1/3\",-2]");
}

TEST_CASE("bivariate encoding") {
  BivarPoly p{{P({-1, 4, 1}), P({0, -2}), P({1})}};
  CHECK(io::bivar_from_json(io::bivar_to_json(p)) == p);
}
