#include <algorithm>
#include <random>

#include "dfinite/errors.hpp"
#include "dfinite/local.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "local_oracle.hpp"

using namespace dfinite;
using namespace fx;

namespace {

// z(1-z) d^2 + (a + 1 - (a + b + 1) z) d - a b
DiffOp hypergeometric_op(const Rat& a, const Rat& b) {
  return op({Poly(-a * b), Poly({a + 1, -(a + b + 1)}), P({0, 1, -1})});
}

std::vector<Rat> roots_of(const IndicialData& d) {
  std::vector<Rat> out;
  for (const auto& r : d.rational_roots) out.push_back(r.root);
  return out;
}

}  // namespace

TEST_CASE("singular points") {
  auto s = singularities(apery());
  REQUIRE(s.size() == 3);
  CHECK(s[0] == SingularPoint::rational(0));
  CHECK(s[1] == SingularPoint::algebraic(P({1, -34, 1})));
  CHECK(s[2] == SingularPoint::infinity());
  CHECK(singularities(op({P({}), P({}), P({1})})).size() == 1);
  auto t = singularities(log_op());
  REQUIRE(t.size() == 2);
  CHECK(t[0] == SingularPoint::rational(1));
  // Ordering by absolute value.
  auto u = singularities(op({P({1}), P({6, -5, 1}) * P({1, 1})}));
  REQUIRE(u.size() == 4);
  CHECK(u[0].value == -1);
  CHECK(u[1].value == 2);
  CHECK(u[2].value == 3);
}

TEST_CASE("indicial polynomials") {
  auto ap = indicial(apery(), SingularPoint::rational(0));
  REQUIRE(ap.size() == 1);
  CHECK(ap[0].rational_poly() == P({0, 0, 0, 1}));
  CHECK(ap[0].degree == 3);
  REQUIRE(ap[0].rational_roots.size() == 1);
  CHECK(ap[0].rational_roots[0].multiplicity == 3);
  CHECK_FALSE(ap[0].splits_distinct_rational);

  DiffOp h = hypergeometric_op(Rat(1, 3), Rat(1, 2));
  auto at0 = indicial(h, SingularPoint::rational(0))[0];
  auto at1 = indicial(h, SingularPoint::rational(1))[0];
  auto inf = indicial(h, SingularPoint::infinity())[0];
  CHECK(roots_of(at0) == std::vector<Rat>{Rat(-1, 3), Rat(0)});
  CHECK(roots_of(at1) == std::vector<Rat>{Rat(0), Rat(1, 2)});
  CHECK(roots_of(inf) == std::vector<Rat>{Rat(1, 3), Rat(1, 2)});
  CHECK(inf.splits_distinct_rational);

  // Ordinary point: lambda (lambda - 1) ... (lambda - r + 1).
  auto ord = indicial(apery(), SingularPoint::rational(2))[0];
  CHECK(ord.rational_poly().monic() == P({0, 2, -3, 1}));

  // Irregular at infinity: z^2 d - 1 has exp(-1/z).
  auto irr = indicial(op({P({-1}), P({0, 0, 1})}), SingularPoint::rational(0))[0];
  CHECK(irr.degree == 0);
}

TEST_CASE("indicial at an algebraic point") {
  auto alg = indicial(apery(), SingularPoint::algebraic(P({1, -34, 1})));
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].degree == 3);
  // Conifold points of the Apery operator have exponents 0, 1/2, 1.
  CHECK(roots_of(alg[0]) == std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)});
}

TEST_CASE("number field roots") {
  auto none = rational_roots_nf({P({0, -1}), P({}), P({1})}, P({-2, 0, 1}));
  REQUIRE(none.size() == 1);
  CHECK(none[0].roots.empty());
  auto three = rational_roots_nf({P({0}), P({1}), P({-3}), P({2})}, P({-2, 0, 1}));
  REQUIRE(three.size() == 1);
  CHECK(three[0].roots.size() == 3);
  // lambda - a over (a - 1)(a - 2) splits into two branches.
  auto split = rational_roots_nf({P({0, -1}), P({1})}, P({2, -3, 1}));
  REQUIRE(split.size() == 2);
  for (const auto& b : split) {
    REQUIRE(b.modulus.degree() == 1);
    REQUIRE(b.roots.size() == 1);
    CHECK(b.roots[0].root == -b.modulus[0]);
  }
}

TEST_CASE("Frobenius bases and logarithms") {
  auto lg = formal_solutions(log_op(), SingularPoint::rational(1), 3);
  REQUIRE(lg.size() == 1);
  CHECK(lg[0].has_logarithms);
  REQUIRE(lg[0].solutions.size() == 2);
  for (const auto& y : lg[0].solutions) CHECK(annihilated_formally(log_op(), SingularPoint::rational(1), y, 3));

  auto d2 = formal_solutions(op({P({}), P({}), P({1})}), SingularPoint::rational(0), 1)[0];
  CHECK_FALSE(d2.has_logarithms);
  CHECK(d2.solutions.size() == 2);

  DiffOp zz = op({P({2}), P({0, -2}), P({0, 0, 1})});
  auto b = formal_solutions(zz, SingularPoint::rational(0), 1)[0];
  CHECK_FALSE(b.has_logarithms);
  REQUIRE(b.solutions.size() == 2);
  CHECK(b.solutions[0].exponent == 1);
  CHECK(b.solutions[1].exponent == 2);

  // Annihilator of z^2 and z^2 log z + z by Wronskian elimination.
  DiffOp wl = op({P({-2, 4}), P({0, 2, -3}), P({0, 0, -1, 1})});
  auto w = formal_solutions(wl, SingularPoint::rational(0), 1)[0];
  CHECK(w.has_logarithms);
  REQUIRE(w.first_log.has_value());
  CHECK(w.first_log->exponent == 2);
  for (const auto& y : w.solutions) CHECK(annihilated_formally(wl, SingularPoint::rational(0), y, 6));
  auto w6 = formal_solutions(wl, SingularPoint::rational(0), 6)[0];
  for (const auto& y : w6.solutions) CHECK(annihilated_formally(wl, SingularPoint::rational(0), y, 6));

  auto early = formal_solutions(wl, SingularPoint::rational(0), 6, {true})[0];
  CHECK(early.has_logarithms);

  auto ap = formal_solutions(apery(), SingularPoint::rational(0), 8)[0];
  CHECK(ap.has_logarithms);
  REQUIRE(ap.solutions.size() == 3);
  int top = 0;
  for (const auto& y : ap.solutions) top = std::max(top, y.log_degree());
  CHECK(top == 2);
  // The log-free solution is the Apery series.
  const FormalSolution* plain = nullptr;
  for (const auto& y : ap.solutions)
    if (y.log_degree() == 0) plain = &y;
  REQUIRE(plain != nullptr);
  auto nums = apery_numbers(9);
  Rat c0 = plain->log_coeffs[0][0][0];
  for (int n = 0; n < 9; ++n) CHECK(plain->log_coeffs[0][n][0] == c0 * Rat(nums[n]));
  for (const auto& y : ap.solutions) CHECK(annihilated_formally(apery(), SingularPoint::rational(0), y, 8));
}

TEST_CASE("Frobenius errors and algebraic points") {
  CHECK_THROWS_AS(formal_solutions(op({P({-1}), P({0, 0, 1})}), SingularPoint::rational(0), 3), IrregularPoint);
  DiffOp wl = op({P({-2, 4}), P({0, 2, -3}), P({0, 0, -1, 1})});
  CHECK_THROWS_AS(formal_solutions(wl, SingularPoint::rational(0), 0), PrecisionTooLow);

  SingularPoint cp = SingularPoint::algebraic(P({1, -34, 1}));
  auto alg = formal_solutions(apery(), cp, 4);
  REQUIRE(alg.size() == 1);
  CHECK(alg[0].solutions.size() == 3);
  for (const auto& y : alg[0].solutions) CHECK(annihilated_formally(apery(), alg[0].point, y, 4));

  // ((z^2 - 2) y')' = 0 has a logarithm at both roots of z^2 - 2.
  DiffOp lg2 = op({P({}), P({0, 2}), P({-2, 0, 1})});
  auto l2 = formal_solutions(lg2, SingularPoint::algebraic(P({-2, 0, 1})), 3);
  REQUIRE(l2.size() == 1);
  CHECK(l2[0].has_logarithms);
  for (const auto& y : l2[0].solutions) CHECK(annihilated_formally(lg2, l2[0].point, y, 3));

  auto inf = formal_solutions(hypergeometric_op(Rat(1, 3), Rat(1, 2)), SingularPoint::infinity(), 2)[0];
  CHECK_FALSE(inf.has_logarithms);
  CHECK(inf.solutions.size() == 2);
}

TEST_CASE("property: integer exponents of right factors and formal annihilation") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-4, 4), kd(0, 4);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Poly> a;
    int r = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i <= r; ++i) a.push_back(P({c(rng), c(rng), c(rng)}));
    if (a.back().is_zero()) a.back() = P({0, 1});
    DiffOp A(a);
    long k = kd(rng);
    DiffOp L = op_mul(A, op({P({-k}), P({0, 1})}));
    auto d = indicial(L, SingularPoint::rational(0))[0];
    bool found = false;
    for (const auto& rm : d.rational_roots) found = found || rm.root == k;
    CHECK(found);
    CHECK(d.degree <= L.order());
    if (d.degree != L.order()) continue;
    long order = max_integer_difference(d.rational_roots) + 3;
    auto b = formal_solutions(L, SingularPoint::rational(0), order)[0];
    if (d.splits_distinct_rational) CHECK(static_cast<int>(b.solutions.size()) == L.order());
    for (const auto& y : b.solutions) CHECK(annihilated_formally(L, SingularPoint::rational(0), y, order));
    ++checked;
  }
  CHECK(checked > 50);
}
