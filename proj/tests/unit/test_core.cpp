#include <doctest.h>

#include <random>

#include "dfinite/diffop.hpp"
#include "dfinite/errors.hpp"
#include "dfinite/modring.hpp"
#include "dfinite/recop.hpp"
#include "dfinite/roots.hpp"
#include "dfinite/series.hpp"
#include "fixtures.hpp"

using namespace dfinite;
using fx::op;
using fx::P;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rat("-6/4") == Rat(-3, 2));
  CHECK(parse_rat("7") == 7);
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK(to_string(Rat(5, 3)) == "5/3");
}

TEST_CASE("polynomial arithmetic") {
  Poly a = P({1, 2, 1}), b = P({1, 1});
  CHECK(exact_div(a, b) == b);
  CHECK(gcd(a, P({-1, 0, 1})) == P({1, 1}));
  CHECK(gcd(P({1, 0, 1}), P({2, 1})) == Poly(1));
  CHECK(a.shift(Rat(-1)) == P({0, 0, 1}));
  CHECK(squarefree_part(a * P({0, 1})) == P({0, 1, 1}));
  CHECK(resultant(P({-2, 0, 1}), P({0, 1})) == -2);
  CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == 0);
}

TEST_CASE("rational roots") {
  auto r = rational_roots(P({0, 0, 0, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].root == 0);
  CHECK(r[0].multiplicity == 3);
  // x (x - 1) (2x - 1)
  auto s = rational_roots(P({0, 1, -3, 2}));
  REQUIRE(s.size() == 3);
  CHECK(s[0].root == 0);
  CHECK(s[1].root == Rat(1, 2));
  CHECK(s[2].root == 1);
  CHECK(rational_roots(P({-2, 0, 1})).empty());
  auto big = rational_roots(Poly::from_roots({Rat(-7, 3), Rat(12345, 17), Rat(12345, 17)}) * P({1, 0, 1}));
  REQUIRE(big.size() == 2);
  CHECK(big[1].root == Rat(12345, 17));
  CHECK(big[1].multiplicity == 2);
}

TEST_CASE("operator product") {
  // ((1 - z) d - 1) d = (1 - z) d^2 - d
  CHECK(op_mul(op({P({-1}), P({1, -1})}), DiffOp::D()) == op({P({}), P({-1}), P({1, -1})}));
  // ((1-2z)(1-4z) d - 4z) o (z d - 1) = z ((1-2z)(1-4z) d^2 - 4z d + 4)
  DiffOp left = op({P({0, -4}), P({1, -6, 8})});
  DiffOp right = op({P({-1}), P({0, 1})});
  CHECK(op_mul(left, right) == P({0, 1}) * fx::sqrt_plus_z());
  CHECK(op_mul(left, right).normalized() == fx::sqrt_plus_z());
  DiffOp b = fx::apery();
  CHECK(op_mul(DiffOp::mul(Poly(1)), b) == b);
}

TEST_CASE("right division") {
  DiffOp d2 = DiffOp::D(2), dm1 = op({P({-1}), P({1})});
  auto qr = op_right_divrem(d2, dm1);
  CHECK(qr.quotient.to_diffop() == op({P({1}), P({1})}));
  CHECK(qr.remainder.to_diffop() == op({P({1})}));
  CHECK(right_divides(op({P({-1}), P({0, 1})}), fx::sqrt_plus_z()));
}

TEST_CASE("lclm") {
  CHECK(lclm(fx::apery(), fx::apery()) == fx::apery().normalized());
  DiffOp l = lclm(op({P({-1}), P({0, 1})}), op({P({-2}), P({0, 1})}));
  CHECK(l == op({P({2}), P({0, -2}), P({0, 0, 1})}));
  DiffOp m = lclm(DiffOp::D(), op({P({-1}), P({1})}));
  CHECK(m.order() == 2);
  CHECK(right_divides(DiffOp::D(), m));
  CHECK(right_divides(op({P({-1}), P({1})}), m));
}

TEST_CASE("recurrence conversion") {
  RecOp rec = ode_to_rec(fx::apery());
  RecOp expect;
  expect.low = -1;
  expect.coeffs = {P({0, 0, 0, 1}), -(P({1, 2}) * P({5, 17, 17})), P({1, 3, 3, 1})};
  CHECK(rec.same_up_to_scalar(expect));
  CHECK(rec_to_ode(expect).same_up_to_scalar(fx::apery()));

  RecOp e = ode_to_rec(op({P({-1}), P({1})}));
  RecOp ee;
  ee.low = 0;
  ee.coeffs = {P({-1}), P({1, 1})};
  CHECK(e.same_up_to_scalar(ee));
  CHECK(rec_to_ode(ee).same_up_to_scalar(op({P({-1}), P({1})})));

  RecOp g = ode_to_rec(op({P({-2}), P({1, -2})}));
  RecOp gg;
  gg.low = 0;
  gg.coeffs = {P({-2, -2}), P({1, 1})};
  CHECK(g.same_up_to_scalar(gg));

  // (n+1)^2 a_{n+1} - 4 (2n+1)^2 a_n: indicial lambda^2 at 0.
  RecOp cb;
  cb.low = 0;
  cb.coeffs = {P({-4, -16, -16}), P({1, 2, 1})};
  DiffOp l = rec_to_ode(cb);
  CHECK(l.order() == 2);
  CHECK(indicial_at_zero(l).monic() == P({0, 0, 1}));
}

TEST_CASE("quotient ring arithmetic") {
  ModRing r(P({-2, 0, 1}));
  Poly a = r.gen();
  CHECK(r.mul(a, a) == Poly(2));
  Poly u = P({1, 1});
  CHECK(r.mul(u, r.inv(u)) == Poly(1));
  ModRing s(P({-1, 0, 1}));
  Poly z = P({-1, 1});
  try {
    s.inv(z);
    FAIL("expected a zero divisor");
  } catch (const ZeroDivisor& zd) {
    CHECK(zd.factor.degree() == 1);
    CHECK(exact_div(s.modulus(), zd.factor).degree() == 1);
  }
}

TEST_CASE("series application and unrolling") {
  TruncSeries f({1, -1, -2, -4, -10});
  TruncSeries g = apply_op(fx::sqrt_plus_z(), f);
  CHECK(g.trunc_order() == 3);
  CHECK(is_zero_series(g));
  CHECK(apply_op(DiffOp::D(), TruncSeries({1, 1, 1})) == TruncSeries({1, 2}));

  TruncSeries a = unroll(fx::apery(), TruncSeries({1, 5, 73}), 8);
  CHECK(a == TruncSeries::from_ints(fx::apery_numbers(8)));
  TruncSeries e = unroll(op({P({-1}), P({1})}), TruncSeries({1}), 4);
  CHECK(e == TruncSeries({Rat(1), Rat(1), Rat(1, 2), Rat(1, 6)}));
  CHECK(validate_init(fx::apery(), TruncSeries({1, 5, 73})));
  CHECK_FALSE(validate_init(DiffOp::D(2), TruncSeries({1})));
  CHECK_FALSE(validate_init(op({P({-2}), P({1, -2})}), TruncSeries({1, 3})));
  CHECK_THROWS_AS(unroll(op({P({-2}), P({1, -2})}), TruncSeries({1, 3}), 5), Inconsistent);
}
