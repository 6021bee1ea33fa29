#include <random>

#include "dfinite/errors.hpp"
#include "dfinite/generators.hpp"
#include "dfinite/guess_prove.hpp"
#include "dfinite/minimization.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dfinite;
using namespace fx;

namespace {

BivarPoly B(std::initializer_list<Poly> c) { return BivarPoly{std::vector<Poly>(c)}; }

// (y - z)^2 - (1 - 4z)
BivarPoly sqrt_plus_z_poly() { return B({P({-1, 4, 1}), P({0, -2}), P({1})}); }

}  // namespace

TEST_CASE("Hermite-Pade guessing") {
  auto f = unroll(sqrt_plus_z(), S({1, -1}), 40);
  auto p = guess_algebraic(f, 2, 2);
  REQUIRE(p.has_value());
  CHECK(*p == sqrt_plus_z_poly().normalized());

  auto geo = guess_algebraic(gen_binomial_sum({1}, 30), 1, 1);
  REQUIRE(geo.has_value());
  CHECK(*geo == B({P({-1}), P({1, -2})}).normalized());

  CHECK_FALSE(guess_algebraic(gen_binomial_sum({2, 2}, 80), 6, 6).has_value());
  CHECK_THROWS_AS(guess_algebraic(f, 4, 8), PrecisionTooLow);
}

TEST_CASE("annihilator of roots") {
  CHECK(annihilator_of_roots(B({P({-1, 4}), P({}), P({1})})).same_up_to_scalar(op({P({2}), P({1, -4})})));
  CHECK(annihilator_of_roots(B({P({-1}), P({1, -1})})).same_up_to_scalar(op({P({-1}), P({1, -1})})));
  CHECK(annihilator_of_roots(sqrt_plus_z_poly()).same_up_to_scalar(sqrt_plus_z()));
  CHECK_THROWS_AS(annihilator_of_roots(B({P({1}), P({-2}), P({1})})), NotSquarefree);

  // Cubic: y^3 + z y - 1 = 0 with y(0) = 1; the operator kills the root to 50 terms.
  BivarPoly cubic = B({P({-1}), P({0, 1}), P({}), P({1})});
  auto l = annihilator_of_roots(cubic);
  // The three roots sum to zero, so they span a 2-dimensional space.
  CHECK(l.order() == 2);
  auto g = series_root(cubic, S({1}), 1, 50);
  REQUIRE(g.has_value());
  CHECK(is_zero_series(apply_op(l, *g)));
  CHECK(is_zero_series(cubic.eval(*g)));
}

TEST_CASE("certified roots") {
  CHECK(certify_root(sqrt_plus_z(), S({1, -1}), sqrt_plus_z_poly()));
  BivarPoly bad = sqrt_plus_z_poly();
  bad.c[0] = bad.c[0] + P({0, 0, 1});
  CHECK_FALSE(certify_root(sqrt_plus_z(), S({1, -1}), bad));
  // Two roots 1 +- z^2 agree on the two given terms.
  DiffOp d2 = op({P({}), P({}), P({1})});
  CHECK_THROWS_AS(certify_root(d2, S({1, 0}), B({P({0, 0, 0, 0, -1}), P({-2}), P({1})})), RootNotSeparable);
}

TEST_CASE("proving algebraicity") {
  auto pr = prove_algebraic(sqrt_plus_z(), S({1, -1}));
  REQUIRE(pr.has_value());
  CHECK(pr->poly.deg_y() == 2);
  CHECK(pr->root_operator.same_up_to_scalar(sqrt_plus_z()));

  auto f11 = gen_binomial_sum({1, 1}, 80);
  auto l11 = find_operator(f11, 2, 6);
  REQUIRE(l11.has_value());
  auto p11 = prove_algebraic(*l11, f11.truncate(4));
  REQUIRE(p11.has_value());
  // 1 / sqrt(1 - 6z + z^2).
  CHECK(p11->poly == B({P({-1}), P({}), P({1, -6, 1})}).normalized());

  ProveOptions wide;
  wide.max_dy = 8;
  wide.max_dz = 8;
  CHECK_FALSE(prove_algebraic(apery(), S({1, 5, 73}), wide).has_value());
}

TEST_CASE("property: round trip on random algebraic series") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-3, 3);
  int done = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int dy = 1 + static_cast<int>(rng() % 3);
    BivarPoly q;
    for (int j = 0; j <= dy; ++j) q.c.push_back(P({c(rng), c(rng), c(rng)}));
    if (q.c.back().is_zero() || q.c.back()[0] == 0) continue;
    // Put a root y = 1 over z = 0.
    Rat s = 0;
    for (const auto& x : q.c) s += x[0];
    q.c[0] = q.c[0] - Poly(s);
    Rat dq = 0;
    for (int j = 1; j <= dy; ++j) dq += Rat(j) * q.c[j][0];
    if (dq == 0) continue;
    q = q.normalized();
    if (!squarefree_in_y(q)) continue;
    auto g = series_root(q, S({1}), 1, 80);
    REQUIRE(g.has_value());
    DiffOp l = annihilator_of_roots(q);
    auto chk = check_init(l, g->truncate(1));
    TruncSeries init = g->truncate(std::max<long>(chk.required, 1));
    REQUIRE(validate_init(l, init));
    ProveOptions o;
    o.max_dy = 4;
    o.max_dz = 4;
    auto pr = prove_algebraic(l, init, o);
    REQUIRE(pr.has_value());
    CHECK(pr->poly.deg_y() <= q.deg_y());
    CHECK(is_zero_series(pr->poly.eval(*g)));
    if (pr->poly.deg_y() == q.deg_y()) CHECK(pr->poly == q);
    ++done;
  }
  CHECK(done > 10);
}
