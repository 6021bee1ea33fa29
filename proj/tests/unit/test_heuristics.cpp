#include <cmath>

#include "dfinite/errors.hpp"
#include "dfinite/generators.hpp"
#include "dfinite/heuristics.hpp"
#include "dfinite/hypergeometric.hpp"
#include "dfinite/minimization.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "pcurv_oracle.hpp"

using namespace dfinite;
using namespace fx;

namespace {

DiffOp f11_operator() {
  auto f = gen_binomial_sum({1, 1}, 80);
  auto l = find_operator(f, 2, 6);
  REQUIRE(l.has_value());
  return *l;
}

}  // namespace

TEST_CASE("denominator scan") {
  std::vector<Rat> h{Rat(0)};
  for (int n = 1; n < 50; ++n) h.emplace_back(1, n);
  auto rep = eisenstein_scan(TruncSeries(h));
  CHECK(rep.primes.size() == 15);
  CHECK(*rep.largest_prime == 47);
  CHECK_FALSE(rep.constant.has_value());
  CHECK(rep.transcendence_evidence);

  auto cb = eisenstein_scan(gen_binomial_sum({2}, 40));
  CHECK(cb.primes.empty());
  CHECK(*cb.constant == 1);
  CHECK_FALSE(cb.transcendence_evidence);

  auto k = eisenstein_scan(hypergeometric_series({{Rat(1, 2), Rat(1, 2)}, {Rat(1)}}, 60));
  CHECK(k.primes == std::vector<Int>{2});
  CHECK(*k.constant == 16);
  CHECK_FALSE(k.transcendence_evidence);
}

TEST_CASE("p-curvature") {
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul}) {
    auto e = p_curvature(op({P({-1}), P({1})}), p);
    CHECK(e.computed);
    CHECK_FALSE(e.is_zero);
    CHECK(e.matrix_rank == 1);
  }
  for (unsigned long p : {3ul, 5ul, 7ul}) CHECK(p_curvature(op({P({-1}), P({-2, 2})}), p).is_zero);
  for (unsigned long p : {5ul, 7ul, 11ul}) CHECK_FALSE(p_curvature(apery(), p).is_zero);
  CHECK(p_curvature(op({P({-1}), P({-3, 3})}), 3).bad_prime);
  for (const auto& l : {sqrt_plus_z(), op({P({-1}), P({-3, 3})}), f11_operator()})
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
      auto rep = p_curvature(l, p);
      if (!rep.bad_prime) CHECK(rep.is_zero);
    }
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) CHECK_FALSE(p_curvature(log_op(), p).is_zero);
  CHECK(p_curvature(apery(), 3).bad_prime);
  CHECK_THROWS_AS(p_curvature(apery(), 9), InputError);
}

TEST_CASE("p-curvature agrees with the polynomial recursion entry by entry") {
  std::vector<DiffOp> ops = {sqrt_plus_z(), op({P({-1}), P({-3, 3})}), f11_operator(), apery(), log_op()};
  for (const auto& l : ops)
    for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul}) {
      auto a = p_curvature_matrix(l, p);
      auto b = pcurv_oracle(l, p);
      REQUIRE(a.has_value() == b.has_value());
      if (a) CHECK(*a == *b);
    }
}

TEST_CASE("Flajolet and the binomial-sum decision") {
  CHECK(flajolet_check({Rat(-3, 2), true, false}) == FlajoletVerdict::Transcendental);
  CHECK(flajolet_check({Rat(-1, 2), true, true}) == FlajoletVerdict::Inconclusive);
  CHECK(flajolet_check({Rat(-2), true, true}) == FlajoletVerdict::Transcendental);
  CHECK(flajolet_check({std::nullopt, true, true}) == FlajoletVerdict::Transcendental);
  CHECK(apery_asymptotic_decision({2, 2}) == AperyClass::Transcendental);
  CHECK(apery_asymptotic_decision({1, 0, 1}) == AperyClass::Algebraic);
  CHECK(apery_asymptotic_decision({2}) == AperyClass::Algebraic);
  CHECK(apery_asymptotic_decision({1}) == AperyClass::Rational);
  CHECK(apery_asymptotic_decision({1, 0, 0}) == AperyClass::Rational);
  CHECK_THROWS_AS(apery_asymptotic_decision({0, 2}), InputError);
}

TEST_CASE("growth estimates") {
  auto cb = estimate_growth(gen_binomial_sum({2}, 80));
  CHECK(std::fabs(cb.beta - 4.0) < 0.01);
  CHECK(std::fabs(cb.r + 0.5) < 0.05);
  auto g = estimate_growth(gen_binomial_sum({1}, 60));
  CHECK(std::fabs(g.beta - 2.0) < 0.01);
  CHECK(std::fabs(g.r) < 0.05);
  auto ap = estimate_growth(gen_binomial_sum({2, 2}, 100));
  CHECK(std::fabs(ap.beta - std::pow(1 + std::sqrt(2.0), 4)) < 0.1);
  CHECK(std::fabs(ap.r + 1.5) < 0.1);
}
