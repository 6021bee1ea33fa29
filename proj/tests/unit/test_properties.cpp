#include "doctest.h"
#include "properties.hpp"

using namespace fx;

namespace {

void check(const PropertyResult& r, int cases) {
  CHECK(r.cases == cases);
  INFO(r.first_failure);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("property: right division reconstructs the dividend") { check(prop_divrem(101, 200), 200); }
TEST_CASE("property: lclm is divisible by both operands") { check(prop_lclm(102, 200), 200); }
TEST_CASE("property: composition agrees with repeated application") { check(prop_mul_apply(103, 200), 200); }
TEST_CASE("property: Frobenius solutions are annihilated formally") { check(prop_frobenius(104, 200), 200); }
TEST_CASE("property: zero_test is sound on solutions") { check(prop_zero_test(105, 200), 200); }
TEST_CASE("property: verdicts are deterministic") { check(prop_determinism(106, 200), 200); }
