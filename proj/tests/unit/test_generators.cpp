#include <functional>
#include <map>

#include "dfinite/errors.hpp"
#include "dfinite/generators.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dfinite;
using namespace fx;

namespace {

// Walk counts by enumerating every step sequence.
std::vector<long> brute_walks(const StepSet& steps, int n) {
  std::vector<long> out(n, 0);
  std::function<void(int, int, int)> go = [&](int len, int x, int y) {
    out[len] += 1;
    if (len + 1 == n) return;
    for (const auto& s : steps)
      if (x + s[0] >= 0 && y + s[1] >= 0) go(len + 1, x + s[0], y + s[1]);
  };
  go(0, 0, 0);
  return out;
}

// Taylor coefficient of num/den by memoized recursion on exponent vectors.
Rat brute_coeff(const DiagonalSpec& d, const std::vector<int>& e, std::map<std::vector<int>, Rat>& memo) {
  auto it = memo.find(e);
  if (it != memo.end()) return it->second;
  Rat acc = 0;
  auto nt = d.num.terms.find(e);
  if (nt != d.num.terms.end()) acc = nt->second;
  for (const auto& [de, c] : d.den.terms) {
    bool zero = true, fits = true;
    std::vector<int> src(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      zero = zero && de[i] == 0;
      fits = fits && de[i] <= e[i];
      src[i] = e[i] - de[i];
    }
    if (zero || !fits) continue;
    acc -= c * brute_coeff(d, src, memo);
  }
  acc /= d.den.constant_term();
  memo[e] = acc;
  return acc;
}

}  // namespace

TEST_CASE("binomial sums") {
  auto ap = gen_binomial_sum({2, 2}, 10);
  auto nums = apery_numbers(10);
  for (int n = 0; n < 10; ++n) CHECK(ap[n] == Rat(nums[n]));
  CHECK(gen_binomial_sum({1}, 5) == S({1, 2, 4, 8, 16}));
  CHECK(gen_binomial_sum({2}, 5) == S({1, 2, 6, 20, 70}));
  CHECK(gen_binomial_sum({1, 0, 1}, 4) == S({1, 4, 24, 163}));
  CHECK_THROWS_AS(gen_binomial_sum({0, 1}, 3), InputError);
}

TEST_CASE("quarter plane walks") {
  CHECK(gen_walk(trident_steps(), 7) == S({1, 2, 7, 23, 84, 301, 1127}));
  CHECK(gen_walk({{0, 1}}, 4) == S({1, 1, 1, 1}));
  CHECK(gen_walk({{0, 1}, {0, -1}}, 5) == S({1, 1, 2, 3, 6}));
  CHECK(parse_steps("(0,1), (1,-1)") == StepSet{{0, 1}, {1, -1}});
  CHECK_THROWS_AS(parse_steps("(0 1)"), InputError);
  std::vector<StepSet> sets = {trident_steps(), {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{1, 1}, {-1, -1}, {-1, 1}},
                               {{2, 0}, {-1, 1}, {0, -1}}};
  for (const auto& s : sets) {
    auto fast = gen_walk(s, 11);
    auto slow = brute_walks(s, 11);
    for (int i = 0; i < 11; ++i) CHECK(fast[i] == Rat(slow[i]));
  }
}

TEST_CASE("polynomial parsing") {
  std::vector<std::string> v = {"x", "y"};
  auto p = parse_mpoly("(1+y)^2 - 3/2*x*y", v);
  CHECK(p.to_string(v) == "1 + 2*y + y^2 - 3/2*x*y");
  CHECK(parse_mpoly("-x - -y", v).to_string(v) == "y - x");
  CHECK_THROWS_AS(parse_mpoly("1 + w", v), InputError);
  CHECK_THROWS_AS(parse_mpoly("1/(x)", v), InputError);
  CHECK_THROWS_AS(parse_mpoly("(1 + x", v), InputError);
}

TEST_CASE("diagonals") {
  auto b = gen_diagonal(parse_diagonal("1", "1 - x - y", {"x", "y"}), 5);
  CHECK(b == S({1, 2, 6, 20, 70}));
  auto j2 = gen_diagonal(parse_diagonal("1", "1 - z*(1+y)*(y + (1+y)^2)", {"z", "y"}), 6);
  CHECK(j2 == gen_binomial_sum({1, 0, 1}, 6));
  auto ap = gen_diagonal(apery_like_diagonal(2, 2), 8);
  CHECK(ap == gen_binomial_sum({2, 2}, 8));
  CHECK_THROWS_AS(gen_diagonal(parse_diagonal("1", "x - y", {"x", "y"}), 3), InputError);

  // Rational coefficients, a numerator and three variables against the
  // memoized recursion.
  std::vector<DiagonalSpec> specs = {
      parse_diagonal("1 + x*z", "2 - x - 3*y*z - 1/3*z^2", {"x", "y", "z"}),
      parse_diagonal("1", "(1 - 5*x - 7*y*z - 13*z^2)*(1 - x - x*y)", {"x", "y", "z"}),
      parse_diagonal("1", "(1 - x - y - z^2)*(1 - x - x*y)", {"x", "y", "z"}),
  };
  for (const auto& d : specs) {
    auto fast = gen_diagonal(d, 7);
    std::map<std::vector<int>, Rat> memo;
    for (int n = 0; n < 7; ++n) CHECK(fast[n] == brute_coeff(d, {n, n, n}, memo));
  }
}
