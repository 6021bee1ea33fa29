#include <random>

#include "dfinite/hypergeometric.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dfinite;
using Kind = InterlacingResult::Kind;

namespace {

Rat q(long p, long r) { return Rat(p, r); }

HypParams central(int k) {
  HypParams h;
  h.a.assign(k, q(1, 2));
  h.b.assign(k - 1, Rat(1));
  return h;
}

}  // namespace

TEST_CASE("fractional parts and interlacing") {
  CHECK(frac_conv(q(3, 2)) == q(1, 2));
  CHECK(frac_conv(Rat(2)) == 1);
  CHECK(frac_conv(q(-1, 3)) == q(2, 3));
  CHECK(interlaces({q(1, 2)}, {Rat(1)}));
  CHECK_FALSE(interlaces({q(1, 2), q(1, 2)}, {q(1, 3), Rat(1)}));
  CHECK_FALSE(interlaces({q(1, 5), q(2, 5)}, {q(3, 5), q(4, 5)}));
  // Orientation starting on either side.
  CHECK(interlaces({q(1, 5), q(3, 5)}, {q(2, 5), q(4, 5)}));
  CHECK(interlaces({q(2, 5), q(4, 5)}, {q(1, 5), q(3, 5)}));
}

TEST_CASE("interlacing criterion") {
  CHECK(interlacing_criterion(central(1)).kind == Kind::Algebraic);
  for (int k = 2; k <= 6; ++k) CHECK(interlacing_criterion(central(k)).kind == Kind::Transcendental);
  HypParams escape{{Rat(1), Rat(1)}, {Rat(2)}};
  CHECK(interlacing_criterion(escape).kind == Kind::Inapplicable);
  HypParams bad{{q(1, 2), q(1, 3)}, {Rat(-2)}};
  CHECK(interlacing_criterion(bad).kind == Kind::Inapplicable);
  HypParams wrong{{q(1, 2)}, {q(1, 3)}};
  CHECK(interlacing_criterion(wrong).kind == Kind::Inapplicable);

  for (long d = 2; d <= 12; ++d)
    for (long p = 1; p < d; ++p) {
      if (dfinite::gcd(Int(p), Int(d)) != 1) continue;
      CHECK(interlacing_criterion({{q(p, d)}, {}}).kind == Kind::Algebraic);
    }

  auto r = interlacing_criterion({{q(1, 6), q(5, 6)}, {q(1, 2)}});
  CHECK(r.denominator == 6);
}

TEST_CASE("property: verdict depends only on fractional parts and is symmetric under l -> D - l") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> den(2, 9), shift(-3, 3);
  int decided = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    HypParams h;
    for (int i = 0; i < k; ++i) {
      long d = den(rng);
      h.a.push_back(q(static_cast<long>(rng() % d), d));
    }
    for (int i = 0; i + 1 < k; ++i) {
      long d = den(rng);
      h.b.push_back(q(1 + static_cast<long>(rng() % d), d));
    }
    auto base = interlacing_criterion(h);
    HypParams s = h;
    for (auto& x : s.a) x += Rat(shift(rng));
    for (auto& x : s.b) {
      Rat y = x + Rat(shift(rng));
      if (!(is_integer(y) && y <= 0)) x = y;
    }
    CHECK(interlacing_criterion(s).kind == base.kind);
    if (base.kind == Kind::Inapplicable) continue;
    ++decided;
    // The negated parameters correspond to l = D - 1 applied to frac images.
    HypParams neg = h;
    for (auto& x : neg.a) x = -x;
    for (auto& x : neg.b) x = -x;
    std::vector<Rat> bb = neg.b;
    bool ok = true;
    for (auto& x : bb) ok = ok && !(is_integer(x) && x <= 0);
    if (ok) CHECK(interlacing_criterion(neg).kind == base.kind);
  }
  CHECK(decided > 50);
}

TEST_CASE("hypergeometric coefficients") {
  auto c = hypergeometric_series(central(2), 5);
  // (1/2)_n^2 / n!^2 = binom(2n, n)^2 / 16^n.
  for (int n = 0; n < 5; ++n) {
    Rat b(dfinite::binomial(2 * n, n));
    Rat p16 = 1;
    for (int i = 0; i < n; ++i) p16 *= 16;
    CHECK(c[n] == b * b / p16);
  }
}
