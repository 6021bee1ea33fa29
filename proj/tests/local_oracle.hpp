#ifndef DFINITE_TEST_LOCAL_ORACLE_HPP
#define DFINITE_TEST_LOCAL_ORACLE_HPP

#include <algorithm>
#include <map>
#include <utility>

#include "dfinite/local.hpp"
#include "dfinite/modring.hpp"
#include "dfinite/number.hpp"

namespace fx {

// Applies L to a truncated generalized series at a finite point by formal
// differentiation of t^mu log(t)^j, and checks that every term that the
// truncation fully determines vanishes.
inline bool annihilated_formally(const DiffOp& l, const dfinite::SingularPoint& s, const dfinite::FormalSolution& y,
                                 long order) {
  // Terms are given up to offset `order` from the base exponent of the class;
  // solutions introduced at a resonance carry fewer of them.
  long last = -1;
  for (const auto& row : y.log_coeffs) last = std::max<long>(last, static_cast<long>(row.size()) - 1);
  if (last > order) return false;
  using dfinite::Poly;
  using dfinite::Rat;
  Poly modulus = s.kind == dfinite::SingularPoint::Kind::Rational ? Poly({-s.value, Rat(1)}) : s.modulus;
  dfinite::ModRing ring(modulus);
  const Poly a = ring.gen();
  using Key = std::pair<Rat, int>;
  std::map<Key, Poly> cur;
  for (std::size_t j = 0; j < y.log_coeffs.size(); ++j)
    for (std::size_t n = 0; n < y.log_coeffs[j].size(); ++n)
      if (!y.log_coeffs[j][n].is_zero()) cur[{y.exponent + Rat(static_cast<long>(n)), static_cast<int>(j)}] = y.log_coeffs[j][n];

  std::map<Key, Poly> total;
  bool have_v = false;
  int v = 0;
  for (int i = 0; i <= l.order(); ++i) {
    const Poly& c = l[i];
    // a_i(a + t) = sum_k A_k t^k with A_k = sum_m c_m binom(m, k) a^(m - k).
    std::vector<Poly> A(c.degree() + 1);
    for (int k = 0; k <= c.degree(); ++k) {
      Poly acc;
      for (int m = k; m <= c.degree(); ++m) {
        Poly pw(Rat(1));
        for (int e = 0; e < m - k; ++e) pw = ring.mul(pw, a);
        acc = acc + pw * Poly(c[m] * Rat(dfinite::binomial(m, k)));
      }
      A[k] = ring.reduce(acc);
      if (!ring.is_zero(A[k]) && (!have_v || k - i < v)) {
        if (!have_v || k - i < v) v = k - i;
        have_v = true;
      }
    }
    for (int k = 0; k <= c.degree(); ++k) {
      if (ring.is_zero(A[k])) continue;
      for (const auto& [key, coef] : cur) {
        Key nk{key.first + Rat(k), key.second};
        total[nk] = ring.add(total[nk], ring.mul(A[k], coef));
      }
    }
    std::map<Key, Poly> next;
    for (const auto& [key, coef] : cur) {
      const auto& [mu, j] = key;
      Key k1{mu - Rat(1), j};
      next[k1] = ring.add(next[k1], ring.mul(coef, ring.from_rat(mu)));
      if (j > 0) {
        Key k2{mu - Rat(1), j - 1};
        next[k2] = ring.add(next[k2], ring.mul(coef, ring.from_rat(Rat(j))));
      }
    }
    cur = std::move(next);
  }
  const Rat limit = y.exponent + Rat(v) + Rat(last);
  for (const auto& [key, coef] : total)
    if (key.first <= limit && !ring.is_zero(coef)) return false;
  return true;
}

}  // namespace fx

#endif
