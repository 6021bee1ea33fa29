#ifndef DFINITE_TEST_FIXTURES_HPP
#define DFINITE_TEST_FIXTURES_HPP

#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/number.hpp"
#include "dfinite/poly.hpp"
#include "dfinite/series.hpp"

namespace fx {

using dfinite::DiffOp;
using dfinite::Poly;
using dfinite::Rat;

inline Poly P(std::initializer_list<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

inline Poly Pq(std::initializer_list<const char*> c) {
  std::vector<Rat> v;
  for (auto s : c) v.push_back(dfinite::parse_rat(s));
  return Poly(std::move(v));
}

inline dfinite::TruncSeries S(std::initializer_list<long> c) {
  return dfinite::TruncSeries::from_ints(std::vector<long>(c));
}

inline DiffOp op(std::initializer_list<Poly> c) { return DiffOp(std::vector<Poly>(c)); }

// (z^4 - 34 z^3 + z^2) d^3 + (6 z^3 - 153 z^2 + 3 z) d^2 + (7 z^2 - 112 z + 1) d + z - 5
inline DiffOp apery() {
  return op({P({-5, 1}), P({1, -112, 7}), P({0, 3, -153, 6}), P({0, 0, 1, -34, 1})});
}

// (1 - 2z)(1 - 4z) d^2 - 4 z d + 4, annihilating z and sqrt(1 - 4z).
inline DiffOp sqrt_plus_z() { return op({P({4}), P({0, -4}), P({1, -6, 8})}); }

// (z - 1) d^2 + d, annihilating 1 and log(1 - z).
inline DiffOp log_op() { return op({P({}), P({1}), P({-1, 1})}); }

// Apery numbers by the binomial sum.
inline std::vector<dfinite::Int> apery_numbers(unsigned n) {
  std::vector<dfinite::Int> out;
  for (unsigned m = 0; m < n; ++m) {
    dfinite::Int s = 0;
    for (unsigned k = 0; k <= m; ++k) {
      dfinite::Int a = dfinite::binomial(m, k) * dfinite::binomial(m + k, k);
      s += a * a;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace fx

#endif
