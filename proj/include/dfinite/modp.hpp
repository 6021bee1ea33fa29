#ifndef DFINITE_MODP_HPP
#define DFINITE_MODP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "dfinite/number.hpp"

// Arithmetic in F_p for word-size primes, and dense polynomials over F_p.
namespace dfinite::modp {

using u64 = std::uint64_t;

// 2^61 - 1.
inline constexpr u64 kMersenne61 = 2305843009213693951ULL;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) {
  unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  if (p == kMersenne61) {
    u64 lo = static_cast<u64>(x) & kMersenne61;
    u64 hi = static_cast<u64>(x >> 61);
    u64 s = lo + hi;
    return s >= kMersenne61 ? s - kMersenne61 : s;
  }
  return static_cast<u64>(x % p);
}
inline u64 neg(u64 a, u64 p) { return a == 0 ? 0 : p - a; }
u64 pow(u64 a, u64 e, u64 p);
u64 inv(u64 a, u64 p);  // p prime, a != 0
u64 from_int(const Int& z, u64 p);
u64 from_long(long v, u64 p);
// Empty when p divides the denominator.
std::optional<u64> from_rat(const Rat& r, u64 p);

// The sequence of 62-bit primes used for modular pre-filtering.
u64 large_prime(unsigned index);

class PolyFp {
 public:
  PolyFp() = default;
  PolyFp(std::vector<u64> c, u64 p);
  static PolyFp constant(u64 c, u64 p);
  static PolyFp x(u64 p);

  u64 prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }
  u64 lc() const { return c_.back(); }

  PolyFp operator+(const PolyFp& o) const;
  PolyFp operator-(const PolyFp& o) const;
  PolyFp operator*(const PolyFp& o) const;
  PolyFp scale(u64 s) const;
  PolyFp derivative() const;
  PolyFp monic() const;
  u64 eval(u64 x) const;
  bool operator==(const PolyFp& o) const { return c_ == o.c_; }

  friend void divrem(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r);
  friend PolyFp gcd(PolyFp a, PolyFp b);

 private:
  void trim();
  std::vector<u64> c_;
  u64 p_ = 0;
};

// Rational function over F_p kept in lowest terms with monic denominator.
class RatFuncFp {
 public:
  RatFuncFp() = default;
  RatFuncFp(PolyFp num, PolyFp den);
  explicit RatFuncFp(PolyFp num);
  const PolyFp& num() const { return num_; }
  const PolyFp& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  RatFuncFp operator+(const RatFuncFp& o) const;
  RatFuncFp operator-(const RatFuncFp& o) const;
  RatFuncFp operator*(const RatFuncFp& o) const;
  RatFuncFp operator/(const RatFuncFp& o) const;
  RatFuncFp derivative() const;
  bool operator==(const RatFuncFp& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  void normalize();
  PolyFp num_, den_;
};

}  // namespace dfinite::modp

#endif
