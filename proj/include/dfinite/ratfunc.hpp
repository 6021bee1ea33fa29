#ifndef DFINITE_RATFUNC_HPP
#define DFINITE_RATFUNC_HPP

#include <string>

#include "dfinite/poly.hpp"

namespace dfinite {

// Element of Q(z) in lowest terms with monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(Poly num);  // NOLINT
  RatFunc(const Rat& c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Poly(c)) {}  // NOLINT
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  RatFunc derivative() const;
  RatFunc inverse() const;
  std::string to_string(const std::string& var = "z") const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace dfinite

#endif
