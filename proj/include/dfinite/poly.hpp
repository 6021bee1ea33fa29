#ifndef DFINITE_POLY_HPP
#define DFINITE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "dfinite/number.hpp"

namespace dfinite {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> c);
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  static Poly monomial(const Rat& c, unsigned k);
  static Poly x() { return monomial(1, 1); }
  // Product of (x - r) over the listed roots.
  static Poly from_roots(const std::vector<Rat>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const Rat& operator[](std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& lc() const { return c_.back(); }
  // Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const;
  Rat eval(const Rat& x) const;
  // p(x + a).
  Poly shift(const Rat& a) const;
  // p(c x).
  Poly scale_var(const Rat& c) const;
  // x^k p(1/x) with k = degree().
  Poly reverse() const;
  Poly mul_xk(unsigned k) const;
  Poly pow(unsigned e) const;
  Poly monic() const;
  // Positive rational c with p / c having coprime integer coefficients and the
  // sign of the leading coefficient preserved.
  Rat content() const;
  Poly primitive() const;
  // Least common denominator of the coefficients.
  Int denominator_lcm() const;
  // Coefficients as integers; requires integral coefficients.
  std::vector<Int> integer_coeffs() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// a = q b + r with deg r < deg b.
void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);
// Resultant via the Euclidean remainder sequence over Q.
Rat resultant(const Poly& a, const Poly& b);
// Extended gcd: s a + t b = g with g monic.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t);

// Taylor coefficient vector of p at the point a: p(a + t) = sum c_k t^k.
std::vector<Rat> taylor_at(const Poly& p, const Rat& a);

}  // namespace dfinite

#endif
