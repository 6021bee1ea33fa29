#ifndef DFINITE_MODRING_HPP
#define DFINITE_MODRING_HPP

#include <stdexcept>
#include <string>

#include "dfinite/poly.hpp"

namespace dfinite {

// Thrown by ModRing when an element is neither zero nor a unit. `factor` is a
// monic proper factor of the modulus; callers split and retry.
struct ZeroDivisor : std::runtime_error {
  Poly factor;
  explicit ZeroDivisor(Poly f) : std::runtime_error("zero divisor in quotient ring"), factor(std::move(f)) {}
};

// Q viewed through the same interface as ModRing.
struct RatRing {
  using Elem = Rat;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_rat(const Rat& r) const { return r; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Q[a]/(m) for a squarefree monic m. Elements are reduced polynomials in a.
class ModRing {
 public:
  using Elem = Poly;
  explicit ModRing(Poly modulus);
  const Poly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }

  Elem zero() const { return Poly(); }
  Elem one() const { return Poly(1); }
  Elem gen() const { return reduce(Poly::x()); }
  Elem from_rat(const Rat& r) const { return Poly(r); }
  Elem reduce(const Poly& p) const { return p.degree() < m_.degree() ? p : p % m_; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }
  Elem neg(const Elem& a) const { return -a; }
  // True iff a = 0. Throws ZeroDivisor if a vanishes on part of the modulus.
  bool is_zero(const Elem& a) const;
  // Throws ZeroDivisor for nonzero non-units and std::domain_error for zero.
  Elem inv(const Elem& a) const;
  // Value of a rational polynomial at the generator.
  Elem eval(const Poly& p) const { return reduce(p); }
  std::string to_string(const Elem& a) const { return a.to_string("a"); }

 private:
  Poly m_;
};

}  // namespace dfinite

#endif
