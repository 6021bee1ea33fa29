#include "dfinite/modring.hpp"

namespace dfinite {

ModRing::ModRing(Poly modulus) : m_(modulus.monic()) {
  if (m_.degree() < 1) throw std::invalid_argument("modulus must be nonconstant");
}

bool ModRing::is_zero(const Elem& a) const {
  if (a.is_zero()) return true;
  if (a.degree() == 0) return false;
  Poly g = gcd(a, m_);
  if (g.degree() > 0) throw ZeroDivisor(g);
  return false;
}

ModRing::Elem ModRing::inv(const Elem& a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  if (a.degree() == 0) return Poly(Rat(1) / a.lc());
  Poly s, t;
  Poly g = xgcd(a, m_, s, t);
  if (g.degree() > 0) throw ZeroDivisor(g);
  return reduce(s);
}

}  // namespace dfinite
