#include "dfinite/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "dfinite/modp.hpp"

namespace dfinite {

namespace {
const Rat kZero = 0;
}

Poly::Poly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

Poly::Poly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rat& c, unsigned k) {
  if (c == 0) return Poly();
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
  Poly r(1);
  for (const auto& a : roots) r *= Poly({-a, Rat(1)});
  return r;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
  Rat t;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r[i + j] += t;
    }
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::shift(const Rat& a) const {
  if (a == 0 || c_.size() <= 1) return *this;
  std::vector<Rat> v = c_;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) v[j] += a * v[j + 1];
  return Poly(std::move(v));
}

Poly Poly::scale_var(const Rat& c) const {
  std::vector<Rat> v = c_;
  Rat pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::reverse() const { return Poly(std::vector<Rat>(c_.rbegin(), c_.rend())); }

Poly Poly::mul_xk(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> v(k, Rat(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / lc());
}

Rat Poly::content() const {
  if (is_zero()) return 1;
  Int g = 0, l = 1;
  for (const auto& v : c_) {
    if (v == 0) continue;
    g = dfinite::gcd(g, v.get_num());
    l = dfinite::lcm(l, v.get_den());
  }
  if (g < 0) g = -g;
  Rat r(g, l);
  r.canonicalize();
  return r;
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / content());
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const auto& v : c_) l = dfinite::lcm(l, v.get_den());
  return l;
}

std::vector<Int> Poly::integer_coeffs() const {
  std::vector<Int> r;
  r.reserve(c_.size());
  for (const auto& v : c_) {
    if (v.get_den() != 1) throw std::domain_error("non-integral coefficient");
    r.push_back(v.get_num());
  }
  return r;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  int da = a.degree(), db = b.degree();
  if (da < db) {
    q = Poly();
    r = a;
    return;
  }
  std::vector<Rat> rem = a.coeffs();
  std::vector<Rat> quo(da - db + 1, Rat(0));
  Rat ilc = Rat(1) / b.lc();
  Rat t;
  for (int k = da - db; k >= 0; --k) {
    if (rem[k + db] == 0) continue;
    Rat c = rem[k + db] * ilc;
    quo[k] = c;
    for (int j = 0; j <= db; ++j) {
      if (b[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), c.get_mpq_t(), b[j].get_mpq_t());
      rem[k + j] -= t;
    }
  }
  rem.resize(db);
  q = Poly(std::move(quo));
  r = Poly(std::move(rem));
}

Poly operator/(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  return q;
}

Poly operator%(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  return r;
}

Poly exact_div(const Poly& a, const Poly& b) {
  Poly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

namespace {

// Degree of gcd(a, b) mod p, or -1 when p divides a leading coefficient.
int modular_gcd_degree(const Poly& a, const Poly& b, modp::u64 p) {
  auto reduce = [p](const Poly& f, modp::PolyFp& out) {
    std::vector<modp::u64> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
      auto r = modp::from_rat(c, p);
      if (!r) return false;
      v.push_back(*r);
    }
    out = modp::PolyFp(std::move(v), p);
    return out.degree() == f.degree();
  };
  modp::PolyFp ap, bp;
  if (!reduce(a, ap) || !reduce(b, bp)) return -1;
  return gcd(ap, bp).degree();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly(1);
  if (modular_gcd_degree(a, b, modp::large_prime(0)) == 0) return Poly(1);
  Poly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = (x % y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  return (exact_div(a, gcd(a, b)) * b).monic();
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : Poly(1);
  return exact_div(p, gcd(p, p.derivative())).monic();
}

Rat resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return 0;
  Poly a = a0, b = b0;
  Rat acc = 1;
  for (;;) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rat r = acc;
      for (int i = 0; i < m; ++i) r *= b.lc();
      return r;
    }
    if (m == 0) {
      Rat r = acc;
      for (int i = 0; i < n; ++i) r *= a.lc();
      return r;
    }
    Poly r = a % b;
    if (r.is_zero()) return 0;
    int k = r.degree();
    // Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r).
    if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
    for (int i = 0; i < m - k; ++i) acc *= b.lc();
    a = std::move(b);
    b = std::move(r);
  }
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    Poly q, r;
    divrem(r0, r1, q, r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = Poly();
    t = Poly();
    return r0;
  }
  Rat il = Rat(1) / r0.lc();
  s = s0 * il;
  t = t0 * il;
  return r0 * il;
}

std::vector<Rat> taylor_at(const Poly& p, const Rat& a) { return p.shift(a).coeffs(); }

}  // namespace dfinite
