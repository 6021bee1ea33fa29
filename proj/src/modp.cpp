#include "dfinite/modp.hpp"

#include <stdexcept>

namespace dfinite::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modp::inv of zero");
  return pow(a, p - 2, p);
}

u64 from_int(const Int& z, u64 p) {
  static_assert(sizeof(unsigned long) == 8, "64-bit unsigned long required");
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

u64 from_long(long v, u64 p) {
  long m = v % static_cast<long>(p);
  return static_cast<u64>(m < 0 ? m + static_cast<long>(p) : m);
}

std::optional<u64> from_rat(const Rat& r, u64 p) {
  u64 d = from_int(r.get_den(), p);
  if (d == 0) return std::nullopt;
  return mul(from_int(r.get_num(), p), inv(d, p), p);
}

u64 large_prime(unsigned index) {
  static std::vector<u64> cache{kMersenne61};
  while (cache.size() <= index) {
    // Walk downwards from the previous prime to stay below 2^61.
    Int cand = Int(static_cast<unsigned long>(cache.back())) - 2;
    while (!is_probable_prime(cand)) cand -= 2;
    cache.push_back(cand.get_ui());
  }
  return cache[index];
}

PolyFp::PolyFp(std::vector<u64> c, u64 p) : c_(std::move(c)), p_(p) {
  for (auto& v : c_) v %= p_;
  trim();
}

PolyFp PolyFp::constant(u64 c, u64 p) { return PolyFp({c}, p); }
PolyFp PolyFp::x(u64 p) { return PolyFp({0, 1}, p); }

void PolyFp::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = add((*this)[i], o[i], p_ ? p_ : o.p_);
  return PolyFp(std::move(r), p_ ? p_ : o.p_);
}

PolyFp PolyFp::operator-(const PolyFp& o) const {
  u64 p = p_ ? p_ : o.p_;
  std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = sub((*this)[i], o[i], p);
  return PolyFp(std::move(r), p);
}

PolyFp PolyFp::operator*(const PolyFp& o) const {
  u64 p = p_ ? p_ : o.p_;
  if (c_.empty() || o.c_.empty()) return PolyFp({}, p);
  std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = add(r[i + j], mul(c_[i], o.c_[j], p), p);
  }
  return PolyFp(std::move(r), p);
}

PolyFp PolyFp::scale(u64 s) const {
  std::vector<u64> r(c_);
  for (auto& v : r) v = mul(v, s, p_);
  return PolyFp(std::move(r), p_);
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return PolyFp({}, p_);
  std::vector<u64> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul(c_[i], i % p_, p_);
  return PolyFp(std::move(r), p_);
}

PolyFp PolyFp::monic() const {
  if (c_.empty()) return *this;
  return scale(inv(c_.back(), p_));
}

u64 PolyFp::eval(u64 x) const {
  u64 r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = add(mul(r, x, p_), c_[i], p_);
  return r;
}

void divrem(const PolyFp& a, const PolyFp& b, PolyFp& q, PolyFp& r) {
  if (b.is_zero()) throw std::domain_error("PolyFp division by zero");
  u64 p = b.p_;
  std::vector<u64> rem = a.c_;
  int db = b.degree();
  int da = a.degree();
  std::vector<u64> quo(da >= db ? da - db + 1 : 0, 0);
  u64 ilc = inv(b.lc(), p);
  for (int k = da - db; k >= 0; --k) {
    u64 c = mul(rem[k + db], ilc, p);
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(c, b.c_[j], p), p);
  }
  q = PolyFp(std::move(quo), p);
  rem.resize(db > 0 ? db : 0);
  r = PolyFp(std::move(rem), p);
}

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp q, r;
    divrem(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFuncFp::RatFuncFp(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFuncFp with zero denominator");
  normalize();
}

RatFuncFp::RatFuncFp(PolyFp num) : num_(std::move(num)), den_(PolyFp::constant(1, num_.prime())) {}

void RatFuncFp::normalize() {
  u64 p = den_.prime();
  if (num_.is_zero()) {
    den_ = PolyFp::constant(1, p);
    return;
  }
  PolyFp g = gcd(num_, den_);
  if (g.degree() > 0) {
    PolyFp q, r;
    divrem(num_, g, q, r);
    num_ = q;
    divrem(den_, g, q, r);
    den_ = q;
  }
  u64 il = inv(den_.lc(), p);
  num_ = num_.scale(il);
  den_ = den_.scale(il);
}

RatFuncFp RatFuncFp::operator+(const RatFuncFp& o) const {
  return RatFuncFp(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFuncFp RatFuncFp::operator-(const RatFuncFp& o) const {
  return RatFuncFp(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFuncFp RatFuncFp::operator*(const RatFuncFp& o) const {
  return RatFuncFp(num_ * o.num_, den_ * o.den_);
}
RatFuncFp RatFuncFp::operator/(const RatFuncFp& o) const {
  if (o.is_zero()) throw std::domain_error("RatFuncFp division by zero");
  return RatFuncFp(num_ * o.den_, den_ * o.num_);
}
RatFuncFp RatFuncFp::derivative() const {
  return RatFuncFp(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

}  // namespace dfinite::modp
