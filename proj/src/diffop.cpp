#include "dfinite/diffop.hpp"
#include "dfinite/recop.hpp"

#include <sstream>
#include <stdexcept>

namespace dfinite {

namespace {
const Poly kZeroPoly;
const RatFunc kZeroRat;

}  // namespace

DiffOp::DiffOp(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }

DiffOp DiffOp::D(unsigned k) {
  std::vector<Poly> c(k + 1);
  c[k] = Poly(1);
  return DiffOp(std::move(c));
}

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Poly& DiffOp::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZeroPoly; }

int DiffOp::degree() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

DiffOp DiffOp::normalized() const {
  if (is_zero()) return *this;
  Poly g;
  for (const auto& p : c_) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  std::vector<Poly> c = c_;
  if (g.degree() > 0)
    for (auto& p : c) p = exact_div(p, g);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& p : c)
    for (const auto& v : p.coeffs()) {
      if (v == 0) continue;
      num_gcd = gcd(num_gcd, v.get_num());
      den_lcm = lcm(den_lcm, v.get_den());
    }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (c.back().lc() < 0) scale = -scale;
  for (auto& p : c) p *= scale;
  return DiffOp(std::move(c));
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return DiffOp(std::move(c));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return DiffOp(std::move(c));
}

DiffOp operator*(const Poly& p, const DiffOp& a) {
  std::vector<Poly> c = a.c_;
  for (auto& x : c) x = p * x;
  return DiffOp(std::move(c));
}

DiffOp DiffOp::d_left() const {
  if (is_zero()) return *this;
  std::vector<Poly> c(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[i] += c_[i].derivative();
    c[i + 1] += c_[i];
  }
  return DiffOp(std::move(c));
}

std::string DiffOp::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i].to_string(var) << ")";
    if (i >= 1) os << "*D" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return DiffOp();
  DiffOp acc;
  DiffOp dib = b;
  for (int i = 0; i <= a.order(); ++i) {
    if (!a[i].is_zero()) acc = acc + a[i] * dib;
    if (i < a.order()) dib = dib.d_left();
  }
  return acc;
}

RatOp::RatOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

RatOp::RatOp(const DiffOp& op) {
  c_.reserve(op.coeffs().size());
  for (const auto& p : op.coeffs()) c_.emplace_back(p);
}

void RatOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFunc& RatOp::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZeroRat; }

RatOp operator+(const RatOp& a, const RatOp& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return RatOp(std::move(c));
}

RatOp operator-(const RatOp& a, const RatOp& b) {
  std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return RatOp(std::move(c));
}

RatOp operator*(const RatFunc& r, const RatOp& a) {
  std::vector<RatFunc> c = a.c_;
  for (auto& x : c) x = r * x;
  return RatOp(std::move(c));
}

RatOp RatOp::d_left() const {
  if (is_zero()) return *this;
  std::vector<RatFunc> c(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    c[i] += c_[i].derivative();
    c[i + 1] += c_[i];
  }
  return RatOp(std::move(c));
}

RatOp operator*(const RatOp& a, const RatOp& b) {
  if (a.is_zero() || b.is_zero()) return RatOp();
  RatOp acc;
  RatOp dib = b;
  for (int i = 0; i <= a.order(); ++i) {
    if (!a[i].is_zero()) acc = acc + a[i] * dib;
    if (i < a.order()) dib = dib.d_left();
  }
  return acc;
}

DiffOp RatOp::to_diffop() const {
  Poly den(1);
  for (const auto& r : c_) den = lcm(den, r.den());
  std::vector<Poly> c;
  c.reserve(c_.size());
  for (const auto& r : c_) c.push_back(r.num() * exact_div(den, r.den()));
  return DiffOp(std::move(c)).normalized();
}

RightDivision op_right_divrem(const RatOp& a, const RatOp& b) {
  if (b.is_zero()) throw std::domain_error("right division by the zero operator");
  int rb = b.order();
  RatOp rem = a;
  std::vector<RatFunc> q(a.order() >= rb ? a.order() - rb + 1 : 0);
  // d^k o B for k = 0 .. order(A) - order(B).
  std::vector<RatOp> shifted;
  if (!q.empty()) {
    shifted.push_back(b);
    for (std::size_t k = 1; k < q.size(); ++k) shifted.push_back(shifted.back().d_left());
  }
  RatFunc ilc = b[rb].inverse();
  while (!rem.is_zero() && rem.order() >= rb) {
    int k = rem.order() - rb;
    RatFunc c = rem[rem.order()] * ilc;
    q[k] += c;
    RatOp next = rem - c * shifted[k];
    // Guard against a leading term that failed to cancel.
    if (!next.is_zero() && next.order() >= rem.order())
      throw std::logic_error("right division did not reduce the order");
    rem = std::move(next);
  }
  return {RatOp(std::move(q)), rem};
}

RatOp right_rem(const RatOp& a, const RatOp& b) { return op_right_divrem(a, b).remainder; }

bool right_divides(const DiffOp& b, const DiffOp& a) { return right_rem(RatOp(a), RatOp(b)).is_zero(); }

std::optional<std::vector<RatFunc>> DependenceFinder::add(std::vector<RatFunc> v) {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
  std::size_t k = count_++;
  std::vector<RatFunc> combo(k + 1);
  combo[k] = RatFunc(1);
  for (std::size_t b = 0; b < rows_.size(); ++b) {
    std::size_t p = pivots_[b];
    if (v[p].is_zero()) continue;
    RatFunc f = v[p] / rows_[b][p];
    for (std::size_t i = 0; i < dim_; ++i)
      if (!rows_[b][i].is_zero()) v[i] -= f * rows_[b][i];
    for (std::size_t i = 0; i < combos_[b].size(); ++i)
      if (!combos_[b][i].is_zero()) combo[i] -= f * combos_[b][i];
  }
  std::size_t piv = dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!v[i].is_zero()) {
      piv = i;
      break;
    }
  if (piv == dim_) return combo;
  rows_.push_back(std::move(v));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return std::nullopt;
}

std::vector<RatFunc> d_then_reduce(const std::vector<RatFunc>& r, const RatOp& l) {
  std::size_t n = static_cast<std::size_t>(l.order());
  std::vector<RatFunc> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = r[i].derivative();
    if (i > 0) out[i] += r[i - 1];
  }
  if (n > 0 && !r[n - 1].is_zero()) {
    RatFunc t = r[n - 1] / l[n];
    for (std::size_t i = 0; i < n; ++i)
      if (!l[i].is_zero()) out[i] -= t * l[i];
  }
  return out;
}

DiffOp lclm(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("lclm of the zero operator");
  if (a.order() == 0) return b.normalized();
  if (b.order() == 0) return a.normalized();
  RatOp la(a), lb(b);
  std::size_t ra = a.order(), rb = b.order();
  std::vector<RatFunc> va(ra), vb(rb);
  va[0] = RatFunc(1);
  vb[0] = RatFunc(1);
  DependenceFinder finder(ra + rb);
  for (;;) {
    std::vector<RatFunc> v(va);
    v.insert(v.end(), vb.begin(), vb.end());
    if (auto dep = finder.add(std::move(v))) return RatOp(*dep).to_diffop();
    va = d_then_reduce(va, la);
    vb = d_then_reduce(vb, lb);
  }
}

DiffOp lclm(const std::vector<DiffOp>& ops) {
  if (ops.empty()) throw std::invalid_argument("lclm of an empty list");
  DiffOp r = ops[0].normalized();
  for (std::size_t i = 1; i < ops.size(); ++i) r = lclm(r, ops[i]);
  return r;
}

Poly indicial_at_zero(const DiffOp& op) {
  if (op.is_zero()) throw std::invalid_argument("indicial polynomial of the zero operator");
  int v = 0;
  bool have = false;
  for (int i = 0; i <= op.order(); ++i) {
    if (op[i].is_zero()) continue;
    int e = op[i].valuation() - i;
    if (!have || e < v) v = e;
    have = true;
  }
  Poly ind;
  for (int i = 0; i <= op.order(); ++i) {
    if (op[i].is_zero() || op[i].valuation() - i != v) continue;
    ind += op[i][op[i].valuation()] * falling_poly(i);
  }
  return ind;
}

}  // namespace dfinite
