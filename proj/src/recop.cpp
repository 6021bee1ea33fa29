#include "dfinite/recop.hpp"

#include <sstream>
#include <stdexcept>

namespace dfinite {

namespace {
const Poly kZeroPoly;
}

Poly falling_poly(unsigned k) {
  Poly r(1);
  for (unsigned i = 0; i < k; ++i) r *= Poly({Rat(-static_cast<long>(i)), Rat(1)});
  return r;
}

const Poly& RecOp::at_shift(int s) const {
  int k = s - low;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return kZeroPoly;
  return coeffs[k];
}

RecOp RecOp::normalized() const {
  RecOp r = *this;
  while (!r.coeffs.empty() && r.coeffs.back().is_zero()) r.coeffs.pop_back();
  while (!r.coeffs.empty() && r.coeffs.front().is_zero()) {
    r.coeffs.erase(r.coeffs.begin());
    ++r.low;
  }
  if (r.coeffs.empty()) return r;
  Int g = 0, l = 1;
  for (const auto& p : r.coeffs)
    for (const auto& v : p.coeffs()) {
      if (v == 0) continue;
      g = gcd(g, v.get_num());
      l = lcm(l, v.get_den());
    }
  Rat s(l, g);
  s.canonicalize();
  if (r.coeffs.back().lc() < 0) s = -s;
  for (auto& p : r.coeffs) p *= s;
  return r;
}

bool RecOp::same_up_to_scalar(const RecOp& o) const {
  RecOp a = normalized(), b = o.normalized();
  return a.low == b.low && a.coeffs == b.coeffs;
}

std::string RecOp::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    int s = low + k;
    os << "(" << coeffs[k].to_string("n") << ")*a(n" << (s >= 0 ? "+" : "") << s << ")";
  }
  return first ? "0" : os.str();
}

RecOp ode_to_rec(const DiffOp& l) {
  if (l.is_zero()) throw std::invalid_argument("recurrence of the zero operator");
  // [z^n] z^j d^i f = ff(n - j + i, i) a_{n - j + i}; collect by s = i - j.
  int smin = 0, smax = 0;
  bool have = false;
  for (int i = 0; i <= l.order(); ++i)
    for (int j = 0; j <= l[i].degree(); ++j) {
      if (l[i][j] == 0) continue;
      int s = i - j;
      if (!have) smin = smax = s;
      smin = std::min(smin, s);
      smax = std::max(smax, s);
      have = true;
    }
  RecOp r;
  r.low = smin;
  r.coeffs.assign(smax - smin + 1, Poly());
  for (int i = 0; i <= l.order(); ++i) {
    Poly ff = falling_poly(i);
    for (int j = 0; j <= l[i].degree(); ++j) {
      if (l[i][j] == 0) continue;
      int s = i - j;
      r.coeffs[s - smin] += l[i][j] * ff.shift(Rat(s));
    }
  }
  return r.normalized();
}

DiffOp theta_poly_to_diffop(const Poly& p) {
  int d = p.degree();
  if (d < 0) return DiffOp();
  // Stirling numbers S(k, i) for k <= d.
  std::vector<std::vector<Int>> st(d + 1, std::vector<Int>(d + 1, 0));
  st[0][0] = 1;
  for (int k = 1; k <= d; ++k)
    for (int i = 1; i <= k; ++i) st[k][i] = st[k - 1][i - 1] + Int(i) * st[k - 1][i];
  std::vector<Poly> c(d + 1);
  for (int i = 0; i <= d; ++i) {
    Rat acc = 0;
    for (int k = i; k <= d; ++k) acc += p[k] * Rat(st[k][i]);
    c[i] = Poly::monomial(acc, i);
  }
  return DiffOp(std::move(c));
}

DiffOp rec_to_ode(const RecOp& rec) {
  RecOp r = rec.normalized();
  if (r.coeffs.empty()) throw std::invalid_argument("zero recurrence");
  int smax = r.high();
  // z^smax sum_n z^n E_n = sum_s z^(smax - s) P_s(theta - s) f.
  DiffOp acc;
  for (int k = 0; k <= r.order(); ++k) {
    int s = r.low + k;
    if (r.coeffs[k].is_zero()) continue;
    DiffOp t = theta_poly_to_diffop(r.coeffs[k].shift(Rat(-s)));
    int e = smax - s;
    acc = acc + Poly::monomial(1, e) * t;
  }
  // The boundary equations E_n for -smax <= n < 0 are not imposed by the
  // recurrence; they contribute a polynomial of degree < K that d^K removes.
  int K = 0;
  for (int n = -smax; n < 0; ++n) {
    bool nonzero = false;
    for (int k = 0; k <= r.order(); ++k) {
      int s = r.low + k;
      if (n + s >= 0 && r.coeffs[k].eval(Rat(n)) != 0) nonzero = true;
    }
    if (nonzero) K = std::max(K, smax + n + 1);
  }
  if (K > 0) acc = op_mul(DiffOp::D(K), acc);
  return acc.normalized();
}

}  // namespace dfinite
