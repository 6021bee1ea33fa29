#include "dfinite/series.hpp"

#include <algorithm>
#include <sstream>

#include "dfinite/errors.hpp"
#include "dfinite/roots.hpp"

namespace dfinite {

TruncSeries TruncSeries::from_ints(const std::vector<long>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (long x : v) c.emplace_back(x);
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::from_ints(const std::vector<Int>& v) {
  std::vector<Rat> c;
  c.reserve(v.size());
  for (const auto& x : v) c.emplace_back(x);
  return TruncSeries(std::move(c));
}

TruncSeries TruncSeries::truncate(std::size_t n) const {
  if (n >= coeffs.size()) return *this;
  return TruncSeries(std::vector<Rat>(coeffs.begin(), coeffs.begin() + n));
}

std::string TruncSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::min(max_terms, coeffs.size()); ++i) os << (i ? ", " : "") << coeffs[i].get_str();
  if (coeffs.size() > max_terms) os << ", ...";
  os << " + O(z^" << coeffs.size() << ")";
  return os.str();
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  std::size_t n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Rat> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] + b[i];
  return TruncSeries(std::move(c));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  std::size_t n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Rat> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = a[i] - b[i];
  return TruncSeries(std::move(c));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  std::size_t n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Rat> c(n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncSeries(std::move(c));
}

TruncSeries operator*(const Poly& p, const TruncSeries& a) {
  std::size_t n = a.trunc_order();
  std::vector<Rat> c(n, Rat(0));
  for (int j = 0; j <= p.degree(); ++j) {
    if (p[j] == 0) continue;
    for (std::size_t i = 0; i + j < n; ++i) c[i + j] += p[j] * a[i];
  }
  return TruncSeries(std::move(c));
}

TruncSeries apply_op(const DiffOp& l, const TruncSeries& f) {
  const long N = static_cast<long>(f.trunc_order());
  const long r = l.order();
  if (N < r) throw PrecisionTooLow("series shorter than the operator order", r);
  if (l.is_zero()) return TruncSeries(std::vector<Rat>(N, Rat(0)));
  std::vector<Rat> out(N - r, Rat(0));
  Rat t;
  for (long i = 0; i <= r; ++i) {
    const Poly& a = l[i];
    if (a.is_zero()) continue;
    // d^i f has coefficients ff(m, i) a_m at z^(m - i).
    std::vector<Rat> di(N - i);
    for (long m = i; m < N; ++m) {
      Int ff = 1;
      for (long k = 0; k < i; ++k) ff *= m - k;
      di[m - i] = f[m] * Rat(ff);
    }
    for (long j = 0; j <= a.degree(); ++j) {
      if (a[j] == 0) continue;
      for (long n = j; n < N - r; ++n) {
        mpq_mul(t.get_mpq_t(), a[j].get_mpq_t(), di[n - j].get_mpq_t());
        out[n] += t;
      }
    }
  }
  return TruncSeries(std::move(out));
}

bool is_zero_series(const TruncSeries& f) {
  return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](const Rat& c) { return c == 0; });
}

Valuation valuation(const TruncSeries& f) {
  if (f.coeffs.empty()) throw std::invalid_argument("valuation of an empty truncation");
  for (std::size_t i = 0; i < f.coeffs.size(); ++i)
    if (f.coeffs[i] != 0) return {i, true};
  return {f.coeffs.size(), false};
}

std::vector<long> singular_indices(const RecOp& rec, long limit) {
  std::vector<long> out;
  int smax = rec.high();
  for (long m = 0; m < std::min<long>(smax, limit); ++m) out.push_back(m);
  const Poly& lead = rec.coeffs.back();
  for (const auto& rm : rational_roots(lead)) {
    if (!is_integer(rm.root)) continue;
    long n = rm.root.get_num().get_si();
    if (n >= 0 && n + smax < limit) out.push_back(n + smax);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Residual of the recurrence equation E_n given a_0..a_{n+smax}.
Rat residual(const RecOp& rec, long n, const std::vector<Rat>& a) {
  Rat acc = 0;
  for (int k = 0; k <= rec.order(); ++k) {
    long m = n + rec.low + k;
    if (m < 0 || rec.coeffs[k].is_zero() || a[m] == 0) continue;
    acc += rec.coeffs[k].eval(Rat(n)) * a[m];
  }
  return acc;
}

long required_terms(const DiffOp& l, const RecOp& rec) {
  long need = l.order();
  int smax = rec.high();
  need = std::max<long>(need, smax);
  for (const auto& rm : rational_roots(rec.coeffs.back())) {
    if (!is_integer(rm.root)) continue;
    long n = rm.root.get_num().get_si();
    if (n >= 0) need = std::max(need, n + smax + 1);
  }
  long b0 = largest_nonneg_integer_root(indicial_at_zero(l));
  need = std::max(need, b0 + 1);
  return need;
}

}  // namespace

InitCheck check_init(const DiffOp& l, const TruncSeries& init) {
  if (l.is_zero()) return {false, "zero operator", 0};
  RecOp rec = ode_to_rec(l);
  long need = required_terms(l, rec);
  long have = static_cast<long>(init.trunc_order());
  if (have < need) {
    std::ostringstream os;
    os << "need at least " << need << " initial terms, got " << have;
    return {false, os.str(), need};
  }
  int smax = rec.high();
  for (long n = 0; n + smax < have; ++n) {
    if (residual(rec, n, init.coeffs) != 0) {
      std::ostringstream os;
      os << "initial terms violate the recurrence at index " << n + smax;
      return {false, os.str(), need};
    }
  }
  return {true, "", need};
}

TruncSeries unroll(const RecOp& rec, const TruncSeries& init, std::size_t n_terms) {
  int smax = rec.high();
  std::vector<Rat> a = init.coeffs;
  long have = static_cast<long>(a.size());
  for (long n = 0; n + smax < have; ++n)
    if (residual(rec, n, a) != 0)
      throw Inconsistent("initial terms violate the recurrence at index " + std::to_string(n + smax));
  if (static_cast<long>(n_terms) <= have) return init.truncate(n_terms);
  a.resize(n_terms, Rat(0));
  const Poly& lead = rec.coeffs.back();
  // Coefficient polynomials are evaluated incrementally in n.
  for (long m = have; m < static_cast<long>(n_terms); ++m) {
    long n = m - smax;
    if (n < 0) throw InsufficientInitialConditions("index " + std::to_string(m) + " is below the top shift");
    Rat lc = lead.eval(Rat(n));
    if (lc == 0)
      throw InsufficientInitialConditions("recurrence is singular at index " + std::to_string(m));
    a[m] = 0;
    Rat acc = residual(rec, n, a);
    a[m] = -acc / lc;
  }
  return TruncSeries(std::move(a));
}

TruncSeries unroll(const DiffOp& l, const TruncSeries& init, std::size_t n_terms) {
  RecOp rec = ode_to_rec(l);
  return unroll(rec, init, n_terms);
}

bool zero_test(const DiffOp& a, const TruncSeries& g) {
  if (!is_zero_series(g)) return false;
  long b0 = largest_nonneg_integer_root(indicial_at_zero(a));
  if (static_cast<long>(g.trunc_order()) <= b0)
    throw PrecisionTooLow("zero test needs more terms than the valuation bound", b0 + 1);
  return true;
}

}  // namespace dfinite
