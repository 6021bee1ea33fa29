#include "dfinite/heuristics.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "dfinite/errors.hpp"

namespace dfinite {

using modp::PolyFp;
using modp::RatFuncFp;

namespace {

// Multiplicities of the primes below `limit`, and the leftover cofactor.
std::map<Int, long> trial_factor(Int n, unsigned long limit, Int& rest) {
  std::map<Int, long> out;
  for (unsigned long d = 2; d <= limit && Int(d) * Int(d) <= n; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out[Int(d)] += 1;
      n /= d;
    }
  }
  rest = n;
  if (rest > 1 && rest <= Int(limit) * Int(limit)) {
    out[rest] += 1;
    rest = 1;
  }
  return out;
}

PolyFp reduce(const Poly& a, unsigned long p, bool& ok) {
  std::vector<modp::u64> c;
  for (const auto& x : a.coeffs()) {
    auto v = modp::from_rat(x, p);
    if (!v) {
      ok = false;
      return PolyFp({}, p);
    }
    c.push_back(*v);
  }
  return PolyFp(std::move(c), p);
}

}  // namespace

EisensteinReport eisenstein_scan(const TruncSeries& f, const Int& bound) {
  if (f.trunc_order() < 10) throw InputError("the denominator scan needs at least 10 terms");
  EisensteinReport rep;
  rep.scanned = static_cast<long>(f.trunc_order());
  const unsigned long limit = 1000000;
  std::map<Int, long> first_seen;
  std::map<Int, long> exponent;  // required exponent of each prime in C
  bool big = false;
  for (long n = 0; n < rep.scanned; ++n) {
    Int d = f[n].get_den();
    if (d == 1) continue;
    Int rest;
    auto fac = trial_factor(d, limit, rest);
    if (rest > 1) {
      big = true;
      if (is_probable_prime(rest))
        fac[rest] += 1;
      else
        rep.unfactored.push_back(rest);
    }
    for (const auto& [q, v] : fac) {
      first_seen.emplace(q, n);
      long need = n == 0 ? v : (v + n - 1) / n;
      if (n == 0) big = true;  // no C clears a nonintegral constant term
      exponent[q] = std::max(exponent[q], need);
    }
  }
  for (const auto& [q, n] : first_seen) rep.primes.push_back(q);
  if (!rep.primes.empty()) rep.largest_prime = rep.primes.back();
  if (!big) {
    Int c = 1;
    bool over = false;
    for (const auto& [q, e] : exponent) {
      for (long i = 0; i < e && !over; ++i) {
        c *= q;
        over = c > bound;
      }
    }
    if (!over) rep.constant = c;
  }
  for (const auto& [q, n] : first_seen)
    if (2 * n >= rep.scanned) rep.transcendence_evidence = true;
  return rep;
}

std::optional<FpMatrix> p_curvature_matrix(const DiffOp& l, unsigned long p) {
  DiffOp ln = l.normalized();
  const int r = ln.order();
  if (r < 1) throw InputError("p-curvature needs an operator of order at least 1");
  bool ok = true;
  std::vector<PolyFp> a;
  for (int i = 0; i <= r; ++i) a.push_back(reduce(ln[i], p, ok));
  if (!ok || a[r].is_zero()) return std::nullopt;
  const PolyFp one = PolyFp::constant(1, p);
  const RatFuncFp zero(PolyFp({}, p), one);
  FpMatrix A(r, std::vector<RatFuncFp>(r, zero));
  for (int i = 0; i + 1 < r; ++i) A[i][i + 1] = RatFuncFp(one, one);
  for (int j = 0; j < r; ++j) A[r - 1][j] = RatFuncFp(a[j].scale(modp::neg(1, p)), a[r]);
  FpMatrix Ak = A;
  for (unsigned long k = 1; k < p; ++k) {
    FpMatrix next(r, std::vector<RatFuncFp>(r, zero));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        RatFuncFp acc = Ak[i][j].derivative();
        for (int m = 0; m < r; ++m)
          if (!Ak[i][m].is_zero() && !A[m][j].is_zero()) acc = acc + Ak[i][m] * A[m][j];
        next[i][j] = acc;
      }
    Ak = std::move(next);
  }
  return Ak;
}

int rank(FpMatrix m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int piv = -1;
    for (int i = rk; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rk]);
    for (int i = rk + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      RatFuncFp f = m[i][c] / m[rk][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

PCurvatureReport p_curvature(const DiffOp& l, unsigned long p) {
  if (!is_probable_prime(Int(p))) throw InputError(std::to_string(p) + " is not prime");
  PCurvatureReport rep;
  rep.prime = p;
  rep.bad_prime = p <= static_cast<unsigned long>(l.order());
  auto m = p_curvature_matrix(l, p);
  if (!m) {
    rep.bad_prime = true;
    return rep;
  }
  rep.computed = true;
  rep.matrix_rank = rank(*m);
  rep.is_zero = rep.matrix_rank == 0;
  return rep;
}

FlajoletVerdict flajolet_check(const AsymptoticForm& a) {
  if (!a.r) return FlajoletVerdict::Transcendental;
  if (is_integer(*a.r) && *a.r < 0) return FlajoletVerdict::Transcendental;
  if (!a.beta_algebraic || !a.gamma_gamma_algebraic) return FlajoletVerdict::Transcendental;
  return FlajoletVerdict::Inconclusive;
}

GrowthEstimate estimate_growth(const TruncSeries& f) {
  const long n = static_cast<long>(f.trunc_order());
  if (n < 40) throw InputError("growth estimation needs at least 40 terms");
  // Model log|a_m| = c + m log(beta) + r log(m) + d / m.
  std::vector<std::array<double, 4>> rows;
  std::vector<double> rhs;
  for (long m = n / 2; m < n; ++m) {
    if (f[m] == 0) continue;
    Rat v = abs(f[m]);
    long en, ed;
    double mn = mpz_get_d_2exp(&en, v.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&ed, v.get_den().get_mpz_t());
    double lg = std::log(mn / md) + static_cast<double>(en - ed) * std::log(2.0);
    double x = static_cast<double>(m);
    rows.push_back({1.0, x, std::log(x), 1.0 / x});
    rhs.push_back(lg);
  }
  if (rows.size() < 4) throw InputError("too few nonzero terms for a growth fit");
  // Normal equations, solved by Gaussian elimination with partial pivoting.
  double M[4][5] = {};
  for (std::size_t t = 0; t < rows.size(); ++t)
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) M[i][j] += rows[t][i] * rows[t][j];
      M[i][4] += rows[t][i] * rhs[t];
    }
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int i = c + 1; i < 4; ++i)
      if (std::fabs(M[i][c]) > std::fabs(M[piv][c])) piv = i;
    for (int j = 0; j < 5; ++j) std::swap(M[c][j], M[piv][j]);
    for (int i = 0; i < 4; ++i) {
      if (i == c) continue;
      double g = M[i][c] / M[c][c];
      for (int j = c; j < 5; ++j) M[i][j] -= g * M[c][j];
    }
  }
  GrowthEstimate g;
  g.beta = std::exp(M[1][4] / M[1][1]);
  g.r = M[2][4] / M[2][2];
  return g;
}

AperyClass apery_asymptotic_decision(const std::vector<int>& p) {
  if (p.empty() || p[0] < 1) throw InputError("the first exponent must be at least 1");
  long s = 0;
  for (int x : p) {
    if (x < 0) throw InputError("exponents must be nonnegative");
    s += x;
  }
  if (s > 2) return AperyClass::Transcendental;
  if (s == 1) return AperyClass::Rational;
  return AperyClass::Algebraic;
}

std::string to_string(FlajoletVerdict v) {
  return v == FlajoletVerdict::Transcendental ? "transcendental" : "inconclusive";
}

std::string to_string(AperyClass c) {
  switch (c) {
    case AperyClass::Transcendental:
      return "transcendental";
    case AperyClass::Algebraic:
      return "algebraic";
    case AperyClass::Rational:
      break;
  }
  return "rational";
}

}  // namespace dfinite
