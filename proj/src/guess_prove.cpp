#include "dfinite/guess_prove.hpp"

#include <sstream>

#include "dfinite/errors.hpp"
#include "dfinite/linalg.hpp"
#include "dfinite/ratfunc.hpp"

namespace dfinite {

int BivarPoly::deg_z() const {
  int d = -1;
  for (const auto& x : c) d = std::max(d, x.degree());
  return d;
}

BivarPoly BivarPoly::normalized() const {
  BivarPoly r = *this;
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  if (r.c.empty()) return r;
  Poly g;
  for (const auto& x : r.c) g = gcd(g, x);
  for (auto& x : r.c) x = exact_div(x, g);
  Int den = 1;
  for (const auto& x : r.c) den = lcm(den, x.denominator_lcm());
  for (auto& x : r.c) x = x * Poly(Rat(den));
  Int num = 0;
  for (const auto& x : r.c)
    for (const auto& a : x.coeffs()) num = gcd(num, Int(a.get_num()));
  Rat s = Rat(1) / Rat(num);
  if (r.c.back().lc() < 0) s = -s;
  for (auto& x : r.c) x = x * Poly(s);
  return r;
}

BivarPoly BivarPoly::derivative_y() const {
  BivarPoly r;
  for (std::size_t j = 1; j < c.size(); ++j) r.c.push_back(c[j] * Poly(Rat(static_cast<long>(j))));
  return r;
}

BivarPoly BivarPoly::derivative_z() const {
  BivarPoly r;
  for (const auto& x : c) r.c.push_back(x.derivative());
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

Poly BivarPoly::eval(const Poly& g) const {
  Poly acc;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * g + c[j];
  return acc;
}

TruncSeries BivarPoly::eval(const TruncSeries& f) const {
  std::vector<Rat> unit(f.trunc_order(), Rat(0));
  if (!unit.empty()) unit[0] = 1;
  const TruncSeries one(unit);
  TruncSeries acc(std::vector<Rat>(f.trunc_order(), Rat(0)));
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * f + c[j] * one;
  return acc;
}

std::string BivarPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c.size(); j-- > 0;) {
    if (c[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[j].to_string("z") << ")";
    if (j > 0) os << "*y" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return first ? "0" : os.str();
}

namespace {

std::vector<TruncSeries> powers(const TruncSeries& f, int dy) {
  std::vector<Rat> one(f.trunc_order(), Rat(0));
  if (!one.empty()) one[0] = 1;
  std::vector<TruncSeries> pw{TruncSeries(one)};
  for (int j = 1; j <= dy; ++j) pw.push_back(pw.back() * f);
  return pw;
}

RatMatrix hp_matrix(const std::vector<TruncSeries>& pw, int dy, int dz, std::size_t n) {
  const std::size_t cols = static_cast<std::size_t>(dy + 1) * (dz + 1);
  RatMatrix m(n, std::vector<Rat>(cols, Rat(0)));
  for (std::size_t row = 0; row < n; ++row)
    for (int j = 0; j <= dy; ++j)
      for (int i = 0; i <= dz && static_cast<std::size_t>(i) <= row; ++i) m[row][j * (dz + 1) + i] = pw[j][row - i];
  return m;
}

bool exists_modp(const std::vector<TruncSeries>& pw, int dy, int dz, std::size_t n) {
  RatMatrix m = hp_matrix(pw, dy, dz, n);
  for (unsigned idx = 0;; ++idx) {
    modp::u64 p = modp::large_prime(idx);
    auto mp = reduce_modp(m, p);
    if (!mp) continue;
    return rank_profile_modp(std::move(*mp), p).rank < static_cast<std::size_t>(dy + 1) * (dz + 1);
  }
}

// Q(z)[y] / (P) with P made monic; elements are coefficient vectors.
class AlgebraRing {
 public:
  explicit AlgebraRing(const BivarPoly& p) {
    d_ = p.deg_y();
    RatFunc lc(p.c[d_]);
    for (int j = 0; j < d_; ++j) red_.push_back(RatFunc(p.c[j]) / lc);
  }
  int dim() const { return d_; }
  std::vector<RatFunc> mul(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) const {
    std::vector<RatFunc> prod(2 * d_ - 1 > 0 ? 2 * d_ - 1 : 1, RatFunc(0));
    for (int i = 0; i < d_; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < d_; ++j)
        if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
    for (int k = static_cast<int>(prod.size()) - 1; k >= d_; --k) {
      if (prod[k].is_zero()) continue;
      // y^d = -sum red_j y^j.
      for (int j = 0; j < d_; ++j) prod[k - d_ + j] -= prod[k] * red_[j];
      prod[k] = RatFunc(0);
    }
    prod.resize(d_);
    return prod;
  }
  std::vector<RatFunc> from_bivar(const BivarPoly& q) const {
    std::vector<RatFunc> acc(d_, RatFunc(0)), ypow = basis(0);
    for (std::size_t j = 0; j < q.c.size(); ++j) {
      for (int k = 0; k < d_; ++k) acc[k] += ypow[k] * RatFunc(q.c[j]);
      ypow = mul(ypow, y());
    }
    return acc;
  }
  std::vector<RatFunc> basis(int k) const {
    std::vector<RatFunc> e(d_, RatFunc(0));
    e[k] = RatFunc(1);
    return e;
  }
  std::vector<RatFunc> y() const {
    if (d_ == 1) return {-red_[0]};
    return basis(1);
  }
  std::vector<RatFunc> inverse(const std::vector<RatFunc>& a) const {
    DependenceFinder finder(d_);
    for (int k = 0; k < d_; ++k)
      if (finder.add(mul(a, basis(k)))) throw NotSquarefree("P and its y-derivative share a factor");
    auto dep = finder.add(basis(0));
    if (!dep) throw std::logic_error("inverse not found");
    std::vector<RatFunc> inv(d_, RatFunc(0));
    for (int k = 0; k < d_; ++k) inv[k] = -(*dep)[k];
    return inv;
  }

 private:
  int d_;
  std::vector<RatFunc> red_;
};

}  // namespace

std::optional<BivarPoly> guess_algebraic(const TruncSeries& f, int max_dy, int max_dz) {
  const long n = static_cast<long>(f.trunc_order());
  if (n < algebraic_terms_needed(max_dy, max_dz))
    throw PrecisionTooLow("not enough terms for an algebraic guess", algebraic_terms_needed(max_dy, max_dz));
  auto pw = powers(f, max_dy);
  for (int dy = 1; dy <= max_dy; ++dy) {
    if (!exists_modp(pw, dy, max_dz, n)) continue;
    int lo = 0, hi = max_dz;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (exists_modp(pw, dy, mid, n))
        hi = mid;
      else
        lo = mid + 1;
    }
    for (int dz = lo; dz <= max_dz; ++dz) {
      auto v = kernel_vector(hp_matrix(pw, dy, dz, n), static_cast<std::size_t>(dy + 1) * (dz + 1));
      if (!v) continue;
      BivarPoly p;
      for (int j = 0; j <= dy; ++j) {
        std::vector<Rat> col((*v).begin() + j * (dz + 1), (*v).begin() + (j + 1) * (dz + 1));
        p.c.emplace_back(std::move(col));
      }
      p = p.normalized();
      if (p.deg_y() < 1) continue;
      return p;
    }
  }
  return std::nullopt;
}

bool squarefree_in_y(const BivarPoly& p) {
  if (p.deg_y() < 1) return false;
  // A generic specialization of z keeps the y-discriminant nonzero.
  for (long z0 = 0; z0 < 64; ++z0) {
    Rat zr = z0 % 2 ? Rat(-(z0 + 1) / 2) : Rat(z0 / 2 + 1, 3);
    if (p.c.back().eval(zr) == 0) continue;
    std::vector<Rat> vals;
    for (const auto& x : p.c) vals.push_back(x.eval(zr));
    Poly u(std::move(vals));
    if (gcd(u, u.derivative()).degree() == 0) return true;
  }
  return false;
}

DiffOp annihilator_of_roots(const BivarPoly& p0) {
  BivarPoly p = p0.normalized();
  if (!squarefree_in_y(p)) throw NotSquarefree("P is not squarefree in y");
  AlgebraRing ring(p);
  // y' = -P_z(y) / P_y(y).
  auto py = ring.from_bivar(p.derivative_y());
  auto pz = ring.from_bivar(p.derivative_z());
  auto dy = ring.mul(pz, ring.inverse(py));
  for (auto& x : dy) x = -x;
  // d(sum u_k y^k) = sum u_k' y^k + sum k u_k y^(k-1) y'.
  auto derive = [&](const std::vector<RatFunc>& u) {
    std::vector<RatFunc> out(ring.dim(), RatFunc(0));
    std::vector<RatFunc> ypow = ring.basis(0);
    for (int k = 0; k < ring.dim(); ++k) {
      out[k] += u[k].derivative();
      if (k == 0) continue;
      if (!u[k].is_zero()) {
        auto t = ring.mul(ypow, dy);
        for (int i = 0; i < ring.dim(); ++i) out[i] += t[i] * u[k] * RatFunc(k);
      }
      ypow = ring.mul(ypow, ring.y());
    }
    return out;
  };
  DependenceFinder finder(ring.dim());
  std::vector<RatFunc> cur = ring.y();
  for (;;) {
    if (auto dep = finder.add(cur)) return RatOp(*dep).to_diffop();
    cur = derive(cur);
  }
}

std::optional<TruncSeries> series_root(const BivarPoly& p, const TruncSeries& f, std::size_t seed, std::size_t n) {
  if (seed > f.trunc_order()) throw std::invalid_argument("seed longer than the series");
  std::vector<Rat> g(f.coeffs.begin(), f.coeffs.begin() + seed);
  Poly gp(g);
  Poly val = p.eval(gp);
  Poly der = p.derivative_y().eval(gp);
  // Hensel: v(P(g)) > 2 v(P_y(g)) isolates a unique root.
  if (der.is_zero()) throw RootNotSeparable("P_y vanishes at the seed");
  const long k = der.valuation();
  if (static_cast<long>(seed) <= k || (!val.is_zero() && val.valuation() <= 2 * k))
    throw RootNotSeparable("the seed does not isolate a root of P");
  // The isolated root differs from the seed below z^seed.
  if (!val.is_zero() && val.valuation() < static_cast<long>(seed) + k) return std::nullopt;
  // Newton steps double the precision: with g known to m > k terms and
  // v(P(g)) >= m + k, subtracting P(g) / P_y(g) gives 2m - k terms.
  BivarPoly py = p.derivative_y();
  std::size_t m = seed;
  while (m < n) {
    const std::size_t nm = std::min(n, 2 * m - static_cast<std::size_t>(k));
    const std::size_t len = nm + static_cast<std::size_t>(k);
    g.resize(len, Rat(0));
    TruncSeries gs(g);
    TruncSeries e = p.eval(gs), d = py.eval(gs);
    std::vector<Rat> q(nm, Rat(0));
    const Rat& d0 = d[k];
    for (std::size_t i = m; i < nm; ++i) {
      Rat acc = e[i + k];
      for (std::size_t j = m; j < i; ++j) acc -= q[j] * d[i - j + k];
      q[i] = acc / d0;
    }
    for (std::size_t i = m; i < nm; ++i) g[i] -= q[i];
    g.resize(nm);
    m = nm;
  }
  g.resize(n);
  return TruncSeries(std::move(g));
}

namespace {

bool certify_root_impl(const DiffOp& l, const TruncSeries& init, const BivarPoly& p, AlgebraicProof* proof) {
  BivarPoly pn = p.normalized();
  DiffOp lp = annihilator_of_roots(pn);
  DiffOp m = lclm(l, lp);
  const std::size_t seed = init.trunc_order();
  std::size_t n = std::max<std::size_t>(2 * seed + 8, 32);
  for (int attempt = 0; attempt < 6; ++attempt) {
    TruncSeries f = unroll(l, init, n);
    auto g = series_root(pn, f, seed, n);
    if (!g) return false;
    try {
      bool ok = zero_test(m, f - *g);
      if (ok && proof) *proof = {pn, lp, m, static_cast<long>(n)};
      return ok;
    } catch (const PrecisionTooLow& e) {
      n = std::max<std::size_t>(static_cast<std::size_t>(e.needed) + 1, 2 * n);
    }
  }
  throw PrecisionTooLow("zero test precision budget exhausted", static_cast<long>(n));
}

}  // namespace

bool certify_root(const DiffOp& l, const TruncSeries& init, const BivarPoly& p) {
  return certify_root_impl(l, init, p, nullptr);
}

std::optional<AlgebraicProof> prove_algebraic(const DiffOp& l, const TruncSeries& init, const ProveOptions& opts) {
  InitCheck chk = check_init(l, init);
  if (!chk.ok) throw InputError("invalid initial terms: " + chk.reason);
  // Doubling over the degree box; each box is searched smallest-first.
  int dy = 1, dz = 1;
  for (;;) {
    dy = std::min(dy, opts.max_dy);
    dz = std::min(dz, opts.max_dz);
    TruncSeries f = unroll(l, init, std::max<std::size_t>(algebraic_terms_needed(dy, dz), init.trunc_order()));
    if (auto cand = guess_algebraic(f, dy, dz)) {
      AlgebraicProof proof;
      try {
        if (certify_root_impl(l, init, *cand, &proof)) return proof;
      } catch (const RootNotSeparable&) {
        // Another box may give a polynomial whose root the seed isolates.
      }
    }
    if (dy >= opts.max_dy && dz >= opts.max_dz) return std::nullopt;
    dy *= 2;
    dz *= 2;
  }
}

}  // namespace dfinite
