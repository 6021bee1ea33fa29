#include "dfinite/local.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dfinite/errors.hpp"
#include "dfinite/modring.hpp"
#include "dfinite/recop.hpp"

namespace dfinite {

std::string SingularPoint::to_string() const {
  switch (kind) {
    case Kind::Rational:
      return value.get_str();
    case Kind::Algebraic:
      return "RootOf(" + modulus.to_string("z") + ")";
    case Kind::Infinity:
      break;
  }
  return "infinity";
}

std::vector<SingularPoint> singularities(const DiffOp& l) {
  if (l.is_zero()) throw std::invalid_argument("singularities of the zero operator");
  std::vector<SingularPoint> out;
  const Poly& lead = l.leading();
  if (lead.degree() > 0) {
    auto roots = rational_roots(lead);
    std::sort(roots.begin(), roots.end(), [](const RootMult& a, const RootMult& b) {
      Rat x = abs(a.root), y = abs(b.root);
      return x != y ? x < y : a.root < b.root;
    });
    Poly rest = squarefree_part(lead);
    for (const auto& rm : roots) {
      out.push_back(SingularPoint::rational(rm.root));
      rest = exact_div(rest, Poly({-rm.root, Rat(1)}));
    }
    if (rest.degree() > 0) out.push_back(SingularPoint::algebraic(rest));
  }
  out.push_back(SingularPoint::infinity());
  return out;
}

namespace {

template <class R>
using Vec = std::vector<typename R::Elem>;

Poly to_poly(const RatRing&, const Rat& x) { return Poly(x); }
Poly to_poly(const ModRing&, const Poly& x) { return x; }

template <class R>
struct LocalForm {
  int v = 0;
  std::vector<Vec<R>> q;
};

template <class R>
int formal_degree(const R& ring, const Vec<R>& p) {
  for (std::size_t e = p.size(); e-- > 0;)
    if (!ring.is_zero(p[e])) return static_cast<int>(e);
  return -1;
}

// Taylor coefficients of sum_e p[e] x^e at x = a (rational a).
template <class R>
Vec<R> taylor_shift(const R& ring, Vec<R> c, const Rat& a) {
  const std::size_t n = c.size();
  if (n <= 1 || a == 0) return c;
  typename R::Elem ae = ring.from_rat(a);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] = ring.add(c[j], ring.mul(ae, c[j + 1]));
  return c;
}

template <class R>
LocalForm<R> finite_form(const DiffOp& l, const R& ring, const typename R::Elem& s) {
  const int r = l.order();
  std::vector<Vec<R>> T(r + 1);
  std::vector<int> val(r + 1, -1);
  bool have = false;
  int v = 0, top = 0;
  for (int i = 0; i <= r; ++i) {
    const Poly& a = l[i];
    if (a.is_zero()) continue;
    Vec<R> c;
    for (const auto& x : a.coeffs()) c.push_back(ring.from_rat(x));
    const std::size_t n = c.size();
    for (std::size_t i2 = 0; i2 + 1 < n; ++i2)
      for (std::size_t j = n - 1; j-- > i2;) c[j] = ring.add(c[j], ring.mul(s, c[j + 1]));
    for (std::size_t m = 0; m < n; ++m)
      if (!ring.is_zero(c[m])) {
        val[i] = static_cast<int>(m);
        break;
      }
    T[i] = std::move(c);
    int e = val[i] - i;
    if (!have || e < v) v = e;
    top = have ? std::max(top, a.degree() - i) : a.degree() - i;
    have = true;
  }
  LocalForm<R> F;
  F.v = v;
  const int K = top - v;
  F.q.assign(K + 1, Vec<R>(r + 1, ring.zero()));
  for (int i = 0; i <= r; ++i) {
    if (T[i].empty()) continue;
    Poly fi = falling_poly(i);
    for (int k = 0; k <= K; ++k) {
      int m = k + v + i;
      if (m < 0 || m >= static_cast<int>(T[i].size())) continue;
      const auto& t = T[i][m];
      for (int e = 0; e <= i; ++e)
        if (fi[e] != 0) F.q[k][e] = ring.add(F.q[k][e], ring.mul(t, ring.from_rat(fi[e])));
    }
  }
  return F;
}

// z = 1/w and theta_z = -theta_w: a_ij z^j d^i = a_ij w^(i - j) F_i(-theta_w).
LocalForm<RatRing> infinity_form(const DiffOp& l) {
  const int r = l.order();
  bool have = false;
  int v = 0, top = 0;
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j <= l[i].degree(); ++j) {
      if (l[i][j] == 0) continue;
      int e = i - j;
      if (!have) v = top = e;
      v = std::min(v, e);
      top = std::max(top, e);
      have = true;
    }
  LocalForm<RatRing> F;
  F.v = v;
  F.q.assign(top - v + 1, Vec<RatRing>(r + 1, Rat(0)));
  for (int i = 0; i <= r; ++i) {
    Poly fi = falling_poly(i).scale_var(Rat(-1));
    for (int j = 0; j <= l[i].degree(); ++j) {
      if (l[i][j] == 0) continue;
      int k = i - j - v;
      for (int e = 0; e <= i; ++e) F.q[k][e] += l[i][j] * fi[e];
    }
  }
  return F;
}

template <class R>
ThetaForm to_theta_form(const R& ring, const LocalForm<R>& F, const SingularPoint& pt) {
  ThetaForm t;
  t.point = pt;
  t.v = F.v;
  for (const auto& qk : F.q) {
    std::vector<Poly> row;
    for (const auto& x : qk) row.push_back(to_poly(ring, x));
    t.q.push_back(std::move(row));
  }
  return t;
}

// Runs f on Q[a]/(m), splitting the modulus whenever f exposes a zero divisor.
template <class F>
auto with_splitting(const Poly& modulus, F f) {
  using T = decltype(f(std::declval<const ModRing&>()));
  std::vector<std::pair<Poly, T>> out;
  std::vector<Poly> work{modulus.monic()};
  while (!work.empty()) {
    Poly m = work.back();
    work.pop_back();
    try {
      ModRing ring(m);
      out.emplace_back(m, f(ring));
    } catch (const ZeroDivisor& z) {
      Poly g = z.factor.monic();
      Poly h = exact_div(m, g).monic();
      work.push_back(h);
      work.push_back(g);
    }
  }
  return out;
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  Poly p;
  for (std::size_t i = n; i-- > 0;) p = p * Poly({-xs[i], Rat(1)}) + Poly(dd[i]);
  return p;
}

template <class R>
typename R::Elem eval_at(const R& ring, const Vec<R>& p, const Rat& x) {
  typename R::Elem acc = ring.zero(), xe = ring.from_rat(x);
  for (std::size_t e = p.size(); e-- > 0;) acc = ring.add(ring.mul(acc, xe), p[e]);
  return acc;
}

// Multiplicity of x as a root, 0 if not a root.
template <class R>
int root_multiplicity(const R& ring, const Vec<R>& p, const Rat& x) {
  Vec<R> t = taylor_shift(ring, p, x);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!ring.is_zero(t[k])) return static_cast<int>(k);
  return static_cast<int>(t.size());
}

std::vector<RootMult> roots_in_ring(const RatRing&, const Vec<RatRing>& p) {
  std::vector<Rat> c(p.begin(), p.end());
  Poly q(std::move(c));
  if (q.degree() <= 0) return {};
  return rational_roots(q);
}

// Candidates are the rational roots of the norm Res_a(m(a), P(lambda, a)).
std::vector<RootMult> roots_in_ring(const ModRing& ring, const Vec<ModRing>& p) {
  int d = formal_degree(ring, p);
  if (d <= 0) return {};
  ring.inv(p[d]);
  const int D = ring.degree() * d;
  std::vector<Rat> xs, ys;
  for (int i = 0; i <= D; ++i) {
    Rat x(i);
    xs.push_back(x);
    ys.push_back(resultant(ring.modulus(), eval_at(ring, p, x)));
  }
  Poly norm = interpolate(xs, ys);
  if (norm.is_zero()) throw std::logic_error("vanishing norm with a unit leading coefficient");
  std::vector<RootMult> out;
  if (norm.degree() <= 0) return out;
  for (const auto& rm : rational_roots(norm)) {
    int mult = root_multiplicity(ring, p, rm.root);
    if (mult > 0) out.push_back({rm.root, mult});
  }
  return out;
}

template <class R>
IndicialData make_indicial(const R& ring, const LocalForm<R>& F, const SingularPoint& pt) {
  IndicialData d;
  d.point = pt;
  const auto& q0 = F.q[0];
  d.degree = formal_degree(ring, q0);
  for (int e = 0; e <= d.degree; ++e) d.poly.push_back(to_poly(ring, q0[e]));
  Vec<R> trimmed(q0.begin(), q0.begin() + (d.degree + 1));
  d.rational_roots = roots_in_ring(ring, trimmed);
  bool simple = std::all_of(d.rational_roots.begin(), d.rational_roots.end(),
                            [](const RootMult& r) { return r.multiplicity == 1; });
  d.splits_distinct_rational = simple && static_cast<int>(d.rational_roots.size()) == d.degree;
  return d;
}

// Applies Q(mu + N) to x, where N is the nilpotent shift (N x)_j = x_{j+1}.
template <class R>
Vec<R> apply_shifted(const R& ring, const Vec<R>& q, const Rat& mu, const Vec<R>& x) {
  const std::size_t J = x.size();
  Vec<R> y(J, ring.zero());
  typename R::Elem me = ring.from_rat(mu);
  for (std::size_t e = q.size(); e-- > 0;) {
    Vec<R> ny(J, ring.zero());
    for (std::size_t j = 0; j < J; ++j) {
      ny[j] = ring.mul(me, y[j]);
      if (j + 1 < J) ny[j] = ring.add(ny[j], y[j + 1]);
      ny[j] = ring.add(ny[j], ring.mul(q[e], x[j]));
    }
    y = std::move(ny);
  }
  return y;
}

template <class R>
bool all_zero(const R& ring, const Vec<R>& v) {
  for (const auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

template <class R>
FormalSolutionBasis frobenius(const R& ring, const LocalForm<R>& F, const std::vector<RootMult>& roots, long order,
                              const FrobeniusOptions& opts, const SingularPoint& pt) {
  FormalSolutionBasis basis;
  basis.point = pt;
  basis.order = order;
  long need = max_integer_difference(roots);
  if (order < need) throw PrecisionTooLow("Frobenius order below the largest exponent difference", need);

  // Exponent classes modulo Z, keyed by fractional part.
  std::map<Rat, std::vector<RootMult>> classes;
  for (const auto& rm : roots) classes[rm.root - Rat(floor(rm.root))].push_back(rm);
  const int K = static_cast<int>(F.q.size()) - 1;

  for (auto& [frac, members] : classes) {
    std::sort(members.begin(), members.end(), [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
    const Rat base = members.front().root;
    std::map<long, int> mult_at;
    std::size_t J = 0;
    for (const auto& rm : members) {
      mult_at[Rat(rm.root - base).get_num().get_si()] = rm.multiplicity;
      J += rm.multiplicity;
    }
    // cols[p][n] is the coefficient vector (in log^j / j!) of parameter p.
    std::vector<std::vector<Vec<R>>> cols;
    std::vector<long> start;
    for (long n = 0; n <= order; ++n) {
      const std::size_t P = cols.size();
      std::vector<Vec<R>> rhs(P, Vec<R>(J, ring.zero()));
      for (int k = 1; k <= std::min<long>(n, K); ++k) {
        Rat mu = base + Rat(n - k);
        for (std::size_t p = 0; p < P; ++p) {
          if (all_zero(ring, cols[p][n - k])) continue;
          Vec<R> y = apply_shifted(ring, F.q[k], mu, cols[p][n - k]);
          for (std::size_t j = 0; j < J; ++j) rhs[p][j] = ring.sub(rhs[p][j], y[j]);
        }
      }
      auto it = mult_at.find(n);
      const std::size_t m = it == mult_at.end() ? 0 : static_cast<std::size_t>(it->second);
      for (std::size_t p = 0; p < P; ++p)
        for (std::size_t j = J - m; j < J; ++j)
          if (!ring.is_zero(rhs[p][j])) throw std::logic_error("log degree exceeds the class multiplicity");
      // Q_0(mu + N) = N^m U with U invertible.
      Vec<R> u = taylor_shift(ring, F.q[0], base + Rat(n));
      u.resize(std::max(u.size(), m + J), ring.zero());
      Vec<R> vinv(J, ring.zero());
      typename R::Elem u0inv = ring.inv(u[m]);
      vinv[0] = u0inv;
      for (std::size_t k = 1; k < J; ++k) {
        typename R::Elem acc = ring.zero();
        for (std::size_t i = 1; i <= k; ++i) acc = ring.add(acc, ring.mul(u[m + i], vinv[k - i]));
        vinv[k] = ring.neg(ring.mul(acc, u0inv));
      }
      auto solve = [&](const Vec<R>& w) {
        Vec<R> x(J, ring.zero());
        for (std::size_t k = 0; k < J; ++k) {
          if (ring.is_zero(vinv[k])) continue;
          for (std::size_t j = 0; j + k < J; ++j) x[j] = ring.add(x[j], ring.mul(vinv[k], w[j + k]));
        }
        return x;
      };
      for (std::size_t p = 0; p < P; ++p) {
        Vec<R> w(J, ring.zero());
        for (std::size_t i = m; i < J; ++i) w[i] = rhs[p][i - m];
        cols[p].push_back(solve(w));
      }
      for (std::size_t t = 0; t < m; ++t) {
        Vec<R> w(J, ring.zero());
        w[t] = ring.one();
        std::vector<Vec<R>> col(n, Vec<R>(J, ring.zero()));
        col.push_back(solve(w));
        cols.push_back(std::move(col));
        start.push_back(n);
      }
      if (!basis.has_logarithms) {
        for (const auto& c : cols) {
          bool log_here = false;
          for (std::size_t j = 1; j < J && !log_here; ++j) log_here = !ring.is_zero(c[n][j]);
          if (log_here) {
            basis.has_logarithms = true;
            basis.first_log = Resonance{base + Rat(n), n};
            break;
          }
        }
        if (basis.has_logarithms && opts.stop_at_first_log) return basis;
      }
    }
    for (std::size_t p = 0; p < cols.size(); ++p) {
      FormalSolution s;
      s.exponent = base + Rat(start[p]);
      Int fact = 1;
      for (std::size_t j = 0; j < J; ++j) {
        if (j > 0) fact *= static_cast<unsigned long>(j);
        std::vector<Poly> series;
        Rat scale(1, 1);
        scale /= Rat(fact);
        for (long n = start[p]; n <= order; ++n) series.push_back(to_poly(ring, cols[p][n][j]) * scale);
        s.log_coeffs.push_back(std::move(series));
      }
      while (s.log_coeffs.size() > 1 &&
             std::all_of(s.log_coeffs.back().begin(), s.log_coeffs.back().end(), [](const Poly& x) { return x.is_zero(); }))
        s.log_coeffs.pop_back();
      basis.solutions.push_back(std::move(s));
    }
  }
  return basis;
}

template <class R>
FormalSolutionBasis frobenius_at(const DiffOp& l, const R& ring, const LocalForm<R>& F, long order,
                                 const FrobeniusOptions& opts, const SingularPoint& pt) {
  IndicialData ind = make_indicial(ring, F, pt);
  if (ind.degree < l.order()) throw IrregularPoint("point " + pt.to_string() + " is not regular singular");
  return frobenius(ring, F, ind.rational_roots, order, opts, pt);
}

}  // namespace

Poly IndicialData::rational_poly() const {
  if (point.kind == SingularPoint::Kind::Algebraic) throw std::logic_error("indicial polynomial has algebraic coefficients");
  std::vector<Rat> c;
  for (const auto& p : poly) c.push_back(p[0]);
  return Poly(std::move(c));
}

std::string IndicialData::poly_string() const {
  if (point.kind != SingularPoint::Kind::Algebraic) return rational_poly().to_string("lambda");
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = poly.size(); e-- > 0;) {
    if (poly[e].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << poly[e].to_string("a") << ")";
    if (e > 0) os << "*lambda" << (e > 1 ? "^" + std::to_string(e) : "");
  }
  return first ? "0" : os.str();
}

long max_integer_difference(const std::vector<RootMult>& roots) {
  long best = 0;
  for (const auto& a : roots)
    for (const auto& b : roots) {
      Rat d = a.root - b.root;
      if (d > 0 && is_integer(d)) best = std::max(best, d.get_num().get_si());
    }
  return best;
}

std::vector<ThetaForm> theta_forms(const DiffOp& l, const SingularPoint& s) {
  switch (s.kind) {
    case SingularPoint::Kind::Rational: {
      RatRing ring;
      return {to_theta_form(ring, finite_form(l, ring, s.value), s)};
    }
    case SingularPoint::Kind::Infinity:
      return {to_theta_form(RatRing(), infinity_form(l), s)};
    case SingularPoint::Kind::Algebraic:
      break;
  }
  std::vector<ThetaForm> out;
  for (auto& [m, t] : with_splitting(s.modulus, [&](const ModRing& ring) {
         auto F = finite_form(l, ring, ring.gen());
         formal_degree(ring, F.q[0]);
         return to_theta_form(ring, F, SingularPoint::algebraic(ring.modulus()));
       }))
    out.push_back(std::move(t));
  return out;
}

std::vector<IndicialData> indicial(const DiffOp& l, const SingularPoint& s) {
  if (l.is_zero()) throw std::invalid_argument("indicial polynomial of the zero operator");
  switch (s.kind) {
    case SingularPoint::Kind::Rational: {
      RatRing ring;
      return {make_indicial(ring, finite_form(l, ring, s.value), s)};
    }
    case SingularPoint::Kind::Infinity: {
      RatRing ring;
      return {make_indicial(ring, infinity_form(l), s)};
    }
    case SingularPoint::Kind::Algebraic:
      break;
  }
  std::vector<IndicialData> out;
  for (auto& [m, d] : with_splitting(s.modulus, [&](const ModRing& ring) {
         return make_indicial(ring, finite_form(l, ring, ring.gen()), SingularPoint::algebraic(ring.modulus()));
       }))
    out.push_back(std::move(d));
  return out;
}

std::vector<NfRoots> rational_roots_nf(const std::vector<Poly>& p, const Poly& modulus) {
  std::vector<NfRoots> out;
  for (auto& [m, roots] : with_splitting(modulus, [&](const ModRing& ring) {
         Vec<ModRing> q;
         for (const auto& c : p) q.push_back(ring.reduce(c));
         if (formal_degree(ring, q) < 0) throw std::invalid_argument("zero polynomial");
         return roots_in_ring(ring, q);
       }))
    out.push_back({m, std::move(roots)});
  return out;
}

std::vector<FormalSolutionBasis> formal_solutions(const DiffOp& l, const SingularPoint& s, long order,
                                                  const FrobeniusOptions& opts) {
  switch (s.kind) {
    case SingularPoint::Kind::Rational: {
      RatRing ring;
      return {frobenius_at(l, ring, finite_form(l, ring, s.value), order, opts, s)};
    }
    case SingularPoint::Kind::Infinity: {
      RatRing ring;
      return {frobenius_at(l, ring, infinity_form(l), order, opts, s)};
    }
    case SingularPoint::Kind::Algebraic:
      break;
  }
  std::vector<FormalSolutionBasis> out;
  for (auto& [m, b] : with_splitting(s.modulus, [&](const ModRing& ring) {
         return frobenius_at(l, ring, finite_form(l, ring, ring.gen()), order, opts,
                             SingularPoint::algebraic(ring.modulus()));
       }))
    out.push_back(std::move(b));
  return out;
}

}  // namespace dfinite
