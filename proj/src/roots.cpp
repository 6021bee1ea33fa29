#include "dfinite/roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfinite/modp.hpp"

namespace dfinite {

namespace {

using modp::u64;

bool reduce_mod(const std::vector<Int>& c, u64 p, modp::PolyFp& out) {
  std::vector<u64> v;
  v.reserve(c.size());
  for (const auto& x : c) v.push_back(modp::from_int(x, p));
  out = modp::PolyFp(std::move(v), p);
  return out.degree() + 1 == static_cast<int>(c.size());
}

Int eval_int(const std::vector<Int>& c, const Int& x, const Int& mod) {
  Int r = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * x + c[i];
    r %= mod;
  }
  if (r < 0) r += mod;
  return r;
}

// Rational roots of a squarefree integer polynomial with nonzero constant term.
std::vector<Rat> simple_roots(const Poly& s) {
  std::vector<Int> c = s.primitive().integer_coeffs();
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  std::vector<Int> dc(d);
  for (int i = 1; i <= d; ++i) dc[i - 1] = c[i] * i;
  const Int lc = abs(c.back()), c0 = abs(c.front());

  u64 p = 0;
  modp::PolyFp sp;
  for (Int q = std::max(d + 1, 3); q < 1000000; q = q + 1) {
    if (!is_probable_prime(q)) continue;
    u64 qq = q.get_ui();
    modp::PolyFp f, fd;
    if (!reduce_mod(c, qq, f)) continue;
    reduce_mod(dc, qq, fd);
    if (gcd(f, fd).degree() != 0) continue;
    p = qq;
    sp = f;
    break;
  }
  if (p == 0) throw std::runtime_error("no suitable prime for root finding");

  std::vector<u64> modroots;
  for (u64 x = 0; x < p; ++x)
    if (sp.eval(x) == 0) modroots.push_back(x);

  const Int bound = 2 * lc * c0;
  std::vector<Rat> out;
  Poly sq = Poly(std::vector<Rat>(c.begin(), c.end()));
  for (u64 r0 : modroots) {
    // Newton lifting r <- r - f(r)/f'(r) modulo p^(2^k).
    Int pk = p, r = static_cast<unsigned long>(r0);
    while (pk <= bound) {
      Int pk2 = pk * pk;
      Int fr = eval_int(c, r, pk2), fdr = eval_int(dc, r, pk2);
      Int inv;
      if (mpz_invert(inv.get_mpz_t(), fdr.get_mpz_t(), pk2.get_mpz_t()) == 0)
        throw std::logic_error("derivative not invertible during lifting");
      r = (r - fr * inv) % pk2;
      if (r < 0) r += pk2;
      pk = pk2;
    }
    Int u = (lc * r) % pk;
    if (u > pk / 2) u -= pk;
    Rat cand(u, lc);
    cand.canonicalize();
    if (sq.eval(cand) == 0) out.push_back(cand);
  }
  return out;
}

}  // namespace

std::vector<RootMult> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<RootMult> out;
  if (p.degree() == 0) return out;
  Poly s = squarefree_part(p);
  std::vector<Rat> roots;
  int v = s.valuation();
  if (v > 0) {
    roots.push_back(0);
    s = Poly(std::vector<Rat>(s.coeffs().begin() + v, s.coeffs().end()));
  }
  for (auto& r : simple_roots(s)) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  for (const auto& r : roots) {
    int m = 0;
    Poly q = p, lin({-r, Rat(1)});
    for (;;) {
      Poly quo, rem;
      divrem(q, lin, quo, rem);
      if (!rem.is_zero()) break;
      ++m;
      q = std::move(quo);
    }
    out.push_back({r, m});
  }
  return out;
}

long largest_nonneg_integer_root(const Poly& p) {
  long best = -1;
  for (const auto& rm : rational_roots(p))
    if (is_integer(rm.root) && rm.root >= 0) best = std::max(best, rm.root.get_num().get_si());
  return best;
}

}  // namespace dfinite
