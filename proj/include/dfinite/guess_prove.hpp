#ifndef DFINITE_GUESS_PROVE_HPP
#define DFINITE_GUESS_PROVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/series.hpp"

namespace dfinite {

// P(z, y) = sum_j c[j](z) y^j.
struct BivarPoly {
  std::vector<Poly> c;

  int deg_y() const { return static_cast<int>(c.size()) - 1; }
  int deg_z() const;
  bool is_zero() const { return c.empty(); }
  // Primitive over Z[z] with positive leading coefficient.
  BivarPoly normalized() const;
  BivarPoly derivative_y() const;
  BivarPoly derivative_z() const;
  // P(z, g) for a polynomial g.
  Poly eval(const Poly& g) const;
  // P(z, f) modulo z^trunc_order(f).
  TruncSeries eval(const TruncSeries& f) const;
  std::string to_string() const;
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.c == b.c; }
};

inline long algebraic_terms_needed(int dy, int dz) { return static_cast<long>(dy + 1) * (dz + 1) + 10; }

// Hermite-Pade guess: the smallest y-degree, then the smallest z-degree, of a
// P with P(z, f) = 0 to the available precision. Throws PrecisionTooLow.
std::optional<BivarPoly> guess_algebraic(const TruncSeries& f, int max_dy, int max_dz);

// Whether P is squarefree as a polynomial in y over Q(z).
bool squarefree_in_y(const BivarPoly& p);

// Operator of minimal order annihilating every root of P. Throws
// NotSquarefree.
DiffOp annihilator_of_roots(const BivarPoly& p);

// Power-series root of P extending the first `seed` terms of f, to n terms,
// or none if the root isolated by the seed does not extend it. Throws
// RootNotSeparable when the seed does not isolate a root.
std::optional<TruncSeries> series_root(const BivarPoly& p, const TruncSeries& f, std::size_t seed, std::size_t n);

// Proves P(z, f) = 0 for the solution f of L given by init, via
// zero_test(lclm(L, L_P), f - g) where g is the matching root.
bool certify_root(const DiffOp& l, const TruncSeries& init, const BivarPoly& p);

struct AlgebraicProof {
  BivarPoly poly;
  DiffOp root_operator;  // annihilator_of_roots(poly)
  DiffOp combined;       // lclm(L, root_operator)
  long terms = 0;        // terms used by the final zero test
};

struct ProveOptions {
  int max_dy = 4;
  int max_dz = 8;
};

std::optional<AlgebraicProof> prove_algebraic(const DiffOp& l, const TruncSeries& init, const ProveOptions& opts = {});

}  // namespace dfinite

#endif
