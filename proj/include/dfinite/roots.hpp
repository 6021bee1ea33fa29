#ifndef DFINITE_ROOTS_HPP
#define DFINITE_ROOTS_HPP

#include <utility>
#include <vector>

#include "dfinite/poly.hpp"

namespace dfinite {

struct RootMult {
  Rat root;
  int multiplicity;
  friend bool operator==(const RootMult& a, const RootMult& b) {
    return a.root == b.root && a.multiplicity == b.multiplicity;
  }
};

// Rational roots with multiplicities, sorted increasingly. Uses p-adic lifting
// of simple roots modulo a small prime, so no integer factoring is needed.
std::vector<RootMult> rational_roots(const Poly& p);

// Largest nonnegative integer root, or -1.
long largest_nonneg_integer_root(const Poly& p);

}  // namespace dfinite

#endif
