#ifndef DFINITE_RECOP_HPP
#define DFINITE_RECOP_HPP

#include <string>
#include <vector>

#include "dfinite/diffop.hpp"

namespace dfinite {

// sum_k coeffs[k](n) a_{n + low + k} = 0 for all n >= 0, with a_m = 0 for m < 0.
struct RecOp {
  std::vector<Poly> coeffs;
  int low = 0;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  int high() const { return low + order(); }
  const Poly& at_shift(int s) const;
  // Rational content removed; sign fixed by the top coefficient.
  RecOp normalized() const;
  bool same_up_to_scalar(const RecOp& o) const;
  std::string to_string() const;
};

RecOp ode_to_rec(const DiffOp& l);
DiffOp rec_to_ode(const RecOp& r);

// theta^k = sum_i S(k, i) z^i d^i with Stirling numbers of the second kind.
DiffOp theta_poly_to_diffop(const Poly& p);

Poly falling_poly(unsigned k);

}  // namespace dfinite

#endif
