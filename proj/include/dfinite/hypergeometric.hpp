#ifndef DFINITE_HYPERGEOMETRIC_HPP
#define DFINITE_HYPERGEOMETRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/series.hpp"

namespace dfinite {

// Parameters of pFq(a; b; z) with |b| = |a| - 1; the bottom parameter 1 is
// implicit.
struct HypParams {
  std::vector<Rat> a;
  std::vector<Rat> b;
};

// Fractional part, with 1 in place of 0.
Rat frac_conv(const Rat& x);

// Whether the images under frac_conv strictly alternate between u and v.
bool interlaces(const std::vector<Rat>& u, const std::vector<Rat>& v);

struct InterlacingResult {
  enum class Kind { Algebraic, Transcendental, Inapplicable };
  Kind kind = Kind::Inapplicable;
  std::string reason;          // Inapplicable
  Int denominator = 1;         // lcm of the parameter denominators
  std::optional<Int> witness;  // Transcendental: an l with no interlacing
};

InterlacingResult interlacing_criterion(const HypParams& p);

// Series coefficients prod (a_i)_n / (prod (b_j)_n n!).
TruncSeries hypergeometric_series(const HypParams& p, long n);

std::string to_string(InterlacingResult::Kind k);

}  // namespace dfinite

#endif
