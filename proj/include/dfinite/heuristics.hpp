#ifndef DFINITE_HEURISTICS_HPP
#define DFINITE_HEURISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/modp.hpp"
#include "dfinite/series.hpp"

namespace dfinite {

// Denominator scan; advisory only.
struct EisensteinReport {
  std::vector<Int> primes;     // primes dividing some coefficient denominator
  std::vector<Int> unfactored; // cofactors above the trial-division bound
  std::optional<Int> largest_prime;
  std::optional<Int> constant;  // smallest C with a_n C^n integral, if <= bound
  bool transcendence_evidence = false;
  long scanned = 0;
};

EisensteinReport eisenstein_scan(const TruncSeries& f, const Int& bound = Int(1000000));

struct PCurvatureReport {
  unsigned long prime = 0;
  bool computed = false;  // false when L does not reduce to order(L) mod p
  bool is_zero = false;
  int matrix_rank = -1;
  bool bad_prime = false;
};

using FpMatrix = std::vector<std::vector<modp::RatFuncFp>>;

// A_p for the companion system of L mod p, with A_1 = A and
// A_(k+1) = A_k' + A_k A. Empty if the leading coefficient vanishes mod p or a
// coefficient has p in a denominator.
std::optional<FpMatrix> p_curvature_matrix(const DiffOp& l, unsigned long p);
PCurvatureReport p_curvature(const DiffOp& l, unsigned long p);
int rank(FpMatrix m);

// a_n ~ gamma beta^n n^r; r empty means irrational.
struct AsymptoticForm {
  std::optional<Rat> r;
  bool beta_algebraic = true;
  bool gamma_gamma_algebraic = true;  // whether gamma Gamma(r + 1) is algebraic
};

enum class FlajoletVerdict { Transcendental, Inconclusive };
FlajoletVerdict flajolet_check(const AsymptoticForm& a);

struct GrowthEstimate {
  double beta = 0;
  double r = 0;
};
// Least-squares fit of log |a_n| over the upper half of the terms; advisory.
GrowthEstimate estimate_growth(const TruncSeries& f);

enum class AperyClass { Transcendental, Algebraic, Rational };
// Nature of sum_k prod_i binom(n + i k, k)^p_i from the exponent vector.
AperyClass apery_asymptotic_decision(const std::vector<int>& p);

std::string to_string(FlajoletVerdict v);
std::string to_string(AperyClass c);

}  // namespace dfinite

#endif
