#ifndef DFINITE_GENERATORS_HPP
#define DFINITE_GENERATORS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dfinite/series.hpp"

namespace dfinite {

// Sparse multivariate polynomial over Q; exponent vectors have length nvars.
struct MPoly {
  int nvars = 0;
  std::map<std::vector<int>, Rat> terms;

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int i);
  bool is_zero() const { return terms.empty(); }
  Rat constant_term() const;
  int degree_in(int i) const;
  std::string to_string(const std::vector<std::string>& vars) const;
};

MPoly operator+(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a, const MPoly& b);
MPoly operator-(const MPoly& a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& a, unsigned e);

// Parses sums of products of rationals, variables, parentheses and
// nonnegative integer powers, e.g. "1 - x - x*y" or "(1+y)^2 - 3/2*z".
// Throws InputError.
MPoly parse_mpoly(const std::string& text, const std::vector<std::string>& vars);

struct DiagonalSpec {
  MPoly num;
  MPoly den;
  std::vector<std::string> vars;
};

DiagonalSpec parse_diagonal(const std::string& num, const std::string& den, const std::vector<std::string>& vars);

// The rational function whose diagonal is the binomial sum with exponents
// (p, q): 1 / ((prod_j (1 - y_j) - x_1) prod_{k>=2} (1 - x_k) - prod x_k prod y_j).
DiagonalSpec apery_like_diagonal(int p, int q);

using Step = std::array<int, 2>;
using StepSet = std::vector<Step>;
StepSet trident_steps();
// "trident" or a list like "(1,1),(0,-1)". Throws InputError.
StepSet parse_steps(const std::string& text);

// sum_k prod_i binom(n + i k, k)^p_i for n < N.
TruncSeries gen_binomial_sum(const std::vector<int>& p, long n);
// Walks of length n < N in the quarter plane from the origin.
TruncSeries gen_walk(const StepSet& steps, long n);
// Coefficients of (x_1 ... x_k)^n, n < N, in the expansion of num/den.
TruncSeries gen_diagonal(const DiagonalSpec& spec, long n);

}  // namespace dfinite

#endif
