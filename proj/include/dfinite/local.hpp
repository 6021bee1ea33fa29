#ifndef DFINITE_LOCAL_HPP
#define DFINITE_LOCAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/roots.hpp"

namespace dfinite {

struct SingularPoint {
  enum class Kind { Rational, Algebraic, Infinity };
  Kind kind = Kind::Infinity;
  Rat value;     // Rational
  Poly modulus;  // Algebraic: monic, squarefree, no rational roots

  static SingularPoint rational(const Rat& v) { return {Kind::Rational, v, Poly()}; }
  static SingularPoint algebraic(const Poly& m) { return {Kind::Algebraic, Rat(0), m.monic()}; }
  static SingularPoint infinity() { return {Kind::Infinity, Rat(0), Poly()}; }
  std::string to_string() const;
  friend bool operator==(const SingularPoint& a, const SingularPoint& b) {
    return a.kind == b.kind && a.value == b.value && a.modulus == b.modulus;
  }
};

// Rational roots of the leading coefficient by increasing |value|, then the
// remaining squarefree part as one algebraic point, then infinity.
std::vector<SingularPoint> singularities(const DiffOp& l);

// Local form t^(-v) L = sum_k t^k Q_k(theta) with t = z - s (t = 1/z at
// infinity) and theta = t d/dt. Coefficients are elements of Q[a]/(modulus),
// stored as polynomials in a; for rational points and infinity they are
// constants and the modulus is empty.
struct ThetaForm {
  SingularPoint point;
  int v = 0;
  std::vector<std::vector<Poly>> q;  // q[k][e]: coefficient of theta^e in Q_k
};

struct IndicialData {
  SingularPoint point;     // for algebraic points, the branch after splitting
  std::vector<Poly> poly;  // coefficient of lambda^e
  int degree = 0;
  std::vector<RootMult> rational_roots;
  bool splits_distinct_rational = false;
  // Rational polynomial; only for rational points and infinity.
  Poly rational_poly() const;
  std::string poly_string() const;
};

// One entry per branch of the point (more than one only when an algebraic
// point splits).
std::vector<IndicialData> indicial(const DiffOp& l, const SingularPoint& s);
std::vector<ThetaForm> theta_forms(const DiffOp& l, const SingularPoint& s);

struct NfRoots {
  Poly modulus;
  std::vector<RootMult> roots;
};
// Rational lambda with P(lambda) = 0 in Q[a]/(m), by branch.
std::vector<NfRoots> rational_roots_nf(const std::vector<Poly>& p, const Poly& modulus);

// A generalized series t^exponent sum_{j,n} c[j][n] log(t)^j t^n.
struct FormalSolution {
  Rat exponent;
  std::vector<std::vector<Poly>> log_coeffs;  // [j][n]
  int log_degree() const { return static_cast<int>(log_coeffs.size()) - 1; }
};

struct Resonance {
  Rat exponent;  // exponent at which a logarithm is forced
  long index;    // offset from the smallest exponent of its class
};

struct FormalSolutionBasis {
  SingularPoint point;
  long order = 0;  // series computed for offsets 0..order
  std::vector<FormalSolution> solutions;
  bool has_logarithms = false;
  std::optional<Resonance> first_log;
};

struct FrobeniusOptions {
  bool stop_at_first_log = false;
};

// Frobenius basis for the rational exponents at s. Throws IrregularPoint if
// the point is not regular singular and PrecisionTooLow if order is below the
// largest integer difference of exponents.
std::vector<FormalSolutionBasis> formal_solutions(const DiffOp& l, const SingularPoint& s, long order,
                                                  const FrobeniusOptions& opts = {});

// Largest positive integer difference between rational roots, or 0.
long max_integer_difference(const std::vector<RootMult>& roots);

}  // namespace dfinite

#endif
