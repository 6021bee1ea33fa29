#ifndef DFINITE_DIFFOP_HPP
#define DFINITE_DIFFOP_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/poly.hpp"
#include "dfinite/ratfunc.hpp"

namespace dfinite {

// sum_i a_i(z) d^i with a_i in Q[z]. The zero operator has order -1.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<Poly> coeffs);
  static DiffOp D(unsigned k = 1);
  static DiffOp mul(const Poly& p) { return DiffOp({p}); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Poly& operator[](std::size_t i) const;
  const std::vector<Poly>& coeffs() const { return c_; }
  const Poly& leading() const { return c_.back(); }
  // Largest coefficient degree.
  int degree() const;

  // Content 1 with integer coefficients and a positive leading coefficient
  // of the top polynomial.
  DiffOp normalized() const;
  bool same_up_to_scalar(const DiffOp& o) const { return normalized() == o.normalized(); }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Poly& p, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  // d composed with this operator on the left.
  DiffOp d_left() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Poly> c_;
};

// Exact composition A o B in Q[z][d]. No content is removed, so the product
// is associative and compatible with application to series.
DiffOp op_mul(const DiffOp& a, const DiffOp& b);

// Operator with coefficients in Q(z).
class RatOp {
 public:
  RatOp() = default;
  explicit RatOp(std::vector<RatFunc> coeffs);
  RatOp(const DiffOp& op);  // NOLINT
  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFunc& operator[](std::size_t i) const;
  const std::vector<RatFunc>& coeffs() const { return c_; }
  friend RatOp operator+(const RatOp& a, const RatOp& b);
  friend RatOp operator-(const RatOp& a, const RatOp& b);
  friend RatOp operator*(const RatFunc& r, const RatOp& a);
  friend RatOp operator*(const RatOp& a, const RatOp& b);
  friend bool operator==(const RatOp& a, const RatOp& b) { return a.c_ == b.c_; }
  RatOp d_left() const;
  // Clears denominators and normalizes.
  DiffOp to_diffop() const;

 private:
  void trim();
  std::vector<RatFunc> c_;
};

struct RightDivision {
  RatOp quotient;
  RatOp remainder;
};

// A = Q o B + R over Q(z) with order(R) < order(B).
RightDivision op_right_divrem(const RatOp& a, const RatOp& b);
// Right remainder of A modulo B.
RatOp right_rem(const RatOp& a, const RatOp& b);
bool right_divides(const DiffOp& b, const DiffOp& a);

// Incremental search for the first Q(z)-linear dependence in a sequence of
// vectors v_0, v_1, ...
class DependenceFinder {
 public:
  explicit DependenceFinder(std::size_t dim) : dim_(dim) {}
  // Adds v_k. If v_k lies in the span of v_0..v_{k-1}, returns c_0..c_k with
  // c_k = 1 and sum c_i v_i = 0.
  std::optional<std::vector<RatFunc>> add(std::vector<RatFunc> v);
  std::size_t size() const { return count_; }

 private:
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<std::vector<RatFunc>> rows_;
  std::vector<std::vector<RatFunc>> combos_;
  std::vector<std::size_t> pivots_;
};

// Coordinates of the right remainder of d o R modulo L, for R of order < order(L)
// given by its coordinates.
std::vector<RatFunc> d_then_reduce(const std::vector<RatFunc>& r, const RatOp& l);

// Least common left multiple, normalized.
DiffOp lclm(const DiffOp& a, const DiffOp& b);
DiffOp lclm(const std::vector<DiffOp>& ops);

// Indicial polynomial at 0 in the exponent variable.
Poly indicial_at_zero(const DiffOp& op);

}  // namespace dfinite

#endif
