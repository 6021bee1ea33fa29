#ifndef DFINITE_SERIES_HPP
#define DFINITE_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/recop.hpp"

namespace dfinite {

// Power series known modulo z^trunc_order(); coefficient n at index n.
struct TruncSeries {
  std::vector<Rat> coeffs;

  TruncSeries() = default;
  explicit TruncSeries(std::vector<Rat> c) : coeffs(std::move(c)) {}
  static TruncSeries from_ints(const std::vector<long>& v);
  static TruncSeries from_ints(const std::vector<Int>& v);

  std::size_t trunc_order() const { return coeffs.size(); }
  const Rat& operator[](std::size_t n) const { return coeffs[n]; }
  TruncSeries truncate(std::size_t n) const;
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs == b.coeffs; }
  std::string to_string(std::size_t max_terms = 8) const;
};

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const Poly& p, const TruncSeries& a);

// L(f), known modulo z^(N - order(L)). Throws PrecisionTooLow if N < order(L).
TruncSeries apply_op(const DiffOp& l, const TruncSeries& f);

bool is_zero_series(const TruncSeries& f);
// Index of the first nonzero coefficient; for an all-zero truncation, the
// lower bound trunc_order(). Throws on an empty truncation.
struct Valuation {
  std::size_t value;
  bool exact;
};
Valuation valuation(const TruncSeries& f);

// Indices m at which the recurrence of L does not determine a_m: the indices
// below the top shift, and the nonnegative roots of the leading coefficient.
std::vector<long> singular_indices(const RecOp& rec, long limit);

struct InitCheck {
  bool ok;
  std::string reason;
  // Smallest number of initial terms that specifies a unique solution.
  long required = 0;
};
InitCheck check_init(const DiffOp& l, const TruncSeries& init);
inline bool validate_init(const DiffOp& l, const TruncSeries& init) { return check_init(l, init).ok; }

TruncSeries unroll(const DiffOp& l, const TruncSeries& init, std::size_t n);
TruncSeries unroll(const RecOp& rec, const TruncSeries& init, std::size_t n);

// Decides g = 0 for a series solution g of A, using the valuation bound at 0.
bool zero_test(const DiffOp& a, const TruncSeries& g);

}  // namespace dfinite

#endif
