#ifndef DFINITE_LINALG_HPP
#define DFINITE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dfinite/modp.hpp"
#include "dfinite/number.hpp"

namespace dfinite {

using RatMatrix = std::vector<std::vector<Rat>>;
using ModpMatrix = std::vector<std::vector<modp::u64>>;

struct RankProfile {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;  // increasing
};

// Column-first elimination mod p. The pivot rows and columns select a
// nonsingular rank x rank submatrix.
RankProfile rank_profile_modp(ModpMatrix m, modp::u64 p);

// Reduces a rational matrix mod p; empty if p divides some denominator.
std::optional<ModpMatrix> reduce_modp(const RatMatrix& m, modp::u64 p);

// Solves A x = b for square nonsingular A by fraction-free elimination.
// Throws std::domain_error if A is singular.
std::vector<Rat> solve_nonsingular(const RatMatrix& a, const std::vector<Rat>& b);

// Basis of the right kernel by exact Gauss-Jordan elimination. Each basis
// vector has a 1 at its free column and 0 at the other free columns.
std::vector<std::vector<Rat>> kernel_basis_exact(const RatMatrix& m, std::size_t ncols);

struct KernelStats {
  std::size_t modp_rank = 0;
  bool used_fallback = false;
};

// A nonzero kernel vector, or none if the kernel is trivial. The candidate is
// the one with a 1 at the first free column of the mod-p profile and 0 at the
// other free columns; it is verified exactly against every row.
std::optional<std::vector<Rat>> kernel_vector(const RatMatrix& m, std::size_t ncols,
                                              KernelStats* stats = nullptr);

}  // namespace dfinite

#endif
