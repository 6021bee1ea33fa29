#include "dfinite/linalg.hpp"

#include <stdexcept>

namespace dfinite {

using modp::u64;

RankProfile rank_profile_modp(ModpMatrix m, u64 p) {
  RankProfile prof;
  const std::size_t rows = m.size();
  if (rows == 0) return prof;
  const std::size_t cols = m[0].size();
  std::vector<std::size_t> row_id(rows);
  for (std::size_t i = 0; i < rows; ++i) row_id[i] = i;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    std::swap(row_id[piv], row_id[r]);
    u64 inv = modp::inv(m[r][c], p);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = modp::mul(m[r][j], inv, p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      u64 f = m[i][c];
      if (f == 0) continue;
      auto& row = m[i];
      const auto& pr = m[r];
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j] != 0) row[j] = modp::sub(row[j], modp::mul(f, pr[j], p), p);
    }
    prof.pivot_rows.push_back(row_id[r]);
    prof.pivot_cols.push_back(c);
    ++r;
  }
  prof.rank = r;
  return prof;
}

std::optional<ModpMatrix> reduce_modp(const RatMatrix& m, u64 p) {
  ModpMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].resize(m[i].size());
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      auto v = modp::from_rat(m[i][j], p);
      if (!v) return std::nullopt;
      out[i][j] = *v;
    }
  }
  return out;
}

std::vector<Rat> solve_nonsingular(const RatMatrix& a, const std::vector<Rat>& b) {
  const std::size_t n = a.size();
  // Integer augmented matrix, each row scaled by its denominator lcm.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    Int l = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, a[i][j].get_den());
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    m[i][n] = b[i].get_num() * (l / b[i].get_den());
  }
  // Bareiss elimination to upper triangular form.
  Int prev = 1;
  Int t1, t2;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv == n) throw std::domain_error("singular system");
    std::swap(m[piv], m[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        mpz_mul(t1.get_mpz_t(), m[i][j].get_mpz_t(), m[k][k].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  std::vector<Rat> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rat acc(m[i][n]);
    for (std::size_t j = i + 1; j < n; ++j)
      if (m[i][j] != 0 && x[j] != 0) acc -= Rat(m[i][j]) * x[j];
    x[i] = acc / Rat(m[i][i]);
  }
  return x;
}

std::vector<std::vector<Rat>> kernel_basis_exact(const RatMatrix& in, std::size_t ncols) {
  RatMatrix m = in;
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (auto c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivcol.size(); ++k) v[pivcol[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

bool in_kernel(const RatMatrix& m, const std::vector<Rat>& v) {
  Rat acc, t;
  for (const auto& row : m) {
    acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] == 0 || row[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), row[j].get_mpq_t(), v[j].get_mpq_t());
      acc += t;
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Rat>> kernel_vector(const RatMatrix& m, std::size_t ncols, KernelStats* stats) {
  if (m.empty()) {
    std::vector<Rat> v(ncols, Rat(0));
    if (ncols == 0) return std::nullopt;
    v[0] = 1;
    return v;
  }
  std::optional<ModpMatrix> mp;
  u64 p = 0;
  for (unsigned k = 0; k < 8 && !mp; ++k) {
    p = modp::large_prime(k);
    mp = reduce_modp(m, p);
  }
  if (!mp) throw std::runtime_error("no usable prime for the kernel computation");
  RankProfile prof = rank_profile_modp(std::move(*mp), p);
  if (stats) stats->modp_rank = prof.rank;
  // The rank over Q is at least the rank mod p.
  if (prof.rank == ncols) return std::nullopt;

  std::vector<bool> is_piv(ncols, false);
  for (auto c : prof.pivot_cols) is_piv[c] = true;
  std::size_t free_col = 0;
  while (is_piv[free_col]) ++free_col;

  const std::size_t r = prof.rank;
  RatMatrix sub(r, std::vector<Rat>(r));
  std::vector<Rat> rhs(r);
  for (std::size_t i = 0; i < r; ++i) {
    const auto& row = m[prof.pivot_rows[i]];
    for (std::size_t k = 0; k < r; ++k) sub[i][k] = row[prof.pivot_cols[k]];
    rhs[i] = -row[free_col];
  }
  std::vector<Rat> v(ncols, Rat(0));
  v[free_col] = 1;
  if (r > 0) {
    std::vector<Rat> x = solve_nonsingular(sub, rhs);
    for (std::size_t k = 0; k < r; ++k) v[prof.pivot_cols[k]] = x[k];
  }
  if (in_kernel(m, v)) return v;

  if (stats) stats->used_fallback = true;
  auto basis = kernel_basis_exact(m, ncols);
  if (basis.empty()) return std::nullopt;
  return basis.front();
}

}  // namespace dfinite
