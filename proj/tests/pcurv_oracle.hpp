#ifndef DFINITE_TEST_PCURV_ORACLE_HPP
#define DFINITE_TEST_PCURV_ORACLE_HPP

#include <optional>

#include "dfinite/heuristics.hpp"

namespace fx {

// p-curvature by the polynomial recursion A_k = N_k / q^k with q = a_r:
// N_1 = B, N_(k+1) = N_k' q - k q' N_k + N_k B, where A = B / q.
inline std::optional<dfinite::FpMatrix> pcurv_oracle(const dfinite::DiffOp& l, unsigned long p) {
  using dfinite::modp::PolyFp;
  using dfinite::modp::RatFuncFp;
  dfinite::DiffOp ln = l.normalized();
  const int r = ln.order();
  std::vector<PolyFp> a;
  for (int i = 0; i <= r; ++i) {
    std::vector<dfinite::modp::u64> c;
    for (const auto& x : ln[i].coeffs()) c.push_back(dfinite::modp::from_int(x.get_num(), p));
    a.emplace_back(std::move(c), p);
  }
  const PolyFp q = a[r];
  if (q.is_zero()) return std::nullopt;
  const PolyFp zero({}, p);
  std::vector<std::vector<PolyFp>> B(r, std::vector<PolyFp>(r, zero));
  for (int i = 0; i + 1 < r; ++i) B[i][i + 1] = q;
  for (int j = 0; j < r; ++j) B[r - 1][j] = a[j].scale(p - 1);
  auto N = B;
  const PolyFp dq = q.derivative();
  for (unsigned long k = 1; k < p; ++k) {
    auto next = N;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        PolyFp acc = N[i][j].derivative() * q - (dq * N[i][j]).scale(k % p);
        for (int m = 0; m < r; ++m) acc = acc + N[i][m] * B[m][j];
        next[i][j] = acc;
      }
    N = std::move(next);
  }
  PolyFp qp = PolyFp::constant(1, p);
  for (unsigned long k = 0; k < p; ++k) qp = qp * q;
  dfinite::FpMatrix out(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out[i].emplace_back(N[i][j], qp);
  return out;
}

}  // namespace fx

#endif
