#include "dfinite/minimization.hpp"

#include <sstream>

#include "dfinite/errors.hpp"
#include "dfinite/linalg.hpp"

namespace dfinite {

namespace {

using modp::u64;

std::size_t col(int i, int j, int d) { return static_cast<std::size_t>(i) * (d + 1) + j; }

// Row n: [z^n] sum c_ij z^j d^i f = sum c_ij ff(n - j + i, i) a_{n - j + i}.
std::optional<ModpMatrix> guess_matrix_modp(const TruncSeries& f, int r, int d, u64 p) {
  const long N = static_cast<long>(f.trunc_order());
  std::vector<u64> a(N);
  for (long m = 0; m < N; ++m) {
    auto v = modp::from_rat(f[m], p);
    if (!v) return std::nullopt;
    a[m] = *v;
  }
  // ff[i][m] = ff(m, i) a_m mod p.
  std::vector<std::vector<u64>> fa(r + 1, std::vector<u64>(N));
  for (long m = 0; m < N; ++m) {
    u64 ff = 1;
    for (int i = 0; i <= r; ++i) {
      fa[i][m] = modp::mul(ff, a[m], p);
      ff = modp::mul(ff, modp::from_long(m - i, p), p);
    }
  }
  const long rows = N - r;
  ModpMatrix mat(rows, std::vector<u64>(static_cast<std::size_t>(r + 1) * (d + 1), 0));
  for (long n = 0; n < rows; ++n)
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= d; ++j) {
        long m = n - j + i;
        if (m >= 0) mat[n][col(i, j, d)] = fa[i][m];
      }
  return mat;
}

RatMatrix guess_matrix(const TruncSeries& f, int r, int d) {
  const long N = static_cast<long>(f.trunc_order());
  std::vector<std::vector<Rat>> fa(r + 1, std::vector<Rat>(N));
  for (long m = 0; m < N; ++m) {
    Int ff = 1;
    for (int i = 0; i <= r; ++i) {
      fa[i][m] = f[m] * Rat(ff);
      ff *= m - i;
    }
  }
  const long rows = N - r;
  RatMatrix mat(rows, std::vector<Rat>(static_cast<std::size_t>(r + 1) * (d + 1), Rat(0)));
  for (long n = 0; n < rows; ++n)
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= d; ++j) {
        long m = n - j + i;
        if (m >= 0) mat[n][col(i, j, d)] = fa[i][m];
      }
  return mat;
}

}  // namespace

int max_guessable_degree(int order, long n) {
  long room = n - order - kGuessGuard;
  if (room < order + 1) return -1;
  return static_cast<int>(room / (order + 1)) - 1;
}

bool operator_exists_modp(const TruncSeries& f, int order, int degree) {
  for (unsigned k = 0; k < 8; ++k) {
    u64 p = modp::large_prime(k);
    auto m = guess_matrix_modp(f, order, degree, p);
    if (!m) continue;
    std::size_t cols = static_cast<std::size_t>(order + 1) * (degree + 1);
    return rank_profile_modp(std::move(*m), p).rank < cols;
  }
  throw std::runtime_error("no usable prime for the guessing prefilter");
}

std::optional<DiffOp> guess_operator(const TruncSeries& f, int max_order, int max_degree) {
  long need = guess_terms_needed(max_order, max_degree);
  if (static_cast<long>(f.trunc_order()) < need)
    throw PrecisionTooLow("not enough terms to guess at this size", need);
  RatMatrix m = guess_matrix(f, max_order, max_degree);
  auto v = kernel_vector(m, static_cast<std::size_t>(max_order + 1) * (max_degree + 1));
  if (!v) return std::nullopt;
  std::vector<Poly> c(max_order + 1);
  for (int i = 0; i <= max_order; ++i) {
    std::vector<Rat> pc(max_degree + 1);
    for (int j = 0; j <= max_degree; ++j) pc[j] = (*v)[col(i, j, max_degree)];
    c[i] = Poly(std::move(pc));
  }
  DiffOp op(std::move(c));
  if (op.is_zero()) return std::nullopt;
  return op.normalized();
}

std::optional<DiffOp> find_operator(const TruncSeries& f, int max_order, int max_degree,
                                    std::vector<GuessSearchEntry>* log) {
  const long N = static_cast<long>(f.trunc_order());
  auto note = [&](int r, int d, const std::string& s) {
    if (log) log->push_back({r, d, s});
  };
  for (int r = 1; r <= max_order; ++r) {
    int dcap = std::min(max_degree, max_guessable_degree(r, N));
    if (dcap < 0) {
      note(r, -1, "insufficient precision");
      continue;
    }
    if (!operator_exists_modp(f, r, dcap)) {
      note(r, dcap, "no kernel mod p");
      continue;
    }
    // Existence is monotone in the degree at fixed order and precision.
    int lo = 0, hi = dcap;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (operator_exists_modp(f, r, mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    for (int d = lo; d <= dcap; ++d) {
      if (auto op = guess_operator(f, r, d)) {
        note(r, d, "found");
        return op;
      }
      note(r, d, "mod-p kernel not confirmed");
    }
  }
  return std::nullopt;
}

DiffOp annihilation_cofactor(const DiffOp& l, const DiffOp& m) {
  RatOp ll(l);
  const std::size_t r = static_cast<std::size_t>(l.order());
  RatOp rem = right_rem(RatOp(m), ll);
  std::vector<RatFunc> v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = rem[i];
  DependenceFinder finder(r);
  for (;;) {
    if (auto dep = finder.add(v)) return RatOp(*dep).to_diffop();
    v = d_then_reduce(v, ll);
  }
}

bool certify_annihilates(const DiffOp& l, const DiffOp& m, const TruncSeries& f) {
  if (m.is_zero()) return true;
  TruncSeries g = apply_op(m, f);
  if (!is_zero_series(g)) return false;
  DiffOp a = annihilation_cofactor(l, m);
  try {
    return zero_test(a, g);
  } catch (const PrecisionTooLow& e) {
    // Report the needed length of f rather than of g.
    throw PrecisionTooLow(e.what(), e.needed + m.order());
  }
}

std::optional<bool> certify_from_init(const DiffOp& l, const DiffOp& m, const TruncSeries& init, int retries,
                                      long terms) {
  TruncSeries f = unroll(l, init, std::max<long>(terms, static_cast<long>(init.trunc_order())));
  for (int attempt = 0;; ++attempt) {
    try {
      return certify_annihilates(l, m, f);
    } catch (const PrecisionTooLow& e) {
      if (attempt >= retries) return std::nullopt;
      f = unroll(l, init, std::max<long>(e.needed + 1, 2 * static_cast<long>(f.trunc_order())));
    }
  }
}

MinimizationResult minimal_annihilator(const DiffOp& l, const TruncSeries& init, const MinimizationOptions& opts) {
  InitCheck chk = check_init(l, init);
  if (!chk.ok) throw InputError("invalid initial terms: " + chk.reason);
  MinimizationResult res;
  res.op = l.normalized();
  const int r = l.order();
  if (r <= 1) return res;
  long N = std::max<long>(opts.max_terms, static_cast<long>(init.trunc_order()));
  TruncSeries f = unroll(l, init, N);
  const int base = std::max(l.degree(), 1);
  const int ceiling = opts.max_degree > 0 ? opts.max_degree : 4 * base * r * r;
  for (int rr = 1; rr < r; ++rr) {
    int dcap = std::min(ceiling, max_guessable_degree(rr, N));
    if (dcap < 0) {
      res.search_log.push_back({rr, -1, "insufficient precision"});
      continue;
    }
    // The staged degrees base, 2 base, ... up to dcap all embed into dcap, so
    // a negative answer at dcap settles every stage.
    if (!operator_exists_modp(f, rr, dcap)) {
      res.search_log.push_back({rr, dcap, "no kernel mod p"});
      continue;
    }
    int lo = 0, hi = dcap;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (operator_exists_modp(f, rr, mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    std::optional<DiffOp> cand;
    for (int d = lo; d <= dcap && !cand; ++d) {
      cand = guess_operator(f, rr, d);
      res.search_log.push_back({rr, d, cand ? "candidate" : "mod-p kernel not confirmed"});
    }
    if (!cand) continue;
    auto ok = certify_from_init(l, *cand, init, opts.precision_retries, N);
    if (!ok) {
      res.search_log.push_back({cand->order(), cand->degree(), "certificate needs more precision"});
      continue;
    }
    res.search_log.push_back({cand->order(), cand->degree(), *ok ? "certified" : "rejected by certificate"});
    if (*ok) {
      res.op = *cand;
      res.status = MinimizationStatus::CertifiedAnnihilator;
      return res;
    }
  }
  return res;
}

std::string to_string(MinimizationStatus s) {
  return s == MinimizationStatus::CertifiedAnnihilator ? "certified-annihilator" : "input-returned";
}

std::string to_string(Minimality m) { return m == Minimality::HeuristicMinimal ? "heuristic-minimal" : "not-searched"; }

}  // namespace dfinite
