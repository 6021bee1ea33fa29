#ifndef DFINITE_MINIMIZATION_HPP
#define DFINITE_MINIMIZATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "dfinite/diffop.hpp"
#include "dfinite/series.hpp"

namespace dfinite {

inline constexpr int kGuessGuard = 10;

// Terms needed to guess an operator of the given order and degree.
inline long guess_terms_needed(int order, int degree) {
  return static_cast<long>(order + 1) * (degree + 1) + order + kGuessGuard;
}

// Largest degree that can be guessed at this order from n terms, or -1.
int max_guessable_degree(int order, long n);

// Whether some operator of this order and degree annihilates f to the
// available precision modulo a large prime. A false answer is exact.
bool operator_exists_modp(const TruncSeries& f, int order, int degree);

// Exact kernel computation at a fixed order and degree.
std::optional<DiffOp> guess_operator(const TruncSeries& f, int max_order, int max_degree);

struct GuessSearchEntry {
  int order;
  int degree;
  std::string outcome;
};

// Smallest order, then smallest degree, with an annihilator to the available
// precision; degrees are capped by max_degree and by the precision.
std::optional<DiffOp> find_operator(const TruncSeries& f, int max_order, int max_degree,
                                    std::vector<GuessSearchEntry>* log = nullptr);

// Proves M(f) = 0 for the solution f of L given by the truncation, via a
// cofactor A with A o M in Q(z)[d] L and the valuation bound for A.
bool certify_annihilates(const DiffOp& l, const DiffOp& m, const TruncSeries& f);
// certify_annihilates on an unrolling of init, lengthened on PrecisionTooLow
// at most `retries` times; nullopt when the precision budget runs out.
std::optional<bool> certify_from_init(const DiffOp& l, const DiffOp& m, const TruncSeries& init, int retries = 3,
                                      long terms = 0);
// The cofactor alone (normalized).
DiffOp annihilation_cofactor(const DiffOp& l, const DiffOp& m);

enum class MinimizationStatus { CertifiedAnnihilator, InputReturned };
enum class Minimality { HeuristicMinimal, NotSearched };

struct MinimizationOptions {
  long max_terms = 500;    // precision budget for unrolling and guessing
  int max_degree = 0;      // 0: 4 deg(L) order(L)^2
  int precision_retries = 3;
};

struct MinimizationResult {
  DiffOp op;
  MinimizationStatus status = MinimizationStatus::InputReturned;
  Minimality minimality = Minimality::HeuristicMinimal;
  std::vector<GuessSearchEntry> search_log;
};

MinimizationResult minimal_annihilator(const DiffOp& l, const TruncSeries& init,
                                       const MinimizationOptions& opts = {});

std::string to_string(MinimizationStatus s);
std::string to_string(Minimality m);

}  // namespace dfinite

#endif
