#ifndef DFINITE_TRANSCENDENCE_HPP
#define DFINITE_TRANSCENDENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dfinite/local.hpp"
#include "dfinite/minimization.hpp"

namespace dfinite {

enum class Verdict { Transcendental, Algebraic, Fail };

enum class Confidence {
  CertifiedModuloMinimality,
  ConjecturalChristolAndre,
  // Transcendence that rests on caller-supplied facts about factors.
  CertifiedGivenAssertions,
  Heuristic,
};

enum class StepKind {
  MinimalOperator,
  NotFuchsian,
  NonsplittingIndicial,
  LogarithmDetected,
  AllPointsPassed,
  FactorImage,
};

struct CertificateStep {
  StepKind kind = StepKind::AllPointsPassed;
  std::optional<SingularPoint> point;
  // MinimalOperator: the operator used from here on.
  std::optional<DiffOp> op;
  std::optional<MinimizationStatus> minimization;
  std::vector<GuessSearchEntry> search_log;
  // NotFuchsian / NonsplittingIndicial / LogarithmDetected.
  std::optional<IndicialData> indicial;
  std::optional<Resonance> resonance;
  long frobenius_order = 0;
  // FactorImage: index of the left factor and whether its image was zero.
  int factor_index = -1;
  bool image_zero = false;
  std::string to_string() const;
};

struct VerdictReport {
  Verdict verdict = Verdict::Fail;
  Confidence confidence = Confidence::CertifiedModuloMinimality;
  std::vector<CertificateStep> certificate;
  std::map<std::string, double> timings;  // seconds
};

struct TestOptions {
  MinimizationOptions minimization;
  // Trust the input operator as minimal and skip the search.
  bool assume_minimal = false;
};

// Transcendence test: T or FAIL.
VerdictReport transcendence_test(const DiffOp& l, const TruncSeries& init, const TestOptions& opts = {});
// Variant for globally bounded f: the log check runs only at 0 and the
// terminal verdict is A (conditional on the Christol-Andre conjecture).
VerdictReport globally_bounded_test(const DiffOp& l, const TruncSeries& init, const TestOptions& opts = {});

// Local-analysis part of the tests on a given operator; the returned
// certificate has no MinimalOperator step.
VerdictReport analyze_operator(const DiffOp& lmin, bool globally_bounded);

// Replays a report: re-certifies the operator step against (l, init) and
// re-runs the local analysis on the reported operator. Returns the verdict it
// reproduces, or nullopt if any step fails to re-verify.
std::optional<Verdict> replay(const VerdictReport& report, const DiffOp& l, const TruncSeries& init,
                              bool globally_bounded);

// s + 2 when the indicial polynomial at 0 is lambda^(s+1) P with P(0) != 0,
// otherwise 0.
int diagonal_grade_bound(const DiffOp& lmin);

struct Factor {
  DiffOp op;
  bool no_algebraic_solutions = false;
};

// L = F_1 o ... o F_k. With A the leftmost remaining factor and B the rest,
// B(f) != 0 and A without algebraic solutions proves f transcendental; B(f) = 0
// moves on to B.
VerdictReport iterated_factor_strategy(const DiffOp& l, const std::vector<Factor>& factors, const TruncSeries& init);

std::string to_string(Verdict v);
std::string to_string(Confidence c);
std::string to_string(StepKind k);

}  // namespace dfinite

#endif
