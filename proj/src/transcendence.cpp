#include "dfinite/transcendence.hpp"

#include <chrono>
#include <sstream>

#include "dfinite/errors.hpp"

namespace dfinite {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::optional<CertificateStep> check_branch(const DiffOp& lmin, const IndicialData& ind, bool log_check) {
  CertificateStep step;
  step.point = ind.point;
  step.indicial = ind;
  if (ind.degree < lmin.order()) {
    step.kind = StepKind::NotFuchsian;
    return step;
  }
  if (static_cast<int>(ind.rational_roots.size()) < ind.degree) {
    step.kind = StepKind::NonsplittingIndicial;
    return step;
  }
  long d = max_integer_difference(ind.rational_roots);
  if (d == 0 || !log_check) return std::nullopt;
  FrobeniusOptions fo;
  fo.stop_at_first_log = true;
  for (const auto& basis : formal_solutions(lmin, ind.point, d, fo)) {
    if (!basis.has_logarithms) continue;
    step.kind = StepKind::LogarithmDetected;
    step.point = basis.point;
    step.resonance = basis.first_log;
    step.frobenius_order = d;
    return step;
  }
  return std::nullopt;
}

VerdictReport run_test(const DiffOp& l, const TruncSeries& init, const TestOptions& opts, bool gb) {
  if (l.order() < 1) throw InputError("operator must have order at least 1");
  InitCheck chk = check_init(l, init);
  if (!chk.ok) throw InputError("invalid initial terms: " + chk.reason);
  auto t0 = Clock::now();
  MinimizationResult mr;
  if (opts.assume_minimal) {
    mr.op = l.normalized();
    mr.minimality = Minimality::NotSearched;
  } else {
    mr = minimal_annihilator(l, init, opts.minimization);
  }
  double t_min = seconds_since(t0);
  CertificateStep first;
  first.kind = StepKind::MinimalOperator;
  first.op = mr.op;
  first.minimization = mr.status;
  first.search_log = mr.search_log;

  VerdictReport rep = analyze_operator(mr.op, gb);
  rep.certificate.insert(rep.certificate.begin(), std::move(first));
  rep.timings["minimization"] = t_min;
  rep.timings["local_analysis"] = seconds_since(t0) - t_min;
  if (opts.assume_minimal && rep.verdict == Verdict::Transcendental) rep.confidence = Confidence::Heuristic;
  return rep;
}

}  // namespace

VerdictReport analyze_operator(const DiffOp& lmin, bool globally_bounded) {
  VerdictReport rep;
  for (const auto& s : singularities(lmin)) {
    const bool log_check = !globally_bounded || (s.kind == SingularPoint::Kind::Rational && s.value == 0);
    for (const auto& ind : indicial(lmin, s)) {
      if (auto step = check_branch(lmin, ind, log_check)) {
        rep.verdict = Verdict::Transcendental;
        rep.confidence = Confidence::CertifiedModuloMinimality;
        rep.certificate.push_back(std::move(*step));
        return rep;
      }
    }
  }
  CertificateStep done;
  done.kind = StepKind::AllPointsPassed;
  rep.certificate.push_back(done);
  rep.verdict = globally_bounded ? Verdict::Algebraic : Verdict::Fail;
  rep.confidence = globally_bounded ? Confidence::ConjecturalChristolAndre : Confidence::Heuristic;
  return rep;
}

VerdictReport transcendence_test(const DiffOp& l, const TruncSeries& init, const TestOptions& opts) {
  return run_test(l, init, opts, false);
}

VerdictReport globally_bounded_test(const DiffOp& l, const TruncSeries& init, const TestOptions& opts) {
  return run_test(l, init, opts, true);
}

std::optional<Verdict> replay(const VerdictReport& report, const DiffOp& l, const TruncSeries& init,
                              bool globally_bounded) {
  if (report.certificate.empty() || report.certificate.front().kind != StepKind::MinimalOperator ||
      !report.certificate.front().op)
    return std::nullopt;
  const DiffOp& m = *report.certificate.front().op;
  if (!m.same_up_to_scalar(l)) {
    auto ok = certify_from_init(l, m, init);
    if (!ok || !*ok) return std::nullopt;
  }
  VerdictReport again = analyze_operator(m, globally_bounded);
  if (report.certificate.size() != again.certificate.size() + 1) return std::nullopt;
  const CertificateStep& a = report.certificate.back();
  const CertificateStep& b = again.certificate.back();
  if (a.kind != b.kind || a.point != b.point) return std::nullopt;
  if (a.indicial && (!b.indicial || a.indicial->poly != b.indicial->poly)) return std::nullopt;
  if (a.resonance && (!b.resonance || a.resonance->exponent != b.resonance->exponent)) return std::nullopt;
  return again.verdict;
}

int diagonal_grade_bound(const DiffOp& lmin) {
  auto ind = indicial(lmin, SingularPoint::rational(0));
  for (const auto& rm : ind.front().rational_roots)
    if (rm.root == 0) return rm.multiplicity + 1;
  return 0;
}

VerdictReport iterated_factor_strategy(const DiffOp& l, const std::vector<Factor>& factors, const TruncSeries& init) {
  if (factors.empty()) throw InvalidFactorization("empty factor list");
  DiffOp prod = factors.front().op;
  for (std::size_t i = 1; i < factors.size(); ++i) prod = op_mul(prod, factors[i].op);
  if (!prod.same_up_to_scalar(l)) throw InvalidFactorization("product of the factors differs from the operator");
  InitCheck chk = check_init(l, init);
  if (!chk.ok) throw InputError("invalid initial terms: " + chk.reason);

  auto t0 = Clock::now();
  VerdictReport rep;
  rep.verdict = Verdict::Fail;
  rep.confidence = Confidence::Heuristic;
  long n = std::max<long>(64, static_cast<long>(init.trunc_order()));
  TruncSeries f = unroll(l, init, n);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    DiffOp right({Poly(1)});
    for (std::size_t j = i + 1; j < factors.size(); ++j) right = op_mul(right, factors[j].op);
    const DiffOp& left = factors[i].op;
    bool zero = false;
    for (int attempt = 0;; ++attempt) {
      try {
        zero = zero_test(left, apply_op(right, f));
        break;
      } catch (const PrecisionTooLow& e) {
        if (attempt >= 3) throw;
        n = std::max<long>(e.needed + right.order() + 1, 2 * n);
        f = unroll(l, init, n);
      }
    }
    CertificateStep step;
    step.kind = StepKind::FactorImage;
    step.factor_index = static_cast<int>(i);
    step.image_zero = zero;
    rep.certificate.push_back(step);
    if (!zero) {
      if (factors[i].no_algebraic_solutions) {
        rep.verdict = Verdict::Transcendental;
        rep.confidence = Confidence::CertifiedGivenAssertions;
      }
      break;
    }
  }
  rep.timings["factor_images"] = seconds_since(t0);
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Transcendental:
      return "T";
    case Verdict::Algebraic:
      return "A";
    case Verdict::Fail:
      break;
  }
  return "FAIL";
}

std::string to_string(Confidence c) {
  switch (c) {
    case Confidence::CertifiedModuloMinimality:
      return "certified-modulo-minimality";
    case Confidence::ConjecturalChristolAndre:
      return "conjectural-christol-andre";
    case Confidence::CertifiedGivenAssertions:
      return "certified-given-assertions";
    case Confidence::Heuristic:
      break;
  }
  return "heuristic";
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::MinimalOperator:
      return "MinimalOperator";
    case StepKind::NotFuchsian:
      return "NotFuchsian";
    case StepKind::NonsplittingIndicial:
      return "NonsplittingIndicial";
    case StepKind::LogarithmDetected:
      return "LogarithmDetected";
    case StepKind::AllPointsPassed:
      return "AllPointsPassed";
    case StepKind::FactorImage:
      break;
  }
  return "FactorImage";
}

std::string CertificateStep::to_string() const {
  std::ostringstream os;
  os << dfinite::to_string(kind);
  switch (kind) {
    case StepKind::MinimalOperator:
      os << "(order " << (op ? op->order() : -1) << ", "
         << (minimization ? dfinite::to_string(*minimization) : std::string("unknown")) << ")";
      break;
    case StepKind::NotFuchsian:
    case StepKind::NonsplittingIndicial:
      os << "(" << point->to_string() << ", " << indicial->poly_string() << ")";
      break;
    case StepKind::LogarithmDetected:
      os << "(" << point->to_string() << ", exponent " << resonance->exponent.get_str() << ")";
      break;
    case StepKind::FactorImage:
      os << "(" << factor_index << ", " << (image_zero ? "zero" : "nonzero") << ")";
      break;
    case StepKind::AllPointsPassed:
      break;
  }
  return os.str();
}

}  // namespace dfinite
