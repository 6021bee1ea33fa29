#ifndef DFINITE_IO_HPP
#define DFINITE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dfinite/guess_prove.hpp"
#include "dfinite/heuristics.hpp"
#include "dfinite/local.hpp"
#include "dfinite/transcendence.hpp"

namespace dfinite::io {

using nlohmann::json;

struct Assertions {
  bool globally_bounded = false;
  std::optional<AsymptoticForm> asymptotic;
};

// Input file: an operator (optional for series-only commands), initial terms
// and caller assertions. See README for the schema.
struct ProblemFile {
  std::string variable = "z";
  std::optional<DiffOp> op;
  TruncSeries init;
  Assertions assertions;
};

// All parsers throw InputError on malformed input.
Rat rational_from_json(const json& j);
json rational_to_json(const Rat& r);
// {"coefficients": [[c_0, c_1, ...], ...], "denominator": "d"} with integer
// entries given as strings or JSON integers.
std::vector<Poly> polys_from_json(const json& j);
json polys_to_json(const std::vector<Poly>& p);

ProblemFile parse_problem(const json& j);
ProblemFile parse_problem_text(const std::string& text);
json problem_to_json(const ProblemFile& p);

json report_to_json(const VerdictReport& r, bool globally_bounded);
json point_to_json(const SingularPoint& s);
json indicial_to_json(const IndicialData& d);
json basis_to_json(const FormalSolutionBasis& b);
json pcurv_to_json(const PCurvatureReport& r);
json bivar_to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const json& j);

// Replays a report produced by report_to_json against the problem: the
// reported operator must annihilate the solution and a fresh local analysis
// must reproduce the certificate strings. Returns the reproduced verdict.
std::optional<Verdict> verify_report(const json& report, const DiffOp& l, const TruncSeries& init);

// Integer sequences print as bare JSON numbers of arbitrary size; other
// rationals as strings.
std::string series_to_json_text(const TruncSeries& f);

}  // namespace dfinite::io

#endif
