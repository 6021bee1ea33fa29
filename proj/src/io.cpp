#include "dfinite/io.hpp"

#include <sstream>

#include "dfinite/errors.hpp"

namespace dfinite::io {

namespace {

Int integer_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.dump(), 10);
  if (!j.is_string()) throw InputError("expected an integer, got " + j.dump());
  Rat r;
  try {
    r = parse_rat(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!is_integer(r)) throw InputError("expected an integer, got " + j.dump());
  return r.get_num();
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

bool bool_field(const json& j, const char* key, bool dflt) {
  if (!j.contains(key)) return dflt;
  if (!j.at(key).is_boolean()) throw InputError(std::string("field \"") + key + "\" must be a boolean");
  return j.at(key).get<bool>();
}

json rat_list(const std::vector<Rat>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

}  // namespace

Rat rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(Int(j.dump(), 10));
  if (!j.is_string()) throw InputError("rationals must be strings, got " + j.dump());
  const std::string s = j.get<std::string>();
  Rat r;
  try {
    r = parse_rat(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  // parse_rat canonicalizes; the input must already be canonical.
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int n(s.substr(0, slash), 10), d(s.substr(slash + 1), 10);
    if (d <= 0 || gcd(n, d) != 1) throw InputError("rational not in lowest terms: " + s);
  }
  return r;
}

json rational_to_json(const Rat& r) { return r.get_str(); }

std::vector<Poly> polys_from_json(const json& j) {
  const json& cs = require(j, "coefficients");
  if (!cs.is_array()) throw InputError("\"coefficients\" must be a list");
  Int den = 1;
  if (j.contains("denominator")) den = integer_from_json(j.at("denominator"));
  if (den == 0) throw InputError("zero denominator");
  std::vector<Poly> out;
  for (const auto& p : cs) {
    if (!p.is_array()) throw InputError("each coefficient must be a list of integers");
    std::vector<Rat> c;
    for (const auto& x : p) c.push_back(Rat(integer_from_json(x), den));
    for (auto& x : c) x.canonicalize();
    out.emplace_back(std::move(c));
  }
  return out;
}

json polys_to_json(const std::vector<Poly>& p) {
  Int den = 1;
  for (const auto& q : p) den = lcm(den, q.denominator_lcm());
  json cs = json::array();
  for (const auto& q : p) {
    json row = json::array();
    for (const auto& x : q.coeffs()) {
      Rat y = x * den;
      row.push_back(y.get_num().get_str());
    }
    cs.push_back(row);
  }
  json out = {{"coefficients", cs}};
  if (den != 1) out["denominator"] = den.get_str();
  return out;
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  ProblemFile p;
  if (j.contains("variable")) {
    if (!j.at("variable").is_string()) throw InputError("\"variable\" must be a string");
    p.variable = j.at("variable").get<std::string>();
  }
  if (j.contains("operator")) {
    DiffOp op(polys_from_json(j.at("operator")));
    if (op.order() < 1) throw InputError("operator must have order at least 1");
    p.op = op;
  }
  if (j.contains("init")) {
    const json& in = j.at("init");
    if (!in.is_array()) throw InputError("\"init\" must be a list of rationals");
    std::vector<Rat> c;
    for (const auto& x : in) c.push_back(rational_from_json(x));
    p.init = TruncSeries(std::move(c));
  }
  if (j.contains("assertions")) {
    const json& a = j.at("assertions");
    if (!a.is_object()) throw InputError("\"assertions\" must be an object");
    p.assertions.globally_bounded = bool_field(a, "globally_bounded", false);
    if (a.contains("asymptotic")) {
      const json& as = a.at("asymptotic");
      AsymptoticForm f;
      if (as.contains("r") && !as.at("r").is_null()) f.r = rational_from_json(as.at("r"));
      f.beta_algebraic = bool_field(as, "beta_algebraic", true);
      f.gamma_gamma_algebraic = bool_field(as, "gamma_gamma_algebraic", true);
      p.assertions.asymptotic = f;
    }
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(j);
}

json problem_to_json(const ProblemFile& p) {
  json j = {{"variable", p.variable}, {"init", rat_list(p.init.coeffs)}};
  if (p.op) j["operator"] = polys_to_json(p.op->coeffs());
  json a = {{"globally_bounded", p.assertions.globally_bounded}};
  if (p.assertions.asymptotic) {
    const auto& f = *p.assertions.asymptotic;
    a["asymptotic"] = {{"r", f.r ? rational_to_json(*f.r) : json(nullptr)},
                       {"beta_algebraic", f.beta_algebraic},
                       {"gamma_gamma_algebraic", f.gamma_gamma_algebraic}};
  }
  j["assertions"] = a;
  return j;
}

json report_to_json(const VerdictReport& r, bool globally_bounded) {
  json cert = json::array();
  for (const auto& s : r.certificate) cert.push_back(s.to_string());
  json j = {{"verdict", to_string(r.verdict)},
            {"confidence", to_string(r.confidence)},
            {"certificate", cert},
            {"globally_bounded", globally_bounded}};
  if (!r.certificate.empty() && r.certificate.front().op)
    j["operator"] = polys_to_json(r.certificate.front().op->coeffs());
  json t = json::object();
  for (const auto& [k, v] : r.timings) t[k] = v;
  j["timings"] = t;
  return j;
}

json point_to_json(const SingularPoint& s) {
  switch (s.kind) {
    case SingularPoint::Kind::Rational:
      return {{"kind", "rational"}, {"value", rational_to_json(s.value)}};
    case SingularPoint::Kind::Algebraic:
      return {{"kind", "algebraic"}, {"modulus", rat_list(s.modulus.coeffs())}};
    case SingularPoint::Kind::Infinity:
      break;
  }
  return {{"kind", "infinity"}};
}

json indicial_to_json(const IndicialData& d) {
  json roots = json::array();
  for (const auto& rm : d.rational_roots)
    roots.push_back({{"root", rational_to_json(rm.root)}, {"multiplicity", rm.multiplicity}});
  json coeffs = json::array();
  for (const auto& c : d.poly) coeffs.push_back(rat_list(c.coeffs()));
  return {{"point", point_to_json(d.point)},
          {"text", d.point.to_string()},
          {"polynomial", d.poly_string()},
          {"coefficients", coeffs},
          {"degree", d.degree},
          {"rational_roots", roots},
          {"splits_distinct_rational", d.splits_distinct_rational}};
}

json basis_to_json(const FormalSolutionBasis& b) {
  json sols = json::array();
  for (const auto& s : b.solutions) {
    json logs = json::array();
    for (const auto& row : s.log_coeffs) {
      json r = json::array();
      for (const auto& c : row) r.push_back(rat_list(c.coeffs()));
      logs.push_back(r);
    }
    sols.push_back({{"exponent", rational_to_json(s.exponent)}, {"log_degree", s.log_degree()}, {"log_coeffs", logs}});
  }
  json j = {{"point", point_to_json(b.point)},
            {"text", b.point.to_string()},
            {"order", b.order},
            {"has_logarithms", b.has_logarithms},
            {"solutions", sols}};
  if (b.first_log)
    j["first_log"] = {{"exponent", rational_to_json(b.first_log->exponent)}, {"index", b.first_log->index}};
  return j;
}

json pcurv_to_json(const PCurvatureReport& r) {
  json j = {{"prime", r.prime}, {"bad_prime", r.bad_prime}, {"computed", r.computed}};
  if (r.computed) {
    j["zero"] = r.is_zero;
    j["rank"] = r.matrix_rank;
  }
  return j;
}

json bivar_to_json(const BivarPoly& p) { return polys_to_json(p.c); }

BivarPoly bivar_from_json(const json& j) {
  BivarPoly p{polys_from_json(j)};
  while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
  return p;
}

std::optional<Verdict> verify_report(const json& report, const DiffOp& l, const TruncSeries& init) {
  const bool gb = bool_field(report, "globally_bounded", false);
  const json& cert = require(report, "certificate");
  if (!cert.is_array() || cert.empty()) throw InputError("\"certificate\" must be a nonempty list");
  DiffOp m(polys_from_json(require(report, "operator")));
  if (m.order() < 1) return std::nullopt;
  if (!m.same_up_to_scalar(l)) {
    auto ok = certify_from_init(l, m, init);
    if (!ok || !*ok) return std::nullopt;
  }
  std::ostringstream head;
  head << "MinimalOperator(order " << m.order() << ",";
  if (!cert[0].is_string() || cert[0].get<std::string>().rfind(head.str(), 0) != 0) return std::nullopt;
  VerdictReport again = analyze_operator(m, gb);
  if (cert.size() != again.certificate.size() + 1) return std::nullopt;
  for (std::size_t i = 0; i < again.certificate.size(); ++i)
    if (!cert[i + 1].is_string() || cert[i + 1].get<std::string>() != again.certificate[i].to_string())
      return std::nullopt;
  if (require(report, "verdict") != to_string(again.verdict)) return std::nullopt;
  return again.verdict;
}

std::string series_to_json_text(const TruncSeries& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.trunc_order(); ++i) {
    if (i) out += ",";
    out += is_integer(f[i]) ? f[i].get_num().get_str() : "\"" + f[i].get_str() + "\"";
  }
  return out + "]";
}

}  // namespace dfinite::io
