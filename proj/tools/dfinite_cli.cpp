// Command-line front end. Every command prints one JSON document on stdout.
// Exit codes: 0 result printed (any verdict), 2 input error, 3 precision or
// resource failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dfinite/errors.hpp"
#include "dfinite/generators.hpp"
#include "dfinite/hypergeometric.hpp"
#include "dfinite/io.hpp"

using namespace dfinite;
using io::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;

struct Globals {
  unsigned long seed = 0;
  int max_degree = 0;
  int max_order = 0;
  long precision = 500;
  bool json_output = true;
};

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

io::ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return io::parse_problem_text(ss.str());
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const DiffOp& need_operator(const io::ProblemFile& p) {
  if (!p.op) throw InputError("the problem file has no \"operator\"");
  return *p.op;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
  std::vector<Rat> out;
  if (s.empty()) return out;
  for (const auto& t : split(s, ',')) {
    try {
      out.push_back(parse_rat(t));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& r : parse_rat_list(s)) {
    if (!is_integer(r) || !r.get_num().fits_sint_p()) throw InputError("expected small integers: " + s);
    out.push_back(static_cast<int>(r.get_num().get_si()));
  }
  return out;
}

SingularPoint parse_point(const std::string& s) {
  if (s == "infinity" || s == "oo") return SingularPoint::infinity();
  try {
    return SingularPoint::rational(parse_rat(s));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

MinimizationOptions min_opts(const Globals& g) {
  MinimizationOptions o;
  o.max_terms = g.precision;
  o.max_degree = g.max_degree;
  return o;
}

// Points to analyze: every singular point, or the one named by --point.
std::vector<SingularPoint> chosen_points(const DiffOp& l, const std::string& point) {
  if (point == "all") return singularities(l);
  return {parse_point(point)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transcendence tests for D-finite power series"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed recorded in the output; all algorithms are deterministic");
  app.add_option("--max-degree", g.max_degree, "Coefficient degree cap for guessing (0: automatic)");
  app.add_option("--max-order", g.max_order, "Order cap for guessing from terms alone");
  app.add_option("--precision", g.precision, "Number of series terms used for certification");
  app.add_flag("--json", g.json_output, "JSON output (the only mode)");
  app.fallthrough();

  // Each command fills `out` (or `raw` for bare arrays).
  json out;
  std::string raw;
  std::function<void()> action;

  std::string file, report_file, point = "all", primes_arg = "3,5,7,11,13", a_arg, b_arg, p_arg = "1,1",
                                  steps_arg = "trident", num_arg = "1", den_arg, vars_arg;
  long order = 8, n_terms = 10;
  bool assume_minimal = false;
  int max_dy = 4, max_dz = 8;

  auto run_test = [&](bool gb) {
    auto p = load_problem(file);
    TestOptions o;
    o.minimization = min_opts(g);
    o.assume_minimal = assume_minimal;
    const DiffOp& l = need_operator(p);
    VerdictReport r = gb ? globally_bounded_test(l, p.init, o) : transcendence_test(l, p.init, o);
    out = io::report_to_json(r, gb);
    if (p.assertions.asymptotic) out["asymptotic"] = to_string(flajolet_check(*p.assertions.asymptotic));
  };

  auto* test = app.add_subcommand("test", "Transcendence test (verdict T or FAIL)");
  test->add_option("file", file, "Problem file")->required();
  test->add_flag("--assume-minimal", assume_minimal, "Skip the minimization step");
  test->callback([&] { action = [&] { run_test(false); }; });

  auto* test_gb = app.add_subcommand("test-gb", "Test for globally bounded series (verdict T or A)");
  test_gb->add_option("file", file, "Problem file")->required();
  test_gb->add_flag("--assume-minimal", assume_minimal, "Skip the minimization step");
  test_gb->callback([&] { action = [&] { run_test(true); }; });

  auto* minimize = app.add_subcommand("minimize", "Smallest annihilator of the solution");
  minimize->add_option("file", file, "Problem file")->required();
  minimize->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      std::vector<GuessSearchEntry> log;
      json entries = json::array();
      if (p.op) {
        MinimizationResult r = minimal_annihilator(*p.op, p.init, min_opts(g));
        out = {{"operator", io::polys_to_json(r.op.coeffs())},
               {"order", r.op.order()},
               {"degree", r.op.degree()},
               {"status", to_string(r.status)},
               {"minimality", to_string(r.minimality)}};
        log = r.search_log;
      } else {
        // Terms only: a guessed operator, not certified.
        if (g.max_order < 1) throw InputError("without an operator, --max-order is required");
        int deg = g.max_degree > 0 ? g.max_degree : 1000;
        auto op = find_operator(p.init, g.max_order, deg, &log);
        out = {{"status", op ? "guessed" : "not-found"}};
        if (op) {
          out["operator"] = io::polys_to_json(op->coeffs());
          out["order"] = op->order();
          out["degree"] = op->degree();
        }
      }
      for (const auto& e : log) entries.push_back({{"order", e.order}, {"degree", e.degree}, {"outcome", e.outcome}});
      out["search_log"] = entries;
    };
  });

  auto* ind = app.add_subcommand("indicial", "Indicial polynomials at the singular points");
  ind->add_option("file", file, "Problem file")->required();
  ind->add_option("--point", point, "A rational point, \"infinity\" or \"all\"");
  ind->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      const DiffOp& l = need_operator(p);
      json a = json::array();
      for (const auto& s : chosen_points(l, point))
        for (const auto& d : indicial(l, s)) a.push_back(io::indicial_to_json(d));
      out = {{"indicial", a}};
    };
  });

  auto* formal = app.add_subcommand("formal-solutions", "Frobenius basis with logarithms");
  formal->add_option("file", file, "Problem file")->required();
  formal->add_option("--point", point, "A rational point, \"infinity\" or \"all\"");
  formal->add_option("--order", order, "Series offsets computed per solution");
  formal->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      const DiffOp& l = need_operator(p);
      json a = json::array();
      for (const auto& s : chosen_points(l, point))
        for (const auto& b : formal_solutions(l, s, order)) a.push_back(io::basis_to_json(b));
      out = {{"bases", a}};
    };
  });

  auto* pcurv = app.add_subcommand("pcurv", "p-curvature at small primes");
  pcurv->add_option("file", file, "Problem file")->required();
  pcurv->add_option("--primes", primes_arg, "Comma-separated primes");
  pcurv->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      const DiffOp& l = need_operator(p);
      json a = json::array();
      for (int q : parse_int_list(primes_arg)) {
        if (q < 2) throw InputError("primes must be at least 2");
        a.push_back(io::pcurv_to_json(p_curvature(l, static_cast<unsigned long>(q))));
      }
      out = {{"pcurvature", a}};
    };
  });

  auto* hyp = app.add_subcommand("hypergeom", "Interlacing criterion for pFq(a; b, 1; z)");
  hyp->add_option("--a", a_arg, "Top parameters")->required();
  hyp->add_option("--b", b_arg, "Bottom parameters without the implicit 1");
  hyp->callback([&] {
    action = [&] {
      HypParams hp{parse_rat_list(a_arg), parse_rat_list(b_arg)};
      // Bottom lists may include the implicit 1 once more than allowed.
      if (hp.b.size() == hp.a.size() && !hp.b.empty() && hp.b.back() == 1) hp.b.pop_back();
      InterlacingResult r = interlacing_criterion(hp);
      out = {{"verdict", to_string(r.kind)}, {"denominator", r.denominator.get_str()}};
      if (!r.reason.empty()) out["reason"] = r.reason;
      if (r.witness) out["witness"] = r.witness->get_str();
    };
  });

  auto* galg = app.add_subcommand("guess-alg", "Guess (and with an operator, prove) a polynomial equation");
  galg->add_option("file", file, "Problem file")->required();
  galg->add_option("--max-dy", max_dy, "Largest degree in y");
  galg->add_option("--max-dz", max_dz, "Largest degree in z");
  galg->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      if (p.op) {
        auto proof = prove_algebraic(*p.op, p.init, ProveOptions{max_dy, max_dz});
        out = {{"status", proof ? "certified" : "not-found"}};
        if (proof) {
          out["polynomial"] = io::bivar_to_json(proof->poly);
          out["text"] = proof->poly.to_string();
          out["root_operator"] = io::polys_to_json(proof->root_operator.coeffs());
          out["terms"] = proof->terms;
        }
      } else {
        auto P = guess_algebraic(p.init, max_dy, max_dz);
        out = {{"status", P ? "guessed" : "not-found"}};
        if (P) {
          out["polynomial"] = io::bivar_to_json(*P);
          out["text"] = P->to_string();
        }
      }
    };
  });

  auto* grade = app.add_subcommand("grade-bound", "Grade bound for a diagonal from the indicial polynomial at 0");
  grade->add_option("file", file, "Problem file")->required();
  grade->add_flag("--assume-minimal", assume_minimal, "Skip the minimization step");
  grade->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      const DiffOp& l = need_operator(p);
      MinimizationResult r;
      if (assume_minimal) {
        r.op = l.normalized();
        r.minimality = Minimality::NotSearched;
      } else {
        r = minimal_annihilator(l, p.init, min_opts(g));
      }
      out = {{"grade_bound", diagonal_grade_bound(r.op)},
             {"order", r.op.order()},
             {"status", to_string(r.status)},
             {"minimality", to_string(r.minimality)}};
    };
  });

  auto* verify = app.add_subcommand("verify", "Replay a report produced by test or test-gb");
  verify->add_option("report", report_file, "Report JSON")->required();
  verify->add_option("file", file, "Problem file the report was computed from")->required();
  verify->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      json rep = load_json(report_file);
      auto v = io::verify_report(rep, need_operator(p), p.init);
      out = {{"verified", v.has_value()}};
      if (v) out["verdict"] = to_string(*v);
    };
  });

  auto* gen = app.add_subcommand("gen", "Coefficient generators");
  gen->require_subcommand(1);
  auto* gen_apery = gen->add_subcommand("apery", "sum_k prod_i binom(n + i k, k)^p_i");
  gen_apery->add_option("--p", p_arg, "Exponent vector p_0,p_1,...");
  gen_apery->add_option("-n", n_terms, "Number of terms");
  gen_apery->callback([&] { action = [&] { raw = io::series_to_json_text(gen_binomial_sum(parse_int_list(p_arg), n_terms)); }; });
  auto* gen_walk_cmd = gen->add_subcommand("walk", "Quarter-plane walks counted by length");
  gen_walk_cmd->add_option("--steps", steps_arg, "\"trident\" or a list such as (1,0),(-1,1)");
  gen_walk_cmd->add_option("-n", n_terms, "Number of terms");
  gen_walk_cmd->callback([&] { action = [&] { raw = io::series_to_json_text(gen_walk(parse_steps(steps_arg), n_terms)); }; });
  auto* gen_diag = gen->add_subcommand("diagonal", "Diagonal of a rational function");
  gen_diag->add_option("--num", num_arg, "Numerator polynomial");
  gen_diag->add_option("--den", den_arg, "Denominator polynomial")->required();
  gen_diag->add_option("--vars", vars_arg, "Comma-separated variable names")->required();
  gen_diag->add_option("-n", n_terms, "Number of terms");
  gen_diag->callback([&] {
    action = [&] { raw = io::series_to_json_text(gen_diagonal(parse_diagonal(num_arg, den_arg, split(vars_arg, ',')), n_terms)); };
  });
  auto* gen_series = gen->add_subcommand("series", "Unroll the solution of a problem file");
  gen_series->add_option("file", file, "Problem file")->required();
  gen_series->add_option("-n", n_terms, "Number of terms");
  gen_series->callback([&] {
    action = [&] {
      auto p = load_problem(file);
      const DiffOp& l = need_operator(p);
      InitCheck chk = check_init(l, p.init);
      if (!chk.ok) throw InputError("invalid initial terms: " + chk.reason);
      raw = io::series_to_json_text(unroll(l, p.init, static_cast<std::size_t>(n_terms)));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("usage", e.what()).dump() << "\n";
    return kExitInput;
  }

  // One retry with doubled precision, then exit 3.
  for (int attempt = 0;; ++attempt) {
    try {
      action();
      break;
    } catch (const PrecisionTooLow& e) {
      if (attempt == 0) {
        g.precision = std::max(2 * g.precision, e.needed);
        order = std::max(2 * order, e.needed);
        continue;
      }
      json err = error_json("precision", e.what());
      err["error"]["needed"] = e.needed;
      std::cout << err.dump() << "\n";
      return kExitPrecision;
    } catch (const std::bad_alloc&) {
      std::cout << error_json("resource", "out of memory").dump() << "\n";
      return kExitPrecision;
    } catch (const InputError& e) {
      std::cout << error_json("input", e.what()).dump() << "\n";
      return kExitInput;
    } catch (const InsufficientInitialConditions& e) {
      std::cout << error_json("insufficient-initial-conditions", e.what()).dump() << "\n";
      return kExitInput;
    } catch (const Inconsistent& e) {
      std::cout << error_json("inconsistent", e.what()).dump() << "\n";
      return kExitInput;
    } catch (const IrregularPoint& e) {
      std::cout << error_json("irregular-point", e.what()).dump() << "\n";
      return kExitInput;
    } catch (const NotSquarefree& e) {
      std::cout << error_json("not-squarefree", e.what()).dump() << "\n";
      return kExitInput;
    } catch (const RootNotSeparable& e) {
      std::cout << error_json("root-not-separable", e.what()).dump() << "\n";
      return kExitInput;
    }
  }
  if (!raw.empty()) {
    std::cout << raw << "\n";
  } else {
    if (g.seed) out["seed"] = g.seed;
    std::cout << out.dump() << "\n";
  }
  return 0;
}
