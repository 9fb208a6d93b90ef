#pragma once

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncv/cli/report.hpp"
#include "ncv/nonorient/maintheo.hpp"
#include "ncv/nonorient/qseries.hpp"
#include "ncv/nonorient/verify.hpp"
#include "ncv/nonorient/zseries.hpp"
#include "ncv/oracle/compare.hpp"
#include "ncv/oracle/counts.hpp"
#include "ncv/oracle/orbit_oracle.hpp"
#include "ncv/punctured/checks.hpp"
#include "ncv/punctured/hh.hpp"
#include "ncv/sym/macdonald.hpp"
#include "ncv/suite.hpp"

namespace ncv::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  std::string format = "json";
  bool timing = false;
  unsigned seed = 20241;
  std::string out;
  long budget = kGroupBudget;

  int rho = 0, r = 1, k = 0, n = 1, q = 3, nmax = 5, dmax = 4;
  std::string mu, lambda, basis = "m", eigenvalues;

  std::string check;
  int degree = 0, bound = 0, trials = 20;
  bool quick = false;
};

namespace detail {

inline const char* kTupleHelp =
    "partition tuple: components separated by '|', parts by ','; \"2,1|3\" is ((2,1),(3))";

inline std::vector<std::string> verify_names() {
  std::vector<std::string> names = identity_names();
  for (const auto& c : conjecture_check_names()) names.push_back(c);
  names.push_back("maintheo");
  names.push_back("product_formula");
  for (const auto& c : acceptance_criteria()) names.push_back("criterion-" + std::to_string(c.id));
  names.push_back("all");
  return names;
}

inline std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

/// "2,3|4,4" -> field codes per class; negative integers are read through Z -> F_p.
inline std::vector<std::vector<int>> parse_eigenvalues(const std::string& text, const FiniteField& F) {
  std::vector<std::vector<int>> out;
  std::istringstream classes(text);
  std::string cls;
  while (std::getline(classes, cls, '|')) {
    std::vector<int> values;
    std::istringstream items(cls);
    std::string item;
    while (std::getline(items, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      if (item.empty()) continue;
      long v = 0;
      try {
        std::size_t used = 0;
        v = std::stol(item, &used);
        if (used != item.size()) throw ParseError("bad eigenvalue '" + item + "'");
      } catch (const std::logic_error&) {
        throw ParseError("bad eigenvalue '" + item + "'");
      }
      int code = v < 0 || F.degree() == 1 ? F.from_int(v) : static_cast<int>(v);
      if (code >= F.size()) throw RangeError("eigenvalue code " + item + " is not an element of F_" + std::to_string(F.size()));
      if (code == 0) throw RangeError("eigenvalue " + item + " is zero in F_" + std::to_string(F.size()));
      values.push_back(code);
    }
    if (values.empty()) throw ParseError("empty eigenvalue class in '" + text + "'");
    out.push_back(values);
  }
  if (out.empty()) throw ParseError("no eigenvalues given");
  return out;
}

inline PartitionTuple tuple_for(const RunConfig& c) {
  PartitionTuple mu = parse_partition_tuple(c.mu);
  if (c.k != 0 && c.k != static_cast<int>(mu.size()))
    throw RangeError("--k " + std::to_string(c.k) + " but mu has " + std::to_string(mu.size()) + " components");
  return mu;
}

inline void punctured_inputs(Report& rep, const RunConfig& c, const PartitionTuple& mu) {
  rep.inputs["r"] = c.r;
  rep.inputs["k"] = mu.size();
  rep.inputs["mu"] = to_string(mu);
}

inline void add_checks(Report& rep, const CheckReport& checks, const std::string& prefix = {}) {
  rep.checks(checks, prefix);
}

inline void run_verify(Report& rep, const RunConfig& c) {
  const std::string& name = c.check;
  rep.inputs["check"] = name;
  auto is_in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), name) != v.end(); };
  SuiteOptions opts{c.quick, c.seed};

  if (is_in(identity_names())) {
    int degree = c.degree ? c.degree : 8;
    rep.inputs["degree"] = degree;
    add_checks(rep, verify_identity(name, degree));
  } else if (is_in(conjecture_check_names())) {
    bool macdonald = name == "conj_0conj" || name == "denominators" || name == "lemma_rk1";
    int bound = c.bound ? c.bound : (macdonald ? 4 : 6);
    rep.inputs["bound"] = bound;
    add_checks(rep, conjecture_checks(name, bound));
  } else if (name == "maintheo") {
    int degree = c.degree ? c.degree : 6;
    if (c.trials < 0) throw RangeError("--trials must be non-negative");
    rep.inputs["degree"] = degree;
    rep.inputs["trials"] = c.trials;
    rep.inputs["seed"] = c.seed;
    add_checks(rep, maintheo_suite(c.seed, c.trials, degree));
  } else if (name == "product_formula") {
    int degree = c.degree ? c.degree : 6;
    if (degree < 1) throw RangeError("--degree must be positive");
    rep.inputs["degree"] = degree;
    CheckReport checks{"product_formula", {}};
    for (int rho : {-1, 0, 1, 2}) {
      std::string why = ncv::detail::series_mismatch(product_formula_m(rho, degree), m_series(rho, degree));
      checks.add("rho=" + std::to_string(rho), why.empty(), why);
    }
    add_checks(rep, checks);
  } else if (name.rfind("criterion-", 0) == 0 || name == "all") {
    rep.inputs["quick"] = c.quick;
    rep.inputs["seed"] = c.seed;
    for (const auto& crit : acceptance_criteria()) {
      if (name != "all" && name != "criterion-" + std::to_string(crit.id)) continue;
      add_checks(rep, crit.run(opts), "[" + std::to_string(crit.id) + "] ");
    }
    if (rep.rows.empty()) throw ParseError("unknown check '" + name + "'");
  } else {
    throw ParseError("unknown check '" + name + "'; known: " + join(verify_names(), ", "));
  }
}

inline void comparison_rows(Report& rep, const OracleComparison& cmp) {
  rep.value("count", cmp.count.get_str());
  rep.value("group_order", cmp.group_order.get_str());
  rep.value("e_count", to_string(cmp.e_count));
  Rational predicted = cmp.e_count * Rational(cmp.group_order);
  rep.value("formula", to_string(predicted), cmp.equal() ? "equal" : "different");
}

}  // namespace detail

/// Parses argv, runs one subcommand and writes the report to `out` (or --out).
/// Returns an ExitCode.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Counting polynomials, E-series and mixed Poincare series of character stacks of "
               "non-orientable surfaces, with brute-force checks over small finite fields.",
               "ncv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.footer(std::string("mu: ") + detail::kTupleHelp +
             ".\neigenvalues: field codes per class, classes separated by '|'; negative integers are "
             "reduced mod p.\nExit status: 0 all checks pass, 1 a check failed, 2 usage error, 3 internal error.\n"
             "NCV_THREADS sets the worker count of the brute-force oracles.");
  app.add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}))
      ->capture_default_str();
  app.add_flag("--timing", c.timing, "report wall-clock time");
  app.add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--out", c.out, "write the report to this file");
  app.add_option("--budget", c.budget, "largest group the oracles may enumerate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* involutions = app.add_subcommand("involutions", "I_n(q) = #{x in GL_n(F_q) : x^2 = 1}");
  involutions->add_option("--nmax", c.nmax, "largest n")->required()->check(CLI::Range(1, 40));

  auto* mseries = app.add_subcommand("mseries", "coefficients of M_rho(q, T) through T^nmax");
  mseries->add_option("--rho", c.rho, "rho = r - 2")->required()->check(CLI::Range(-1, 40));
  mseries->add_option("--nmax", c.nmax, "truncation degree")->required()->check(CLI::Range(0, 40));

  auto* ecount_no = app.add_subcommand("ecount-nonorient", "E-polynomial of the stack for r = rho + 2 cross-caps");
  ecount_no->add_option("--rho", c.rho, "rho = r - 2")->required()->check(CLI::Range(-1, 40));
  ecount_no->add_option("--n", c.n, "rank")->required()->check(CLI::Range(1, 40));

  std::vector<CLI::App*> punctured;
  auto* hh = app.add_subcommand("hh", "HH_mu(z, w)");
  auto* ecount_pu = app.add_subcommand("ecount-punctured", "E-series of the punctured stack");
  auto* mixed = app.add_subcommand("mixed-poincare", "conjectural mixed Poincare series in q, t");
  for (auto* s : {hh, ecount_pu, mixed}) {
    s->add_option("--r", c.r, "number of cross-caps")->required()->check(CLI::Range(1, 40));
    s->add_option("--k", c.k, "number of punctures (default: from mu)")->check(CLI::Range(1, 40));
    s->add_option("--mu", c.mu, detail::kTupleHelp)->required();
  }

  auto* verify = app.add_subcommand("verify", "run a named verification");
  verify->add_option("check", c.check, "one of: " + detail::join(detail::verify_names(), ", "))->required();
  verify->add_option("--degree", c.degree, "series degree")->check(CLI::Range(1, 40));
  verify->add_option("--bound", c.bound, "partition size bound")->check(CLI::Range(1, 40));
  verify->add_option("--trials", c.trials, "random data for maintheo")->check(CLI::Range(0, 10000));
  verify->add_flag("--quick", c.quick, "acceptance scale only (no extended oracle cases)");

  auto* oracle = app.add_subcommand("oracle", "brute-force counts over F_q set against the formulas");
  oracle->require_subcommand(1);
  auto* o_no = oracle->add_subcommand("nonorient", "#{A : A_1^2...A_r^2 = 1} / |GL_n(F_q)|");
  o_no->add_option("--n", c.n, "rank")->required()->check(CLI::Range(1, 8));
  o_no->add_option("--q", c.q, "odd prime power")->required()->check(CLI::Range(3, 1 << 20));
  o_no->add_option("--r", c.r, "number of cross-caps")->required()->check(CLI::Range(1, 40));
  auto* o_pu = oracle->add_subcommand("punctured", "twisted count with semisimple classes at the punctures");
  o_pu->add_option("--r", c.r, "number of cross-caps")->required()->check(CLI::Range(1, 40));
  o_pu->add_option("--k", c.k, "number of punctures (default: from eigenvalues)")->check(CLI::Range(1, 40));
  o_pu->add_option("--n", c.n, "rank (default: from eigenvalues)")->check(CLI::Range(1, 8));
  o_pu->add_option("--q", c.q, "odd prime power")->required()->check(CLI::Range(3, 1 << 20));
  o_pu->add_option("--eigenvalues", c.eigenvalues, "eigenvalues per class, e.g. \"2,3\" or \"4,4|2,3\"")->required();
  auto* o_orb = oracle->add_subcommand("orbits", "Gamma-orbits on G_m by enumeration");
  o_orb->add_option("--q", c.q, "odd prime power")->required()->check(CLI::Range(3, 1 << 20));
  o_orb->add_option("--dmax", c.dmax, "largest orbit degree")->check(CLI::Range(1, 40))->capture_default_str();
  auto* o_corr = oracle->add_subcommand("correspondence", "#{x z sigma(x) z^-1 = h} against #{[x, z] = h}");
  o_corr->add_option("--n", c.n, "rank")->required()->check(CLI::Range(1, 8));
  o_corr->add_option("--q", c.q, "odd prime power")->required()->check(CLI::Range(3, 1 << 20));
  o_corr->add_option("--eigenvalues", c.eigenvalues, "h = diag(eigenvalues); default identity");

  auto* macdonald = app.add_subcommand("macdonald", "modified Macdonald polynomial H~_lambda(x; q, t)");
  macdonald->add_option("--lambda", c.lambda, "partition, e.g. \"2,1\"")->required();
  macdonald->add_option("--basis", c.basis, "output basis")
      ->check(CLI::IsMember({"m", "s", "p", "h"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  Report rep;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (app.got_subcommand(involutions)) {
      rep.subcommand = "involutions";
      rep.inputs["nmax"] = c.nmax;
      for (int n = 1; n <= c.nmax; ++n) rep.polynomial("I_" + std::to_string(n), involution_count(n));
    } else if (app.got_subcommand(mseries)) {
      rep.subcommand = "mseries";
      rep.inputs["rho"] = c.rho;
      rep.inputs["nmax"] = c.nmax;
      const RFSeries& m = m_series(c.rho, c.nmax);
      for (int n = 0; n <= c.nmax; ++n) rep.polynomial("T^" + std::to_string(n), m[n]);
    } else if (app.got_subcommand(ecount_no)) {
      rep.subcommand = "ecount-nonorient";
      rep.inputs["rho"] = c.rho;
      rep.inputs["n"] = c.n;
      rep.polynomial("e_count", e_count_nonorient(c.rho, c.n));
    } else if (app.got_subcommand(hh) || app.got_subcommand(ecount_pu) || app.got_subcommand(mixed)) {
      PartitionTuple mu = detail::tuple_for(c);
      int k = static_cast<int>(mu.size());
      detail::punctured_inputs(rep, c, mu);
      if (app.got_subcommand(hh)) {
        rep.subcommand = "hh";
        rep.polynomial("HH", hh_mu(c.r, k, mu));
      } else if (app.got_subcommand(ecount_pu)) {
        rep.subcommand = "ecount-punctured";
        rep.polynomial("e_count", e_count_punctured(c.r, k, mu));
      } else {
        rep.subcommand = "mixed-poincare";
        rep.polynomial("mixed_poincare", mixed_poincare(c.r, k, mu));
      }
    } else if (app.got_subcommand(verify)) {
      rep.subcommand = "verify";
      detail::run_verify(rep, c);
    } else if (oracle->got_subcommand(o_no)) {
      rep.subcommand = "oracle nonorient";
      rep.inputs["n"] = c.n;
      rep.inputs["q"] = c.q;
      rep.inputs["r"] = c.r;
      detail::comparison_rows(rep, nonorient_oracle(c.n, c.q, c.r, c.budget));
    } else if (oracle->got_subcommand(o_pu)) {
      rep.subcommand = "oracle punctured";
      FiniteField F(c.q);
      FieldClassSpec spec = class_spec_from_eigenvalues(detail::parse_eigenvalues(c.eigenvalues, F));
      if (c.k && c.k != spec.k())
        throw RangeError("--k " + std::to_string(c.k) + " but " + std::to_string(spec.k()) + " classes given");
      if (o_pu->count("--n") && c.n != spec.n())
        throw RangeError("--n " + std::to_string(c.n) + " but classes have " + std::to_string(spec.n()) + " eigenvalues");
      rep.inputs["r"] = c.r;
      rep.inputs["k"] = spec.k();
      rep.inputs["n"] = spec.n();
      rep.inputs["q"] = c.q;
      rep.inputs["eigenvalues"] = c.eigenvalues;
      rep.inputs["mu"] = to_string(spec.mu());
      detail::comparison_rows(rep, punctured_oracle(c.r, c.q, spec, c.budget));
    } else if (oracle->got_subcommand(o_orb)) {
      rep.subcommand = "oracle orbits";
      rep.inputs["q"] = c.q;
      rep.inputs["dmax"] = c.dmax;
      rep.checks(gamma_orbit_check(c.q, c.dmax));
    } else if (oracle->got_subcommand(o_corr)) {
      rep.subcommand = "oracle correspondence";
      GroupTable G(c.n, c.q, c.budget);
      int h = G.identity();
      if (!c.eigenvalues.empty()) {
        auto eig = detail::parse_eigenvalues(c.eigenvalues, G.field());
        if (eig.size() != 1) throw RangeError("correspondence takes a single eigenvalue class");
        h = G.index_of(G.diagonal(eig[0]));
      }
      rep.inputs["n"] = c.n;
      rep.inputs["q"] = c.q;
      rep.inputs["h"] = G.to_string(h);
      Correspondence corr = correspondence_check(G, h);
      rep.value("twisted", corr.count_a.get_str());
      rep.value("commutator", corr.count_b.get_str(), corr.equal() ? "equal" : "different");
    } else if (app.got_subcommand(macdonald)) {
      rep.subcommand = "macdonald";
      Partition lam = Partition::parse(c.lambda);
      if (lam.size() == 0) throw RangeError("lambda must be nonempty");
      rep.inputs["lambda"] = lam.to_string();
      rep.inputs["basis"] = c.basis;
      Basis b = c.basis == "s" ? Basis::s : c.basis == "p" ? Basis::p : c.basis == "h" ? Basis::h : Basis::m;
      auto f = macdonald_modified(lam).converted(b);
      for (const auto& [key, coeff] : f.terms()) rep.polynomial(c.basis + "[" + to_string(key) + "]", coeff);
    }
  } catch (const IntegralityViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget)\n";
    return kUsage;
  } catch (const CutoffExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  if (c.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::string text = render(rep, c.format);
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      err << "error: cannot write " << c.out << "\n";
      return kUsage;
    }
    f << text;
  }
  return rep.failed() ? kCheckFailed : kPass;
}

}  // namespace ncv::cli
