// Command-line front end: evaluates coefficient bounds for the m-fold
// symmetric bi-univalent function classes, runs the identity suites, probes
// the bounds against sampled reconstructions, and dumps the exemplar catalog.
// Exit codes: 0 success, 1 verification or certification failure, 2 usage.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfold/bounds.hpp"
#include "mfold/exemplars.hpp"
#include "mfold/functional.hpp"
#include "mfold/report.hpp"
#include "mfold/sampling.hpp"
#include "mfold/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using mfold::ClassKind;
using mfold::ClassParams;
using mfold::Complex;
using mfold::Range;
using Cell = mfold::report::Cell;
using Table = mfold::report::Table;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double_strict(const std::string& s, const std::string& what) {
  if (s.empty()) throw UsageError(what + ": empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw UsageError(what + ": cannot parse '" + s + "'");
  return v;
}

// Literal complex form "a+bi" / "a-bi"; plain "a" and pure-imaginary "bi"
// are accepted too. Decimal reals, exponents allowed.
Complex parse_complex(const std::string& text, const std::string& what) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw UsageError(what + ": empty complex literal");
  const bool has_i = s.back() == 'i';
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
      split = k;  // last sign wins: "1e-3+2i" splits at the '+'
  }
  if (!has_i) {
    if (split != std::string::npos && s.find('i') != std::string::npos)
      throw UsageError(what + ": cannot parse '" + text + "'");
    return {parse_double_strict(s, what), 0.0};
  }
  std::string re, im;
  if (split == std::string::npos) {
    re = "0";
    im = s.substr(0, s.size() - 1);
  } else {
    re = s.substr(0, split);
    im = s.substr(split, s.size() - split - 1);
  }
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_double_strict(re, what), parse_double_strict(im, what)};
}

// "start:stop:count" inclusive; a bare value means count = 1.
Range parse_range(const std::string& s, const std::string& what) {
  const auto c1 = s.find(':');
  if (c1 == std::string::npos) {
    const double v = parse_double_strict(s, what);
    return {v, v, 1};
  }
  const auto c2 = s.find(':', c1 + 1);
  if (c2 == std::string::npos) throw UsageError(what + ": expected start:stop:count");
  Range r;
  r.start = parse_double_strict(s.substr(0, c1), what);
  r.stop = parse_double_strict(s.substr(c1 + 1, c2 - c1 - 1), what);
  const double cnt = parse_double_strict(s.substr(c2 + 1), what);
  if (!(cnt >= 1.0) || cnt != std::floor(cnt))
    throw UsageError(what + ": count must be a positive integer");
  r.count = static_cast<int>(cnt);
  return r;
}

std::vector<int> int_values(const Range& r, const std::string& what) {
  std::vector<int> out;
  for (double v : r.values()) {
    if (std::abs(v - std::round(v)) > 1e-9)
      throw UsageError(what + ": grid value " + std::to_string(v) + " is not an integer");
    out.push_back(static_cast<int>(std::round(v)));
  }
  return out;
}

nlohmann::json params_json(const ClassParams& p) {
  nlohmann::json j;
  j["class"] = p.kind == ClassKind::Q ? "q" : "theta";
  j["tau_re"] = p.tau.real();
  j["tau_im"] = p.tau.imag();
  j["lambda"] = p.lambda;
  j["gamma"] = p.gamma;
  j["delta"] = p.delta;
  j["m"] = p.m;
  j[p.kind == ClassKind::Q ? "alpha" : "beta"] = p.order_param;
  return j;
}

nlohmann::json base_meta(const std::string& command) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["generator"] = std::string("mfold ") + kVersion;
  return meta;
}

// ---- bounds ----------------------------------------------------------------

struct BoundsConfig {
  std::string tau = "1";
  std::string lambda = "0";
  std::string gamma = "0";
  std::string delta = "0";
  std::string m = "1";
  std::string alpha;
  std::string beta;
  std::string format = "csv";
  std::string out;
};

int cmd_bounds(const BoundsConfig& cfg) {
  if (cfg.alpha.empty() == cfg.beta.empty())
    throw UsageError("bounds: give exactly one of --alpha or --beta");
  const bool is_q = !cfg.alpha.empty();
  const Complex tau = parse_complex(cfg.tau, "--tau");
  const auto lambdas = parse_range(cfg.lambda, "--lambda").values();
  const auto gammas = parse_range(cfg.gamma, "--gamma").values();
  const auto deltas = int_values(parse_range(cfg.delta, "--delta"), "--delta");
  const auto ms = int_values(parse_range(cfg.m, "--m"), "--m");
  const auto orders = parse_range(is_q ? cfg.alpha : cfg.beta, is_q ? "--alpha" : "--beta").values();

  Table t;
  t.columns = {"class", "m", "delta", "lambda", "gamma", "tau_re", "tau_im",
               is_q ? "alpha" : "beta"};
  if (is_q) {
    t.columns.insert(t.columns.end(), {"bound_am1", "bound_a2m1", "active_branch"});
  } else {
    t.columns.insert(t.columns.end(), {"branch_linear", "branch_sqrt", "branch_ratio",
                                       "active_branch", "bound_am1", "bound_a2m1", "alt_a2m1"});
  }

  std::vector<std::string> notes;
  for (int m : ms)
    for (int delta : deltas)
      for (double l : lambdas)
        for (double g : gammas)
          for (double ob : orders) {
            ClassParams p;
            try {
              p = is_q ? ClassParams::q(tau, l, g, delta, m, ob)
                       : ClassParams::theta(tau, l, g, delta, m, ob);
            } catch (const std::invalid_argument& e) {
              throw UsageError(std::string("bounds: ") + e.what());
            }
            const mfold::BoundReport r =
                is_q ? mfold::theorem1_bounds(p) : mfold::theorem2_bounds(p);
            if (notes.empty()) notes = r.notes;
            std::vector<Cell> row = {std::string(is_q ? "q" : "theta"),
                                     std::int64_t{m},
                                     std::int64_t{delta},
                                     l,
                                     g,
                                     tau.real(),
                                     tau.imag(),
                                     ob};
            if (is_q) {
              row.insert(row.end(), {r.bound_am1, r.bound_a2m1, r.active_branch});
            } else {
              row.insert(row.end(),
                         {*r.branch_linear, *r.branch_sqrt, *r.branch_linear / *r.branch_sqrt,
                          r.active_branch, r.bound_am1, r.bound_a2m1, *r.alt_a2m1});
            }
            t.rows.push_back(std::move(row));
          }

  nlohmann::json meta = base_meta("bounds");
  meta["class"] = is_q ? "q" : "theta";
  meta["tau_re"] = tau.real();
  meta["tau_im"] = tau.imag();
  meta["grid"] = {{"m", cfg.m},
                  {"delta", cfg.delta},
                  {"lambda", cfg.lambda},
                  {"gamma", cfg.gamma},
                  {is_q ? "alpha" : "beta", is_q ? cfg.alpha : cfg.beta}};
  meta["row_order"] = "m, delta, lambda, gamma, order parameter (last varies fastest)";
  meta["notes"] = notes;
  mfold::report::write_output(mfold::report::render(t, meta, cfg.format == "json"), cfg.out);
  return 0;
}

// ---- verify ----------------------------------------------------------------

struct VerifyConfig {
  mfold::VerifyOptions opt;
  bool verbose = false;
};

int cmd_verify(const VerifyConfig& cfg) {
  const auto suites = mfold::run_verify_suites(cfg.opt);
  bool all_pass = true;
  for (const auto& s : suites) {
    std::cout << s.name << ": " << s.cases << " cases, max deviation "
              << mfold::report::format_g17(s.max_deviation) << ", tolerance "
              << mfold::report::format_g17(s.tolerance) << ": " << (s.pass ? "PASS" : "FAIL")
              << "\n";
    if (cfg.verbose)
      for (const auto& n : s.notes) std::cout << "  note: " << n << "\n";
    all_pass = all_pass && s.pass;
  }
  std::cout << (all_pass ? "verify: all suites passed" : "verify: FAILURE") << "\n";
  return all_pass ? 0 : 1;
}

// ---- probe -----------------------------------------------------------------

struct PointConfig {
  std::string tau = "1";
  double lambda = 0.0;
  double gamma = 0.0;
  int delta = 0;
  int m = 1;
  std::string alpha;
  std::string beta;

  ClassParams params() const {
    if (alpha.empty() == beta.empty())
      throw UsageError("give exactly one of --alpha or --beta");
    const Complex t = parse_complex(tau, "--tau");
    try {
      if (!alpha.empty())
        return ClassParams::q(t, lambda, gamma, delta, m,
                              parse_double_strict(alpha, "--alpha"));
      return ClassParams::theta(t, lambda, gamma, delta, m,
                                parse_double_strict(beta, "--beta"));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

struct ProbeConfig {
  PointConfig point;
  std::string strategy = "random";
  int n = 100000;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out;
};

int cmd_probe(const ProbeConfig& cfg) {
  if (cfg.n < 1) throw UsageError("probe: -n must be >= 1");
  if (cfg.strategy != "grid" && cfg.strategy != "random")
    throw UsageError("probe: --strategy must be grid or random");
  const ClassParams p = cfg.point.params();
  const auto strat = cfg.strategy == "grid" ? mfold::SampleStrategy::Grid
                                            : mfold::SampleStrategy::Random;
  const mfold::CertificationReport rep = mfold::probe_bounds(p, strat, cfg.n, cfg.seed);

  Table t;
  t.columns = {"class",  "m",         "delta",   "lambda", "gamma",
               "tau_re", "tau_im",    p.kind == ClassKind::Q ? "alpha" : "beta",
               "strategy", "requested", "evaluated", "skipped", "seed",
               "bound_am1", "bound_a2m1"};
  std::vector<Cell> row = {std::string(p.kind == ClassKind::Q ? "q" : "theta"),
                           std::int64_t{p.m},
                           std::int64_t{p.delta},
                           p.lambda,
                           p.gamma,
                           p.tau.real(),
                           p.tau.imag(),
                           p.order_param,
                           cfg.strategy,
                           std::int64_t{rep.requested},
                           std::int64_t{rep.evaluated},
                           std::int64_t{rep.skipped},
                           std::int64_t{static_cast<std::int64_t>(rep.seed)},
                           rep.bounds.bound_am1,
                           rep.bounds.bound_a2m1};
  for (const auto& r : rep.ratios) {
    t.columns.push_back("ratio_" + r.name);
    t.columns.push_back("argmax_" + r.name);
    row.push_back(r.max_ratio);
    row.push_back(std::int64_t{r.argmax});
  }
  if (p.kind == ClassKind::Theta) {
    t.columns.push_back("route_residual_max");
    row.push_back(rep.route_residual_max);
  }
  t.columns.push_back("pass");
  row.push_back(std::string(rep.pass ? "true" : "false"));
  t.rows.push_back(std::move(row));

  nlohmann::json meta = base_meta("probe");
  meta["params"] = params_json(p);
  meta["strategy"] = cfg.strategy;
  meta["n"] = cfg.n;
  meta["seed"] = cfg.seed;
  meta["slack"] = rep.slack;
  meta["notes"] = rep.notes;
  mfold::report::write_output(mfold::report::render(t, meta, cfg.format == "json"), cfg.out);
  return rep.pass ? 0 : 1;
}

// ---- membership ------------------------------------------------------------

struct MembershipConfig {
  PointConfig point;
  std::vector<std::string> coeffs;
  std::vector<double> radii;
  int angles = 256;
  std::string format = "csv";
  std::string out;
};

int cmd_membership(const MembershipConfig& cfg) {
  const ClassParams p = cfg.point.params();
  std::vector<Complex> coeffs;
  for (const auto& s : cfg.coeffs) coeffs.push_back(parse_complex(s, "--a"));
  while (coeffs.size() < 2) coeffs.push_back(Complex{});  // need a_{m+1}, a_{2m+1}
  const mfold::MFoldFn f(p.m, coeffs);

  std::vector<double> radii = cfg.radii;
  if (radii.empty()) radii = {0.5, 0.9, 0.99};
  if (cfg.angles < 1) throw UsageError("membership: --angles must be >= 1");
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0)) throw UsageError("membership: radii must lie in (0,1)");

  const mfold::MembershipReport rep = mfold::membership_margin(f, p, radii, cfg.angles);

  Table t;
  t.columns = {"radius", "forward_margin", "inverse_margin"};
  for (const auto& rm : rep.per_radius)
    t.rows.push_back({rm.radius, rm.forward, rm.inverse});

  nlohmann::json meta = base_meta("membership");
  meta["params"] = params_json(p);
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coeffs) cs.push_back({c.real(), c.imag()});
  meta["coefficients"] = cs;
  meta["angles_per_sector"] = cfg.angles;
  meta["forward_margin"] = rep.forward_margin;
  meta["inverse_margin"] = rep.inverse_margin;
  meta["notes"] = rep.notes;
  mfold::report::write_output(mfold::report::render(t, meta, cfg.format == "json"), cfg.out);
  return 0;
}

// ---- exemplars -------------------------------------------------------------

struct ExemplarsConfig {
  std::vector<int> ms;
  int K = 4;
  std::string out;
};

int cmd_exemplars(const ExemplarsConfig& cfg) {
  std::vector<int> ms = cfg.ms;
  if (ms.empty()) ms = {1, 2, 3};
  if (cfg.K < 3) throw UsageError("exemplars: --index must be >= 3");

  nlohmann::json doc;
  doc["meta"] = base_meta("exemplars");
  doc["meta"]["index"] = cfg.K;

  nlohmann::json pairs = nlohmann::json::array();
  for (int m : ms) {
    if (m < 1) throw UsageError("exemplars: --m must be >= 1");
    for (auto name :
         {mfold::ExemplarName::KoebeLike, mfold::ExemplarName::Log, mfold::ExemplarName::Atanh}) {
      const mfold::ExemplarPair pair = mfold::build_exemplar(name, m, cfg.K);
      nlohmann::json j;
      j["name"] = pair.name;
      j["m"] = pair.m;
      j["order"] = pair.order;
      j["composition_residual"] = pair.composition_residual;
      j["pairing_verified"] = pair.pairing_verified;
      nlohmann::json fc = nlohmann::json::array(), ic = nlohmann::json::array();
      for (const auto& c : pair.forward.coeffs()) fc.push_back({c.real(), c.imag()});
      for (const auto& c : pair.inverse.coeffs()) ic.push_back({c.real(), c.imag()});
      j["forward_coeffs"] = fc;
      j["inverse_coeffs"] = ic;
      pairs.push_back(std::move(j));
    }
  }
  doc["pairs"] = pairs;

  nlohmann::json audit = nlohmann::json::array();
  for (const auto& row : mfold::audit_1fold_pairings()) {
    audit.push_back({{"forward", row.forward_name},
                     {"listed_inverse", row.listed_inverse},
                     {"listed_residual", row.listed_residual},
                     {"best_inverse", row.best_inverse},
                     {"best_residual", row.best_residual}});
  }
  doc["audit_1fold"] = audit;

  mfold::report::write_output(doc.dump(2) + "\n", cfg.out);
  return 0;
}

// ---- reduce ----------------------------------------------------------------

struct ReduceConfig {
  int points = 100;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
};

int cmd_reduce(const ReduceConfig& cfg) {
  if (cfg.points < 1) throw UsageError("reduce: --points must be >= 1");
  const auto rows = mfold::reduction_matrix(cfg.points, cfg.seed);
  constexpr double tol = 1e-12;

  Table t;
  t.columns = {"id", "parent", "substitution", "points", "dev_parent", "dev_theorem",
               "tolerance", "pass"};
  bool all_pass = true;
  for (const auto& r : rows) {
    const bool ok = r.dev_parent <= tol && r.dev_theorem <= tol;
    all_pass = all_pass && ok;
    t.rows.push_back({std::int64_t{r.id}, r.parent, r.substitution, std::int64_t{r.points},
                      r.dev_parent, r.dev_theorem, tol, std::string(ok ? "true" : "false")});
  }

  nlohmann::json meta = base_meta("reduce");
  meta["points_per_corollary"] = cfg.points;
  meta["seed"] = cfg.seed;
  mfold::report::write_output(mfold::report::render(t, meta, cfg.format == "json"), cfg.out);
  return all_pass ? 0 : 1;
}

void add_format_out(CLI::App* sub, std::string& format, std::string& out) {
  sub->add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", out,
                  "Output path (stdout if omitted; relative paths resolve under MFOLD_OUT_DIR)");
}

void add_point_options(CLI::App* sub, PointConfig& pt) {
  sub->add_option("--tau", pt.tau, "Complex tau as 'a+bi' (nonzero)");
  sub->add_option("--lambda", pt.lambda, "lambda >= 0");
  sub->add_option("--gamma", pt.gamma, "gamma in [0,1]");
  sub->add_option("--delta", pt.delta, "Operator order, nonnegative integer");
  sub->add_option("--m", pt.m, "Symmetry order, >= 1");
  sub->add_option("--alpha", pt.alpha, "Q-class angle fraction in (0,1]");
  sub->add_option("--beta", pt.beta, "Theta-class order in [0,1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient-bound toolkit for m-fold symmetric bi-univalent function classes"};
  app.require_subcommand(1);

  BoundsConfig bounds_cfg;
  auto* sub_bounds = app.add_subcommand("bounds", "Evaluate the closed-form bounds over a grid");
  sub_bounds->add_option("--tau", bounds_cfg.tau, "Complex tau as 'a+bi'");
  sub_bounds->add_option("--lambda", bounds_cfg.lambda, "Value or start:stop:count");
  sub_bounds->add_option("--gamma", bounds_cfg.gamma, "Value or start:stop:count");
  sub_bounds->add_option("--delta", bounds_cfg.delta, "Integer value or range");
  sub_bounds->add_option("--m", bounds_cfg.m, "Integer value or range");
  sub_bounds->add_option("--alpha", bounds_cfg.alpha, "Q-class range");
  sub_bounds->add_option("--beta", bounds_cfg.beta, "Theta-class range");
  add_format_out(sub_bounds, bounds_cfg.format, bounds_cfg.out);

  VerifyConfig verify_cfg;
  auto* sub_verify = app.add_subcommand("verify", "Run the dual-route identity suites");
  sub_verify->add_option("--points-inversion", verify_cfg.opt.inversion_points, "Suite size");
  sub_verify->add_option("--points-functional", verify_cfg.opt.functional_points, "Suite size");
  sub_verify->add_option("--points-bridge", verify_cfg.opt.bridge_points, "Suite size");
  sub_verify->add_option("--points-reduction", verify_cfg.opt.reduction_points,
                         "Grid points per specialization");
  sub_verify->add_option("--seed", verify_cfg.opt.seed, "Random draw seed");
  sub_verify->add_flag("--verbose", verify_cfg.verbose, "Print suite notes");
  sub_verify->add_flag("--inject-fault", verify_cfg.opt.inject_fault)->group("");

  ProbeConfig probe_cfg;
  auto* sub_probe = app.add_subcommand("probe", "Certify the bounds against sampled reconstructions");
  add_point_options(sub_probe, probe_cfg.point);
  sub_probe->add_option("--strategy", probe_cfg.strategy, "grid or random");
  sub_probe->add_option("-n,--n", probe_cfg.n, "Sample count");
  sub_probe->add_option("--seed", probe_cfg.seed, "Stream seed");
  add_format_out(sub_probe, probe_cfg.format, probe_cfg.out);

  MembershipConfig member_cfg;
  auto* sub_member = app.add_subcommand("membership", "Sampled class-membership margins");
  add_point_options(sub_member, member_cfg.point);
  sub_member->add_option("--a", member_cfg.coeffs,
                         "Symmetric coefficients a_{m+1}, a_{2m+1}, ... as 'a+bi' (repeatable)");
  sub_member->add_option("--r", member_cfg.radii, "Sample radii in (0,1) (repeatable)");
  sub_member->add_option("--angles", member_cfg.angles, "Angles per symmetry sector");
  add_format_out(sub_member, member_cfg.format, member_cfg.out);

  ExemplarsConfig ex_cfg;
  auto* sub_ex = app.add_subcommand("exemplars", "Dump the exemplar catalog with pairing audit (JSON)");
  sub_ex->add_option("--m", ex_cfg.ms, "Symmetry orders (repeatable; default 1 2 3)");
  sub_ex->add_option("--index", ex_cfg.K, "Symmetric truncation index K (order mK+1)");
  sub_ex->add_option("--out", ex_cfg.out, "Output path (stdout if omitted)");

  ReduceConfig reduce_cfg;
  auto* sub_reduce = app.add_subcommand("reduce", "Check every specialization against its parent");
  sub_reduce->add_option("--points", reduce_cfg.points, "Grid points per specialization");
  sub_reduce->add_option("--seed", reduce_cfg.seed, "Grid seed");
  add_format_out(sub_reduce, reduce_cfg.format, reduce_cfg.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sub_bounds->parsed()) return cmd_bounds(bounds_cfg);
    if (sub_verify->parsed()) return cmd_verify(verify_cfg);
    if (sub_probe->parsed()) return cmd_probe(probe_cfg);
    if (sub_member->parsed()) return cmd_membership(member_cfg);
    if (sub_ex->parsed()) return cmd_exemplars(ex_cfg);
    if (sub_reduce->parsed()) return cmd_reduce(reduce_cfg);
    std::cerr << "mfold: no subcommand\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "mfold: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "mfold: " << e.what() << "\n";
    return 1;
  }
}
