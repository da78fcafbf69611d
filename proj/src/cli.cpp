// Copyright 2026 The ckw Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ckw/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "ckw/builtins.hpp"
#include "ckw/error.hpp"
#include "ckw/extension.hpp"
#include "ckw/io.hpp"
#include "ckw/jackson.hpp"
#include "ckw/markov.hpp"
#include "ckw/modulus.hpp"
#include "ckw/predual.hpp"
#include "ckw/whitney.hpp"

namespace ckw::cli {

namespace {

using io::Json;
using io::Number;

struct Common {
  std::string out = "-";
  std::uint64_t seed = 0;
  bool serial = false;
  Execution exec() const { return serial ? Execution::kSerial : Execution::kParallel; }
};

Json MultiIndexJson(const MultiIndex& a) {
  return std::vector<int>(a.entries().begin(), a.entries().end());
}

Json Report(const std::string& name, Json config, Json results, Json provenance, const Common& c) {
  config["seed"] = c.seed;
  config["execution"] = c.serial ? "serial" : "parallel";
  Json r;
  r["subcommand"] = name;
  r["config"] = std::move(config);
  r["results"] = std::move(results);
  r["provenance"] = std::move(provenance);
  r["version"] = kVersion;
  return r;
}

void Emit(const Json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

Json LpJson(const lp::Solution& s) {
  Json j;
  j["status"] = lp::StatusName(s.status);
  j["iterations"] = s.iterations;
  j["primal_residual"] = Number(s.primal_residual);
  j["dual_residual"] = Number(s.dual_residual);
  j["duality_gap"] = Number(s.duality_gap);
  j["complementarity"] = Number(s.complementarity);
  return j;
}

Json NormJson(const NormEstimate& e) {
  Json j;
  j["sup_part"] = Number(e.sup_part);
  j["seminorm_part"] = Number(e.seminorm_part);
  j["norm"] = Number(e.norm);
  j["lower_bound"] = e.lower_bound;
  return j;
}

// ---- validate-omega

Json ValidateOmega(const std::string& omega_arg, const std::string& grid_arg, const Common& c) {
  const Modulus omega = io::ModulusFromJson(io::LoadJsonArgument(omega_arg));
  std::vector<double> grid;
  if (grid_arg == "default") {
    grid = DefaultValidationGrid();
  } else {
    const Json g = io::LoadJsonArgument(grid_arg);
    if (!g.is_array()) throw InputError("grid must be an array of numbers");
    for (const Json& v : g) {
      if (!v.is_number()) throw InputError("grid must be an array of numbers");
      grid.push_back(v.get<double>());
    }
  }
  const ValidationReport rep = Validate(omega, grid);
  Json violations = Json::array();
  for (const AxiomViolation& v : rep.violations) {
    violations.push_back({{"axiom", AxiomName(v.axiom)},
                          {"t_i", Number(v.t_i)},
                          {"t_j", Number(v.t_j)},
                          {"value_i", Number(v.value_i)},
                          {"value_j", Number(v.value_j)}});
  }
  Json results;
  results["ok"] = rep.ok();
  results["violations"] = violations;
  results["vanishing_threshold"] = Number(rep.vanishing_threshold);
  Json config{{"omega", io::ModulusToJson(omega)}, {"grid", grid_arg}};
  Json prov{{"grid_size", grid.size()},
            {"grid_min", grid.front()},
            {"grid_max", grid.back()},
            {"relative_tolerance", kAxiomRelTol},
            {"vanishing_epsilon", Number(rep.vanishing_epsilon)}};
  return Report("validate-omega", config, results, prov, c);
}

// ---- norm

Json NormCommand(const std::string& field_arg, const std::string& omega_arg, std::optional<int> k,
                 const Common& c) {
  const WhitneyField field = io::LoadField(field_arg);
  if (k && *k != field.order()) throw InputError("--k does not match the field order");
  NormContext ctx{field.order(), field.dim(), io::ModulusFromJson(io::LoadJsonArgument(omega_arg))};
  const LambdaReport rep = WhitneyLambda(field, ctx, c.exec());
  Json results;
  results["lambda"] = Number(rep.lambda);
  results["lambda_sup"] = Number(rep.lambda_sup);
  results["lambda_osc"] = Number(rep.lambda_osc);
  results["exact_trace_norm"] = field.order() == 0;
  results["sup_witness"] = {{"point", rep.sup_point}, {"alpha", MultiIndexJson(rep.sup_alpha)}};
  if (rep.has_pair) {
    results["osc_witness"] = {{"i", rep.osc_i},
                              {"j", rep.osc_j},
                              {"z", rep.osc_z == 0 ? "x_i" : "x_j"},
                              {"alpha", MultiIndexJson(rep.osc_alpha)}};
  }
  Json config{{"field", field_arg}, {"k", ctx.k}, {"n", ctx.n}, {"omega", io::ModulusToJson(ctx.omega)}};
  Json prov{{"points", field.size()},
            {"pairs", field.size() * (field.size() - 1) / 2},
            {"min_pairwise_distance", Number(field.size() > 1 ? field.MinPairwiseDistance() : INFINITY)}};
  return Report("norm", config, results, prov, c);
}

// ---- extend

Json ExtendCommand(const std::string& input, const std::string& queries_arg,
                   const std::string& method, const std::string& omega_arg,
                   const std::string& mode_arg, double tail_scale, const Common& c) {
  const WhitneyField field = io::LoadField(input);
  const std::vector<Point> queries = io::PointsFromJson(io::LoadJsonArgument(queries_arg));
  const Modulus omega = io::ModulusFromJson(io::LoadJsonArgument(omega_arg));
  Json results;
  Json config{{"input", input}, {"queries", queries_arg}, {"method", method},
              {"omega", io::ModulusToJson(omega)}};
  Json prov{{"points", field.size()}, {"queries", queries.size()}};
  if (method == "mcshane") {
    McShaneMode mode = McShaneMode::kMin;
    if (mode_arg == "max") {
      mode = McShaneMode::kMax;
    } else if (mode_arg == "average") {
      mode = McShaneMode::kAverage;
    } else if (mode_arg != "min") {
      throw InputError("--mode must be min, max or average");
    }
    config["mode"] = mode_arg;
    for (const Point& q : queries) {
      if (static_cast<int>(q.size()) != field.dim()) throw InputError("query point has wrong dimension");
    }
    const McShaneExtension ext(field, omega, mode, c.exec());
    Json values = Json::array();
    for (double v : ext.EvaluateBatch(queries, c.exec())) values.push_back(Number(v));
    results["values"] = values;
    results["lambda"] = Number(ext.lambda());
    results["sup_bound"] = Number(ext.sup_bound());
    results["trace_norm"] = Number(ext.trace_norm());
    results["depth"] = "NOT_LINEAR";
  } else if (method == "hermite1d") {
    config["tail_scale"] = tail_scale;
    const HermiteExtension1D ext(field, tail_scale);
    Json values = Json::array(), depth = Json::array();
    for (const Point& q : queries) {
      if (q.size() != 1) throw InputError("hermite1d queries are one-dimensional");
      Json jet = Json::array();
      for (double v : ext.Evaluate(q[0])) jet.push_back(Number(v));
      values.push_back(jet);
      const DepthRecord rec = DepthAudit(ext, q[0]);
      Json active = Json::array();
      for (const DepthEntry& e : rec.active) {
        active.push_back({{"knot", e.knot}, {"point", e.point}, {"weights", e.weights}});
      }
      depth.push_back({{"depth", rec.depth},
                       {"active", active},
                       {"reproduces_constants", rec.reproduces_constants}});
    }
    results["values"] = values;
    results["depth"] = depth;
    results["max_depth_bound"] = 2 * (field.order() + 1);
  } else {
    throw InputError("--method must be mcshane or hermite1d");
  }
  return Report("extend", config, results, prov, c);
}

// ---- jackson

SmoothFunction LoadFunction(const std::string& spec, int n) {
  if (spec.rfind("builtin:", 0) == 0) return BuiltinFunction(spec.substr(8), n);
  if (spec.rfind("table:", 0) == 0) {
    if (n != 1) throw InputError("table functions are one-dimensional");
    const Json t = io::LoadJsonArgument(spec.substr(6));
    if (!t.is_object() || !t.contains("x") || !t.contains("f")) {
      throw InputError("table function needs {\"x\": [...], \"f\": [...]}");
    }
    return TableFunction1D(t.at("x").get<std::vector<double>>(), t.at("f").get<std::vector<double>>());
  }
  throw InputError("--f must be builtin:<name> or table:<file>");
}

Json JacksonCommand(const std::string& f_spec, int N, std::optional<int> ell_opt, int k, int n,
                    const std::string& omega_arg, int grid_size, const Common& c) {
  const SmoothFunction f = LoadFunction(f_spec, n);
  const int ell = ell_opt.value_or(N);
  NormContext ctx{k, n, io::ModulusFromJson(io::LoadJsonArgument(omega_arg))};
  ctx.Check();
  if (n > 3) throw InputError("jackson supports n <= 3");
  if (grid_size <= 0) grid_size = n == 1 ? 33 : (n == 2 ? 9 : 5);
  if (grid_size < 2) throw InputError("--grid-size must be >= 2");
  // Uniform grid over the support cube [-2l, 2l]^n of f_l.
  const Point center(static_cast<std::size_t>(n), 0.0);
  const std::vector<Point> grid = CubeGrid(center, 2.0 * ell, grid_size);

  const JacksonKernel& kernel = KernelFor(N);
  const ApproxReport rep = ErrorReport(f, ell, N, ctx, grid, c.exec());

  Json results;
  results["kernel"] = {{"N", N}, {"reduced_degree", kernel.reduced_degree()}, {"gamma", kernel.gamma()}};
  results["norm_f"] = NormJson(rep.norm_f);
  results["norm_f_ell"] = NormJson(rep.norm_f_ell);
  results["norm_smoothed"] = NormJson(rep.norm_smoothed);
  results["norm_error"] = NormJson(rep.norm_error);
  results["empirical_C_ell"] = Number(rep.empirical_C_ell);
  results["empirical_smoothed_ratio"] = Number(rep.empirical_smoothed_ratio);
  results["empirical_c_N"] = Number(rep.empirical_c_N);
  results["empirical_c_N_times_N"] = Number(rep.empirical_c_N * N);
  results["rate_shape"] = Number(rep.rate_shape);
  results["empirical_fitted_c"] = Number(rep.empirical_fitted_c);
  Json errs = Json::array();
  for (const DerivativeError& e : rep.derivative_errors) {
    errs.push_back({{"alpha", MultiIndexJson(e.alpha)}, {"empirical_sup_error", Number(e.empirical_sup_error)}});
  }
  results["derivative_errors"] = errs;
  results["rescaled_operator"] = {{"empirical_cutoff_constant", Number(rep.empirical_cutoff_constant)},
                                  {"limit_reciprocal_omega", Number(rep.limit_reciprocal_omega)},
                                  {"numerator", Number(rep.rescale_numerator)},
                                  {"empirical_factor", Number(rep.rescale_factor)}};
  Json config{{"f", f_spec}, {"N", N}, {"ell", ell}, {"k", k}, {"n", n},
              {"omega", io::ModulusToJson(ctx.omega)}, {"grid_size", grid_size}};
  const SmoothingOptions q = SmoothingOptions::DefaultFor(n);
  Json prov{{"grid", {{"kind", "uniform cube"}, {"half_width", 2.0 * ell}, {"points_per_axis", grid_size},
                      {"points", grid.size()}}},
            {"pairs", rep.pair_count},
            {"period", rep.period},
            {"scale", rep.scale},
            {"quadrature", {{"rule", "adaptive Gauss-Legendre"}, {"nodes", q.quadrature.nodes},
                            {"abs_tol", q.quadrature.abs_tol}, {"rel_tol", q.quadrature.rel_tol}}},
            {"omega_limit_probe", rep.omega_limit_probe},
            {"cutoff_constant_samples", 8001}};
  return Report("jackson", config, results, prov, c);
}

// ---- predual-norm

Json PredualCommand(const std::string& atoms_arg, const std::string& omega_arg, int k,
                    std::optional<int> n_opt, const Common& c) {
  const Json atoms = io::LoadJsonArgument(atoms_arg);
  int n = 1;
  if (n_opt) {
    n = *n_opt;
  } else {
    const Json& list = atoms.is_object() && atoms.contains("atoms") ? atoms.at("atoms") : atoms;
    if (list.is_array() && !list.empty() && list[0].is_object() && list[0].contains("x") &&
        list[0].at("x").is_array()) {
      n = static_cast<int>(list[0].at("x").size());
    }
  }
  NormContext ctx{k, n, io::ModulusFromJson(io::LoadJsonArgument(omega_arg))};
  const AtomicFunctional g = io::AtomsFromJson(atoms, ctx);
  Json results;
  Json prov;
  prov["atoms_after_merge"] = g.size();
  prov["support_points"] = g.Support().size();
  if (k == 0) {
    const PredualNormResult r = PredualNormK0(g, ctx.omega);
    results["norm"] = Number(r.value);
    results["exact"] = true;
    results["support"] = io::PointsToJson(r.support);
    results["optimal_u"] = r.optimal_u;
    prov["lp"] = LpJson(r.lp);
  } else {
    const PredualBracket b = PredualNormBracket(g);
    results["lo"] = Number(b.lo);
    results["hi"] = Number(b.hi);
    results["exact"] = b.exact;
    results["support"] = io::PointsToJson(b.support);
    prov["lo_lp"] = LpJson(b.lo_lp);
    prov["hi_lp"] = LpJson(b.hi_lp);
  }
  Json config{{"atoms", atoms_arg}, {"k", k}, {"n", n}, {"omega", io::ModulusToJson(ctx.omega)}};
  return Report("predual-norm", config, results, prov, c);
}

// ---- finiteness

Json FinitenessCommand(const std::string& field_arg, int d, std::optional<int> k,
                       const std::string& omega_arg, const Common& c) {
  const WhitneyField field = io::LoadField(field_arg);
  if (k && *k != field.order()) throw InputError("--k does not match the field order");
  NormContext ctx{field.order(), field.dim(), io::ModulusFromJson(io::LoadJsonArgument(omega_arg))};
  const FinitenessReport r = FinitenessGap(field, d, ctx, c.exec());
  Json results;
  results["full"] = Number(r.full);
  results["subset_sup"] = Number(r.subset_sup);
  results["ratio"] = Number(r.ratio);
  results["witness"] = r.witness;
  Json config{{"field", field_arg}, {"d", d}, {"k", ctx.k}, {"n", ctx.n},
              {"omega", io::ModulusToJson(ctx.omega)}};
  Json prov{{"points", field.size()},
            {"subsets_total", r.subsets_total},
            {"subsets_examined", r.subsets_examined},
            {"early_exit", r.early_exit},
            {"subset_guard", kMaxSubsets},
            {"norm", ctx.k == 0 ? "exact trace norm max(sup, omega-seminorm)"
                                : "Taylor-compatibility constant lambda"}};
  return Report("finiteness", config, results, prov, c);
}

// ---- markov

Json MarkovCommand(const std::string& center_arg, const std::string& set_arg, int k,
                   const std::string& radii_arg, const MarkovOptions& opts, const Common& c) {
  const Point center = io::PointFromJson(io::LoadJsonArgument(center_arg));
  SetSampler sampler;
  if (set_arg.rfind("builtin:", 0) == 0) {
    sampler = BuiltinSampler(set_arg.substr(8));
  } else {
    sampler = FiniteSetSampler(io::PointsFromJson(io::LoadJsonArgument(set_arg)));
  }
  std::vector<double> radii;
  if (radii_arg.empty() || radii_arg == "default") {
    radii = DefaultRadii();
  } else {
    const Json r = io::LoadJsonArgument(radii_arg);
    if (!r.is_array()) throw InputError("radii must be an array of numbers");
    for (const Json& v : r) {
      if (!v.is_number()) throw InputError("radii must be an array of numbers");
      radii.push_back(v.get<double>());
    }
  }
  const MarkovClassification cls = ClassifyWeakMarkov(center, sampler, k, radii, opts, c.exec());
  Json per = Json::array();
  for (std::size_t i = 0; i < cls.ratios.size(); ++i) {
    const MarkovRatio& r = cls.ratios[i];
    Json e{{"radius", cls.used_radii[i]},
           {"ratio", r.capped ? Json("CAPPED") : Number(r.value)},
           {"argmax", r.argmax},
           {"grid_size", r.grid_size},
           {"lp_count", r.lp_count}};
    if (opts.refine) {
      e["refined_ratio"] = r.refined_capped ? Json("CAPPED") : Number(r.refined_value);
      e["refinement_delta"] = Number(r.refinement_delta);
    }
    per.push_back(e);
  }
  Json results;
  results["verdict"] = VerdictName(cls.verdict);
  results["min_ratio"] = std::isfinite(cls.min_ratio) ? Number(cls.min_ratio) : Json("CAPPED");
  results["ratios"] = per;
  results["warnings"] = cls.warnings;
  Json config{{"center", center}, {"set", set_arg}, {"k", k}, {"radii", radii},
              {"resolution", opts.resolution}, {"cap", opts.cap}, {"threshold", opts.threshold},
              {"refine", opts.refine}};
  Json prov{{"grid", "uniform cube grid, resolution points per axis"},
            {"objective_points", "grid plus set sample"},
            {"verdict_rule", "WEAK_MARKOV if min ratio over radii <= threshold; one-sided"}};
  return Report("markov", config, results, prov, c);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for C^{k,omega} trace norms, extensions, Jackson approximation, "
               "predual norms and weak Markov ratios"};
  app.name("ckw");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Report path, - for stdout")->capture_default_str();
    sub->add_option("--seed", common.seed, "Seed recorded in the report")->capture_default_str();
    sub->add_flag("--serial", common.serial, "Run kernels serially");
  };
  const std::string linear = R"({"kind":"linear"})";

  std::string omega_arg = linear, grid_arg = "default";
  auto* v_cmd = app.add_subcommand("validate-omega", "Check the modulus axioms on a grid");
  v_cmd->add_option("--omega", omega_arg, "Modulus JSON (inline or file)")->required();
  v_cmd->add_option("--grid", grid_arg, "default or a JSON array of t values")->capture_default_str();
  add_common(v_cmd);

  std::string field_arg;
  std::optional<int> k_opt;
  auto* n_cmd = app.add_subcommand("norm", "Trace norm constants of a Whitney field");
  n_cmd->add_option("--field", field_arg, "Field JSON or k=0 CSV")->required();
  n_cmd->add_option("--omega", omega_arg, "Modulus JSON");
  n_cmd->add_option("--k", k_opt, "Expected jet order");
  add_common(n_cmd);

  std::string queries_arg, method = "mcshane", mode_arg = "min";
  double tail_scale = 1.0;
  auto* e_cmd = app.add_subcommand("extend", "Evaluate an extension of a field");
  e_cmd->add_option("--input", field_arg, "Field JSON or k=0 CSV")->required();
  e_cmd->add_option("--queries", queries_arg, "Query points JSON")->required();
  e_cmd->add_option("--method", method, "mcshane or hermite1d")->capture_default_str();
  e_cmd->add_option("--omega", omega_arg, "Modulus JSON");
  e_cmd->add_option("--mode", mode_arg, "McShane mode: min, max, average")->capture_default_str();
  e_cmd->add_option("--tail-scale", tail_scale, "Hermite tail cutoff scale")->capture_default_str();
  add_common(e_cmd);

  std::string f_spec;
  int N = 0, k = 0, n = 1, grid_size = 0;
  std::optional<int> ell_opt;
  auto* j_cmd = app.add_subcommand("jackson", "Jackson smoothing error report");
  j_cmd->add_option("--f", f_spec, "builtin:<name> or table:<file>")->required();
  j_cmd->add_option("--N", N, "Kernel degree parameter")->required();
  j_cmd->add_option("--ell", ell_opt, "Cutoff scale (default N)");
  j_cmd->add_option("--k", k, "Derivative order")->capture_default_str();
  j_cmd->add_option("--n", n, "Dimension for builtins")->capture_default_str();
  j_cmd->add_option("--omega", omega_arg, "Modulus JSON");
  j_cmd->add_option("--grid-size", grid_size, "Grid points per axis (0: automatic)");
  j_cmd->add_option("--report", common.out, "Alias of --out");
  add_common(j_cmd);

  std::string atoms_arg;
  std::optional<int> n_opt;
  auto* p_cmd = app.add_subcommand("predual-norm", "Norm of an atomic functional");
  p_cmd->add_option("--atoms", atoms_arg, "Atoms JSON")->required();
  p_cmd->add_option("--omega", omega_arg, "Modulus JSON");
  p_cmd->add_option("--k", k, "Order k")->capture_default_str();
  p_cmd->add_option("--n", n_opt, "Dimension (default: from the first atom)");
  add_common(p_cmd);

  int d = 2;
  auto* f_cmd = app.add_subcommand("finiteness", "Finiteness-principle gap on subsets");
  f_cmd->add_option("--field", field_arg, "Field JSON or k=0 CSV")->required();
  f_cmd->add_option("--d", d, "Subset cardinality")->capture_default_str();
  f_cmd->add_option("--k", k_opt, "Expected jet order");
  f_cmd->add_option("--omega", omega_arg, "Modulus JSON");
  add_common(f_cmd);

  std::string center_arg, set_arg, radii_arg = "default";
  MarkovOptions mopts;
  int mk = 1;
  auto* m_cmd = app.add_subcommand("markov", "Weak k-Markov ratios over a radii ladder");
  m_cmd->add_option("--center", center_arg, "Center point JSON")->required();
  m_cmd->add_option("--set", set_arg, "Set points JSON or builtin:<shape>")->required();
  m_cmd->add_option("--k", mk, "Polynomial degree")->capture_default_str();
  m_cmd->add_option("--radii", radii_arg, "Radii JSON array or default")->capture_default_str();
  m_cmd->add_option("--resolution", mopts.resolution, "Grid points per axis")->capture_default_str();
  m_cmd->add_option("--cap", mopts.cap, "Ratio cap")->capture_default_str();
  m_cmd->add_option("--threshold", mopts.threshold, "Verdict threshold")->capture_default_str();
  m_cmd->add_flag("--refine", mopts.refine, "Also solve on the refined grid");
  add_common(m_cmd);

  std::vector<const char*> argv{"ckw"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    Json report;
    if (*v_cmd) {
      report = ValidateOmega(omega_arg, grid_arg, common);
    } else if (*n_cmd) {
      report = NormCommand(field_arg, omega_arg, k_opt, common);
    } else if (*e_cmd) {
      report = ExtendCommand(field_arg, queries_arg, method, omega_arg, mode_arg, tail_scale, common);
    } else if (*j_cmd) {
      report = JacksonCommand(f_spec, N, ell_opt, k, n, omega_arg, grid_size, common);
    } else if (*p_cmd) {
      report = PredualCommand(atoms_arg, omega_arg, k, n_opt, common);
    } else if (*f_cmd) {
      report = FinitenessCommand(field_arg, d, k_opt, omega_arg, common);
    } else if (*m_cmd) {
      report = MarkovCommand(center_arg, set_arg, mk, radii_arg, mopts, common);
    }
    Emit(report, common.out, out);
    return 0;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return 2;
  }
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return Run(args, out, err);
}

}  // namespace ckw::cli
