// lam: lambda^(alpha) solver, bound verifier and extremal sequence runner.
//
// Every subcommand resolves its options into a flat JSON parameter object,
// runs through a single dispatcher, and can dump a manifest (--manifest) that
// `lam replay` feeds back through the same dispatcher. Exit codes: 0 ok,
// 1 input/config error, 2 non-convergence, 3 invariant violation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lamalpha/bounds.hpp"
#include "lamalpha/enumerate.hpp"
#include "lamalpha/io.hpp"
#include "lamalpha/oracle.hpp"
#include "lamalpha/sequences.hpp"
#include "lamalpha/solver.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool is_file_input(const std::string& spec) {
  return spec.find(':') == std::string::npos && spec != "fano";
}

json digest_inputs(const std::vector<std::string>& specs) {
  json out = json::object();
  for (const auto& s : specs) {
    if (!is_file_input(s)) continue;
    std::ifstream in(s, std::ios::binary);
    if (!in) continue;
    std::ostringstream buf;
    buf << in.rdbuf();
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a(buf.str())));
    out[s] = hex;
  }
  return out;
}

lam::SolverConfig solver_from(const json& p) {
  lam::SolverConfig cfg;
  cfg.tolerance = p.value("tol", cfg.tolerance);
  cfg.num_starts = p.value("starts", cfg.num_starts);
  cfg.max_iterations = p.value("max_iter", cfg.max_iterations);
  cfg.rng_seed = p.value("seed", std::uint64_t{1});
  return cfg;
}

json witness_json(const lam::Vector& x) {
  json arr = json::array();
  for (int i = 0; i < x.size(); ++i) arr.push_back(x[i]);
  return arr;
}

// ---------------------------------------------------------------- lambda ---

int cmd_lambda(const json& p, std::string& out) {
  lam::Hypergraph g = lam::load_graph(p.at("input"));
  double alpha = p.at("alpha");
  bool want_min = p.value("min", false);
  if (alpha < 1) {
    out = "error: alpha must be >= 1\n";
    return 1;
  }
  if (want_min && alpha <= 1) {
    out = "error: --min requires alpha > 1\n";
    return 1;
  }
  auto cfg = solver_from(p);
  lam::SpectralResult res =
      want_min ? lam::lambda_min_alpha(g, alpha, cfg)
               : (alpha == 1.0 ? lam::lagrangian(g, cfg)
                               : lam::lambda_alpha(g, alpha, cfg));
  std::string format = p.value("format", "text");
  if (format == "json") {
    json doc{{"format", "lamalpha-lambda-v1"},
             {"input", p.at("input")},
             {"alpha", alpha},
             {"min", want_min},
             {"value", res.value},
             {"residual", res.residual},
             {"iterations", res.iterations},
             {"converged", res.converged},
             {"starts_used", res.starts_used},
             {"witness", witness_json(res.witness)}};
    out = doc.dump(2) + "\n";
  } else if (format == "csv") {
    out = "# lamalpha lambda csv v1\n";
    out += "value,alpha,residual,iterations,converged,starts_used\n";
    out += fmt17(res.value) + "," + fmt17(alpha) + "," + fmt17(res.residual) +
           "," + std::to_string(res.iterations) + "," +
           (res.converged ? "1" : "0") + "," +
           std::to_string(res.starts_used) + "\n";
  } else {
    std::ostringstream s;
    s << (want_min ? "lambda_min" : "lambda") << "^(" << alpha
      << ") = " << fmt17(res.value) << "\n"
      << "residual = " << fmt17(res.residual) << ", iterations = "
      << res.iterations << ", converged = " << (res.converged ? "yes" : "no")
      << "\nwitness =";
    for (int i = 0; i < res.witness.size(); ++i)
      s << ' ' << fmt17(res.witness[i]);
    s << "\n";
    out = s.str();
  }
  return res.converged ? 0 : 2;
}

// ---------------------------------------------------------------- verify ---

int cmd_verify(const json& p, std::string& out) {
  lam::Hypergraph g = lam::load_graph(p.at("input"));
  std::string suite = p.value("suite", "all");
  bool has_pi = p.contains("pi");
  if (suite == "flat" && !has_pi) {
    out = "error: --pi is required for the flat suite\n";
    return 1;
  }
  std::vector<double> alphas = p.value("alphas", std::vector<double>{1, 2});
  auto cfg = solver_from(p);

  std::vector<lam::BoundReport> reports;
  bool all_converged = true;
  for (double alpha : alphas) {
    if (alpha < 1) {
      out = "error: alpha must be >= 1\n";
      return 1;
    }
    lam::SpectralResult res = alpha == 1.0 ? lam::lagrangian(g, cfg)
                                           : lam::lambda_alpha(g, alpha, cfg);
    if (!res.converged) all_converged = false;
    auto add = [&](std::vector<lam::BoundReport> v) {
      for (auto& r : v) {
        r.context["alpha"] = alpha;
        reports.push_back(std::move(r));
      }
    };
    bool all = suite == "all";
    if (all || suite == "size") add(lam::check_size_bounds(g, alpha, res.value));
    if (all || suite == "degree") {
      add(lam::check_degree_bound(g, alpha, res.value));
      add(lam::check_regular_identity(g, alpha, res.value));
    }
    if ((all && alpha <= g.r) || suite == "lemma1")
      add(lam::check_lemma1(g, alpha, res));
    if ((all && alpha > 1 && alpha <= g.r) || suite == "lemma2")
      add(lam::check_lemma2(g, alpha, res));
    if ((all && has_pi) || suite == "flat")
      add(lam::check_flat_bounds(g, alpha, res.value, p.at("pi")));
    if (all || suite == "chromatic")
      add(lam::check_chromatic_bounds(g, alpha, res.value));
  }
  if ((suite == "all" || suite == "classics") && g.r == 2) {
    lam::SpectralResult res = lam::lambda_alpha(g, 2.0, cfg);
    if (!res.converged) all_converged = false;
    for (auto& r : lam::check_2graph_classics(g, res.value))
      reports.push_back(std::move(r));
  } else if (suite == "classics" && g.r != 2) {
    out = "error: classics suite requires a 2-graph\n";
    return 1;
  }

  bool all_ok = true;
  for (const auto& r : reports)
    if (r.applicable && !r.vacuous && !r.satisfied) all_ok = false;

  std::string format = p.value("format", "text");
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(lam::to_json(r));
    json doc{{"format", "lamalpha-verify-v1"},
             {"input", p.at("input")},
             {"suite", suite},
             {"all_satisfied", all_ok},
             {"reports", arr}};
    out = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    for (const auto& r : reports) {
      const char* tag = !r.applicable ? " n/a"
                        : r.vacuous   ? " vac"
                        : r.satisfied ? "  ok"
                                      : "FAIL";
      s << tag << "  " << r.bound_id << "  " << fmt17(r.lhs)
        << " <= " << fmt17(r.rhs) << "  slack " << fmt17(r.slack);
      if (r.context.count("alpha"))
        s << "  (alpha " << r.context.at("alpha") << ")";
      s << "\n";
    }
    s << (all_ok ? "all satisfied" : "violations found") << "\n";
    out = s.str();
  }
  if (!all_ok) return 3;
  return all_converged ? 0 : 2;
}

// -------------------------------------------------------------- sequence ---

int cmd_sequence(const json& p, std::string& out) {
  int r = p.at("r");
  std::string prop_kind = p.value("property", "mon");
  std::vector<std::string> forbid = p.value("forbid", std::vector<std::string>{});
  int chi = p.value("chi", 0);
  int weak_chi = p.value("weak_chi", 0);

  lam::PropertySpec prop;
  if (chi > 0) {
    prop = lam::PropertySpec::chromatic(r, chi);
  } else if (weak_chi > 0) {
    prop = lam::PropertySpec::weak_chromatic(r, weak_chi);
  } else {
    if (forbid.empty()) {
      out = "error: need --forbid, --chi or --weak-chi\n";
      return 1;
    }
    std::vector<lam::Hypergraph> fs;
    for (const auto& f : forbid) {
      fs.push_back(lam::load_graph(f));
      if (fs.back().r != r) {
        out = "error: forbidden graph uniformity differs from --r\n";
        return 1;
      }
    }
    prop = prop_kind == "her" ? lam::PropertySpec::her(std::move(fs))
                              : lam::PropertySpec::mon(std::move(fs));
  }

  int n_lo = p.at("n_lo"), n_hi = p.at("n_hi");
  double alpha = p.value("alpha", 0.0);
  lam::EnumerationConfig cfg;
  cfg.solver = solver_from(p);
  cfg.rng_seed = cfg.solver.rng_seed;
  cfg.worker_count = p.value("workers", 0);

  lam::SequenceReport report;
  try {
    report = alpha >= 1.0
                 ? lam::theorem1_sequence(prop, n_lo, n_hi, alpha, cfg)
                 : lam::kns_sequence(prop, n_lo, n_hi, cfg);
  } catch (const lam::resource_limit& e) {
    out = std::string("error: ") + e.what() + "\n";
    return 1;
  }

  std::string csv = lam::sequence_to_csv(report);
  json doc = lam::sequence_to_json(report);
  if (p.contains("out")) {
    std::string stem = p.at("out");
    std::ofstream(stem + ".csv") << csv;
    std::ofstream(stem + ".json") << doc.dump(2) << "\n";
  }
  out = doc.dump(2) + "\n";

  if (!report.kns_monotone) return 3;
  if (alpha == 1.0 && !report.lambda1_nondecreasing) return 3;
  return 0;
}

// ----------------------------------------------------------------- sweep ---

int cmd_sweep(const json& p, std::string& out) {
  lam::Hypergraph g = lam::load_graph(p.at("input"));
  std::vector<double> alphas =
      p.value("alphas", std::vector<double>{1, 1.5, 2, 3, 8});
  for (double a : alphas)
    if (a < 1) {
      out = "error: alpha must be >= 1\n";
      return 1;
    }
  auto rows = lam::alpha_sweep(g, alphas, solver_from(p));

  bool lam_mono = true, h_mono = true, f_mono = true;
  for (size_t i = 1; i < rows.size(); ++i) {
    double tol = 1e-8 * std::max(1.0, std::abs(rows[i - 1].lambda));
    if (rows[i].lambda < rows[i - 1].lambda - tol) lam_mono = false;
    if (rows[i].h > rows[i - 1].h + 1e-8 * std::max(1.0, rows[i - 1].h))
      h_mono = false;
    if (std::isfinite(rows[i].f) && std::isfinite(rows[i - 1].f) &&
        rows[i].f > rows[i - 1].f + 1e-8)
      f_mono = false;
  }

  if (p.value("format", "text") == "json") {
    json arr = json::array();
    for (const auto& row : rows)
      arr.push_back({{"alpha", row.alpha},
                     {"lambda", row.lambda},
                     {"h", row.h},
                     {"f", row.f},
                     {"converged", row.converged}});
    json doc{{"format", "lamalpha-sweep-v1"},
             {"input", p.at("input")},
             {"rows", arr},
             {"lambda_nondecreasing", lam_mono},
             {"h_nonincreasing", h_mono},
             {"f_nonincreasing", f_mono}};
    out = doc.dump(2) + "\n";
  } else {
    std::ostringstream s;
    s << "alpha lambda h f converged\n";
    for (const auto& row : rows)
      s << fmt17(row.alpha) << ' ' << fmt17(row.lambda) << ' ' << fmt17(row.h)
        << ' ' << fmt17(row.f) << ' ' << (row.converged ? 1 : 0) << "\n";
    out = s.str();
  }
  return lam_mono && h_mono && f_mono ? 0 : 3;
}

// ---------------------------------------------------------------- oracle ---

int cmd_oracle(const json& p, std::string& out) {
  lam::Hypergraph g = lam::load_graph(p.at("input"));
  std::vector<int> ps = p.value("ps", std::vector<int>{6, 12, 24});
  json rows = json::array();
  std::ostringstream s;
  s << "p value weights\n";
  try {
    for (int denom : ps) {
      if (denom < 1) {
        out = "error: p must be >= 1\n";
        return 1;
      }
      auto res = lam::lagrangian_oracle_full(g, denom);
      rows.push_back(
          {{"p", denom}, {"value", res.value}, {"weights", res.weights}});
      s << denom << ' ' << fmt17(res.value) << ' ';
      for (size_t i = 0; i < res.weights.size(); ++i)
        s << (i ? "," : "") << res.weights[i];
      s << "\n";
    }
  } catch (const lam::resource_limit& e) {
    out = std::string("error: ") + e.what() + "\n";
    return 1;
  }
  lam::SpectralResult solved = lam::lagrangian(g, solver_from(p));
  s << "lagrangian " << fmt17(solved.value) << "\n";
  if (p.value("format", "text") == "json") {
    json doc{{"format", "lamalpha-oracle-v1"},
             {"input", p.at("input")},
             {"rows", rows},
             {"lagrangian", solved.value}};
    out = doc.dump(2) + "\n";
  } else {
    out = s.str();
  }
  return 0;
}

// ------------------------------------------------------------ dispatcher ---

int dispatch(const json& params, std::string& out) {
  const std::string cmd = params.at("command");
  if (cmd == "lambda") return cmd_lambda(params, out);
  if (cmd == "verify") return cmd_verify(params, out);
  if (cmd == "sequence") return cmd_sequence(params, out);
  if (cmd == "sweep") return cmd_sweep(params, out);
  if (cmd == "oracle") return cmd_oracle(params, out);
  out = "error: unknown command in manifest: " + cmd + "\n";
  return 1;
}

std::vector<std::string> input_specs(const json& params) {
  std::vector<std::string> specs;
  if (params.contains("input")) specs.push_back(params.at("input"));
  if (params.contains("forbid"))
    for (const auto& f : params.at("forbid")) specs.push_back(f);
  return specs;
}

int run_and_emit(const json& params, const std::string& manifest_path) {
  auto t0 = std::chrono::steady_clock::now();
  std::string out;
  int code;
  try {
    code = dispatch(params, out);
  } catch (const lam::hg_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << out;
  if (!manifest_path.empty()) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    json manifest{{"format", "lamalpha-manifest-v1"},
                  {"version", kVersion},
                  {"command", params.at("command")},
                  {"params", params},
                  {"rng_seed", params.value("seed", std::uint64_t{1})},
                  {"wall_ms", ms},
                  {"input_digests", digest_inputs(input_specs(params))}};
    std::ofstream f(manifest_path);
    if (!f) {
      std::cerr << "error: cannot write manifest " << manifest_path << "\n";
      return 1;
    }
    f << manifest.dump(2) << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lambda^(alpha) spectral parameters of uniform hypergraphs"};
  app.set_version_flag("--version", std::string("lam ") + kVersion);
  app.require_subcommand(1);

  std::string manifest_path;
  app.add_option("--manifest", manifest_path,
                 "write a replayable run manifest to this path");

  std::string input, out_path, suite = "all", property = "mon", format;
  double alpha = 1.0, tol = 1e-10, pi = -1;
  int starts = 32, workers = 0, chi = 0, weak_chi = 0, r = 2;
  int max_iter = 100000;
  std::uint64_t seed = 1;
  bool want_min = false, as_json = false, as_csv = false;
  std::vector<double> alphas;
  std::vector<int> ps;
  std::vector<std::string> forbid;
  std::string n_range;

  if (const char* env = std::getenv("LAM_WORKERS")) workers = std::atoi(env);

  auto* c_lambda = app.add_subcommand("lambda", "compute lambda^(alpha)(G)");
  c_lambda->fallthrough();
  c_lambda->add_option("input", input, "graph file or shorthand")->required();
  c_lambda->add_option("--alpha", alpha, "norm exponent, >= 1");
  c_lambda->add_option("--tol", tol, "convergence tolerance");
  c_lambda->add_option("--starts", starts, "multistart count");
  c_lambda->add_option("--max-iter", max_iter, "iteration cap per start");
  c_lambda->add_option("--seed", seed, "rng seed");
  c_lambda->add_flag("--min", want_min, "minimum over the signed sphere");
  c_lambda->add_flag("--json", as_json);
  c_lambda->add_flag("--csv", as_csv);

  auto* c_verify = app.add_subcommand("verify", "check bound catalogs on G");
  c_verify->fallthrough();
  c_verify->add_option("input", input)->required();
  c_verify->add_option("--alpha", alphas, "alpha values (default 1 2)");
  c_verify
      ->add_option("--suite", suite,
                   "size|degree|lemma1|lemma2|flat|chromatic|classics|all")
      ->check(CLI::IsMember({"size", "degree", "lemma1", "lemma2", "flat",
                             "chromatic", "classics", "all"}));
  c_verify->add_option("--pi", pi, "Turan density for the flat suite");
  c_verify->add_option("--tol", tol);
  c_verify->add_option("--starts", starts);
  c_verify->add_option("--seed", seed);
  c_verify->add_flag("--json", as_json);

  auto* c_seq = app.add_subcommand("sequence", "ex/lambda sequences over n");
  c_seq->fallthrough();
  c_seq->add_option("--r", r, "uniformity")->required();
  c_seq->add_option("--property", property)
      ->check(CLI::IsMember({"mon", "her"}));
  c_seq->add_option("--forbid", forbid, "forbidden graph files/shorthands");
  c_seq->add_option("--chi", chi, "chromatic-bounded property C(p)");
  c_seq->add_option("--weak-chi", weak_chi, "weak chromatic bound q");
  c_seq->add_option("--alpha", alpha, "include lambda columns at this alpha");
  c_seq->add_option("--n", n_range, "range a..b")->required();
  c_seq->add_option("--seed", seed);
  c_seq->add_option("--workers", workers, "solver worker cap");
  c_seq->add_option("--out", out_path, "write <out>.csv and <out>.json");

  auto* c_sweep = app.add_subcommand("sweep", "lambda/h/f over an alpha grid");
  c_sweep->fallthrough();
  c_sweep->add_option("input", input)->required();
  c_sweep->add_option("--alphas", alphas, "grid (default 1 1.5 2 3 8)");
  c_sweep->add_option("--tol", tol);
  c_sweep->add_option("--starts", starts);
  c_sweep->add_option("--seed", seed);
  c_sweep->add_flag("--json", as_json);

  auto* c_oracle =
      app.add_subcommand("oracle", "exact rational Lagrangian lower bounds");
  c_oracle->fallthrough();
  c_oracle->add_option("input", input)->required();
  c_oracle->add_option("--p", ps, "denominators (default 6 12 24)");
  c_oracle->add_option("--seed", seed);
  c_oracle->add_flag("--json", as_json);

  std::string replay_path;
  auto* c_replay = app.add_subcommand("replay", "re-run a saved manifest");
  c_replay->fallthrough();
  c_replay->add_option("manifest", replay_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*c_replay) {
    std::ifstream f(replay_path);
    if (!f) {
      std::cerr << "error: cannot open manifest " << replay_path << "\n";
      return 1;
    }
    json manifest;
    try {
      f >> manifest;
      return run_and_emit(manifest.at("params"), manifest_path);
    } catch (const std::exception& e) {
      std::cerr << "error: bad manifest: " << e.what() << "\n";
      return 1;
    }
  }

  format = as_json ? "json" : as_csv ? "csv" : "text";
  json params;
  if (*c_lambda) {
    params = {{"command", "lambda"}, {"input", input},   {"alpha", alpha},
              {"tol", tol},          {"starts", starts},  {"seed", seed},
              {"min", want_min},     {"format", format},
              {"max_iter", max_iter}};
  } else if (*c_verify) {
    params = {{"command", "verify"}, {"input", input},  {"suite", suite},
              {"tol", tol},          {"starts", starts}, {"seed", seed},
              {"format", format}};
    if (!alphas.empty()) params["alphas"] = alphas;
    if (c_verify->count("--pi")) params["pi"] = pi;
  } else if (*c_seq) {
    size_t dots = n_range.find("..");
    if (dots == std::string::npos) {
      std::cerr << "error: --n expects a range like 3..8\n";
      return 1;
    }
    int n_lo, n_hi;
    try {
      n_lo = std::stoi(n_range.substr(0, dots));
      n_hi = std::stoi(n_range.substr(dots + 2));
    } catch (const std::exception&) {
      std::cerr << "error: --n expects a range like 3..8\n";
      return 1;
    }
    params = {{"command", "sequence"}, {"r", r},
              {"property", property},  {"n_lo", n_lo},
              {"n_hi", n_hi},          {"seed", seed},
              {"workers", workers},    {"tol", tol}};
    if (!forbid.empty()) params["forbid"] = forbid;
    if (chi > 0) params["chi"] = chi;
    if (weak_chi > 0) params["weak_chi"] = weak_chi;
    if (c_seq->count("--alpha")) params["alpha"] = alpha;
    if (!out_path.empty()) params["out"] = out_path;
  } else if (*c_sweep) {
    params = {{"command", "sweep"}, {"input", input},  {"tol", tol},
              {"starts", starts},   {"seed", seed},    {"format", format}};
    if (!alphas.empty()) params["alphas"] = alphas;
  } else if (*c_oracle) {
    params = {{"command", "oracle"}, {"input", input}, {"seed", seed},
              {"format", format}};
    if (!ps.empty()) params["ps"] = ps;
  }
  return run_and_emit(params, manifest_path);
}
