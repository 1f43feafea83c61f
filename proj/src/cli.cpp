#include "sgw/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgw/discretize.hpp"
#include "sgw/io.hpp"
#include "sgw/oracles.hpp"

namespace sgw::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string spectrum_stem(const fs::path& p) {
  std::string name = p.filename().string();
  const std::string suffix = ".spec.json";
  if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
    return name.substr(0, name.size() - suffix.size());
  return p.stem().string();
}

bool in_family(InequalityId id, const std::string& family) {
  using I = InequalityId;
  if (family == "universal")
    return id == I::Ppw || id == I::Thompson || id == I::HileProtter || id == I::Yang1 || id == I::Yang2 ||
           id == I::ChenCheng || id == I::Czl;
  if (family == "gap") return id == I::ChengYangGap || id == I::ChenChengGap || id == I::CzlGap;
  if (family == "growth") return id == I::ChengYangGrowth || id == I::ChenChengGrowth;
  if (family == "theorem")
    return id == I::GapTheoremEuclidean || id == I::GapTheoremHyperbolic || id == I::GapTheoremPinched;
  if (family == "proof_step") return id == I::ProofStepEuclidean || id == I::ProofStepHyperbolic;
  return false;
}

bool known_filter(const std::string& token) {
  return token == "all" || token == "universal" || token == "gap" || token == "growth" || token == "theorem" ||
         token == "proof_step" || inequality_from_string(token).has_value();
}

std::vector<std::string> comma_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Proven constant matching the spectrum's geometry; nullopt when its bracket is negative.
std::optional<double> proven_constant(const Spectrum& s, int n, const BoundConfig& bounds, std::string& label) {
  const double l1 = s.eigenvalues.front();
  if (s.hyperbolic()) {
    label = "hyperbolic C (H0^2=" + fixed(bounds.h0_squared) + " free parameter)";
    return hyperbolic_gap_constant(l1, n, bounds.c0(n), bounds.h0_squared);
  }
  label = "theorem C";
  return euclidean_gap_constant(l1, n, bounds.c0(n));
}

struct DomainFlags {
  std::string name;
  std::string json_text;
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  double radius = 1.0;
  double length = 2.0;
  double width = 1.0;
  std::string vertices;
  double x0 = 0.0;
  double x1 = 1.0;
  double y0 = 1.0;
  double y1 = 2.0;

  bool given() const { return !name.empty() || !json_text.empty(); }

  DomainSpec build() const {
    if (!json_text.empty()) return domain_from_json(json_text);
    DomainSpec d;
    if (name == "square") {
      d.shape = Rectangle{1.0, 1.0};
    } else if (name == "rectangle") {
      d.shape = Rectangle{a, b};
    } else if (name == "cube") {
      d.shape = Box{1.0, 1.0, 1.0};
    } else if (name == "box") {
      d.shape = Box{a, b, c};
    } else if (name == "disk") {
      d.shape = Disk{radius};
    } else if (name == "l_shape") {
      d.shape = LShape{length, width};
    } else if (name == "polygon") {
      Polygon p;
      std::stringstream in(vertices);
      std::string pair;
      while (std::getline(in, pair, ';')) {
        double x = 0.0;
        double y = 0.0;
        if (std::sscanf(pair.c_str(), " %lf , %lf", &x, &y) != 2)
          throw Error(ErrorCode::InvalidArgument, "polygon vertices are 'x,y;x,y;...'");
        p.vertices.push_back({x, y});
      }
      d.shape = std::move(p);
    } else if (name == "hyperbolic_rect") {
      d.shape = HyperbolicRect{x0, x1, y0, y1};
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown domain '" + name + "'");
    }
    return d;
  }
};

void add_domain_flags(CLI::App* app, DomainFlags& f) {
  app->add_option("--domain", f.name, "square, rectangle, cube, box, disk, l_shape, polygon, hyperbolic_rect");
  app->add_option("--domain-json", f.json_text, "domain as a JSON object");
  app->add_option("--a", f.a, "first side");
  app->add_option("--b", f.b, "second side");
  app->add_option("--c", f.c, "third side");
  app->add_option("--radius", f.radius, "disk radius");
  app->add_option("--length", f.length, "L-shape arm length");
  app->add_option("--width", f.width, "L-shape arm width");
  app->add_option("--vertices", f.vertices, "polygon vertices 'x,y;x,y;...'");
  app->add_option("--x0", f.x0);
  app->add_option("--x1", f.x1);
  app->add_option("--y0", f.y0);
  app->add_option("--y1", f.y1);
}

struct RunFlags {
  std::string config;
  double h = 0.0;
  int k = 0;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string out;
  CLI::Option* h_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

void add_run_flags(CLI::App* app, RunFlags& f, bool with_h) {
  app->add_option("--config", f.config, "JSON run configuration");
  if (with_h) {
    f.h_opt = app->add_option("--h", f.h, "grid spacing");
    f.tol_opt = app->add_option("--tol", f.tol, "eigenpair residual tolerance");
    f.seed_opt = app->add_option("--seed", f.seed, "start-vector seed");
  }
  f.k_opt = app->add_option("--k", f.k, "number of eigenvalues");
  app->add_option("--out", f.out, "output path");
}

struct BoundFlags {
  double c0 = 0.0;
  double h0_squared = 0.0;
  double curvature_a = 0.0;
  double curvature_b = 0.0;
  CLI::Option* c0_opt = nullptr;
  CLI::Option* h0_opt = nullptr;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
};

void add_bound_flags(CLI::App* app, BoundFlags& f) {
  f.c0_opt = app->add_option("--c0", f.c0, "override C0(n) (default 1 + 4/n)");
  f.h0_opt = app->add_option("--h0-squared", f.h0_squared, "H0^2 (default 0)");
  f.a_opt = app->add_option("--curvature-a", f.curvature_a, "pinching: Sec >= -a^2");
  f.b_opt = app->add_option("--curvature-b", f.curvature_b, "pinching: Sec <= -b^2");
}

void apply_bounds(const BoundFlags& f, BoundConfig& bounds) {
  if (f.c0_opt && f.c0_opt->count()) bounds.c0_override = f.c0;
  if (f.h0_opt && f.h0_opt->count()) bounds.h0_squared = f.h0_squared;
  if ((f.a_opt && f.a_opt->count()) || (f.b_opt && f.b_opt->count()))
    bounds.curvature = Curvature{f.curvature_a, f.curvature_b};
}

RunConfig resolve(const RunFlags& rf, const DomainFlags& df, const BoundFlags& bf) {
  RunConfig cfg;
  if (!rf.config.empty()) cfg = load_config(rf.config, cfg);
  if (df.given()) cfg.domain = df.build();
  if (rf.h_opt && rf.h_opt->count()) cfg.h = rf.h;
  if (rf.k_opt && rf.k_opt->count()) cfg.k = rf.k;
  if (rf.tol_opt && rf.tol_opt->count()) cfg.tol = rf.tol;
  if (rf.seed_opt && rf.seed_opt->count()) cfg.seed = rf.seed;
  if (!rf.out.empty()) cfg.out = rf.out;
  apply_bounds(bf, cfg.bounds);
  if (!(cfg.h > 0.0)) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  if (cfg.k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (!(cfg.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  return cfg;
}

TestFunctionSpec parse_test_function(const std::string& name, double alpha) {
  if (name == "x1") return TestFunctionSpec::coordinate(0);
  if (name == "x2") return TestFunctionSpec::coordinate(1);
  if (name == "x3") return TestFunctionSpec::coordinate(2);
  if (name == "exp1") return TestFunctionSpec::exponential(alpha, 0);
  if (name == "exp2") return TestFunctionSpec::exponential(alpha, 1);
  if (name == "exp3") return TestFunctionSpec::exponential(alpha, 2);
  if (name == "log") return TestFunctionSpec::hyperbolic_log();
  throw Error(ErrorCode::InvalidArgument, "unknown test function '" + name + "'");
}

void emit_csv(const std::vector<BoundCheck>& checks, const std::string& path, std::ostream& out) {
  const std::string csv = checks_to_csv(checks);
  if (path.empty()) {
    out << csv;
  } else {
    write_text(path, csv);
  }
}

std::string summary_line(const std::vector<BoundCheck>& checks) {
  const CheckSummary s = summarize(checks);
  return "checks=" + std::to_string(s.total) + " satisfied=" + std::to_string(s.satisfied) +
         " violated=" + std::to_string(s.violated) + " degenerate=" + std::to_string(s.degenerate) +
         " infeasible=" + std::to_string(s.infeasible) + " skipped=" + std::to_string(s.skipped);
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGrid:
    case ErrorCode::NoConvergence:
    case ErrorCode::KTooLarge:
    case ErrorCode::TooFewEigenvalues:
    case ErrorCode::TooFewEigenpairs:
      return kExitSolver;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
    case ErrorCode::SizeMismatch:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

RunConfig load_config(const fs::path& path, RunConfig base) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  try {
    if (j.contains("domain")) base.domain = domain_from_json(j.at("domain").dump());
    if (j.contains("h")) base.h = j.at("h").get<double>();
    if (j.contains("k")) base.k = j.at("k").get<int>();
    if (j.contains("tol")) base.tol = j.at("tol").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("c0")) base.bounds.c0_override = j.at("c0").get<double>();
    if (j.contains("h0_squared")) base.bounds.h0_squared = j.at("h0_squared").get<double>();
    if (j.contains("curvature"))
      base.bounds.curvature = Curvature{j.at("curvature").at("a").get<double>(), j.at("curvature").at("b").get<double>()};
    if (j.contains("out")) base.out = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return base;
}

Spectrum cmd_solve(const RunConfig& config, bool keep_vectors, const fs::path& dump_operator) {
  const Grid grid = rasterize(config.domain, config.h);
  const GeneralizedProblem problem =
      grid.hyperbolic() ? assemble_hyperbolic(grid) : as_generalized(assemble_euclidean(grid));
  if (!dump_operator.empty()) write_text(dump_operator, operator_to_triplets(problem.stiffness));
  EigenOptions options;
  options.tol = config.tol;
  options.seed = config.seed;
  options.keep_vectors = keep_vectors;
  Spectrum s = smallest_eigenpairs(problem, config.k, options);
  s.meta.domain = config.domain;
  s.meta.n = config.domain.dimension();
  s.meta.h = config.h;
  if (!config.out.empty()) write_spectrum(config.out, s);
  return s;
}

Spectrum cmd_oracle(const RunConfig& config) {
  Spectrum s = oracle_spectrum(config.domain, config.k).to_spectrum(config.domain);
  if (!config.out.empty()) write_spectrum(config.out, s);
  return s;
}

bool matches_filter(InequalityId id, const std::string& which) {
  for (const std::string& token : comma_list(which)) {
    if (token == "all" || in_family(id, token)) return true;
    if (const auto named = inequality_from_string(token); named && *named == id) return true;
  }
  return false;
}

std::vector<BoundCheck> cmd_check(const Spectrum& spectrum, const BoundConfig& bounds, const std::string& which) {
  const auto tokens = comma_list(which);
  if (tokens.empty()) throw Error(ErrorCode::InvalidArgument, "empty --which filter");
  for (const std::string& t : tokens) {
    if (!known_filter(t)) throw Error(ErrorCode::InvalidArgument, "unknown inequality filter '" + t + "'");
  }
  std::vector<BoundCheck> out;
  for (BoundCheck& c : check_all(spectrum, bounds)) {
    if (matches_filter(c.id, which)) out.push_back(std::move(c));
  }
  return out;
}

std::vector<BoundCheck> cmd_lemma(const RunConfig& config, const LemmaRequest& request, std::ostream& log) {
  if (request.k_first < request.i || request.k_last < request.k_first)
    throw Error(ErrorCode::IndexOrder, "need i <= k_first <= k_last");
  const Grid grid = rasterize(config.domain, config.h);
  const GeneralizedProblem problem =
      grid.hyperbolic() ? assemble_hyperbolic(grid) : as_generalized(assemble_euclidean(grid));
  EigenOptions options;
  options.tol = config.tol;
  options.seed = config.seed;
  const Spectrum s = smallest_eigenpairs(problem, request.k_last + 2, options);
  const EigenBasis basis = make_basis(grid, s);
  const TestFunction g = sample_test_function(grid, request.g);

  const bool unit_gradient = request.g.kind == TestFunctionKind::HyperbolicLog ||
                             (request.g.kind == TestFunctionKind::Coordinate && !grid.hyperbolic());
  if (g.real()) {
    const IntegrationByParts ibp = integration_by_parts(basis, g, request.i);
    log << "integration by parts: lhs=" << fixed(ibp.lhs) << " rhs=" << fixed(ibp.rhs)
        << " rel_diff=" << fixed(std::abs(ibp.lhs - ibp.rhs) / std::max(std::abs(ibp.lhs), 1e-300)) << "\n";
  }
  std::vector<BoundCheck> out;
  for (int k = request.k_first; k <= request.k_last; ++k) {
    out.push_back(verify_mainformula(basis, g, request.i, k));
    if (unit_gradient) {
      for (BoundCheck& c : verify_corollaries(basis, g, request.i, k)) out.push_back(std::move(c));
    }
  }
  return out;
}

void cmd_fit(const Spectrum& spectrum, int n, const std::vector<int>& prefixes, const BoundConfig& bounds,
             std::ostream& out) {
  std::vector<int> lengths;
  for (int p : prefixes) {
    if (p >= 2 && p <= spectrum.size()) lengths.push_back(p);
  }
  if (lengths.empty()) lengths.push_back(spectrum.size());
  std::string label;
  const auto proven = proven_constant(spectrum, n, bounds, label);
  for (int p : lengths) {
    out << "K=" << p << " C_hat=" << fixed(fit_gap_constant(spectrum, n, p)) << " " << label << "="
        << (proven ? fixed(*proven) : std::string("infeasible")) << "\n";
  }
}

std::string cmd_report(const fs::path& dir, const BoundConfig& bounds) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::IoError, dir.string() + " is not a directory");
  std::vector<fs::path> csvs;
  std::vector<fs::path> spectra;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path& p = entry.path();
    const std::string name = p.filename().string();
    if (name == "summary.txt") continue;
    if (p.extension() == ".csv") csvs.push_back(p);
    if (name.size() > 5 && name.ends_with(".json") && name.find(".spec.") != std::string::npos) spectra.push_back(p);
  }
  std::sort(csvs.begin(), csvs.end());
  std::sort(spectra.begin(), spectra.end());

  std::ostringstream report;
  std::map<std::string, std::map<std::string, int>> counts;
  for (const fs::path& p : csvs) {
    for (const BoundCheck& c : checks_from_csv(read_text(p))) ++counts[std::string(to_string(c.id))][std::string(to_string(c.status))];
  }
  report << "# inequality summary over " << csvs.size() << " CSV file(s)\n";
  for (const auto& [id, by_status] : counts) {
    report << id;
    for (const auto& [status, count] : by_status) report << " " << status << "=" << count;
    report << "\n";
  }

  for (const fs::path& p : spectra) {
    const Spectrum s = spectrum_from_json(read_text(p));
    if (s.size() < 2) continue;
    const int n = s.meta.n;
    const std::string stem = spectrum_stem(p);
    std::string label;
    const auto proven = proven_constant(s, n, bounds, label);

    std::string gap_data = "# k gap\n";
    std::string bound_data = "# k C*k^(1/n)\n";
    for (int k = 1; k < s.size(); ++k) {
      gap_data += std::to_string(k) + " " + format_double(s.eigenvalues[k] - s.eigenvalues[k - 1]) + "\n";
      if (proven) bound_data += std::to_string(k) + " " + format_double(*proven * std::pow(k, 1.0 / n)) + "\n";
    }
    write_text(dir / (stem + ".gap.dat"), gap_data);
    if (proven) write_text(dir / (stem + ".bound.dat"), bound_data);

    report << "# " << stem << " (" << s.meta.provenance << ", n=" << n << ", K=" << s.size() << ")\n";
    report << label << "=" << (proven ? fixed(*proven) : std::string("infeasible")) << "\n";
    std::vector<double> fits;
    for (int prefix : {100, 200, 500}) {
      if (prefix > s.size()) continue;
      fits.push_back(fit_gap_constant(s, n, prefix));
      report << "C_hat(K=" << prefix << ")=" << fixed(fits.back()) << "\n";
    }
    fits.push_back(fit_gap_constant(s, n));
    report << "C_hat(K=" << s.size() << ")=" << fixed(fits.back()) << "\n";
    bool flat = true;
    for (std::size_t i = 1; i < fits.size(); ++i) flat = flat && fits[i] <= fits[i - 1] * (1.0 + 1e-12);
    report << "trend: " << (flat ? "no growth over the listed prefixes" : "grows with K") << "\n";
  }
  const std::string text = report.str();
  write_text(dir / "summary.txt", text);
  return text;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dirichlet spectra and eigenvalue-gap inequality workbench", "sgw"};
  // --h is the grid spacing, so help is long-form only.
  app.set_help_flag("--help", "print this help");
  app.require_subcommand(1);

  DomainFlags solve_domain;
  RunFlags solve_run;
  BoundFlags solve_bounds;
  bool keep_vectors = false;
  std::string dump_operator;
  auto* solve = app.add_subcommand("solve", "compute the K smallest eigenvalues on a grid");
  add_domain_flags(solve, solve_domain);
  add_run_flags(solve, solve_run, true);
  solve->add_flag("--vectors", keep_vectors, "store eigenvectors in a sidecar file");
  solve->add_option("--dump-operator", dump_operator, "write the stiffness matrix as row col value lines");

  DomainFlags oracle_domain;
  RunFlags oracle_run;
  BoundFlags oracle_bounds;
  auto* oracle = app.add_subcommand("oracle", "closed-form spectrum of a rectangle, box or disk");
  add_domain_flags(oracle, oracle_domain);
  add_run_flags(oracle, oracle_run, false);

  std::string check_spectrum;
  std::string check_which = "all";
  std::string check_out;
  BoundFlags check_bounds;
  auto* check = app.add_subcommand("check", "evaluate the eigenvalue inequalities on a spectrum file");
  check->add_option("--spectrum", check_spectrum, "spectrum file")->required();
  check->add_option("--which", check_which, "all, a family or inequality ids, comma separated");
  check->add_option("--out", check_out, "CSV path (stdout when omitted)");
  add_bound_flags(check, check_bounds);

  DomainFlags lemma_domain;
  RunFlags lemma_run;
  BoundFlags lemma_bounds;
  std::string lemma_g = "x1";
  double lemma_alpha = 1.0;
  LemmaRequest lemma_request;
  auto* lemma = app.add_subcommand("lemma", "verify the eigenfunction inequalities with test functions");
  add_domain_flags(lemma, lemma_domain);
  add_run_flags(lemma, lemma_run, true);
  lemma->add_option("--g", lemma_g, "x1, x2, x3, exp1, exp2, exp3 or log");
  lemma->add_option("--alpha", lemma_alpha, "frequency of the exponential test function");
  lemma->add_option("--i", lemma_request.i, "eigenfunction index");
  lemma->add_option("--k-first", lemma_request.k_first, "first k");
  lemma->add_option("--k-last", lemma_request.k_last, "last k");

  std::string fit_spectrum;
  int fit_n = 0;
  std::string fit_prefixes;
  BoundFlags fit_bounds;
  auto* fit = app.add_subcommand("fit", "smallest constant C with gap_k <= C k^(1/n)");
  fit->add_option("--spectrum", fit_spectrum, "spectrum file")->required();
  fit->add_option("--n", fit_n, "dimension (default from the file)");
  fit->add_option("--prefix", fit_prefixes, "prefix lengths, comma separated");
  add_bound_flags(fit, fit_bounds);

  std::string report_dir;
  BoundFlags report_bounds;
  auto* report = app.add_subcommand("report", "aggregate CSVs and spectra in a directory");
  report->add_option("--dir", report_dir, "directory")->required();
  add_bound_flags(report, report_bounds);

  for (CLI::App* sub : app.get_subcommands({})) sub->set_help_flag("--help", "print this help");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      const RunConfig cfg = resolve(solve_run, solve_domain, solve_bounds);
      const Spectrum s = cmd_solve(cfg, keep_vectors, dump_operator);
      out << "solved " << s.size() << " eigenpairs; lambda_1=" << fixed(s.eigenvalues.front())
          << " max_residual=" << fixed(s.max_residual()) << "\n";
    } else if (oracle->parsed()) {
      const RunConfig cfg = resolve(oracle_run, oracle_domain, oracle_bounds);
      const Spectrum s = cmd_oracle(cfg);
      out << "oracle " << s.meta.provenance << " with " << s.size() << " eigenvalues\n";
    } else if (check->parsed()) {
      const Spectrum s = read_spectrum(check_spectrum);
      BoundConfig bounds;
      apply_bounds(check_bounds, bounds);
      const auto checks = cmd_check(s, bounds, check_which);
      emit_csv(checks, check_out, out);
      (check_out.empty() ? err : out) << summary_line(checks) << "\n";
    } else if (lemma->parsed()) {
      const RunConfig cfg = resolve(lemma_run, lemma_domain, lemma_bounds);
      lemma_request.g = parse_test_function(lemma_g, lemma_alpha);
      const auto checks = cmd_lemma(cfg, lemma_request, cfg.out.empty() ? err : out);
      emit_csv(checks, cfg.out.string(), out);
      (cfg.out.empty() ? err : out) << summary_line(checks) << "\n";
    } else if (fit->parsed()) {
      const Spectrum s = read_spectrum(fit_spectrum);
      BoundConfig bounds;
      apply_bounds(fit_bounds, bounds);
      std::vector<int> prefixes;
      for (const std::string& p : comma_list(fit_prefixes)) prefixes.push_back(std::stoi(p));
      cmd_fit(s, fit_n > 0 ? fit_n : s.meta.n, prefixes, bounds, out);
    } else if (report->parsed()) {
      BoundConfig bounds;
      apply_bounds(report_bounds, bounds);
      out << cmd_report(report_dir, bounds);
    }
  } catch (const Error& e) {
    err << "sgw: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "sgw: bad number: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "sgw: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace sgw::cli
