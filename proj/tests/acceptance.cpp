// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "reference.hpp"
#include "sgw/bounds.hpp"
#include "sgw/cli.hpp"
#include "sgw/discretize.hpp"
#include "sgw/eigensolve.hpp"
#include "sgw/io.hpp"
#include "sgw/oracles.hpp"
#include "sgw/quadrature.hpp"

using namespace sgw;
namespace fs = std::filesystem;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kMaxSeconds = 120.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string num(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

struct Timed {
  Spectrum spectrum;
  double seconds = 0.0;
};

Timed solve(const Grid& grid, int k, bool vectors) {
  EigenOptions opt;
  opt.keep_vectors = vectors;
  const auto t0 = std::chrono::steady_clock::now();
  Spectrum s = grid.hyperbolic() ? smallest_eigenpairs(assemble_hyperbolic(grid), k, opt)
                                 : smallest_eigenpairs(assemble_euclidean(grid), k, opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(s), secs};
}

// Shared between criteria 1, 4 and 5.
Grid g_square_grid;
Spectrum g_square;
Spectrum g_disk;

Outcome solver_accuracy() {
  Outcome o;
  g_square_grid = rasterize(DomainSpec{Rectangle{1.0, 1.0}}, 1.0 / 128);
  const Timed sq = solve(g_square_grid, 20, true);
  g_square = sq.spectrum;
  g_square.meta.domain = DomainSpec{Rectangle{1.0, 1.0}};
  const auto exact_sq = ref::brute_rectangle(1.0, 1.0, 10);
  double worst_sq = 0.0;
  for (int i = 0; i < 20; ++i) worst_sq = std::max(worst_sq, std::abs(sq.spectrum.eigenvalues[i] - exact_sq[i]) / exact_sq[i]);
  o.require(worst_sq < 0.01, "square rel err " + num(worst_sq));
  o.require(sq.seconds <= kMaxSeconds, "square took " + num(sq.seconds) + " s");
  o.note("square max rel err " + num(worst_sq, 3) + " in " + num(sq.seconds, 3) + " s");

  const Timed disk = solve(rasterize(DomainSpec{Disk{1.0}}, 1.0 / 128), 10, false);
  g_disk = disk.spectrum;
  g_disk.meta.domain = DomainSpec{Disk{1.0}};
  // Reference from the test-side bisection, multiplicity 2 for m >= 1.
  std::vector<double> exact_disk;
  for (int m = 0; m <= 6; ++m)
    for (int k = 1; k <= 3; ++k) {
      const double j = ref::bessel_zero_bisect(m, k);
      exact_disk.push_back(j * j);
      if (m > 0) exact_disk.push_back(j * j);
    }
  std::sort(exact_disk.begin(), exact_disk.end());
  double worst_disk = 0.0;
  for (int i = 0; i < 10; ++i)
    worst_disk = std::max(worst_disk, std::abs(disk.spectrum.eigenvalues[i] - exact_disk[i]) / exact_disk[i]);
  o.require(worst_disk < 0.02, "disk rel err " + num(worst_disk));
  o.require(disk.seconds <= kMaxSeconds, "disk took " + num(disk.seconds) + " s");
  o.note("disk max rel err " + num(worst_disk, 3) + " in " + num(disk.seconds, 3) + " s");
  return o;
}

Outcome bessel_oracle() {
  Outcome o;
  const double j01 = bessel_zero(0.0, 1);
  const double j11 = bessel_zero(1.0, 1);
  o.require(std::abs(j01 - ref::bessel_zero_bisect(0.0, 1)) < 1e-8, "j01 vs bisection");
  o.require(std::abs(j11 - ref::bessel_zero_bisect(1.0, 1)) < 1e-8, "j11 vs bisection");
  o.require(std::abs(j01 - 2.4048255577) < 1e-8, "j01 = " + num(j01, 12));
  o.require(std::abs(j11 - 3.8317059702) < 1e-8, "j11 = " + num(j11, 12));
  const double ratio = ppw_ratio_bound(2);
  o.require(std::abs(ratio - 2.5387) <= 1e-3, "ratio " + num(ratio));
  o.require(2.5 <= ratio, "square ratio exceeds bound");
  o.note("j01=" + num(j01, 11) + " j11=" + num(j11, 11) + " ratio=" + num(ratio, 6));
  return o;
}

std::vector<Spectrum> oracle_spectra(int k) {
  return {
      rectangle_spectrum(1.0, 1.0, k).to_spectrum(DomainSpec{Rectangle{1.0, 1.0}}),
      rectangle_spectrum(2.0, 1.0, k).to_spectrum(DomainSpec{Rectangle{2.0, 1.0}}),
      box_spectrum(1.0, 1.0, 1.0, k).to_spectrum(DomainSpec{Box{1.0, 1.0, 1.0}}),
      disk_spectrum(1.0, k).to_spectrum(DomainSpec{Disk{1.0}}),
  };
}

Outcome universal_suite() {
  using I = InequalityId;
  Outcome o;
  const std::vector<I> wanted = {I::Yang1,        I::Yang2,           I::HileProtter,         I::Thompson,
                                 I::Ppw,          I::ChengYangGap,    I::ChengYangGrowth,     I::GapTheoremEuclidean,
                                 I::ProofStepEuclidean};
  int evaluated = 0;
  int violations = 0;
  for (const Spectrum& s : oracle_spectra(102)) {
    for (const BoundCheck& c : check_all(s, {})) {
      if (std::find(wanted.begin(), wanted.end(), c.id) == wanted.end() || c.k < 1 || c.k > 100) continue;
      if (c.status == CheckStatus::Skipped || c.status == CheckStatus::Degenerate) continue;
      ++evaluated;
      if (c.slack < -1e-9 * std::abs(c.rhs) || !c.satisfied) {
        ++violations;
        o.require(false, std::string(to_string(c.id)) + " k=" + std::to_string(c.k) + " on " + s.meta.provenance);
      }
    }
  }
  o.note(std::to_string(evaluated) + " checks, " + std::to_string(violations) + " violations");
  return o;
}

Outcome implication_chain() {
  using I = InequalityId;
  Outcome o;
  std::vector<Spectrum> spectra = oracle_spectra(102);
  spectra.push_back(g_square);
  spectra.push_back(g_disk);
  int pairs = 0;
  for (const Spectrum& s : spectra) {
    for (int k = 1; k < s.size(); ++k) {
      const auto checks = check_universal(s, k, {});
      auto sat = [&](I id) {
        for (const auto& c : checks)
          if (c.id == id) return c.satisfied;
        return false;
      };
      const bool y1 = sat(I::Yang1), y2 = sat(I::Yang2), hp = sat(I::HileProtter), th = sat(I::Thompson);
      ++pairs;
      if ((y1 && !y2) || (y2 && !hp) || (hp && !th))
        o.require(false, "chain broken at k=" + std::to_string(k) + " on " + s.meta.provenance);
    }
  }
  o.note(std::to_string(pairs) + " (spectrum, k) pairs");
  return o;
}

Outcome lemma_verification() {
  Outcome o;
  const EigenBasis basis = make_basis(g_square_grid, g_square);
  int rows = 0;
  for (const auto& spec : {TestFunctionSpec::coordinate(0), TestFunctionSpec::coordinate(1), TestFunctionSpec::exponential(1.0, 0)}) {
    const TestFunction g = sample_test_function(g_square_grid, spec);
    for (int k = 1; k <= 10; ++k) {
      const BoundCheck c = verify_mainformula(basis, g, 1, k);
      ++rows;
      o.require(c.satisfied, "main formula k=" + std::to_string(k) + " slack " + num(c.slack));
    }
  }
  double worst = 0.0;
  for (int axis = 0; axis < 2; ++axis) {
    const auto ibp = integration_by_parts(basis, sample_test_function(g_square_grid, TestFunctionSpec::coordinate(axis)), 1);
    worst = std::max(worst, std::abs(ibp.lhs - ibp.rhs) / std::abs(ibp.rhs));
  }
  const Grid hgrid = rasterize(DomainSpec{HyperbolicRect{0.0, 1.0, 1.0, 2.0}}, 1.0 / 64);
  const Timed hyp = solve(hgrid, 3, true);
  const EigenBasis hbasis = make_basis(hgrid, hyp.spectrum);
  const auto ibp = integration_by_parts(hbasis, sample_test_function(hgrid, TestFunctionSpec::hyperbolic_log()), 1);
  worst = std::max(worst, std::abs(ibp.lhs - ibp.rhs) / std::abs(ibp.rhs));
  o.require(worst < 0.01, "integration by parts off by " + num(worst));
  o.note(std::to_string(rows) + " rows, integration by parts max rel diff " + num(worst, 3));
  return o;
}

Outcome hyperbolic_suite() {
  Outcome o;
  const DomainSpec domain{HyperbolicRect{0.0, 1.0, 1.0, 2.0}};
  Timed t = solve(rasterize(domain, 1.0 / 64), 12, false);
  Spectrum& s = t.spectrum;
  s.meta.domain = domain;
  const double l1 = s.eigenvalues[0];
  o.require(l1 > 0.25, "lambda_1 = " + num(l1));
  int passed = 0;
  for (const BoundCheck& c : proof_step_hyperbolic(s)) {
    if (c.k > 10) continue;
    o.require(c.satisfied, "gap check k=" + std::to_string(c.k));
    if (c.satisfied) ++passed;
  }
  o.require(passed == 10, "only " + std::to_string(passed) + " gap checks");
  std::string constants;
  for (double h0 : {0.0, 1.0, 4.0}) {
    const auto c = hyperbolic_gap_constant(l1, 2, BoundConfig{}.c0(2), h0);
    o.require(c.has_value(), "constant infeasible at H0^2=" + num(h0));
    if (c) constants += " C(H0^2=" + num(h0, 2) + ")=" + num(*c);
  }
  bool flagged = false;
  for (const BoundCheck& c : theorem_gap_bound(s, 2, {}))
    flagged = flagged || c.notes.find("H0^2 free parameter") != std::string::npos;
  o.require(flagged, "H0^2 not flagged");
  o.note("lambda_1=" + num(l1) + ", " + std::to_string(passed) + " gap checks," + constants + " (H0^2 free parameter)");
  return o;
}

Outcome conjecture_observation() {
  Outcome o;
  const Spectrum s = rectangle_spectrum(1.0, 1.0, 500).to_spectrum(DomainSpec{Rectangle{1.0, 1.0}});
  const double bound = euclidean_gap_constant(s.eigenvalues[0], 2, BoundConfig{}.c0(2));
  const double c500 = fit_gap_constant(s, 2, 500);
  o.require(c500 <= bound, "C_hat " + num(c500) + " above " + num(bound));
  const double c100 = fit_gap_constant(s, 2, 100);
  const double c200 = fit_gap_constant(s, 2, 200);
  const bool flat = c200 <= c100 && c500 <= c200;
  o.note("C_hat(100)=" + num(c100) + " C_hat(200)=" + num(c200) + " C_hat(500)=" + num(c500) + " <= " + num(bound) +
         (flat ? ", no growth" : ", grows"));
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = fs::current_path() / "acceptance_out";
  fs::create_directories(dir);
  const std::vector<std::string> base = {"sgw", "solve", "--domain", "disk", "--h", "0.03125", "--k", "15", "--seed", "11"};
  std::string texts[2];
  for (int run = 0; run < 2; ++run) {
    auto args = base;
    const fs::path out = dir / ("det" + std::to_string(run) + ".spec.json");
    args.push_back("--out");
    args.push_back(out.string());
    std::ostringstream sink;
    const int code = cli::run(args, sink, sink);
    o.require(code == 0, "solve exit " + std::to_string(code));
    if (code == 0) texts[run] = read_text(out);
  }
  o.require(!texts[0].empty() && texts[0] == texts[1], "spectrum files differ");
  o.note(std::to_string(texts[0].size()) + " bytes, identical");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 solver accuracy", solver_accuracy},      {"2 bessel oracle", bessel_oracle},
      {"3 universal inequalities", universal_suite}, {"4 implication chain", implication_chain},
      {"5 eigenfunction lemma", lemma_verification}, {"6 hyperbolic suite", hyperbolic_suite},
      {"7 gap constant observation", conjecture_observation}, {"8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failures;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
