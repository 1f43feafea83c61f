#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgw/bounds.hpp"
#include "sgw/error.hpp"
#include "sgw/eigensolve.hpp"
#include "sgw/geometry.hpp"
#include "sgw/quadrature.hpp"

namespace sgw::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitSolver = 2, kExitIo = 3 };

int exit_code_for(ErrorCode code);

struct RunConfig {
  DomainSpec domain;
  double h = 1.0 / 64.0;
  int k = 20;
  double tol = 1e-8;
  std::uint64_t seed = 1;
  BoundConfig bounds;
  std::filesystem::path out;
};

/// Reads a JSON run configuration: domain, h, k, tol, seed, c0, h0_squared, curvature {a, b}, out.
/// Missing keys keep the values already in `base`.
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// rasterize, assemble and solve; writes the spectrum (and sidecar when vectors are kept).
Spectrum cmd_solve(const RunConfig& config, bool keep_vectors, const std::filesystem::path& dump_operator = {});

Spectrum cmd_oracle(const RunConfig& config);

/// Inequality filter: "all", an inequality id, or a family (universal, gap, growth, theorem,
/// proof_step); several may be joined with commas.
bool matches_filter(InequalityId id, const std::string& which);

std::vector<BoundCheck> cmd_check(const Spectrum& spectrum, const BoundConfig& bounds, const std::string& which);

struct LemmaRequest {
  TestFunctionSpec g;
  int i = 1;
  int k_first = 1;
  int k_last = 10;
};

/// Re-solves with vectors kept and runs the eigenfunction checks for every k in the range.
std::vector<BoundCheck> cmd_lemma(const RunConfig& config, const LemmaRequest& request, std::ostream& log);

/// Observed constant next to the proven one for each prefix length.
void cmd_fit(const Spectrum& spectrum, int n, const std::vector<int>& prefixes, const BoundConfig& bounds,
             std::ostream& out);

/// Aggregates every CSV and spectrum file in `dir` into summary.txt and plot-ready .dat files.
std::string cmd_report(const std::filesystem::path& dir, const BoundConfig& bounds);

/// Full command line, including the subcommand name; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgw::cli
