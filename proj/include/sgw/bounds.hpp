#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgw/eigensolve.hpp"

namespace sgw {

/// Lower and upper curvature magnitudes for -a^2 <= Sec <= -b^2.
struct Curvature {
  double a = 0.0;
  double b = 0.0;
};

/// Free constants of the bounds. C0(n) defaults to 1 + 4/n.
struct BoundConfig {
  std::optional<double> c0_override;
  double h0_squared = 0.0;
  std::optional<Curvature> curvature;

  double c0(int n) const;
  /// Throws InvalidArgument when C0 < 1, H0^2 < 0 or a < b.
  void validate(int n) const;
};

enum class InequalityId {
  Ppw,
  Thompson,
  HileProtter,
  Yang1,
  Yang2,
  ChenCheng,
  Czl,
  ChengYangGap,
  ChenChengGap,
  CzlGap,
  ChengYangGrowth,
  ChenChengGrowth,
  GapTheoremEuclidean,
  GapTheoremHyperbolic,
  GapTheoremPinched,
  ProofStepEuclidean,
  ProofStepHyperbolic,
  MainFormula,
  PhaseInequality,
  UnitGradientSquared,
  UnitGradientRayleigh,
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> inequality_from_string(std::string_view name);

enum class CheckStatus { Satisfied, Violated, Degenerate, Infeasible, Skipped };

std::string_view to_string(CheckStatus status);

/// One instance of an inequality written as lhs <= rhs, slack = rhs - lhs.
struct BoundCheck {
  InequalityId id = InequalityId::Ppw;
  int k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double abs_tol = 0.0;
  bool satisfied = false;
  CheckStatus status = CheckStatus::Skipped;
  std::string notes;
};

/// Evaluated check; satisfied iff slack >= -abs_tol.
BoundCheck make_check(InequalityId id, int k, double lhs, double rhs, double abs_tol, std::string notes = {});

/// Tolerance used for a spectrum: 1e-9 relative for exact spectra, widened by the relative
/// solver residual 10 r / lambda_{k+1} for computed ones.
double check_tolerance(const Spectrum& spectrum, int k, double lhs, double rhs);

/// PPW, Thompson, Hile-Protter, Yang 1/2, Chen-Cheng (and the pinched-curvature sum form when
/// curvature is configured) at index k.
std::vector<BoundCheck> check_universal(const Spectrum& spectrum, int k, const BoundConfig& config);

/// Square-root gap bounds derived from the quadratic inequalities, at index k.
std::vector<BoundCheck> gap_upper_bounds(const Spectrum& spectrum, int k, const BoundConfig& config);

/// lambda_{k+1} <= C0 k^(2/n) lambda_1 and its H0^2-shifted version, for every k.
std::vector<BoundCheck> growth_bounds(const Spectrum& spectrum, const BoundConfig& config);

/// lambda_{k+1} - lambda_k <= C k^(1/n) for every k, with the constant matching the geometry.
std::vector<BoundCheck> theorem_gap_bound(const Spectrum& spectrum, int n, const BoundConfig& config);

/// Euclidean gap constant 4 lambda_1 sqrt(C0 / n).
double euclidean_gap_constant(double lambda1, int n, double c0);
/// 4 [C0 (lambda_1 - (n-1)^2/4)(lambda_1 + n^2 H0^2/4)]^(1/2); nullopt when the bracket is negative.
std::optional<double> hyperbolic_gap_constant(double lambda1, int n, double c0, double h0_squared);
/// 4 [C0 (lambda_1 - (n-1)^2 b^2/4 + (a^2-b^2)/4)(lambda_1 + n^2 H0^2/4)]^(1/2).
std::optional<double> pinched_gap_constant(double lambda1, int n, double c0, double h0_squared,
                                           const Curvature& curvature);

/// n (lambda_{k+2} - lambda_{k+1})^2 <= 16 lambda_1 lambda_{k+2} for every k.
std::vector<BoundCheck> proof_step_euclidean(const Spectrum& spectrum, int n);

/// lambda_{k+2} - lambda_{k+1} <= 4 sqrt(lambda_1 - 1/4) sqrt(lambda_{k+2}) for every k (n = 2).
std::vector<BoundCheck> proof_step_hyperbolic(const Spectrum& spectrum);

/// Smallest C with lambda_{k+1} - lambda_k <= C k^(1/n) on the first `prefix` eigenvalues
/// (all when prefix <= 0).
double fit_gap_constant(const Spectrum& spectrum, int n, int prefix = 0);

/// Runs every applicable family over all admissible k.
std::vector<BoundCheck> check_all(const Spectrum& spectrum, const BoundConfig& config);

struct CheckSummary {
  int total = 0;
  int satisfied = 0;
  int violated = 0;
  int degenerate = 0;
  int infeasible = 0;
  int skipped = 0;
};

CheckSummary summarize(const std::vector<BoundCheck>& checks);

}  // namespace sgw
