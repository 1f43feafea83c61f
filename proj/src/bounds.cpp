#include "sgw/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "sgw/error.hpp"

namespace sgw {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTieTol = 1e-12;

constexpr std::array<std::pair<InequalityId, std::string_view>, 21> kNames{{
    {InequalityId::Ppw, "ppw"},
    {InequalityId::Thompson, "thompson"},
    {InequalityId::HileProtter, "hile_protter"},
    {InequalityId::Yang1, "yang1"},
    {InequalityId::Yang2, "yang2"},
    {InequalityId::ChenCheng, "chen_cheng"},
    {InequalityId::Czl, "czl"},
    {InequalityId::ChengYangGap, "cheng_yang_gap"},
    {InequalityId::ChenChengGap, "chen_cheng_gap"},
    {InequalityId::CzlGap, "czl_gap"},
    {InequalityId::ChengYangGrowth, "cheng_yang_growth"},
    {InequalityId::ChenChengGrowth, "chen_cheng_growth"},
    {InequalityId::GapTheoremEuclidean, "gap_theorem_euclidean"},
    {InequalityId::GapTheoremHyperbolic, "gap_theorem_hyperbolic"},
    {InequalityId::GapTheoremPinched, "gap_theorem_pinched"},
    {InequalityId::ProofStepEuclidean, "proof_step_euclidean"},
    {InequalityId::ProofStepHyperbolic, "proof_step_hyperbolic"},
    {InequalityId::MainFormula, "main_formula"},
    {InequalityId::PhaseInequality, "phase_inequality"},
    {InequalityId::UnitGradientSquared, "unit_gradient_squared"},
    {InequalityId::UnitGradientRayleigh, "unit_gradient_rayleigh"},
}};

std::string fmt(const char* key, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.6g", key, v);
  return buf;
}

std::string join(std::string a, const std::string& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  return a + ";" + b;
}

void require_size(const Spectrum& s, int count) {
  if (s.size() < count)
    throw Error(ErrorCode::TooFewEigenvalues,
                "need " + std::to_string(count) + " eigenvalues, have " + std::to_string(s.size()));
}

void require_index(const Spectrum& s, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  require_size(s, k + 1);
}

BoundCheck skipped(InequalityId id, int k, std::string notes) {
  BoundCheck c;
  c.id = id;
  c.k = k;
  c.lhs = c.rhs = c.slack = kNaN;
  c.status = CheckStatus::Skipped;
  c.notes = std::move(notes);
  return c;
}

BoundCheck infeasible(InequalityId id, int k, double lhs, double bracket, std::string notes) {
  BoundCheck c;
  c.id = id;
  c.k = k;
  c.lhs = lhs;
  c.rhs = c.slack = kNaN;
  c.status = CheckStatus::Infeasible;
  c.notes = join(fmt("bracket", bracket), notes);
  return c;
}

struct Moments {
  double sum = 0.0;
  double mean = 0.0;
  double variance = 0.0;  // (1/k) sum (lambda_i - mean)^2
};

Moments moments(const std::vector<double>& v, int k) {
  Moments m;
  for (int i = 0; i < k; ++i) m.sum += v[i];
  m.mean = m.sum / k;
  for (int i = 0; i < k; ++i) m.variance += (v[i] - m.mean) * (v[i] - m.mean);
  m.variance /= k;
  return m;
}

const char* kEuclideanOnly = "Euclidean inequality;hyperbolic spectrum";

std::string constants_note(double c0, double h0_squared) {
  return join(fmt("C0", c0), fmt("H0^2", h0_squared));
}

// Sum form sum (L - l_i)^2 <= coef sum (L - l_i)(l_i + shift).
BoundCheck quadratic_sum(const Spectrum& s, InequalityId id, int k, double coef, double shift,
                         std::string notes) {
  const auto& v = s.eigenvalues;
  const double next = v[k];
  double lhs = 0.0;
  double rhs = 0.0;
  for (int i = 0; i < k; ++i) {
    lhs += (next - v[i]) * (next - v[i]);
    rhs += (next - v[i]) * (v[i] + shift);
  }
  rhs *= coef;
  return make_check(id, k, lhs, rhs, check_tolerance(s, k, lhs, rhs), std::move(notes));
}

// lambda_{k+1} - lambda_k <= 2 sqrt(bracket), Infeasible when the bracket is negative.
BoundCheck sqrt_gap(const Spectrum& s, InequalityId id, int k, double bracket, std::string notes) {
  const double gap = s.eigenvalues[k] - s.eigenvalues[k - 1];
  if (bracket < 0.0) return infeasible(id, k, gap, bracket, std::move(notes));
  const double rhs = 2.0 * std::sqrt(bracket);
  return make_check(id, k, gap, rhs, check_tolerance(s, k, gap, rhs), std::move(notes));
}

std::optional<double> sqrt_constant(double product) {
  if (product < 0.0) return std::nullopt;
  return 4.0 * std::sqrt(product);
}

}  // namespace

double BoundConfig::c0(int n) const {
  if (c0_override) return *c0_override;
  return 1.0 + 4.0 / n;
}

void BoundConfig::validate(int n) const {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  if (!(c0(n) >= 1.0)) throw Error(ErrorCode::InvalidArgument, "C0 must be at least 1");
  if (!(h0_squared >= 0.0)) throw Error(ErrorCode::InvalidArgument, "H0^2 must be nonnegative");
  if (curvature && !(curvature->a >= curvature->b && curvature->b >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "curvature needs a >= b >= 0");
}

std::string_view to_string(InequalityId id) {
  for (const auto& [key, name] : kNames)
    if (key == id) return name;
  return "unknown";
}

std::optional<InequalityId> inequality_from_string(std::string_view name) {
  for (const auto& [key, text] : kNames)
    if (text == name) return key;
  return std::nullopt;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Satisfied: return "satisfied";
    case CheckStatus::Violated: return "violated";
    case CheckStatus::Degenerate: return "degenerate";
    case CheckStatus::Infeasible: return "infeasible";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

BoundCheck make_check(InequalityId id, int k, double lhs, double rhs, double abs_tol, std::string notes) {
  BoundCheck c;
  c.id = id;
  c.k = k;
  c.lhs = lhs;
  c.rhs = rhs;
  c.slack = rhs - lhs;
  c.abs_tol = abs_tol;
  c.satisfied = c.slack >= -abs_tol;
  c.status = c.satisfied ? CheckStatus::Satisfied : CheckStatus::Violated;
  c.notes = join(std::move(notes), fmt("abs_tol", abs_tol));
  return c;
}

double check_tolerance(const Spectrum& spectrum, int k, double lhs, double rhs) {
  double rel = 1e-9;
  if (!spectrum.meta.exact && !spectrum.residual_norms.empty() && spectrum.size() > 0) {
    const int last = std::min(spectrum.size(), k + 2);
    const int top = std::min(spectrum.size() - 1, k);
    double r = 0.0;
    for (int i = 0; i < last && i < static_cast<int>(spectrum.residual_norms.size()); ++i)
      r = std::max(r, spectrum.residual_norms[i]);
    const double ref = std::abs(spectrum.eigenvalues[top]);
    if (ref > 0.0) rel = std::max(rel, 10.0 * r / ref);
  }
  return rel * std::max(std::abs(lhs), std::abs(rhs));
}

std::vector<BoundCheck> check_universal(const Spectrum& spectrum, int k, const BoundConfig& config) {
  require_index(spectrum, k);
  const int n = spectrum.meta.n;
  config.validate(n);
  const auto& v = spectrum.eigenvalues;
  const double next = v[k];
  const double gap = next - v[k - 1];
  const Moments m = moments(v, k);
  const bool euclidean = !spectrum.hyperbolic();
  std::vector<BoundCheck> out;

  if (!euclidean) {
    out.push_back(skipped(InequalityId::Ppw, k, kEuclideanOnly));
  } else if (n != 2) {
    out.push_back(skipped(InequalityId::Ppw, k, "PPW stated for n=2"));
  } else {
    const double rhs = 2.0 * m.sum / k;
    out.push_back(make_check(InequalityId::Ppw, k, gap, rhs, check_tolerance(spectrum, k, gap, rhs)));
  }

  if (!euclidean) {
    out.push_back(skipped(InequalityId::Thompson, k, kEuclideanOnly));
    out.push_back(skipped(InequalityId::HileProtter, k, kEuclideanOnly));
    out.push_back(skipped(InequalityId::Yang1, k, kEuclideanOnly));
    out.push_back(skipped(InequalityId::Yang2, k, kEuclideanOnly));
  } else {
    double rhs = 4.0 * m.sum / (n * static_cast<double>(k));
    out.push_back(make_check(InequalityId::Thompson, k, gap, rhs, check_tolerance(spectrum, k, gap, rhs)));

    const double hp_lhs = n * static_cast<double>(k) / 4.0;
    if (gap <= kTieTol * std::abs(next)) {
      BoundCheck c;
      c.id = InequalityId::HileProtter;
      c.k = k;
      c.lhs = hp_lhs;
      c.rhs = std::numeric_limits<double>::infinity();
      c.slack = 0.0;
      c.satisfied = true;
      c.status = CheckStatus::Degenerate;
      c.notes = "lambda_{k+1}=lambda_k;vacuous";
      out.push_back(c);
    } else {
      double sum = 0.0;
      for (int i = 0; i < k; ++i) sum += v[i] / (next - v[i]);
      out.push_back(make_check(InequalityId::HileProtter, k, hp_lhs, sum,
                               check_tolerance(spectrum, k, hp_lhs, sum)));
    }

    out.push_back(quadratic_sum(spectrum, InequalityId::Yang1, k, 4.0 / n, 0.0, {}));

    rhs = (1.0 + 4.0 / n) * m.sum / k;
    out.push_back(make_check(InequalityId::Yang2, k, next, rhs, check_tolerance(spectrum, k, next, rhs)));
  }

  out.push_back(quadratic_sum(spectrum, InequalityId::ChenCheng, k, 4.0 / n,
                              0.25 * n * n * config.h0_squared, fmt("H0^2", config.h0_squared)));

  if (config.curvature) {
    const auto [a, b] = *config.curvature;
    const double shift = -0.25 * (n - 1) * (n - 1) * b * b + 0.5 * (n - 1) * (a * a - b * b);
    out.push_back(quadratic_sum(spectrum, InequalityId::Czl, k, 4.0, shift, join(fmt("a", a), fmt("b", b))));
  }
  return out;
}

std::vector<BoundCheck> gap_upper_bounds(const Spectrum& spectrum, int k, const BoundConfig& config) {
  require_index(spectrum, k);
  const int n = spectrum.meta.n;
  config.validate(n);
  const Moments m = moments(spectrum.eigenvalues, k);
  const double spread = (1.0 + 4.0 / n) * m.variance;
  std::vector<BoundCheck> out;

  if (spectrum.hyperbolic()) {
    out.push_back(skipped(InequalityId::ChengYangGap, k, kEuclideanOnly));
  } else {
    const double c = 2.0 * m.mean / n;
    out.push_back(sqrt_gap(spectrum, InequalityId::ChengYangGap, k, c * c - spread, {}));
  }

  const double c = 2.0 * m.mean / n + 0.5 * n * config.h0_squared;
  out.push_back(sqrt_gap(spectrum, InequalityId::ChenChengGap, k, c * c - spread, fmt("H0^2", config.h0_squared)));

  if (config.curvature) {
    const auto [a, b] = *config.curvature;
    const double t = 2.0 * m.mean - 0.25 * (n - 1) * (n - 1) * b * b + 0.5 * (n - 1) * (a * a - b * b);
    out.push_back(sqrt_gap(spectrum, InequalityId::CzlGap, k, t * t - 5.0 * m.variance,
                           join(fmt("a", a), fmt("b", b))));
  }
  return out;
}

std::vector<BoundCheck> growth_bounds(const Spectrum& spectrum, const BoundConfig& config) {
  require_size(spectrum, 1);
  const int n = spectrum.meta.n;
  config.validate(n);
  const double c0 = config.c0(n);
  const double shift = 0.25 * n * n * config.h0_squared;
  const auto& v = spectrum.eigenvalues;
  std::vector<BoundCheck> out;
  for (int k = 1; k < spectrum.size(); ++k) {
    const double scale = c0 * std::pow(static_cast<double>(k), 2.0 / n);
    if (spectrum.hyperbolic()) {
      out.push_back(skipped(InequalityId::ChengYangGrowth, k, kEuclideanOnly));
    } else {
      const double rhs = scale * v[0];
      out.push_back(make_check(InequalityId::ChengYangGrowth, k, v[k], rhs,
                               check_tolerance(spectrum, k, v[k], rhs), fmt("C0", c0)));
    }
    const double lhs = v[k] + shift;
    const double rhs = scale * (v[0] + shift);
    out.push_back(make_check(InequalityId::ChenChengGrowth, k, lhs, rhs, check_tolerance(spectrum, k, lhs, rhs),
                             constants_note(c0, config.h0_squared)));
  }
  return out;
}

double euclidean_gap_constant(double lambda1, int n, double c0) { return 4.0 * lambda1 * std::sqrt(c0 / n); }

std::optional<double> hyperbolic_gap_constant(double lambda1, int n, double c0, double h0_squared) {
  const double first = lambda1 - 0.25 * (n - 1) * (n - 1);
  const double second = lambda1 + 0.25 * n * n * h0_squared;
  if (first < 0.0 || second < 0.0) return std::nullopt;
  return sqrt_constant(c0 * first * second);
}

std::optional<double> pinched_gap_constant(double lambda1, int n, double c0, double h0_squared,
                                           const Curvature& curvature) {
  const double a2 = curvature.a * curvature.a;
  const double b2 = curvature.b * curvature.b;
  const double first = lambda1 - 0.25 * (n - 1) * (n - 1) * b2 + 0.25 * (a2 - b2);
  const double second = lambda1 + 0.25 * n * n * h0_squared;
  if (first < 0.0 || second < 0.0) return std::nullopt;
  return sqrt_constant(c0 * first * second);
}

std::vector<BoundCheck> theorem_gap_bound(const Spectrum& spectrum, int n, const BoundConfig& config) {
  require_size(spectrum, 2);
  config.validate(n);
  const auto& v = spectrum.eigenvalues;
  const double c0 = config.c0(n);
  const double l1 = v[0];

  struct Family {
    InequalityId id;
    std::optional<double> constant;
    double bracket;
    std::string notes;
  };
  std::vector<Family> families;
  if (!spectrum.hyperbolic()) {
    families.push_back({InequalityId::GapTheoremEuclidean, euclidean_gap_constant(l1, n, c0), 0.0,
                        fmt("C0", c0)});
  } else {
    families.push_back({InequalityId::GapTheoremHyperbolic, hyperbolic_gap_constant(l1, n, c0, config.h0_squared),
                        l1 - 0.25 * (n - 1) * (n - 1),
                        join(constants_note(c0, config.h0_squared), "H0^2 free parameter")});
  }
  if (config.curvature) {
    const Curvature cv = *config.curvature;
    families.push_back({InequalityId::GapTheoremPinched, pinched_gap_constant(l1, n, c0, config.h0_squared, cv),
                        l1 - 0.25 * (n - 1) * (n - 1) * cv.b * cv.b + 0.25 * (cv.a * cv.a - cv.b * cv.b),
                        join(join(constants_note(c0, config.h0_squared), fmt("a", cv.a)), fmt("b", cv.b))});
  }

  std::vector<BoundCheck> out;
  for (int k = 1; k < spectrum.size(); ++k) {
    const double gap = v[k] - v[k - 1];
    for (const Family& f : families) {
      if (!f.constant) {
        out.push_back(infeasible(f.id, k, gap, f.bracket, f.notes));
        continue;
      }
      const double rhs = *f.constant * std::pow(static_cast<double>(k), 1.0 / n);
      out.push_back(make_check(f.id, k, gap, rhs, check_tolerance(spectrum, k, gap, rhs),
                               join(f.notes, fmt("C", *f.constant))));
    }
  }
  return out;
}

std::vector<BoundCheck> proof_step_euclidean(const Spectrum& spectrum, int n) {
  require_size(spectrum, 3);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto& v = spectrum.eigenvalues;
  std::vector<BoundCheck> out;
  for (int k = 1; k + 1 < spectrum.size(); ++k) {
    const double gap = v[k + 1] - v[k];
    const double lhs = n * gap * gap;
    const double rhs = 16.0 * v[0] * v[k + 1];
    out.push_back(make_check(InequalityId::ProofStepEuclidean, k, lhs, rhs, check_tolerance(spectrum, k + 1, lhs, rhs)));
  }
  return out;
}

std::vector<BoundCheck> proof_step_hyperbolic(const Spectrum& spectrum) {
  require_size(spectrum, 3);
  const auto& v = spectrum.eigenvalues;
  const double margin = v[0] - 0.25;
  std::vector<BoundCheck> out;
  for (int k = 1; k + 1 < spectrum.size(); ++k) {
    const double gap = v[k + 1] - v[k];
    if (margin <= 0.0) {
      out.push_back(infeasible(InequalityId::ProofStepHyperbolic, k, gap, margin, "lambda_1<=1/4"));
      continue;
    }
    const double rhs = 4.0 * std::sqrt(margin) * std::sqrt(v[k + 1]);
    out.push_back(make_check(InequalityId::ProofStepHyperbolic, k, gap, rhs,
                             check_tolerance(spectrum, k + 1, gap, rhs)));
  }
  return out;
}

double fit_gap_constant(const Spectrum& spectrum, int n, int prefix) {
  const int m = prefix > 0 ? prefix : spectrum.size();
  if (m < 2) throw Error(ErrorCode::TooFewEigenvalues, "fit needs at least two eigenvalues");
  require_size(spectrum, m);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  const auto& v = spectrum.eigenvalues;
  double best = 0.0;
  for (int k = 1; k < m; ++k)
    best = std::max(best, (v[k] - v[k - 1]) / std::pow(static_cast<double>(k), 1.0 / n));
  return best;
}

std::vector<BoundCheck> check_all(const Spectrum& spectrum, const BoundConfig& config) {
  require_size(spectrum, 2);
  std::vector<BoundCheck> out;
  auto append = [&out](std::vector<BoundCheck> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  for (int k = 1; k < spectrum.size(); ++k) {
    append(check_universal(spectrum, k, config));
    append(gap_upper_bounds(spectrum, k, config));
  }
  append(growth_bounds(spectrum, config));
  append(theorem_gap_bound(spectrum, spectrum.meta.n, config));
  if (spectrum.size() >= 3) {
    if (!spectrum.hyperbolic())
      append(proof_step_euclidean(spectrum, spectrum.meta.n));
    else if (spectrum.meta.n == 2)
      append(proof_step_hyperbolic(spectrum));
  }
  return out;
}

CheckSummary summarize(const std::vector<BoundCheck>& checks) {
  CheckSummary s;
  for (const BoundCheck& c : checks) {
    ++s.total;
    switch (c.status) {
      case CheckStatus::Satisfied: ++s.satisfied; break;
      case CheckStatus::Violated: ++s.violated; break;
      case CheckStatus::Degenerate: ++s.degenerate; break;
      case CheckStatus::Infeasible: ++s.infeasible; break;
      case CheckStatus::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

}  // namespace sgw
