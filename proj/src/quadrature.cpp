#include "sgw/quadrature.hpp"

#include <cmath>
#include <string>

#include "sgw/error.hpp"

namespace sgw {
namespace {

constexpr double kUnitGradientTol = 1e-10;

void require_samples(const Grid& grid, std::size_t count) {
  if (static_cast<int>(count) != grid.size())
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(grid.size()) + " samples, got " +
                                             std::to_string(count));
}

void require_pair(const EigenBasis& basis, int i, int k) {
  if (i < 1 || i > k) throw Error(ErrorCode::IndexOrder, "need 1 <= i <= k");
  if (basis.size() < k + 2)
    throw Error(ErrorCode::TooFewEigenpairs, "need " + std::to_string(k + 2) + " eigenpairs, have " +
                                                 std::to_string(basis.size()));
}

void require_grid(const EigenBasis& basis, const TestFunction& f) {
  if (basis.grid == nullptr) throw Error(ErrorCode::InvalidArgument, "basis has no grid");
  require_samples(*basis.grid, f.value.size());
}

double frame_dot(const std::array<Complex, 3>& a, const FrameVector& b) {
  return a[0].real() * b[0] + a[1].real() * b[1] + a[2].real() * b[2];
}

std::vector<double> weighted_by(std::span<const double> u, auto&& term) {
  std::vector<double> out(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) out[p] = term(p) * u[p] * u[p];
  return out;
}

void require_unit_gradient(const TestFunction& f) {
  if (!f.real()) throw Error(ErrorCode::InvalidArgument, "unit-gradient checks need a real test function");
  for (const auto& g : f.gradient) {
    const double norm = std::sqrt(std::norm(g[0]) + std::norm(g[1]) + std::norm(g[2]));
    if (std::abs(norm - 1.0) > kUnitGradientTol)
      throw Error(ErrorCode::NotUnitGradient, "|grad f| = " + std::to_string(norm));
  }
}

// -1/4 int (Lap f)^2 u^2 - 1/2 int (grad Lap f . grad f) u^2
double curvature_terms(const Grid& grid, const TestFunction& f, std::span<const double> u) {
  const auto lap2 = weighted_by(u, [&](std::size_t p) { return std::norm(f.laplacian[p]); });
  const auto mixed = weighted_by(u, [&](std::size_t p) { return f.grad_laplacian_dot_gradient[p]; });
  return -0.25 * discrete_integral(grid, lap2) - 0.5 * discrete_integral(grid, mixed);
}

}  // namespace

EigenBasis make_basis(const Grid& grid, const Spectrum& spectrum) {
  if (!spectrum.has_vectors()) throw Error(ErrorCode::TooFewEigenpairs, "spectrum carries no eigenvectors");
  if (spectrum.vector_rows != grid.size()) throw Error(ErrorCode::SizeMismatch, "eigenvectors do not match the grid");
  // B-orthonormal with B = I (or 1/y^2) becomes L2-orthonormal after dividing by sqrt(h^n) (or h).
  const double factor = grid.hyperbolic() ? 1.0 / grid.h : std::pow(grid.h, -0.5 * grid.dim);
  EigenBasis basis;
  basis.grid = &grid;
  basis.eigenvalues = spectrum.eigenvalues;
  for (int c = 0; c < spectrum.size(); ++c) {
    const auto v = spectrum.vector(c);
    std::vector<double> f(v.begin(), v.end());
    for (double& x : f) x *= factor;
    basis.functions.push_back(std::move(f));
  }
  return basis;
}

double node_weight(const Grid& grid, int i) {
  if (grid.hyperbolic()) {
    const double y = grid.position(i)[1];
    return grid.h * grid.h / (y * y);
  }
  return std::pow(grid.h, grid.dim);
}

double discrete_integral(const Grid& grid, std::span<const double> samples) {
  require_samples(grid, samples.size());
  double sum = 0.0;
  for (int i = 0; i < grid.size(); ++i) sum += samples[i] * node_weight(grid, i);
  return sum;
}

Complex discrete_integral(const Grid& grid, std::span<const Complex> samples) {
  require_samples(grid, samples.size());
  Complex sum = 0.0;
  for (int i = 0; i < grid.size(); ++i) sum += samples[i] * node_weight(grid, i);
  return sum;
}

std::vector<FrameVector> gradient_field(const Grid& grid, std::span<const double> samples) {
  require_samples(grid, samples.size());
  std::vector<FrameVector> out(grid.size(), FrameVector{0.0, 0.0, 0.0});
  for (int i = 0; i < grid.size(); ++i) {
    const double frame = grid.hyperbolic() ? grid.position(i)[1] : 1.0;
    for (int axis = 0; axis < grid.dim; ++axis) {
      const int lo = 2 * axis;
      const int hi = 2 * axis + 1;
      const double a = grid.boundary_fractions[i][lo] * grid.h;
      const double b = grid.boundary_fractions[i][hi] * grid.h;
      const double f_lo = grid.neighbors[i][lo] >= 0 ? samples[grid.neighbors[i][lo]] : 0.0;
      const double f_hi = grid.neighbors[i][hi] >= 0 ? samples[grid.neighbors[i][hi]] : 0.0;
      // Derivative of the parabola through (-a, f_lo), (0, f_0), (b, f_hi).
      const double d = -b / (a * (a + b)) * f_lo + (b - a) / (a * b) * samples[i] + a / (b * (a + b)) * f_hi;
      out[i][axis] = frame * d;
    }
  }
  return out;
}

TestFunction sample_test_function(const Grid& grid, const TestFunctionSpec& spec) {
  if (spec.kind != TestFunctionKind::HyperbolicLog && (spec.axis < 0 || spec.axis >= grid.dim))
    throw Error(ErrorCode::InvalidArgument, "test function axis out of range");
  if (spec.kind == TestFunctionKind::HyperbolicLog && !grid.hyperbolic())
    throw Error(ErrorCode::WrongDomainKind, "log y needs a half-plane grid");

  const int n = grid.size();
  TestFunction f;
  f.spec = spec;
  f.value.resize(n);
  f.gradient.assign(n, {Complex{}, Complex{}, Complex{}});
  f.laplacian.assign(n, Complex{});
  f.grad_laplacian_dot_gradient.assign(n, 0.0);
  const Complex i_unit(0.0, 1.0);

  for (int p = 0; p < n; ++p) {
    const auto x = grid.position(p);
    // Half-plane: frame gradient y d, Laplace-Beltrami y^2 times the flat Laplacian.
    const double frame = grid.hyperbolic() ? x[1] : 1.0;
    switch (spec.kind) {
      case TestFunctionKind::Coordinate:
        f.value[p] = x[spec.axis];
        f.gradient[p][spec.axis] = frame;
        break;
      case TestFunctionKind::ComplexExponential: {
        const Complex g = std::exp(i_unit * spec.alpha * x[spec.axis]);
        f.value[p] = g;
        f.gradient[p][spec.axis] = frame * i_unit * spec.alpha * g;
        f.laplacian[p] = -frame * frame * spec.alpha * spec.alpha * g;
        break;
      }
      case TestFunctionKind::HyperbolicLog:
        f.value[p] = std::log(x[1]);
        f.gradient[p][1] = 1.0;
        f.laplacian[p] = -1.0;
        break;
    }
  }
  return f;
}

LemmaTerms lemma_terms(const EigenBasis& basis, const TestFunction& g, int i, int k) {
  require_pair(basis, i, k);
  require_grid(basis, g);
  const Grid& grid = *basis.grid;
  const auto& u = basis.functions[i - 1];
  const auto grad_u = gradient_field(grid, u);

  const int n = grid.size();
  std::vector<double> t1(n);
  std::vector<double> t2(n);
  std::vector<double> t3(n);
  for (int p = 0; p < n; ++p) {
    const auto& dg = g.gradient[p];
    const double dg2 = std::norm(dg[0]) + std::norm(dg[1]) + std::norm(dg[2]);
    const Complex mixed = 2.0 * (dg[0] * grad_u[p][0] + dg[1] * grad_u[p][1] + dg[2] * grad_u[p][2]) +
                          u[p] * g.laplacian[p];
    t1[p] = dg2 * u[p] * u[p];
    t2[p] = std::norm(mixed);
    t3[p] = std::norm(g.value[p]) * u[p] * u[p];
  }

  const auto& lambda = basis.eigenvalues;
  const double a = lambda[k] - lambda[i - 1];
  const double b = lambda[k + 1] - lambda[i - 1];
  LemmaTerms terms;
  terms.t1 = discrete_integral(grid, t1);
  terms.t2 = discrete_integral(grid, t2);
  terms.t3 = discrete_integral(grid, t3);
  terms.lhs_factor = a + b;
  terms.rhs_product = a * b;
  return terms;
}

BoundCheck verify_mainformula(const EigenBasis& basis, const TestFunction& g, int i, int k) {
  const LemmaTerms t = lemma_terms(basis, g, i, k);
  const double lhs = t.lhs_factor * t.t1;
  const double rhs = t.t2 + t.rhs_product * t.t3;
  BoundCheck check = make_check(InequalityId::MainFormula, k, lhs, rhs, kLemmaRelTol * std::abs(rhs),
                                "i=" + std::to_string(i) + ";rel_tol=1e-3 for O(h^2) bias");
  return check;
}

double directional_energy(const EigenBasis& basis, const TestFunction& f, int i) {
  require_grid(basis, f);
  if (i < 1 || i > basis.size()) throw Error(ErrorCode::TooFewEigenpairs, "eigenpair index out of range");
  const auto& u = basis.functions[i - 1];
  const auto grad_u = gradient_field(*basis.grid, u);
  std::vector<double> s(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) {
    const double d = frame_dot(f.gradient[p], grad_u[p]);
    s[p] = d * d;
  }
  return discrete_integral(*basis.grid, s);
}

IntegrationByParts integration_by_parts(const EigenBasis& basis, const TestFunction& f, int i) {
  require_grid(basis, f);
  if (!f.real()) throw Error(ErrorCode::InvalidArgument, "integration by parts is stated for real f");
  if (i < 1 || i > basis.size()) throw Error(ErrorCode::TooFewEigenpairs, "eigenpair index out of range");
  const Grid& grid = *basis.grid;
  const auto& u = basis.functions[i - 1];
  const auto grad_u = gradient_field(grid, u);
  std::vector<double> s(u.size());
  for (std::size_t p = 0; p < u.size(); ++p) {
    const double v = 2.0 * frame_dot(f.gradient[p], grad_u[p]) + u[p] * f.laplacian[p].real();
    s[p] = v * v;
  }
  IntegrationByParts out;
  out.lhs = discrete_integral(grid, s);
  out.rhs = 4.0 * directional_energy(basis, f, i) + 4.0 * curvature_terms(grid, f, u);
  return out;
}

std::vector<BoundCheck> verify_corollaries(const EigenBasis& basis, const TestFunction& f, int i, int k) {
  require_pair(basis, i, k);
  require_grid(basis, f);
  require_unit_gradient(f);
  const Grid& grid = *basis.grid;
  const auto& u = basis.functions[i - 1];
  const auto& lambda = basis.eigenvalues;
  const double li = lambda[i - 1];
  const double next = lambda[k];
  const double after = lambda[k + 1];
  const std::string index_note = "i=" + std::to_string(i);
  std::vector<BoundCheck> out;

  {
    const auto grad2 = weighted_by(u, [&](std::size_t p) {
      return std::norm(f.gradient[p][0]) + std::norm(f.gradient[p][1]) + std::norm(f.gradient[p][2]);
    });
    const auto grad4 = weighted_by(u, [&](std::size_t p) {
      const double g2 = std::norm(f.gradient[p][0]) + std::norm(f.gradient[p][1]) + std::norm(f.gradient[p][2]);
      return g2 * g2;
    });
    const double a = next - li;
    const double b = after - li;
    const double lhs = (a + b) * discrete_integral(grid, grad2);
    const double rhs = 2.0 * std::sqrt(a * b * discrete_integral(grid, grad4)) +
                       integration_by_parts(basis, f, i).lhs;
    out.push_back(make_check(InequalityId::PhaseInequality, k, lhs, rhs, kLemmaRelTol * std::abs(rhs), index_note));
  }

  const double curvature = curvature_terms(grid, f, u);
  const double gap = after - next;
  {
    const double lhs = gap * gap;
    const double rhs = 16.0 * (directional_energy(basis, f, i) + curvature) * after;
    out.push_back(make_check(InequalityId::UnitGradientSquared, k, lhs, rhs, kLemmaRelTol * std::abs(rhs), index_note));
  }
  {
    const double bracket = li + curvature;
    if (bracket < 0.0) {
      BoundCheck c;
      c.id = InequalityId::UnitGradientRayleigh;
      c.k = k;
      c.lhs = gap;
      c.rhs = c.slack = std::nan("");
      c.status = CheckStatus::Infeasible;
      c.notes = index_note + ";bracket=" + std::to_string(bracket);
      out.push_back(c);
    } else {
      const double rhs = 4.0 * std::sqrt(bracket) * std::sqrt(after);
      out.push_back(
          make_check(InequalityId::UnitGradientRayleigh, k, gap, rhs, kLemmaRelTol * std::abs(rhs), index_note));
    }
  }
  return out;
}

}  // namespace sgw
