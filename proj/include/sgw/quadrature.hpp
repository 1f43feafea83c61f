#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "sgw/bounds.hpp"
#include "sgw/eigensolve.hpp"
#include "sgw/geometry.hpp"

namespace sgw {

using Complex = std::complex<double>;
/// Components in the orthonormal frame: plain partials for Euclidean grids, y times the partials
/// on the half-plane, so the metric inner product is the frame dot product.
using FrameVector = std::array<double, 3>;

/// Eigenfunctions on a grid, normalised so the discrete integral of u_i u_j is delta_ij.
/// The grid must outlive the basis.
struct EigenBasis {
  const Grid* grid = nullptr;
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> functions;

  int size() const { return static_cast<int>(functions.size()); }
};

/// Rescales the B-orthonormal solver vectors into discrete L2-orthonormal functions.
EigenBasis make_basis(const Grid& grid, const Spectrum& spectrum);

/// Quadrature weight at node i: h^n, or h^2 / y^2 on the half-plane.
double node_weight(const Grid& grid, int i);

double discrete_integral(const Grid& grid, std::span<const double> samples);
Complex discrete_integral(const Grid& grid, std::span<const Complex> samples);

/// Frame gradient by three-point differences on the uneven stencil, extending the samples by
/// zero across the boundary.
std::vector<FrameVector> gradient_field(const Grid& grid, std::span<const double> samples);

enum class TestFunctionKind { Coordinate, ComplexExponential, HyperbolicLog };

struct TestFunctionSpec {
  TestFunctionKind kind = TestFunctionKind::Coordinate;
  int axis = 0;        // coordinate and exponential kinds
  double alpha = 1.0;  // exponential kind; alpha = 0 gives the constant 1

  static TestFunctionSpec coordinate(int axis) { return {TestFunctionKind::Coordinate, axis, 0.0}; }
  static TestFunctionSpec exponential(double alpha, int axis) {
    return {TestFunctionKind::ComplexExponential, axis, alpha};
  }
  static TestFunctionSpec hyperbolic_log() { return {TestFunctionKind::HyperbolicLog, 1, 0.0}; }
};

/// Closed-form samples of a test function and its derivatives at every grid node.
struct TestFunction {
  TestFunctionSpec spec;
  std::vector<Complex> value;
  std::vector<std::array<Complex, 3>> gradient;
  std::vector<Complex> laplacian;
  /// grad(Laplacian f) . grad f; zero for every kind in the catalogue.
  std::vector<double> grad_laplacian_dot_gradient;

  bool real() const { return spec.kind != TestFunctionKind::ComplexExponential; }
};

TestFunction sample_test_function(const Grid& grid, const TestFunctionSpec& spec);

struct LemmaTerms {
  double t1 = 0.0;  // int |grad g|^2 u_i^2
  double t2 = 0.0;  // int |2 grad g . grad u_i + u_i Lap g|^2
  double t3 = 0.0;  // int |g u_i|^2
  double lhs_factor = 0.0;
  double rhs_product = 0.0;
};

/// Integrals of the key eigenfunction inequality for 1 <= i <= k, basis of at least k+2 pairs.
LemmaTerms lemma_terms(const EigenBasis& basis, const TestFunction& g, int i, int k);

/// lhs_factor T1 <= T2 + rhs_product T3 with abs_tol 1e-3 (T2 + rhs_product T3).
BoundCheck verify_mainformula(const EigenBasis& basis, const TestFunction& g, int i, int k);

/// The phase-function consequence and the two unit-gradient gap inequalities for a real f with
/// |grad f| = 1.
std::vector<BoundCheck> verify_corollaries(const EigenBasis& basis, const TestFunction& f, int i, int k);

/// int (grad f . grad u_i)^2, the main ingredient of the unit-gradient gap inequality.
double directional_energy(const EigenBasis& basis, const TestFunction& f, int i);

struct IntegrationByParts {
  double lhs = 0.0;  // int (2 grad f . grad u + u Lap f)^2
  double rhs = 0.0;  // 4 int (grad f . grad u)^2 - int (Lap f)^2 u^2 - 2 int (grad Lap f . grad f) u^2
};

IntegrationByParts integration_by_parts(const EigenBasis& basis, const TestFunction& f, int i);

inline constexpr double kLemmaRelTol = 1e-3;

}  // namespace sgw
