#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "reference.hpp"
#include "sgw/discretize.hpp"
#include "sgw/eigensolve.hpp"
#include "sgw/error.hpp"
#include "sgw/oracles.hpp"

using namespace sgw;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sgw::Error");
  return ErrorCode::InvalidArgument;
}

double smallest(const DomainSpec& d, double h) {
  const Grid g = rasterize(d, h);
  EigenOptions opt;
  opt.keep_vectors = false;
  return smallest_eigenpairs(as_generalized(assemble_euclidean(g)), 1, opt).eigenvalues[0];
}

}  // namespace

TEST_CASE("single-node square operator is 4/h^2") {
  const SparseOperator a = assemble_euclidean(rasterize(DomainSpec{Rectangle{1.0, 1.0}}, 0.5));
  REQUIRE(a.size() == 1);
  CHECK(a.at(0, 0) == doctest::Approx(16.0));
}

TEST_CASE("9-node square stencil has the closed-form eigenvalues") {
  const double h = 0.25;
  const SparseOperator a = assemble_euclidean(rasterize(DomainSpec{Rectangle{1.0, 1.0}}, h));
  REQUIRE(a.size() == 9);
  std::vector<double> expected;
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= 3; ++q)
      expected.push_back(2.0 / (h * h) * (2.0 - std::cos(p * std::numbers::pi * h) - std::cos(q * std::numbers::pi * h)));
  std::sort(expected.begin(), expected.end());
  const auto dense = ref::jacobi_eigenvalues(ref::dense(a));
  for (int i = 0; i < 9; ++i) CHECK(dense[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  CHECK(expected[0] == doctest::Approx(32.0 * (2.0 - std::sqrt(2.0))));
}

TEST_CASE("operators are exactly symmetric with a positive diagonal") {
  for (const auto& d : {DomainSpec{Disk{1.0}}, DomainSpec{LShape{2.0, 1.0}}, DomainSpec{Box{1.0, 1.0, 1.0}},
                        DomainSpec{Polygon{{{0.0, 0.0}, {1.0, 0.2}, {0.4, 1.0}}}}}) {
    const SparseOperator a = assemble_euclidean(rasterize(d, d.dimension() == 3 ? 0.125 : 1.0 / 16));
    CHECK(a.symmetric);
    CHECK(a.symmetry_defect() == 0.0);
    for (double v : a.diagonal()) CHECK(v > 0.0);
  }
}

TEST_CASE("cut-cell operator is positive definite against the dense oracle") {
  const SparseOperator a = assemble_euclidean(rasterize(DomainSpec{Disk{1.0}}, 0.2));
  REQUIRE(a.size() <= 400);
  const auto dense = ref::jacobi_eigenvalues(ref::dense(a));
  CHECK(dense.front() > 0.0);
}

TEST_CASE("a strip one node thick is rejected") {
  CHECK(code_of([] { assemble_euclidean(rasterize(DomainSpec{Rectangle{4.0, 1.0}}, 0.5)); }) ==
        ErrorCode::UnsupportedShape);
}

TEST_CASE("hyperbolic single node: stiffness 16, mass 4/9, eigenvalue 36") {
  const Grid g = rasterize(DomainSpec{HyperbolicRect{0.0, 1.0, 1.0, 2.0}}, 0.5);
  REQUIRE(g.size() == 1);
  const GeneralizedProblem p = assemble_hyperbolic(g);
  CHECK(p.stiffness.at(0, 0) == doctest::Approx(16.0));
  CHECK(p.mass[0] == doctest::Approx(4.0 / 9.0));
  CHECK(p.stiffness.at(0, 0) / p.mass[0] == doctest::Approx(36.0));
}

TEST_CASE("wrong domain kinds are rejected") {
  const Grid euclid = rasterize(DomainSpec{Rectangle{1.0, 1.0}}, 0.25);
  const Grid hyper = rasterize(DomainSpec{HyperbolicRect{0.0, 1.0, 1.0, 2.0}}, 0.25);
  CHECK(code_of([&] { assemble_hyperbolic(euclid); }) == ErrorCode::WrongDomainKind);
  CHECK(code_of([&] { assemble_euclidean(hyper); }) == ErrorCode::WrongDomainKind);
}

TEST_CASE("hyperbolic spectrum stays above 1/4") {
  const Grid g = rasterize(DomainSpec{HyperbolicRect{0.0, 1.0, 1.0, 2.0}}, 1.0 / 64);
  const Spectrum s = smallest_eigenpairs(assemble_hyperbolic(g), 1);
  CHECK(s.eigenvalues[0] > 0.25);
}

TEST_CASE("triplet assembly merges duplicates and sorts columns") {
  const SparseOperator a = SparseOperator::from_triplets(2, {{1, 0, 1.0}, {0, 1, 2.0}, {0, 0, 3.0}, {0, 1, 1.0}, {1, 1, 5.0}});
  CHECK(a.nonzeros() == 4);
  CHECK(a.at(0, 0) == 3.0);
  CHECK(a.at(0, 1) == 3.0);
  CHECK(a.at(1, 0) == 1.0);
  CHECK(a.at(1, 1) == 5.0);
  CHECK_FALSE(a.symmetric);
  const auto y = a.multiply(std::vector<double>{1.0, 2.0});
  CHECK(y[0] == 9.0);
  CHECK(y[1] == 11.0);
  CHECK(code_of([] { SparseOperator::from_triplets(1, {{0, 1, 1.0}}); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("square lambda_1 converges with order close to 2") {
  const DomainSpec sq{Rectangle{1.0, 1.0}};
  const double exact = 2.0 * std::numbers::pi * std::numbers::pi;
  const double e64 = std::abs(smallest(sq, 1.0 / 64) - exact);
  const double e128 = std::abs(smallest(sq, 1.0 / 128) - exact);
  const double order = std::log2(e64 / e128);
  MESSAGE("square order " << order);
  CHECK(order >= 1.9);
}

TEST_CASE("disk lambda_1 converges with order at least 1.5") {
  const DomainSpec disk{Disk{1.0}};
  const double j = bessel_zero(0.0, 1);
  const double exact = j * j;
  const double e32 = std::abs(smallest(disk, 1.0 / 32) - exact);
  const double e64 = std::abs(smallest(disk, 1.0 / 64) - exact);
  const double e128 = std::abs(smallest(disk, 1.0 / 128) - exact);
  const double order = std::log2(e64 / e128);
  MESSAGE("disk errors " << e32 << " " << e64 << " " << e128 << " order " << order);
  CHECK(order >= 1.5);
}
