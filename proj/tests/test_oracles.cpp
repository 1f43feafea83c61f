#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "reference.hpp"
#include "sgw/error.hpp"
#include "sgw/oracles.hpp"

using namespace sgw;

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an sgw::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Bessel values at the origin and at the first zero") {
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(1.0, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-12);
}

TEST_CASE("Bessel values agree with the power series and with Boost") {
  for (double order : {0.0, 1.0, 2.0, 5.0, 0.5, 1.5}) {
    for (double x : {0.3, 1.0, 4.7, 9.1, 13.0}) {
      CAPTURE(order);
      CAPTURE(x);
      const double v = bessel_j(order, x);
      CHECK(std::abs(v - static_cast<double>(ref::bessel_series(order, x))) < 1e-11);
      CHECK(std::abs(v - boost::math::cyl_bessel_j(order, x)) < 1e-11);
    }
  }
  for (double order : {0.0, 3.0, 17.0, 40.0}) {
    for (double x : {25.0, 80.0, 150.0, 199.5}) {
      CAPTURE(order);
      CAPTURE(x);
      CHECK(std::abs(bessel_j(order, x) - boost::math::cyl_bessel_j(order, x)) < 1e-10);
    }
  }
}

TEST_CASE("first zeros match the bisection oracle") {
  CHECK(std::abs(bessel_zero(0.0, 1) - ref::bessel_zero_bisect(0.0, 1)) < 1e-8);
  CHECK(std::abs(bessel_zero(1.0, 1) - ref::bessel_zero_bisect(1.0, 1)) < 1e-8);
  CHECK(bessel_zero(0.0, 1) == doctest::Approx(2.4048255577).epsilon(1e-10));
  CHECK(bessel_zero(1.0, 1) == doctest::Approx(3.8317059702).epsilon(1e-10));
  CHECK(bessel_zero(0.5, 1) == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(bessel_zero(0.0, 2) > bessel_zero(0.0, 1));
}

TEST_CASE("zeros agree with Boost across orders") {
  for (int order : {0, 1, 2, 7, 20, 40})
    for (int k : {1, 2, 5, 20}) {
      CAPTURE(order);
      CAPTURE(k);
      CHECK(bessel_zero(order, k) == doctest::Approx(boost::math::cyl_bessel_j_zero(double(order), k)).epsilon(1e-11));
    }
}

TEST_CASE("zeros interlace") {
  for (int p = 0; p < kBesselMaxIntegerOrder; ++p)
    for (int k = 1; k <= 20; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      CHECK(bessel_zero(p, k) < bessel_zero(p + 1, k));
      CHECK(bessel_zero(p + 1, k) < bessel_zero(p, k + 1));
    }
}

TEST_CASE("bessel_zeros is the ascending list of single zeros") {
  const auto z = bessel_zeros(3.0, 10);
  REQUIRE(z.size() == 10);
  for (int k = 0; k < 10; ++k) CHECK(z[k] == bessel_zero(3.0, k + 1));
}

TEST_CASE("unsupported orders and arguments") {
  CHECK(code_of([] { bessel_j(0.7, 1.0); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { bessel_j(41.0, 1.0); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { bessel_j(0.0, 200.5); }) == ErrorCode::RangeError);
  CHECK(code_of([] { bessel_zero(2.5, 1); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { ppw_ratio_bound(4); }) == ErrorCode::UnsupportedOrder);
  CHECK(bessel_order_supported(1.5));
  CHECK_FALSE(bessel_order_supported(-1.0));
}

TEST_CASE("rectangle closed forms") {
  const auto sq = rectangle_spectrum(1.0, 1.0, 4).eigenvalues;
  REQUIRE(sq.size() == 4);
  CHECK(sq[0] == doctest::Approx(2 * kPi2));
  CHECK(sq[1] == doctest::Approx(5 * kPi2));
  CHECK(sq[2] == doctest::Approx(5 * kPi2));
  CHECK(sq[3] == doctest::Approx(8 * kPi2));
  const auto r = rectangle_spectrum(2.0, 1.0, 2).eigenvalues;
  CHECK(r[0] == doctest::Approx(1.25 * kPi2));
  CHECK(r[1] == doctest::Approx(2.0 * kPi2));
  CHECK(box_spectrum(1.0, 1.0, 1.0, 1).eigenvalues[0] == doctest::Approx(3 * kPi2));
}

TEST_CASE("rectangle and box spectra equal brute-force enumeration") {
  const auto brute_r = ref::brute_rectangle(2.0, 1.0, 60);
  const auto r = rectangle_spectrum(2.0, 1.0, 300).eigenvalues;
  for (int i = 0; i < 300; ++i) CHECK(r[i] == doctest::Approx(brute_r[i]).epsilon(1e-14));
  const auto brute_b = ref::brute_box(1.0, 1.5, 2.0, 25);
  const auto b = box_spectrum(1.0, 1.5, 2.0, 300).eigenvalues;
  for (int i = 0; i < 300; ++i) CHECK(b[i] == doctest::Approx(brute_b[i]).epsilon(1e-14));
}

TEST_CASE("rectangle spectra are swap invariant and scale as 1/c^2") {
  const auto a = rectangle_spectrum(1.0, 3.0, 50).eigenvalues;
  const auto b = rectangle_spectrum(3.0, 1.0, 50).eigenvalues;
  const auto c = rectangle_spectrum(2.0, 6.0, 50).eigenvalues;
  for (int i = 0; i < 50; ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
    CHECK(c[i] == doctest::Approx(a[i] / 4.0).epsilon(1e-14));
  }
}

TEST_CASE("disk closed forms and multiplicities") {
  const double j01 = bessel_zero(0.0, 1);
  const double j11 = bessel_zero(1.0, 1);
  CHECK(disk_spectrum(1.0, 1).eigenvalues[0] == doctest::Approx(5.7832).epsilon(1e-4));
  const auto d = disk_spectrum(1.0, 3).eigenvalues;
  CHECK(d[0] == doctest::Approx(j01 * j01));
  CHECK(d[1] == doctest::Approx(j11 * j11));
  CHECK(d[2] == doctest::Approx(j11 * j11));
  CHECK(disk_spectrum(2.0, 1).eigenvalues[0] == doctest::Approx(j01 * j01 / 4.0));
  // Each angular order m >= 1 appears twice.
  const auto many = disk_spectrum(1.0, 200).eigenvalues;
  const auto clusters = cluster_multiplicities(many, 1e-12);
  for (std::size_t c = 0; c + 1 < clusters.size(); ++c) CHECK((clusters[c].multiplicity == 1 || clusters[c].multiplicity == 2));
  std::vector<double> expected;
  for (int m = 0; m <= 30; ++m)
    for (int k = 1; k <= 30; ++k) {
      const double z = boost::math::cyl_bessel_j_zero(double(m), k);
      expected.push_back(z * z);
      if (m > 0) expected.push_back(z * z);
    }
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < 200; ++i) CHECK(many[i] == doctest::Approx(expected[i]).epsilon(1e-11));
}

TEST_CASE("oracle dispatch") {
  CHECK(oracle_spectrum(DomainSpec{Rectangle{1.0, 1.0}}, 3).provenance == "rectangle");
  CHECK(oracle_spectrum(DomainSpec{Box{1.0, 1.0, 1.0}}, 3).provenance == "box");
  CHECK(oracle_spectrum(DomainSpec{Disk{1.0}}, 3).provenance == "disk");
  CHECK(code_of([] { oracle_spectrum(DomainSpec{LShape{2.0, 1.0}}, 3); }) == ErrorCode::UnsupportedShape);
  const Spectrum s = rectangle_spectrum(1.0, 1.0, 5).to_spectrum(DomainSpec{Rectangle{1.0, 1.0}});
  CHECK(s.meta.exact);
  CHECK(s.meta.n == 2);
  CHECK(s.size() == 5);
  for (double r : s.residual_norms) CHECK(r == 0.0);
}

TEST_CASE("Weyl estimate") {
  CHECK(weyl_estimate(2, 1.0, 100) == doctest::Approx(400.0 * std::numbers::pi));
  CHECK(weyl_estimate(2, 2.0, 100) == doctest::Approx(200.0 * std::numbers::pi));
  // 4 pi^2 (3 / (4 pi))^(2/3)
  CHECK(weyl_estimate(3, 1.0, 1) == doctest::Approx(4.0 * kPi2 * std::cbrt(std::pow(3.0 / (4.0 * std::numbers::pi), 2.0))));
  CHECK(weyl_estimate(3, 1.0, 1) == doctest::Approx(15.19).epsilon(1e-3));
  CHECK(weyl_estimate(3, 1.0, 1) / (3 * kPi2) > 0.3);
  // The leading term alone misses the perimeter correction, about 12% at k = 100 on the square.
  // With N(lambda) ~ lambda/(4 pi) - 4 sqrt(lambda)/(4 pi) the gap closes to under 2%.
  const auto sq = rectangle_spectrum(1.0, 1.0, 2000).eigenvalues;
  double previous = 1.0;
  for (int k : {100, 500, 2000}) {
    const double actual = sq[k - 1];
    const double leading = std::abs(actual - weyl_estimate(2, 1.0, k)) / actual;
    const double root = 2.0 + std::sqrt(4.0 + 4.0 * std::numbers::pi * k);
    CAPTURE(k);
    CHECK(leading < 0.15);
    CHECK(leading < previous);
    CHECK(std::abs(actual - root * root) / actual < 0.02);
    previous = leading;
  }
}

TEST_CASE("PPW ratio bound") {
  CHECK(ppw_ratio_bound(2) == doctest::Approx(2.5387).epsilon(1e-3 / 2.5387));
  const double j32 = boost::math::cyl_bessel_j_zero(1.5, 1);
  CHECK(ppw_ratio_bound(3) == doctest::Approx(j32 * j32 / kPi2).epsilon(1e-11));
  const auto sq = rectangle_spectrum(1.0, 1.0, 2).eigenvalues;
  CHECK(sq[1] / sq[0] <= ppw_ratio_bound(2));
}
