#pragma once

#include <string>
#include <vector>

#include "sgw/eigensolve.hpp"
#include "sgw/geometry.hpp"

namespace sgw {

/// Closed-form or asymptotic reference spectrum, multiplicities expanded.
struct OracleSpectrum {
  std::vector<double> eigenvalues;
  std::string provenance;  // rectangle | box | disk | weyl
  bool exact = true;

  /// Packs the values as a residual-free Spectrum for the bounds and file code.
  Spectrum to_spectrum(const DomainSpec& domain) const;
};

OracleSpectrum rectangle_spectrum(double a, double b, int k);
OracleSpectrum box_spectrum(double a, double b, double c, int k);
OracleSpectrum disk_spectrum(double radius, int k);

/// Dispatches to the closed form for rectangle, box and disk domains; UnsupportedShape otherwise.
OracleSpectrum oracle_spectrum(const DomainSpec& domain, int k);

/// Bessel function of the first kind for orders 0..40 and 1/2, 3/2 on 0 <= x <= 200.
double bessel_j(double order, double x);

/// k-th positive zero of J_order (k = 1..100).
double bessel_zero(double order, int k);

/// First `count` positive zeros of J_order, ascending.
std::vector<double> bessel_zeros(double order, int count);

inline constexpr double kBesselMaxArgument = 200.0;
inline constexpr int kBesselMaxZeroIndex = 100;
inline constexpr int kBesselMaxIntegerOrder = 40;

bool bessel_order_supported(double order);

/// Leading Weyl term 4 pi^2 (k / (omega_n |Omega|))^(2/n).
double weyl_estimate(int n, double volume, int k);

/// (j_{n/2,1} / j_{n/2-1,1})^2, the ball's lambda_2 / lambda_1.
double ppw_ratio_bound(int n);

}  // namespace sgw
