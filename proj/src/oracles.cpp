#include "sgw/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sgw/error.hpp"

namespace sgw {
namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

void require_count(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least one eigenvalue");
}

void require_length(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) throw Error(ErrorCode::InvalidDomain, std::string(what) + " must be positive");
}

// Collects every separable value pi^2 sum (m_i / L_i)^2 up to `bound`, doubling the bound until
// at least k values are found. Values above the bound are never needed: every unexplored index
// tuple gives a value larger than the bound, hence larger than the k-th collected value.
void enumerate_separable(const std::vector<double>& lengths, std::size_t axis, double partial,
                         double bound, std::vector<double>& out) {
  double rest = 0.0;
  for (std::size_t e = axis + 1; e < lengths.size(); ++e) rest += 1.0 / (lengths[e] * lengths[e]);
  for (int m = 1;; ++m) {
    const double s = partial + (static_cast<double>(m) * m) / (lengths[axis] * lengths[axis]);
    if (kPi2 * (s + rest) > bound) break;
    if (axis + 1 == lengths.size()) {
      out.push_back(kPi2 * s);
    } else {
      enumerate_separable(lengths, axis + 1, s, bound, out);
    }
  }
}

std::vector<double> separable_spectrum(const std::vector<double>& lengths, int k) {
  double sum_inv = 0.0;
  double cell = 1.0;
  for (double l : lengths) {
    sum_inv += 1.0 / (l * l);
    cell *= l;
  }
  double bound = 2.0 * kPi2 * sum_inv + 4.0 * std::numbers::pi * k / cell;
  while (true) {
    std::vector<double> values;
    enumerate_separable(lengths, 0, 0.0, bound, values);
    if (static_cast<int>(values.size()) >= k) {
      std::sort(values.begin(), values.end());
      values.resize(k);
      return values;
    }
    bound *= 2.0;
  }
}

}  // namespace

Spectrum OracleSpectrum::to_spectrum(const DomainSpec& domain) const {
  Spectrum s;
  s.eigenvalues = eigenvalues;
  s.residual_norms.assign(eigenvalues.size(), 0.0);
  s.meta.domain = domain;
  s.meta.n = domain.dimension();
  s.meta.provenance = "oracle:" + provenance;
  s.meta.exact = exact;
  return s;
}

OracleSpectrum rectangle_spectrum(double a, double b, int k) {
  require_length(a, "rectangle side");
  require_length(b, "rectangle side");
  require_count(k);
  return {separable_spectrum({a, b}, k), "rectangle", true};
}

OracleSpectrum box_spectrum(double a, double b, double c, int k) {
  require_length(a, "box side");
  require_length(b, "box side");
  require_length(c, "box side");
  require_count(k);
  return {separable_spectrum({a, b, c}, k), "box", true};
}

OracleSpectrum disk_spectrum(double radius, int k) {
  require_length(radius, "disk radius");
  require_count(k);
  // Work with zeros j <= bound; j_{m,1} > m bounds the orders that can contribute.
  double bound = 2.0 * std::sqrt(static_cast<double>(k)) + 3.0;
  while (true) {
    std::vector<double> values;
    for (int m = 0; m < bound; ++m) {
      if (m > kBesselMaxIntegerOrder)
        throw Error(ErrorCode::UnsupportedOrder, "disk spectrum needs Bessel orders above 40");
      int count = std::min(kBesselMaxZeroIndex, static_cast<int>((bound - m) / std::numbers::pi) + 2);
      std::vector<double> zeros = bessel_zeros(m, count);
      while (zeros.back() <= bound && count < kBesselMaxZeroIndex) {
        count = std::min(kBesselMaxZeroIndex, count + 4);
        zeros = bessel_zeros(m, count);
      }
      if (zeros.back() <= bound)
        throw Error(ErrorCode::RangeError, "disk spectrum needs more than 100 zeros of one order");
      for (double j : zeros) {
        if (j > bound) break;
        const double lambda = (j / radius) * (j / radius);
        values.push_back(lambda);
        if (m > 0) values.push_back(lambda);
      }
    }
    if (static_cast<int>(values.size()) >= k) {
      std::sort(values.begin(), values.end());
      values.resize(k);
      return {values, "disk", true};
    }
    bound *= 1.3;
  }
}

OracleSpectrum oracle_spectrum(const DomainSpec& domain, int k) {
  validate(domain);
  if (const auto* r = std::get_if<Rectangle>(&domain.shape)) return rectangle_spectrum(r->a, r->b, k);
  if (const auto* b = std::get_if<Box>(&domain.shape)) return box_spectrum(b->a, b->b, b->c, k);
  if (const auto* d = std::get_if<Disk>(&domain.shape)) return disk_spectrum(d->radius, k);
  throw Error(ErrorCode::UnsupportedShape, "no closed-form spectrum for " + domain.kind_name());
}

double weyl_estimate(int n, double volume, int k) {
  if (n != 2 && n != 3) throw Error(ErrorCode::InvalidArgument, "Weyl estimate supports n = 2, 3");
  if (!(volume > 0.0) || k < 1) throw Error(ErrorCode::InvalidArgument, "need volume > 0 and k >= 1");
  const double ball = std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
  return 4.0 * kPi2 * std::pow(k / (ball * volume), 2.0 / n);
}

double ppw_ratio_bound(int n) {
  if (n != 2 && n != 3)
    throw Error(ErrorCode::UnsupportedOrder, "ball ratio needs Bessel orders n/2, n/2-1 for n = 2, 3");
  const double upper = bessel_zero(0.5 * n, 1);
  const double lower = bessel_zero(0.5 * n - 1.0, 1);
  return (upper / lower) * (upper / lower);
}

}  // namespace sgw
