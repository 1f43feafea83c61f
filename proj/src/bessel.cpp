#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sgw/error.hpp"
#include "sgw/oracles.hpp"

namespace sgw {
namespace {

constexpr double kSeriesLimit = 12.0;

bool is_half_integer(double p) { return p > 0.0 && std::floor(p) != p && std::floor(2.0 * p) == 2.0 * p; }

double series(double p, double x) {
  const double half = 0.5 * x;
  double term = std::exp(p * std::log(half) - std::lgamma(p + 1.0));
  double sum = term;
  const double q = half * half;
  for (int m = 0; m < 500; ++m) {
    term *= -q / ((m + 1.0) * (m + 1.0 + p));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum) && m > half) break;
  }
  return sum;
}

double spherical_closed_form(double p, double x) {
  const double pref = std::sqrt(2.0 / (std::numbers::pi * x));
  const double s = std::sin(x);
  const double c = std::cos(x);
  if (p == 0.5) return pref * s;
  if (p == 1.5) return pref * (s / x - c);
  if (p == 2.5) return pref * ((3.0 / (x * x) - 1.0) * s - 3.0 * c / x);
  throw Error(ErrorCode::UnsupportedOrder, "half-integer order " + std::to_string(p));
}

// Miller's downward recurrence normalised by J_0 + 2 sum_k J_2k = 1.
double miller(int p, double x) {
  const double top = std::max<double>(p, x);
  int start = static_cast<int>(top) + 30 + static_cast<int>(std::sqrt(40.0 * top));
  if (start % 2 != 0) ++start;
  double next = 0.0;  // J_{m+1}
  double cur = 1.0;   // J_m, unnormalised
  double sum = 2.0 * cur;
  double result = (start == p) ? cur : 0.0;
  for (int m = start; m >= 1; --m) {
    const double prev = (2.0 * m / x) * cur - next;
    next = cur;
    cur = prev;
    const int order = m - 1;
    if (order == p) result = cur;
    if (order == 0) {
      sum += cur;
    } else if (order % 2 == 0) {
      sum += 2.0 * cur;
    }
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      sum *= 1e-250;
      result *= 1e-250;
    }
  }
  return result / sum;
}

// No order/range checks: used with order+1 for derivatives and beyond x = 200 for zeros.
double evaluate(double p, double x) {
  if (x == 0.0) return p == 0.0 ? 1.0 : 0.0;
  if (x <= kSeriesLimit) return series(p, x);
  if (is_half_integer(p)) return spherical_closed_form(p, x);
  return miller(static_cast<int>(p), x);
}

double derivative(double p, double x) { return (p / x) * evaluate(p, x) - evaluate(p + 1.0, x); }

double mcmahon(double p, int k) {
  const double beta = (k + 0.5 * p - 0.25) * std::numbers::pi;
  return beta - (4.0 * p * p - 1.0) / (8.0 * beta);
}

// Newton iteration kept inside a sign-change bracket; bisection whenever Newton leaves it.
double refine(double p, double lo, double hi, double guess) {
  double flo = evaluate(p, lo);
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double fx = evaluate(p, x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = derivative(p, x);
    double candidate = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(candidate > lo && candidate < hi)) candidate = 0.5 * (lo + hi);
    if (std::abs(candidate - x) <= 1e-15 * x || hi - lo <= 4e-16 * x) return candidate;
    x = candidate;
  }
  return x;
}

void check_order(double order) {
  if (!bessel_order_supported(order))
    throw Error(ErrorCode::UnsupportedOrder, "Bessel order " + std::to_string(order) + " is not supported");
}

// Zero spacing exceeds 2.7 for every supported order, so one sign change per step is safe.
constexpr double kScanStep = 0.5;

}  // namespace

bool bessel_order_supported(double order) {
  if (order == 0.5 || order == 1.5) return true;
  return order >= 0.0 && order <= kBesselMaxIntegerOrder && std::floor(order) == order;
}

double bessel_j(double order, double x) {
  check_order(order);
  if (!(x >= 0.0) || x > kBesselMaxArgument)
    throw Error(ErrorCode::RangeError, "Bessel argument " + std::to_string(x) + " outside [0, 200]");
  return evaluate(order, x);
}

std::vector<double> bessel_zeros(double order, int count) {
  check_order(order);
  if (count < 0 || count > kBesselMaxZeroIndex)
    throw Error(ErrorCode::RangeError, "zero index outside 1..100");
  std::vector<double> zeros;
  // j_{p,1} > p + 1 for p >= 1 and j_{p,1} > 2 for p < 1, so the scan starts below the first zero.
  double a = order + 0.5;
  double fa = evaluate(order, a);
  while (static_cast<int>(zeros.size()) < count) {
    const double b = a + kScanStep;
    const double fb = evaluate(order, b);
    if (fb == 0.0) {
      zeros.push_back(b);
      a = b + 1e-9;
      fa = evaluate(order, a);
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      const int k = static_cast<int>(zeros.size()) + 1;
      zeros.push_back(refine(order, a, b, mcmahon(order, k)));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

double bessel_zero(double order, int k) {
  check_order(order);
  if (k < 1 || k > kBesselMaxZeroIndex) throw Error(ErrorCode::RangeError, "zero index outside 1..100");
  return bessel_zeros(order, k).back();
}

}  // namespace sgw
