#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sgw/discretize.hpp"

namespace ref {

using Matrix = std::vector<std::vector<double>>;

inline Matrix dense(const sgw::SparseOperator& op) {
  Matrix m(op.n, std::vector<double>(op.n, 0.0));
  for (int r = 0; r < op.n; ++r)
    for (int p = op.row_offsets[r]; p < op.row_offsets[r + 1]; ++p) m[r][op.column_indices[p]] = op.values[p];
  return m;
}

// Cyclic Jacobi rotations for a dense symmetric matrix; returns ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a[i][i];
  std::sort(d.begin(), d.end());
  return d;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(Matrix a, std::vector<double> b) {
  const int n = static_cast<int>(a.size());
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    long double s = b[r];
    for (int k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = static_cast<double>(s / a[r][r]);
  }
  return x;
}

// Power series of J_p in long double; accurate for the moderate arguments used in tests.
inline long double bessel_series(long double p, long double x) {
  const long double half = x / 2.0L;
  long double term = std::pow(half, p) / std::tgamma(p + 1.0L);
  long double sum = term;
  for (int m = 0; m < 400; ++m) {
    term *= -(half * half) / ((m + 1.0L) * (m + 1.0L + p));
    sum += term;
    if (std::abs(term) < 1e-30L) break;
  }
  return sum;
}

// k-th zero of J_p by a fine sign scan and plain bisection.
inline double bessel_zero_bisect(double p, int k) {
  long double a = 1e-3L;
  long double fa = bessel_series(p, a);
  int found = 0;
  for (long double b = a + 0.01L;; b += 0.01L) {
    const long double fb = bessel_series(p, b);
    if ((fa < 0) != (fb < 0)) {
      if (++found == k) {
        long double lo = b - 0.01L;
        long double hi = b;
        long double flo = fa;
        for (int it = 0; it < 200; ++it) {
          const long double mid = 0.5L * (lo + hi);
          const long double fm = bessel_series(p, mid);
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        return static_cast<double>(0.5L * (lo + hi));
      }
    }
    fa = fb;
  }
}

// Every value pi^2 (p^2/a^2 + q^2/b^2) with p, q <= limit, sorted.
inline std::vector<double> brute_rectangle(double a, double b, int limit) {
  std::vector<double> v;
  for (int p = 1; p <= limit; ++p)
    for (int q = 1; q <= limit; ++q)
      v.push_back(std::numbers::pi * std::numbers::pi * (p * p / (a * a) + q * q / (b * b)));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> brute_box(double a, double b, double c, int limit) {
  std::vector<double> v;
  for (int p = 1; p <= limit; ++p)
    for (int q = 1; q <= limit; ++q)
      for (int r = 1; r <= limit; ++r)
        v.push_back(std::numbers::pi * std::numbers::pi * (p * p / (a * a) + q * q / (b * b) + r * r / (c * c)));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace ref
