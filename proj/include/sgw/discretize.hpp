#pragma once

#include <span>
#include <vector>

#include "sgw/geometry.hpp"

namespace sgw {

/// Square sparse matrix in compressed sparse row layout. Columns are sorted within each row.
struct SparseOperator {
  int n = 0;
  std::vector<int> row_offsets{0};
  std::vector<int> column_indices;
  std::vector<double> values;
  bool symmetric = false;

  int size() const { return n; }
  std::size_t nonzeros() const { return values.size(); }

  /// y = A x. Row products are independent, so the result does not depend on the thread count.
  void multiply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> multiply(std::span<const double> x) const;

  double at(int row, int col) const;
  std::vector<double> diagonal() const;

  /// Largest |a_ij - a_ji| over all stored entries.
  double symmetry_defect() const;

  /// Builds from unsorted (row, col, value) triplets; duplicates are summed.
  struct Triplet {
    int row;
    int col;
    double value;
  };
  static SparseOperator from_triplets(int n, std::vector<Triplet> triplets);
};

/// A u = lambda B u with B diagonal and positive.
struct GeneralizedProblem {
  SparseOperator stiffness;
  std::vector<double> mass;

  int size() const { return stiffness.size(); }
};

/// Discrete -Laplacian with Dirichlet conditions and cut-cell boundary corrections.
SparseOperator assemble_euclidean(const Grid& grid);

/// Discrete hyperbolic Laplace-Beltrami problem on a half-plane rectangle grid.
GeneralizedProblem assemble_hyperbolic(const Grid& grid);

/// Identity mass for a Euclidean operator, so both kinds go through one solver path.
GeneralizedProblem as_generalized(SparseOperator stiffness);

}  // namespace sgw
