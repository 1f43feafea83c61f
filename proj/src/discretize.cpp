#include "sgw/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sgw/error.hpp"
#include "sgw/parallel.hpp"

namespace sgw {

void SparseOperator::multiply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw Error(ErrorCode::SizeMismatch, "operator/vector size mismatch");
  const int threads = n >= 8192 ? thread_count() : 1;
#if defined(_OPENMP)
#pragma omp parallel for schedule(static) num_threads(threads) if (threads > 1)
#else
  (void)threads;
#endif
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int p = row_offsets[i]; p < row_offsets[i + 1]; ++p) sum += values[p] * x[column_indices[p]];
    y[i] = sum;
  }
}

std::vector<double> SparseOperator::multiply(std::span<const double> x) const {
  std::vector<double> y(n);
  multiply(x, y);
  return y;
}

double SparseOperator::at(int row, int col) const {
  const auto first = column_indices.begin() + row_offsets[row];
  const auto last = column_indices.begin() + row_offsets[row + 1];
  const auto it = std::lower_bound(first, last, col);
  if (it == last || *it != col) return 0.0;
  return values[it - column_indices.begin()];
}

std::vector<double> SparseOperator::diagonal() const {
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = at(i, i);
  return d;
}

double SparseOperator::symmetry_defect() const {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int p = row_offsets[i]; p < row_offsets[i + 1]; ++p) {
      worst = std::max(worst, std::abs(values[p] - at(column_indices[p], i)));
    }
  }
  return worst;
}

SparseOperator SparseOperator::from_triplets(int n, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  SparseOperator op;
  op.n = n;
  op.row_offsets.assign(n + 1, 0);
  int last_row = -1;
  int last_col = -1;
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
      throw Error(ErrorCode::SizeMismatch, "triplet index out of range");
    if (t.row == last_row && t.col == last_col) {
      op.values.back() += t.value;
      continue;
    }
    op.column_indices.push_back(t.col);
    op.values.push_back(t.value);
    ++op.row_offsets[t.row + 1];
    last_row = t.row;
    last_col = t.col;
  }
  for (int i = 0; i < n; ++i) op.row_offsets[i + 1] += op.row_offsets[i];
  op.symmetric = op.symmetry_defect() == 0.0;
  return op;
}

namespace {

void require_planar_or_solid(const Grid& grid) {
  if (grid.size() == 0) throw Error(ErrorCode::EmptyGrid, "grid has no interior nodes");
  if (grid.dim != 2 && grid.dim != 3)
    throw Error(ErrorCode::UnsupportedShape, "only 2D and 3D grids are supported");
  if (grid.size() == 1) return;
  // A strip one node thick is a 1D problem in disguise.
  for (int axis = 0; axis < grid.dim; ++axis) {
    std::set<int> levels;
    for (const auto& node : grid.nodes) levels.insert(node[axis]);
    if (levels.size() == 1)
      throw Error(ErrorCode::UnsupportedShape, "grid is one node thick along an axis");
  }
}

// Symmetric cut-cell form: a boundary crossing at distance theta*h adds 1/(theta h^2) to the
// diagonal (linear ghost extrapolation through u = 0); interior links keep -1/h^2 both ways.
SparseOperator assemble_stencil(const Grid& grid) {
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  std::vector<SparseOperator::Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(grid.size()) * (grid.directions() + 1));
  for (int i = 0; i < grid.size(); ++i) {
    double diag = 0.0;
    for (int dir = 0; dir < grid.directions(); ++dir) {
      const int j = grid.neighbors[i][dir];
      if (j >= 0) {
        diag += inv_h2;
        triplets.push_back({i, j, -inv_h2});
      } else {
        diag += inv_h2 / grid.boundary_fractions[i][dir];
      }
    }
    triplets.push_back({i, i, diag});
  }
  return SparseOperator::from_triplets(grid.size(), std::move(triplets));
}

}  // namespace

SparseOperator assemble_euclidean(const Grid& grid) {
  require_planar_or_solid(grid);
  if (grid.hyperbolic())
    throw Error(ErrorCode::WrongDomainKind, "hyperbolic grids go through assemble_hyperbolic");
  return assemble_stencil(grid);
}

GeneralizedProblem assemble_hyperbolic(const Grid& grid) {
  if (!grid.hyperbolic())
    throw Error(ErrorCode::WrongDomainKind, "assemble_hyperbolic needs a hyperbolic_rect grid");
  require_planar_or_solid(grid);
  GeneralizedProblem problem;
  // In two dimensions Delta_H = y^2 (d_xx + d_yy), so the stiffness is the flat stencil and
  // the volume weight 1/y^2 moves to the mass side.
  problem.stiffness = assemble_stencil(grid);
  problem.mass.resize(grid.size());
  for (int i = 0; i < grid.size(); ++i) {
    const double y = grid.position(i)[1];
    problem.mass[i] = 1.0 / (y * y);
  }
  return problem;
}

GeneralizedProblem as_generalized(SparseOperator stiffness) {
  GeneralizedProblem problem;
  problem.mass.assign(stiffness.size(), 1.0);
  problem.stiffness = std::move(stiffness);
  return problem;
}

}  // namespace sgw
