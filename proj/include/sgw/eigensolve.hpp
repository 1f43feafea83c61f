#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgw/discretize.hpp"
#include "sgw/geometry.hpp"

namespace sgw {

struct SpectrumMeta {
  std::optional<DomainSpec> domain;
  double h = 0.0;
  int n = 2;
  double tol = 0.0;
  std::uint64_t seed = 0;
  /// "numeric" for solver output, "oracle:<kind>" for closed forms.
  std::string provenance = "numeric";
  bool exact = false;
};

/// Ascending eigenvalues with per-pair residuals and optional B-orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<double> residual_norms;
  /// Column-major, `vector_rows` rows per column; empty when vectors were not kept.
  std::vector<double> eigenvectors;
  int vector_rows = 0;
  SpectrumMeta meta;

  int size() const { return static_cast<int>(eigenvalues.size()); }
  bool has_vectors() const { return !eigenvectors.empty(); }
  bool hyperbolic() const { return meta.domain && meta.domain->is_hyperbolic(); }
  std::span<const double> vector(int j) const {
    return {eigenvectors.data() + static_cast<std::size_t>(j) * vector_rows,
            static_cast<std::size_t>(vector_rows)};
  }
  double max_residual() const;
};

/// Deterministic pseudo-random stream (splitmix64) used for Krylov start vectors.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [-1, 1).
  double symmetric_unit() { return 2.0 * (static_cast<double>(next() >> 11) * 0x1.0p-53) - 1.0; }

private:
  std::uint64_t state_;
};

/// Conjugate gradients with Jacobi scaling; stops when ||A x - rhs|| <= tol ||rhs||.
/// Throws NoConvergence after max_iter iterations.
std::vector<double> solve_spd(const SparseOperator& a, std::span<const double> rhs, double tol,
                              int max_iter);

struct EigenOptions {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  bool keep_vectors = true;
  /// Lanczos runs (restarts with locking) before giving up.
  int max_runs = 40;
};

/// K smallest eigenpairs of A u = lambda B u by shift-invert Lanczos at sigma = 0.
Spectrum smallest_eigenpairs(const GeneralizedProblem& problem, int k, const EigenOptions& options = {});
Spectrum smallest_eigenpairs(const SparseOperator& a, int k, const EigenOptions& options = {});

/// ||A u - lambda B u|| / ||u||_B for every stored eigenpair.
std::vector<double> residual_check(const GeneralizedProblem& problem, const Spectrum& spectrum);

struct Cluster {
  double value = 0.0;
  int multiplicity = 0;
};

inline constexpr double kDefaultClusterTol = 1e-6;

/// Greedy grouping of an ascending list: a value joins the open cluster while its gap to the
/// previous value is below rel_tol times the cluster mean.
std::vector<Cluster> cluster_multiplicities(std::span<const double> values,
                                            double rel_tol = kDefaultClusterTol);

}  // namespace sgw
