#include "sgw/eigensolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgw/error.hpp"

namespace sgw {
namespace {

using Vec = std::vector<double>;

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double dot_b(std::span<const double> x, std::span<const double> y, std::span<const double> mass) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * mass[i] * y[i];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void scale(double alpha, std::span<double> x) {
  for (double& v : x) v *= alpha;
}

// Classical Gram-Schmidt in the B inner product, applied twice.
void b_orthogonalize(Vec& w, const std::vector<Vec>& basis, std::span<const double> mass) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Vec& q : basis) axpy(-dot_b(q, w, mass), q, w);
  }
}

struct RitzPair {
  double theta;
  double estimate;
  Vec vector;
};

class ShiftInvertLanczos {
public:
  ShiftInvertLanczos(const GeneralizedProblem& problem, int k, const EigenOptions& options)
      : problem_(problem), k_(k), options_(options), rng_(options.seed),
        inner_tol_(std::max(options.tol / 100.0, 1e-14)), guard_(std::max(4, k / 2)) {}

  Spectrum run() {
    const int n = problem_.size();
    int runs = 0;
    while (true) {
      const int free_dim = n - static_cast<int>(locked_.size());
      if (free_dim <= 0) break;
      if (++runs > options_.max_runs)
        throw NoConvergence("shift-invert Lanczos did not lock enough eigenpairs", runs, 0.0);
      const int steps = std::min(free_dim, 2 * k_ + 20);
      std::vector<RitzPair> ritz = lanczos_run(steps);
      if (lock_and_check(ritz)) break;
    }
    return polish();
  }

private:
  Vec apply_inverse(std::span<const double> v, double tol) const {
    Vec rhs(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rhs[i] = problem_.mass[i] * v[i];
    return solve_spd(problem_.stiffness, rhs, tol, 20 * problem_.size() + 1000);
  }

  Vec random_start() {
    Vec v(problem_.size());
    for (double& x : v) x = rng_.symmetric_unit();
    return v;
  }

  std::vector<RitzPair> lanczos_run(int steps) {
    const auto mass = std::span<const double>(problem_.mass);
    std::vector<Vec> basis;
    std::vector<double> alpha;
    std::vector<double> beta;

    Vec v = random_start();
    b_orthogonalize(v, locked_vectors_, mass);
    scale(1.0 / std::sqrt(dot_b(v, v, mass)), v);
    basis.push_back(std::move(v));

    double last_beta = 0.0;
    for (int j = 0; j < steps; ++j) {
      Vec w = apply_inverse(basis[j], inner_tol_);
      b_orthogonalize(w, locked_vectors_, mass);
      const double a = dot_b(basis[j], w, mass);
      axpy(-a, basis[j], w);
      if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
      b_orthogonalize(w, basis, mass);
      b_orthogonalize(w, locked_vectors_, mass);
      alpha.push_back(a);
      const double b = std::sqrt(std::max(0.0, dot_b(w, w, mass)));
      last_beta = b;
      const double scale_ref = std::abs(alpha.front()) + std::abs(a);
      if (j + 1 == steps || b <= 1e-12 * scale_ref) {
        if (b <= 1e-12 * scale_ref) last_beta = 0.0;
        break;
      }
      beta.push_back(b);
      scale(1.0 / b, w);
      basis.push_back(std::move(w));
    }

    const int m = static_cast<int>(alpha.size());
    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(std::max(m - 1, 0));
    for (int i = 0; i < m; ++i) diag[i] = alpha[i];
    for (int i = 0; i + 1 < m; ++i) sub[i] = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

    std::vector<RitzPair> ritz;
    for (int c = m - 1; c >= 0; --c) {
      RitzPair pair;
      pair.theta = tri.eigenvalues()[c];
      pair.estimate = last_beta * std::abs(tri.eigenvectors()(m - 1, c));
      pair.vector.assign(problem_.size(), 0.0);
      for (int i = 0; i < m; ++i) axpy(tri.eigenvectors()(i, c), basis[i], pair.vector);
      ritz.push_back(std::move(pair));
    }
    return ritz;  // descending theta, i.e. ascending lambda
  }

  // Locks converged Ritz pairs; returns true once the K smallest are known to be locked.
  bool lock_and_check(const std::vector<RitzPair>& ritz) {
    if (ritz.empty()) return false;
    const auto mass = std::span<const double>(problem_.mass);
    const double theta_scale = std::abs(ritz.front().theta);
    auto converged = [&](const RitzPair& p) {
      return p.theta > 0.0 && p.estimate <= kLockTol * theta_scale;
    };

    bool verified = false;
    if (static_cast<int>(locked_.size()) >= k_ && converged(ritz.front())) {
      // The top Ritz value of a fresh run approximates the smallest eigenvalue outside the
      // locked set; nothing was missed if it does not undercut the current K-th value.
      verified = 1.0 / ritz.front().theta >= kth_locked() * (1.0 - 1e-10);
    }

    for (const RitzPair& p : ritz) {
      if (!converged(p)) break;
      if (static_cast<int>(locked_.size()) >= k_ + guard_ && 1.0 / p.theta >= kth_locked()) break;
      Vec v = p.vector;
      b_orthogonalize(v, locked_vectors_, mass);
      const double norm = std::sqrt(dot_b(v, v, mass));
      if (norm < 0.5) continue;  // already represented by the locked set
      scale(1.0 / norm, v);
      locked_.push_back(1.0 / p.theta);
      locked_vectors_.push_back(std::move(v));
    }
    if (static_cast<int>(locked_.size()) == problem_.size()) return true;
    return verified;
  }

  double kth_locked() const {
    std::vector<double> sorted = locked_;
    std::sort(sorted.begin(), sorted.end());
    return sorted[std::min<std::size_t>(k_, sorted.size()) - 1];
  }

  // Subspace-iteration step plus Rayleigh-Ritz over the locked block, repeated until every
  // residual is below tol.
  Spectrum polish() {
    const int n = problem_.size();
    std::vector<int> order(locked_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return locked_[a] < locked_[b]; });
    const int block = std::min<int>(static_cast<int>(order.size()), k_ + guard_);
    std::vector<Vec> u;
    for (int c = 0; c < block; ++c) u.push_back(locked_vectors_[order[c]]);
    if (block < k_) throw NoConvergence("fewer eigenpairs locked than requested", 0, 0.0);

    Spectrum out;
    const double solve_tol = std::max(std::min(options_.tol / 100.0, 1e-12), 1e-14);
    for (int sweep = 0; sweep < kPolishSweeps; ++sweep) {
      std::vector<Vec> w;
      for (const Vec& col : u) w.push_back(apply_inverse(col, solve_tol));
      rayleigh_ritz(w, out);
      u = std::move(w);
      bool ok = true;
      for (int c = 0; c < k_; ++c) ok = ok && out.residual_norms[c] <= options_.tol;
      if (ok) break;
      if (sweep + 1 == kPolishSweeps) {
        const double worst = *std::max_element(out.residual_norms.begin(), out.residual_norms.begin() + k_);
        throw NoConvergence("eigenpair residuals stayed above tolerance", sweep + 1, worst);
      }
    }

    out.eigenvalues.resize(k_);
    out.residual_norms.resize(k_);
    if (options_.keep_vectors) {
      out.vector_rows = n;
      out.eigenvectors.reserve(static_cast<std::size_t>(n) * k_);
      for (int c = 0; c < k_; ++c) out.eigenvectors.insert(out.eigenvectors.end(), u[c].begin(), u[c].end());
    }
    out.meta.tol = options_.tol;
    out.meta.seed = options_.seed;
    return out;
  }

  // Replaces w by B-orthonormal Ritz vectors of span(w), ascending eigenvalues.
  void rayleigh_ritz(std::vector<Vec>& w, Spectrum& out) const {
    const auto mass = std::span<const double>(problem_.mass);
    const int b = static_cast<int>(w.size());
    std::vector<Vec> aw;
    for (const Vec& col : w) aw.push_back(problem_.stiffness.multiply(col));
    Eigen::MatrixXd g(b, b);
    Eigen::MatrixXd m(b, b);
    for (int i = 0; i < b; ++i) {
      for (int j = i; j < b; ++j) {
        g(i, j) = g(j, i) = 0.5 * (dot(w[i], aw[j]) + dot(w[j], aw[i]));
        m(i, j) = m(j, i) = dot_b(w[i], w[j], mass);
      }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(g, m);
    if (ges.info() != Eigen::Success)
      throw NoConvergence("Rayleigh-Ritz projection is not positive definite", 0, 0.0);
    std::vector<Vec> rotated(b, Vec(problem_.size(), 0.0));
    std::vector<Vec> rotated_a(b, Vec(problem_.size(), 0.0));
    for (int c = 0; c < b; ++c) {
      for (int i = 0; i < b; ++i) {
        axpy(ges.eigenvectors()(i, c), w[i], rotated[c]);
        axpy(ges.eigenvectors()(i, c), aw[i], rotated_a[c]);
      }
    }
    out.eigenvalues.assign(b, 0.0);
    out.residual_norms.assign(b, 0.0);
    for (int c = 0; c < b; ++c) {
      const double lambda = ges.eigenvalues()[c];
      // Normalise explicitly; the projected solver's scaling is only accurate to rounding.
      const double norm = std::sqrt(dot_b(rotated[c], rotated[c], mass));
      scale(1.0 / norm, rotated[c]);
      scale(1.0 / norm, rotated_a[c]);
      double r2 = 0.0;
      for (int i = 0; i < problem_.size(); ++i) {
        const double r = rotated_a[c][i] - lambda * mass[i] * rotated[c][i];
        r2 += r * r;
      }
      out.eigenvalues[c] = lambda;
      out.residual_norms[c] = std::sqrt(r2);
    }
    w = std::move(rotated);
  }

  static constexpr double kLockTol = 1e-9;
  static constexpr int kPolishSweeps = 8;

  const GeneralizedProblem& problem_;
  int k_;
  EigenOptions options_;
  SplitMix64 rng_;
  double inner_tol_;
  // Extra locked vectors carried through polishing; subspace iteration converges like
  // lambda_c / lambda_{K+guard+1}.
  int guard_;
  std::vector<double> locked_;
  std::vector<Vec> locked_vectors_;
};

}  // namespace

double Spectrum::max_residual() const {
  double worst = 0.0;
  for (double r : residual_norms) worst = std::max(worst, r);
  return worst;
}

std::vector<double> solve_spd(const SparseOperator& a, std::span<const double> rhs, double tol,
                              int max_iter) {
  const int n = a.size();
  if (static_cast<int>(rhs.size()) != n) throw Error(ErrorCode::SizeMismatch, "rhs size mismatch");
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  Vec x(n, 0.0);
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  if (rhs_norm == 0.0) return x;

  const Vec diag = a.diagonal();
  Vec inv_diag(n);
  for (int i = 0; i < n; ++i) inv_diag[i] = diag[i] > 0.0 ? 1.0 / diag[i] : 1.0;

  Vec r(rhs.begin(), rhs.end());
  Vec z(n);
  Vec p(n);
  Vec ap(n);
  for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = dot(r, z);
  double res = rhs_norm;
  for (int it = 0; it < max_iter; ++it) {
    a.multiply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0)) throw NoConvergence("operator is not positive definite", it, res / rhs_norm);
    const double step = rz / pap;
    axpy(step, p, x);
    axpy(-step, ap, r);
    res = std::sqrt(dot(r, r));
    if (res <= tol * rhs_norm) {
      // Confirm against the true residual; recurrences drift in long solves.
      Vec ax = a.multiply(x);
      for (int i = 0; i < n; ++i) r[i] = rhs[i] - ax[i];
      res = std::sqrt(dot(r, r));
      if (res <= tol * rhs_norm) return x;
      for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
      p = z;
      rz = dot(r, z);
      continue;
    }
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    const double rz_next = dot(r, z);
    const double gamma = rz_next / rz;
    rz = rz_next;
    for (int i = 0; i < n; ++i) p[i] = z[i] + gamma * p[i];
  }
  throw NoConvergence("conjugate gradients hit the iteration limit", max_iter, res / rhs_norm);
}

Spectrum smallest_eigenpairs(const GeneralizedProblem& problem, int k, const EigenOptions& options) {
  if (k < 1 || k > problem.size())
    throw Error(ErrorCode::KTooLarge, "requested " + std::to_string(k) + " eigenpairs of a " +
                                          std::to_string(problem.size()) + "-dimensional problem");
  if (!(options.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (static_cast<int>(problem.mass.size()) != problem.size())
    throw Error(ErrorCode::SizeMismatch, "mass vector size mismatch");
  for (double m : problem.mass) {
    if (!(m > 0.0)) throw Error(ErrorCode::InvalidArgument, "mass entries must be positive");
  }
  ShiftInvertLanczos solver(problem, k, options);
  return solver.run();
}

Spectrum smallest_eigenpairs(const SparseOperator& a, int k, const EigenOptions& options) {
  return smallest_eigenpairs(as_generalized(a), k, options);
}

std::vector<double> residual_check(const GeneralizedProblem& problem, const Spectrum& spectrum) {
  if (!spectrum.has_vectors()) throw Error(ErrorCode::TooFewEigenpairs, "spectrum carries no eigenvectors");
  if (spectrum.vector_rows != problem.size()) throw Error(ErrorCode::SizeMismatch, "eigenvector length mismatch");
  std::vector<double> out;
  for (int c = 0; c < spectrum.size(); ++c) {
    const auto u = spectrum.vector(c);
    const Vec au = problem.stiffness.multiply(u);
    const double lambda = spectrum.eigenvalues[c];
    double r2 = 0.0;
    for (int i = 0; i < problem.size(); ++i) {
      const double r = au[i] - lambda * problem.mass[i] * u[i];
      r2 += r * r;
    }
    out.push_back(std::sqrt(r2) / std::sqrt(dot_b(u, u, problem.mass)));
  }
  return out;
}

std::vector<Cluster> cluster_multiplicities(std::span<const double> values, double rel_tol) {
  std::vector<Cluster> clusters;
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!clusters.empty()) {
      Cluster& open = clusters.back();
      const double mean = sum / open.multiplicity;
      if (std::abs(values[i] - values[i - 1]) < rel_tol * std::abs(mean)) {
        sum += values[i];
        ++open.multiplicity;
        open.value = sum / open.multiplicity;
        continue;
      }
    }
    clusters.push_back({values[i], 1});
    sum = values[i];
  }
  return clusters;
}

}  // namespace sgw
