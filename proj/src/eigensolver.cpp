#include "spectra/eigensolver.hpp"

#include <Eigen/SparseCholesky>
#include <cmath>
#include <random>
#include <stdexcept>

namespace spectra {

namespace {

double b_norm(const Eigen::SparseMatrix<double>& B, const Eigen::VectorXd& x) {
  return std::sqrt(x.dot(B * x));
}

void fix_sign(const Eigen::SparseMatrix<double>& B, Eigen::VectorXd& x) {
  // discrete mean: x^T B 1; principal eigenvectors have a definite sign
  const Eigen::VectorXd row_sums = B * Eigen::VectorXd::Ones(B.rows());
  const double mean = x.dot(row_sums);
  if (mean < 0.0) x = -x;
  else if (mean == 0.0 && x.sum() < 0.0) x = -x;
}

}  // namespace

double rayleigh_quotient(const SparseSymmetric& A, const SparseSymmetric& B,
                         const Eigen::VectorXd& x) {
  if (x.size() != A.n() || x.size() != B.n())
    throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
  const double den = x.dot(B.mat * x);
  if (!(den > 0.0))
    throw std::domain_error("rayleigh_quotient: zero or indefinite x^T B x");
  return x.dot(A.mat * x) / den;
}

EigenPair smallest_eigenpair(const SparseSymmetric& A,
                             const SparseSymmetric& B,
                             const EigenOptions& opts) {
  const int n = A.n();
  if (n == 0 || n != B.n())
    throw std::invalid_argument("smallest_eigenpair: bad pencil dimensions");

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(A.mat);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("smallest_eigenpair: factorization breakdown");

  // start vector: ones plus seeded 1e-3 relative perturbation
  Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
  {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < n; ++i) x[i] += 1e-3 * u(rng);
  }
  x /= b_norm(B.mat, x);

  EigenPair out;
  double lambda = rayleigh_quotient(A, B, x);
  double best_res = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x = x;
  double best_lambda = lambda;

  bool rq_phase = false;
  int rq_failures = 0;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> rq_solver;

  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    Eigen::VectorXd y;
    if (rq_phase) {
      Eigen::SparseMatrix<double> shifted = A.mat - lambda * B.mat;
      rq_solver.compute(shifted);
      if (rq_solver.info() != Eigen::Success) {
        // shift landed on a pivot breakdown; nudge once, then give up on RQ
        shifted = A.mat - (lambda * (1.0 - 1e-8)) * B.mat;
        rq_solver.compute(shifted);
        if (rq_solver.info() != Eigen::Success) {
          rq_phase = false;
          ++rq_failures;
          continue;
        }
      }
      y = rq_solver.solve(B.mat * x);
    } else {
      y = solver.solve(B.mat * x);
    }
    if (!y.allFinite()) {
      if (rq_phase) {  // solve blew up along the eigenvector; x is converged
        rq_phase = false;
        ++rq_failures;
        x = best_x;
        lambda = best_lambda;
        continue;
      }
      throw std::runtime_error("smallest_eigenpair: non-finite iterate");
    }

    const double nrm = b_norm(B.mat, y);
    if (!(nrm > 0.0))
      throw std::runtime_error("smallest_eigenpair: B-degenerate iterate");
    x = y / nrm;
    lambda = x.dot(A.mat * x);  // x^T B x = 1

    const Eigen::VectorXd r = A.mat * x - lambda * (B.mat * x);
    const double res = r.norm();
    if (res < best_res) {
      best_res = res;
      best_x = x;
      best_lambda = lambda;
      out.residual_history.push_back(res);
    } else if (rq_phase) {
      // Rayleigh step did not improve; retreat to the safe iterate
      x = best_x;
      lambda = best_lambda;
      rq_phase = false;
      ++rq_failures;
    }

    const double scale = std::abs(best_lambda) * b_norm(B.mat, best_x);
    if (best_res <= opts.tol * std::max(scale, 1e-300)) {
      ++it;
      break;
    }
    if (!rq_phase && rq_failures < 2 &&
        best_res <= std::sqrt(opts.tol) * std::max(scale, 1e-300))
      rq_phase = true;
  }

  if (best_res == std::numeric_limits<double>::infinity())
    throw std::runtime_error("smallest_eigenpair: no iterate accepted");
  const double scale =
      std::abs(best_lambda) * b_norm(B.mat, best_x);
  if (best_res > opts.tol * std::max(scale, 1e-300))
    throw std::runtime_error(
        "smallest_eigenpair: iteration cap exceeded, last residual " +
        std::to_string(best_res));

  fix_sign(B.mat, best_x);
  out.value = best_lambda;
  out.vector = std::move(best_x);
  out.residual = best_res;
  out.iterations = it;
  return out;
}

}  // namespace spectra
