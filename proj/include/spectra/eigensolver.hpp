#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "spectra/assembly.hpp"

namespace spectra {

struct EigenPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;  // ||A x - value B x||_2 at the returned pair
  int iterations = 0;     // total inverse-iteration steps taken

  /// Residual norms of the accepted (improving) iterates, non-increasing.
  std::vector<double> residual_history;
};

struct EigenOptions {
  double tol = 1e-10;       // relative residual target
  int max_iterations = 500;
  std::uint64_t seed = 0x5eed5eedULL;  // start-vector perturbation seed
};

/// Smallest eigenpair of the symmetric pencil (A, B), B positive definite.
/// Shift-invert inverse iteration about shift 0 on a sparse LDLT
/// factorization, switching to Rayleigh-quotient shifts once the relative
/// residual falls below sqrt(tol). The start vector is all-ones plus a
/// seeded pseudorandom perturbation at 1e-3 relative amplitude, so runs are
/// deterministic. The returned vector is B-normalized with positive
/// discrete mean.
EigenPair smallest_eigenpair(const SparseSymmetric& A,
                             const SparseSymmetric& B,
                             const EigenOptions& opts = {});

double rayleigh_quotient(const SparseSymmetric& A, const SparseSymmetric& B,
                         const Eigen::VectorXd& x);

}  // namespace spectra
