#pragma once

#include "qds/blocks.hpp"

namespace qds {

/// Column-stacking vectorization; vec(X Y Z) = (Z^T (x) X) vec(Y).
CVector vec(const Matrix& m);
Matrix unvec(const CVector& v, int rows, int cols);
Matrix kron(const Matrix& a, const Matrix& b);

struct VectorizedGenerator {
  Matrix matrix;       // (n-m)^2 x (n-m)^2
  Subspace partition;  // the S it was built against
  Matrix r_basis;      // completion used for the blocks
};

/// Vectorized generator of the decoupled R-block dynamics:
///   -i (1 (x) H_R - H_R^T (x) 1) + sum_k L_R^* (x) L_R
///   - 1/2 sum_k 1 (x) (L_P^dag L_P + L_R^dag L_R)
///   - 1/2 sum_k (L_P^T L_P^* + L_R^T L_R^*) (x) 1.
/// Requires S invariant at u (the decoupling needs it).
VectorizedGenerator build_hat_lr(const QdsModel& model, const RVector& u,
                                 const Subspace& s, const Tolerances& tol = {});
VectorizedGenerator build_hat_lr(const QdsModel& model, const RVector& u,
                                 const Matrix& s_basis, const Matrix& r_basis);

struct SpeedReport {
  double lambda0 = 0.0;           // max real part of the R-block spectrum
  std::vector<Complex> spectrum;
  bool gas = false;               // lambda0 < -disc radius
  bool indeterminate = false;     // |lambda0| inside the review band
};

/// GAS iff the R-block generator has no eigenvalue in the zero disc;
/// lambda0 is the asymptotic convergence exponent.
SpeedReport gas_verdict(const QdsModel& model, const RVector& u, const Subspace& s,
                        const Tolerances& tol = {});

SpeedReport speed_report_of(const Matrix& hat_lr, const Tolerances& tol = {});

/// Full vectorized Lindbladian, n^2 x n^2.
Matrix full_generator(const QdsModel& model, const RVector& u);

struct SteadyStateResult {
  int kernel_dim = 0;
  std::vector<Matrix> states;  // Hermitian, unit trace, PSD within tolerance
  bool unique = false;
};

/// Stationary density matrices from the kernel of the full generator.
/// Combination search is attempted only for kernels of dimension <= 4.
SteadyStateResult steady_states(const QdsModel& model, const RVector& u,
                                const Tolerances& tol = {});

}  // namespace qds
