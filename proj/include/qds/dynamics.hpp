#pragma once

#include "qds/model.hpp"

namespace qds {

struct StepTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InsufficientDecayError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sampled master-equation trajectory with per-sample diagnostics.
struct Trajectory {
  std::vector<double> times;
  std::vector<Matrix> states;
  std::vector<double> trace_drift;  // |tr(rho) - 1|
  std::vector<double> min_eig;
  double dt = 0.0;
};

/// Fixed-step classical RK4 on the master equation, Hermitian projection each
/// step. Enforces dt * |generator| <= 0.1 with a Frobenius-based norm bound.
/// At most `max_samples` states are retained (evenly strided).
Trajectory integrate(const QdsModel& model, const RVector& u, const Matrix& rho0,
                     double t_max, double dt, int max_samples = 2048);

/// Upper bound on the generator norm used by the step-size guard.
double generator_norm_bound(const QdsModel& model, const RVector& u);

double r_population(const Matrix& rho, const Subspace& s);

/// Trace distance to the compression of rho onto S, re-normalized; a
/// documented surrogate for the distance to the invariant set.
double trace_distance_to_set(const Matrix& rho, const Subspace& s);

/// Least-squares slope of log r_population over the tail window
/// [t_max/2, t_max]. Requires the population to fall below 1e-3.
double fit_decay_rate(const Trajectory& traj, const Subspace& s);

}  // namespace qds
