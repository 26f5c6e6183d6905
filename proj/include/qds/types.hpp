#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace qds {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Numerical thresholds used across the library. All "zero" decisions are
/// relative to a model or spectral scale; see the individual call sites.
struct Tolerances {
  double hermiticity = 1e-10;      // relative Frobenius tolerance for H = H^dag
  double zero_block = 1e-9;        // block is zero when ||B||_F <= zero_block * scale
  double kernel_eps = 1e-9;        // SVD rank cutoff: sigma <= kernel_eps * sigma_max
  double zero_eig = 1e-8;          // zero-eigenvalue disc radius (relative)
  double indeterminate_lo = 1e-10; // |lambda0| band flagged indeterminate
  double indeterminate_hi = 1e-7;

  /// Honors the QDS_TOL environment variable (sets zero_block and kernel_eps).
  static Tolerances from_env();
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed interval [lo, hi]; degenerate (lo == hi) encodes a quantized value.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x <= hi; }
  double length() const { return hi - lo; }
  bool degenerate() const { return lo == hi; }
};

/// Union of closed intervals for one control axis. An empty part list means
/// the whole real line (unconstrained).
struct IntervalUnion {
  std::vector<Interval> parts;

  bool unconstrained() const { return parts.empty(); }
  bool bounded() const { return !parts.empty(); }
  bool finite_set() const;
  bool contains(double x, double slack = 0.0) const;
  double clamp(double x) const;    // nearest admissible value
  double total_length() const;
  std::vector<double> values() const;  // degenerate points, for finite axes
};

}  // namespace qds
