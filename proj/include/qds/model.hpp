#pragma once

#include "qds/types.hpp"

#include <optional>

namespace qds {

struct Control {
  std::string name;
  Matrix matrix;        // Hermitian n x n
  IntervalUnion range;  // admissible values; empty = whole real line
};

/// Controlled Lindblad model: H(u) = h0 + sum_j u_j * controls[j].matrix,
/// noise operators `lindblads`. hbar = 1 throughout.
struct QdsModel {
  int dim = 0;
  Matrix h0;
  std::vector<Control> controls;
  std::vector<Matrix> lindblads;
  std::string unit;  // opaque tag, e.g. "MHz"; all math is unit-agnostic

  int num_controls() const { return static_cast<int>(controls.size()); }

  /// max operator Frobenius norm at u, floored at 1; the reference scale for
  /// relative zero tests.
  double scale(const RVector& u) const;
  double scale() const;
};

/// Target or basin subspace, held as an isometry (columns orthonormal).
struct Subspace {
  Matrix basis;  // n x m

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
  Matrix projector() const { return basis * basis.adjoint(); }
};

Subspace make_subspace(const Matrix& basis, double tol = 1e-9);
Subspace span_of_basis_states(int n, const std::vector<int>& indices);

void validate_model(const QdsModel& model, const Tolerances& tol = {});
void validate_subspace(const QdsModel& model, const Subspace& s, const Tolerances& tol = {});
void validate_density(const Matrix& rho, const Tolerances& tol = {});

Matrix hamiltonian_at(const QdsModel& model, const RVector& u);

/// Right-hand side of the master equation: L[rho] = -i[H(u), rho]
/// + sum_k ( L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho} ).
Matrix generator_apply(const QdsModel& model, const RVector& u, const Matrix& rho);

RVector zero_controls(const QdsModel& model);

}  // namespace qds
