#include "qds/model.hpp"

#include "qds/matrix_utils.hpp"

#include <Eigen/Eigenvalues>

namespace qds {

double QdsModel::scale(const RVector& u) const {
  double s = 1.0;
  s = std::max(s, hamiltonian_at(*this, u).norm());
  for (const auto& l : lindblads) s = std::max(s, l.norm());
  return s;
}

double QdsModel::scale() const { return scale(zero_controls(*this)); }

Subspace make_subspace(const Matrix& basis, double tol) {
  Matrix gram = basis.adjoint() * basis;
  double defect = (gram - Matrix::Identity(basis.cols(), basis.cols())).norm();
  if (defect > tol * std::max<double>(1, basis.cols()))
    throw ValidationError("subspace basis columns are not orthonormal (defect " +
                          std::to_string(defect) + ")");
  if (basis.cols() < 1 || basis.cols() > basis.rows())
    throw DimensionError("subspace dimension out of range");
  return Subspace{basis};
}

Subspace span_of_basis_states(int n, const std::vector<int>& indices) {
  Matrix b = Matrix::Zero(n, static_cast<Eigen::Index>(indices.size()));
  for (size_t j = 0; j < indices.size(); ++j) b(indices[j], static_cast<int>(j)) = 1.0;
  return Subspace{b};
}

void validate_model(const QdsModel& model, const Tolerances& tol) {
  const int n = model.dim;
  if (n < 1) throw ValidationError("model dimension must be positive");
  if (n > 64) throw ValidationError("model dimension exceeds the dense cap (64)");
  auto check_square = [n](const Matrix& m, const std::string& what) {
    if (m.rows() != n || m.cols() != n)
      throw DimensionError(what + " is not " + std::to_string(n) + "x" + std::to_string(n));
    if (!m.allFinite()) throw ValidationError(what + " has non-finite entries");
  };
  check_square(model.h0, "h0");
  if (!is_hermitian(model.h0, tol.hermiticity)) throw ValidationError("h0 is not Hermitian");
  for (const auto& c : model.controls) {
    check_square(c.matrix, "control '" + c.name + "'");
    if (!is_hermitian(c.matrix, tol.hermiticity))
      throw ValidationError("control '" + c.name + "' is not Hermitian");
    for (const auto& p : c.range.parts)
      if (!(p.lo <= p.hi))
        throw ValidationError("control '" + c.name + "' has an empty range interval");
  }
  for (size_t k = 0; k < model.lindblads.size(); ++k)
    check_square(model.lindblads[k], "lindblad " + std::to_string(k));
}

void validate_subspace(const QdsModel& model, const Subspace& s, const Tolerances& tol) {
  if (s.basis.rows() != model.dim)
    throw DimensionError("subspace lives in the wrong ambient dimension");
  make_subspace(s.basis, tol.zero_block);
}

void validate_density(const Matrix& rho, const Tolerances& tol) {
  double scale = std::max(1.0, rho.norm());
  if (hermiticity_defect(rho) > 1e-8 * scale)
    throw ValidationError("density matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.0) > 1e-6) throw ValidationError("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es((rho + rho.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -1e-6 * scale)
    throw ValidationError("density matrix has a negative eigenvalue");
}

Matrix hamiltonian_at(const QdsModel& model, const RVector& u) {
  if (u.size() != model.num_controls())
    throw DimensionError("control vector length " + std::to_string(u.size()) +
                         " != " + std::to_string(model.num_controls()));
  Matrix h = model.h0;
  for (int j = 0; j < model.num_controls(); ++j) h += u[j] * model.controls[j].matrix;
  return h;
}

Matrix generator_apply(const QdsModel& model, const RVector& u, const Matrix& rho) {
  if (rho.rows() != model.dim || rho.cols() != model.dim)
    throw DimensionError("state has wrong dimension");
  Matrix h = hamiltonian_at(model, u);
  Matrix out = Complex(0, -1) * (h * rho - rho * h);
  for (const auto& l : model.lindblads) {
    Matrix ldl = l.adjoint() * l;
    out += l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
  }
  return out;
}

RVector zero_controls(const QdsModel& model) {
  return RVector::Zero(model.num_controls());
}

}  // namespace qds
