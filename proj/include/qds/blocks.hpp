#pragma once

#include "qds/model.hpp"

namespace qds {

/// Blocks of an operator X with respect to [basis(S) | basis(S_perp)]:
///   X -> [ xs xp ; xq xr ],  xs: m x m, xr: (n-m) x (n-m).
struct BlockPartition {
  Matrix xs, xp, xq, xr;
};

BlockPartition partition(const Matrix& matrix, const Matrix& s_basis, const Matrix& r_basis);
BlockPartition partition(const Matrix& matrix, const Subspace& s, const Tolerances& tol = {});

Matrix assemble(const BlockPartition& p, const Matrix& s_basis, const Matrix& r_basis);

struct InvarianceReport {
  bool invariant = false;
  std::vector<double> lq_norms;   // per noise operator
  double residual_norm = 0.0;     // norm of i H_P - 1/2 sum L_S^dag L_P (or dual)
  std::optional<Matrix> witness;  // the offending residual block, when not invariant
};

/// S invariant iff all L_Q blocks vanish and i H_P - 1/2 sum_k L_S,k^dag L_P,k = 0.
InvarianceReport check_s_invariance(const QdsModel& model, const RVector& u,
                                    const Subspace& s, const Tolerances& tol = {});

/// Dual test: R = S_perp invariant iff all L_P blocks vanish and
/// i H_P + 1/2 sum_k L_Q,k^dag L_R,k = 0.
InvarianceReport check_r_invariance(const QdsModel& model, const RVector& u,
                                    const Subspace& s, const Tolerances& tol = {});

enum class Feasibility { GasPossible, Blocked };

struct FeasibilityVerdict {
  Feasibility kind = Feasibility::Blocked;
  bool invariance_possible = false;  // all L_Q vanish (reachable by Hamiltonian control)
  std::string reason;
};

/// Static screen over the noise blocks alone: Blocked when some L_Q != 0
/// (invariance out of Hamiltonian reach) or all L_P = 0 (R stays invariant
/// under every Hamiltonian); GasPossible otherwise.
FeasibilityVerdict openloop_feasibility(const QdsModel& model, const Subspace& s,
                                        const Tolerances& tol = {});

/// Invariance residual i H_P(u) - 1/2 sum_k L_S,k^dag L_P,k, affine in u.
/// Zero exactly when S is invariant at u.
Matrix invariance_residual(const QdsModel& model, const RVector& u,
                           const Subspace& s, const Tolerances& tol = {});

/// R-side escape residual -i H_P(u) - 1/2 sum_k L_Q,k^dag L_R,k for the given
/// explicit decomposition; zero (with all L_P = 0) exactly when span(r_basis)
/// is invariant.
Matrix escape_residual(const QdsModel& model, const RVector& u,
                       const Matrix& s_basis, const Matrix& r_basis);

struct NotInvariantError : std::runtime_error {
  explicit NotInvariantError(InvarianceReport r)
      : std::runtime_error("target subspace is not invariant (residual " +
                           std::to_string(r.residual_norm) + ")"),
        report(std::move(r)) {}
  InvarianceReport report;
};

}  // namespace qds
