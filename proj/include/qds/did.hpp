#pragma once

#include "qds/blocks.hpp"

namespace qds {

enum class SplitKind {
  NoiseKernel,        // complement of the joint kernel of the L_P blocks
  HamiltonianKernel,  // complement of ker of the escape residual
  Final               // last basin (either route, full rank)
};

struct DidStep {
  int index = 0;           // 1-based basin index
  Subspace basin;          // ambient orthonormal basis, phases canonicalized
  SplitKind kind = SplitKind::NoiseKernel;
  bool hamiltonian_evidence = false;  // Final steps: which route closed the chain
  Matrix evidence;         // stacked L_P blocks or escape residual at the split
};

struct DidResult {
  bool success = false;
  std::vector<DidStep> steps;
  Matrix total_basis;  // n x n unitary, columns ordered S, T1, ..., Tq (then any remainder on failure)
  std::optional<std::string> failure_reason;
  std::optional<Subspace> invariant_remainder;  // the R that stalled the chain
  int target_dim = 0;

  int num_basins() const { return static_cast<int>(steps.size()); }
  /// [dim S, dim T1, ..., dim Tq]
  std::vector<int> block_dims() const;
};

/// Runs the dissipation-induced decomposition for an invariant target.
/// success <=> the target subspace is GAS. Throws NotInvariantError when the
/// precondition fails.
DidResult compute_did(const QdsModel& model, const RVector& u, const Subspace& target,
                      const Tolerances& tol = {});

/// H(u) and every L_k conjugated into the DID-ordered basis. Returns
/// [H, L_1, ..., L_p]. Asserts the chain structure: above the block diagonal
/// each L_k is nonzero only on the (j, j+1) blocks.
std::vector<Matrix> did_transform(const QdsModel& model, const RVector& u,
                                  const DidResult& did, const Tolerances& tol = {});

/// Dynamical connection matrix C = H(u) + sum_k L_k in the DID-ordered basis.
Matrix dcm(const QdsModel& model, const RVector& u, const DidResult& did);

}  // namespace qds
