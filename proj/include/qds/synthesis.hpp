#pragma once

#include "qds/did.hpp"
#include "qds/spectral.hpp"

namespace qds {

/// Admissible control region: one interval union per axis.
struct ControlSet {
  std::vector<IntervalUnion> axes;

  static ControlSet from_model(const QdsModel& model);
  bool contains(const RVector& u, double slack = 0.0) const;
  bool bounded() const;
  bool all_finite() const;
  int dim() const { return static_cast<int>(axes.size()); }
};

/// Affine description of the invariance-enforcing control set C0:
/// { particular + nullspace * t } up to `residual`, intersected with the box
/// union by membership tests.
struct InvarianceSet {
  bool solvable = false;      // residual below tolerance somewhere on the affine set
  RVector particular;          // least-squares solution
  RMatrix nullspace;           // orthonormal columns; directions that keep the residual
  double residual = 0.0;       // invariance residual norm at `particular`
  bool identically_invariant = false;  // residual vanishes for every u
  bool nonempty_in_set = false;        // a member of C0 inside the control set was found

  /// Projects u onto the affine set.
  RVector project(const RVector& u) const;
};

InvarianceSet invariance_set(const QdsModel& model, const Subspace& target,
                             const ControlSet& cset, const Tolerances& tol = {});

enum class SynthesisStatus {
  Stabilized,
  Infeasible,
  Practical,
  IterationCapExceeded,
  NoStabilizingSet,
  NonUniqueSteadyState
};

const char* to_string(SynthesisStatus s);

struct SynthesisOutcome {
  SynthesisStatus status = SynthesisStatus::Infeasible;
  RVector u;
  std::optional<DidResult> did;
  std::string reason;
  int did_runs = 0;

  // practical-stabilization payload
  Matrix delta_h;              // Hamiltonian correction at u (ambient, Hermitian)
  double bound = 0.0;          // 2 * spectral norm of the P-block correction
  double corrected_gap = 0.0;  // smallest nonzero |eigenvalue| of the corrected generator
  Matrix steady;               // steady state of the true generator at u
  double fidelity = 0.0;       // tr(Pi_S steady)
  bool unique_steady = false;
  double residual_norm = 0.0;  // invariance residual of the true model at u
};

/// DID-driven search over the admissible set for a control making the target
/// GAS. Deterministic given `seed`; finite axes are enumerated exhaustively.
SynthesisOutcome synthesize(const QdsModel& model, const Subspace& target,
                            const ControlSet& cset, std::uint64_t seed,
                            const Tolerances& tol = {});

/// Approximate stabilization when no control makes the target invariant but
/// all L_Q vanish: corrects the Hamiltonian P-block, stabilizes the corrected
/// model, minimizes the residual norm over the stabilizing set, and reports
/// the true steady state, its fidelity, and the perturbation bound.
SynthesisOutcome practical_stabilize(const QdsModel& model, const Subspace& target,
                                     const ControlSet& cset, std::uint64_t seed,
                                     const Tolerances& tol = {});

}  // namespace qds
