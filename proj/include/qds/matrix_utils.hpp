#pragma once

#include "qds/types.hpp"

namespace qds {

double hermiticity_defect(const Matrix& m);
bool is_hermitian(const Matrix& m, double rel_tol);

/// Multiplies each column by a unit phase so that its first element of
/// largest modulus becomes real positive.
void canonicalize_phases(Matrix& cols);
CVector canonicalize_phase(const CVector& v);

/// Result of an SVD-based rank split of a matrix A acting on column vectors:
/// `kernel` spans ker(A), `row_space` spans its orthogonal complement
/// (the span of the right singular vectors with sigma > eps * sigma_max).
struct RankSplit {
  Matrix kernel;
  Matrix row_space;
  int rank = 0;
};

RankSplit kernel_split(const Matrix& a, double eps);

/// Deterministic orthonormal completion of an isometry: Gram-Schmidt over the
/// columns of (I - B B^dag) in index order, phases canonicalized. Standard-basis
/// subspaces therefore complete to the remaining standard basis vectors in order.
Matrix orthonormal_completion(const Matrix& basis, double tol = 1e-9);

Matrix random_unit_trace_hermitian(int n, std::uint64_t& state);

/// Portable deterministic uniforms/gaussians on top of a SplitMix-style state.
double next_uniform(std::uint64_t& state);             // [0, 1)
double next_gaussian(std::uint64_t& state);

}  // namespace qds
