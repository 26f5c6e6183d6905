#include "qds/matrix_utils.hpp"

#include <Eigen/SVD>
#include <cstdlib>

namespace qds {

Tolerances Tolerances::from_env() {
  Tolerances tol;
  if (const char* env = std::getenv("QDS_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0 && v < 1) {
      tol.zero_block = v;
      tol.kernel_eps = v;
    }
  }
  return tol;
}

bool IntervalUnion::finite_set() const {
  if (parts.empty()) return false;
  for (const auto& p : parts)
    if (!p.degenerate()) return false;
  return true;
}

bool IntervalUnion::contains(double x, double slack) const {
  if (parts.empty()) return true;
  for (const auto& p : parts)
    if (x >= p.lo - slack && x <= p.hi + slack) return true;
  return false;
}

double IntervalUnion::clamp(double x) const {
  if (parts.empty() || contains(x)) return x;
  double best = parts.front().lo;
  double dist = std::abs(x - best);
  for (const auto& p : parts) {
    for (double c : {p.lo, p.hi}) {
      if (std::abs(x - c) < dist) {
        dist = std::abs(x - c);
        best = c;
      }
    }
  }
  return best;
}

double IntervalUnion::total_length() const {
  double s = 0;
  for (const auto& p : parts) s += p.length();
  return s;
}

std::vector<double> IntervalUnion::values() const {
  std::vector<double> v;
  for (const auto& p : parts)
    if (p.degenerate()) v.push_back(p.lo);
  return v;
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

bool is_hermitian(const Matrix& m, double rel_tol) {
  return hermiticity_defect(m) <= rel_tol * std::max(1.0, m.norm());
}

CVector canonicalize_phase(const CVector& v) {
  double maxmod = 0.0;
  for (int i = 0; i < v.size(); ++i) maxmod = std::max(maxmod, std::abs(v[i]));
  if (maxmod == 0.0) return v;
  int pivot = 0;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= maxmod * (1.0 - 1e-12)) {
      pivot = i;
      break;
    }
  }
  Complex phase = v[pivot] / std::abs(v[pivot]);
  return v / phase;
}

void canonicalize_phases(Matrix& cols) {
  for (int j = 0; j < cols.cols(); ++j) cols.col(j) = canonicalize_phase(cols.col(j));
}

RankSplit kernel_split(const Matrix& a, double eps) {
  RankSplit out;
  if (a.size() == 0 || a.cols() == 0) {
    out.kernel = Matrix::Identity(a.cols(), a.cols());
    out.row_space = Matrix(a.cols(), 0);
    return out;
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  const auto& sig = svd.singularValues();
  double smax = sig.size() ? sig[0] : 0.0;
  int rank = 0;
  for (int i = 0; i < sig.size(); ++i)
    if (sig[i] > eps * std::max(smax, 1e-300) && sig[i] > 1e-300) ++rank;
  out.rank = rank;
  out.row_space = svd.matrixV().leftCols(rank);
  out.kernel = svd.matrixV().rightCols(a.cols() - rank);
  return out;
}

Matrix orthonormal_completion(const Matrix& basis, double tol) {
  const int n = static_cast<int>(basis.rows());
  const int m = static_cast<int>(basis.cols());
  Matrix residual = Matrix::Identity(n, n) - basis * basis.adjoint();
  Matrix out(n, n - m);
  int found = 0;
  for (int i = 0; i < n && found < n - m; ++i) {
    CVector v = residual.col(i);
    v -= basis * (basis.adjoint() * v);
    for (int j = 0; j < found; ++j) v -= out.col(j) * (out.col(j).adjoint() * v);
    double norm = v.norm();
    if (norm > tol) {
      v /= norm;
      // second Gram-Schmidt pass for orthogonality at working precision
      v -= basis * (basis.adjoint() * v);
      for (int j = 0; j < found; ++j) v -= out.col(j) * (out.col(j).adjoint() * v);
      v.normalize();
      out.col(found++) = canonicalize_phase(v);
    }
  }
  if (found != n - m)
    throw DimensionError("orthonormal completion failed: basis not an isometry?");
  return out;
}

double next_uniform(std::uint64_t& state) {
  // SplitMix64 step; top 53 bits as a double in [0, 1)
  state += 0x9E3779B97f4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double next_gaussian(std::uint64_t& state) {
  double u1 = next_uniform(state);
  double u2 = next_uniform(state);
  u1 = std::max(u1, 1e-300);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Matrix random_unit_trace_hermitian(int n, std::uint64_t& state) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = Complex(next_gaussian(state), next_gaussian(state));
  Matrix h = (g + g.adjoint()) / 2.0;
  h -= (h.trace() - 1.0) / static_cast<double>(n) * Matrix::Identity(n, n);
  return h;
}

}  // namespace qds
