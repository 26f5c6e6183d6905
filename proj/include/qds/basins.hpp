#pragma once

#include "qds/did.hpp"

namespace qds {

enum class BasinKind { Transition, Mixing1, Mixing2, Mixing3, Circulation };

const char* to_string(BasinKind k);

struct BasinClass {
  BasinKind kind = BasinKind::Transition;
  std::optional<double> rate_l;     // min eig of sum_k Lhat_P^dag Lhat_P (noise exit)
  std::optional<double> rate_h;     // s_min / arccos(1/e) (Hamiltonian exit)
  std::vector<double> singulars;    // singular values of the head x T_i H-block
  bool degenerate_hamiltonian = false;  // Mixing3 with vanishing H_P: rate 0, flagged
};

struct DidFailedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotApplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Classifies every basin of a successful DID from the transformed blocks:
/// forward noise link Lhat_P^(i-1), backward link L_Q^(i-1), and the
/// aggregate invariance residual of the preceding head.
std::vector<BasinClass> classify(const QdsModel& model, const RVector& u,
                                 const DidResult& did, const Tolerances& tol = {});

/// Worst-case dissipative exit rate of basin i (1-based):
/// min eigenvalue of sum_k Lhat_P,k^(i-1)dag Lhat_P,k^(i-1).
double dissipative_rate(const QdsModel& model, const RVector& u,
                        const DidResult& did, int i, const Tolerances& tol = {});

/// Hamiltonian transfer-rate estimate s_min / arccos(1/e) for Circulation and
/// Mixing3 basins; `singulars` receives the connection strengths.
double hamiltonian_rate(const QdsModel& model, const RVector& u,
                        const DidResult& did, int i, std::vector<double>* singulars,
                        const Tolerances& tol = {});

enum class RateLimiter { Dissipation, Hamiltonian };

struct BottleneckReport {
  double gamma_min = 0.0;   // minimum applicable rate across basins
  int basin_index = 0;      // 1-based
  RateLimiter limited_by = RateLimiter::Dissipation;
  // Non-tunable floor: the slowest noise-enacted rate. When the overall
  // minimum is Hamiltonian-limited it can be raised by design; this cannot.
  double noise_floor = 0.0;
  int noise_floor_basin = 0;
};

BottleneckReport bottleneck(const QdsModel& model, const RVector& u,
                            const DidResult& did, const Tolerances& tol = {});

}  // namespace qds
