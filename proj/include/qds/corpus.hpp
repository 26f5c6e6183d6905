#pragma once

#include "qds/model_io.hpp"

namespace qds::corpus {

/// Bundled models. Each returns the model together with its target subspace;
/// the same definitions back the JSON files under models/.

ModelFile amplitude_damping(double gamma = 1.0);

/// Two-qubit collective-decay model at fixed parameters (gamma = delta = alpha = 1).
ModelFile example1();

/// Three-level chain |s>, |r1>, |r2>: L = |s><r1|, H diag upsilon plus the
/// controlled (delta, omega) R-block.
ModelFile example2(double upsilon = 1.0, double ell = 1.0);

/// Four-level optical system with a two-dimensional decoherence-free target;
/// detuning and overall coupling are the controls, (theta, phi) fix the split.
ModelFile dfs4(double gamma1 = 0.9, double gamma2 = 0.9, double gamma3 = 0.9,
               double theta = M_PI / 4, double phi = 3 * M_PI / 4);

/// Two-qubit entanglement model with detuning and drive as controls; the
/// invariant pure state depends on the control values.
ModelFile entangle2(double gamma = 1.0);

/// Target state of the entanglement model at control (delta, alpha).
Subspace entangle2_target(double delta, double alpha);

/// Ten-level electron(pseudo spin-1/2)-nucleus NV model with magnetic field
/// control; rates in MHz, B in gauss.
ModelFile nv_reduced();

/// Eight-level variant with the metastable passage merged into a single decay.
ModelFile nv_merged();

/// Full 21-level spin-1 NV model.
ModelFile nv_extended();

struct NvParams {
  double de = 1420.0, dg = 2870.0, q = 4.945;
  double ae = 40.0, ag = 2.2;
  double gel = 2.8, gn = 3.08e-4;
  double gamma_d = 77.0, gamma_m = 33.0, gamma_0 = 3.3, gamma_p = 70.0;
};

NvParams nv_params();

/// All bundled models keyed by file stem.
std::vector<std::pair<std::string, ModelFile>> all();

}  // namespace qds::corpus
