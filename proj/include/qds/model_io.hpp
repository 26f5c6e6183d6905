#pragma once

#include "qds/model.hpp"

namespace qds {

/// A parsed model file: the model plus the declared target subspace.
struct ModelFile {
  QdsModel model;
  std::optional<Subspace> target;
};

ModelFile load_model_file(const std::string& text, const Tolerances& tol = {});
QdsModel load_model(const std::string& text, const Tolerances& tol = {});

/// Canonical serialization; load_model(serialize_model(f)) round-trips
/// bit-identically and re-serializes to the same string.
std::string serialize_model(const ModelFile& file);

ModelFile read_model_path(const std::string& path, const Tolerances& tol = {});

}  // namespace qds
