#pragma once

#include <json.hpp>

#include "porthos/families.hpp"
#include "porthos/tracial.hpp"

namespace porthos {

// Family file: { "dim": N, "elements": [ [ [re, im], ... row-major ... ], ... ] }.
// Parse errors cite the element index and entry position.
TracialFamily family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const TracialFamily& fam);

// Generator spec: { "kind": ..., "seed": ..., kind-specific parameters }.
// Kinds: dyadic_martingale(depth), spin(count), cyclic_fourier(modulus,
// blocks, coeffs), rademacher(count, coeffs), random_control(count, dim).
TracialFamily family_from_spec_json(const nlohmann::json& j);

// Dispatch: a "kind" key means a generator spec, otherwise a family file.
TracialFamily load_family(const nlohmann::json& j);

}  // namespace porthos
