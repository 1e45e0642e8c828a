#pragma once

#include <json.hpp>

#include <string>

#include "composite.hpp"
#include "digraph_reduction.hpp"
#include "layered.hpp"
#include "orbitals.hpp"
#include "sn.hpp"
#include "structure.hpp"

namespace conjforge::io {

// Key order is fixed by the emitters so serialized output is byte-stable.
using json = nlohmann::ordered_json;

// Canonical rendering used for every file and report this project writes.
std::string dump(const json& j);

json structure_to_json(const FiniteStructure& s);
FiniteStructure structure_from_json(const json& j);
std::string structure_to_dot(const FiniteStructure& s);

json family_to_json(const gendigraph::ForbiddenFamily& f);
gendigraph::ForbiddenFamily family_from_json(const json& j);

json plmap_to_json(const qorder::PLAutomorphism& f);
qorder::PLAutomorphism plmap_from_json(const json& j);
json decomposition_to_json(const qorder::OrbitalDecomposition& d);

json registry_to_json(const circular::SnRegistry& r);
circular::SnRegistry registry_from_json(const json& j);
json snmap_to_json(const circular::SnAutomorphism& f);
circular::SnAutomorphism snmap_from_json(const json& j);

json layered_to_json(const layered::LayeredStructure& d);
layered::LayeredStructure layered_from_json(const json& j);
std::string layered_to_dot(const layered::LayeredStructure& d);

json composite_to_json(const composite::CompositeAutomorphism& f);
composite::CompositeAutomorphism composite_from_json(const json& j);
json twist_to_json(const composite::TwistType& t);
composite::TwistType twist_from_json(const json& j);
json invariant_to_json(const composite::CycleInvariant& inv);
json eset_to_json(const composite::EsetCode& code);

// Parses a file's worth of JSON text, mapping parse failures to InputError.
json parse_text(const std::string& text);

}  // namespace conjforge::io
