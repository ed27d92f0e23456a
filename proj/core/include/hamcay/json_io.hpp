#pragma once

#include <nlohmann/json.hpp>

#include "hamcay/cayley.hpp"
#include "hamcay/group.hpp"

namespace hamcay {

using json = nlohmann::json;

// {"m": 7, "e": [3], "t": [0], "r": [2], "c": [[0]]}
json to_json(const PcPresentation& p);
PcPresentation presentation_from_json(const json& j);

// {"q": [1], "z": 0}
json to_json(const Element& x);
Element element_from_json(const json& j);

// [{"name": "a", "q": [1], "z": 0}, ...]
json to_json(const GenSet& s);
GenSet genset_from_json(const json& j);

// {"start": {"q":..,"z":..} | null, "steps": [["a", 1], ["b", -1]], "multiplicity": 7}
json to_json(const WalkSpec& w);
WalkSpec walk_from_json(const json& j);

json to_json(const VerificationTranscript& t);
VerificationTranscript transcript_from_json(const json& j);

// An instance is {"presentation": {...}, "gens": [...]} with optional "label" and "methods".
struct Instance {
    std::string label;
    PcPresentation presentation;
    GenSet gens;
    std::vector<std::string> methods;  // optional dispatch restriction, by case name
};
json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

} // namespace hamcay
