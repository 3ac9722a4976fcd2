#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "josephus/circle.hpp"
#include "josephus/dynamics.hpp"
#include "josephus/kill_systems.hpp"
#include "josephus/solvers.hpp"

namespace josephus {

// {"focus": label, "rest": [labels]}
void to_json(nlohmann::json& j, const Circle& c);
// {"index": int, "prisoners": [labels]}
void to_json(nlohmann::json& j, const ImperativeState& s);
// {"n":int,"m":int,"order":[int...],"survivor":int}
void to_json(nlohmann::json& j, const KillSequence& ks);
void from_json(const nlohmann::json& j, KillSequence& ks);

// Compact single-line JSON, no trailing newline.
std::string kill_sequence_json(const KillSequence& ks);
// Throws InvalidInput when fields are missing or violate the invariants.
KillSequence parse_kill_sequence_json(const std::string& text);

// Header "step,killed,remaining_count" and one row per kill. When `states`
// is nonempty it must hold one serialized state per kill; a quoted "state"
// column is added.
std::string kill_sequence_csv(const KillSequence& ks,
                              const std::vector<std::string>& states = {});

// {"morphism": bool, "isomorphism": bool, "counterexample": {...}|null,
//  "states_checked": int}
nlohmann::json verdict_json(const EquivalenceReport& report);

// States after each kill.
std::vector<Circle> zipper_trace(const Problem& p);
std::vector<ImperativeState> imperative_trace(const Problem& p);

}  // namespace josephus
