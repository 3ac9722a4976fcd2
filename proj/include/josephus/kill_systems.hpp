#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "josephus/circle.hpp"
#include "josephus/dynamics.hpp"
#include "josephus/solvers.hpp"

namespace josephus {

// Largest universe the exhaustive enumerations accept.
inline constexpr std::size_t kMaxUniverse = 8;

// Universe {1..k}. Throws InvalidInput for k < 1, ResourceGuard for k > 8.
std::vector<Label> universe_of_size(std::int64_t k);

// Every circle whose labels form a nonempty subset of `universe`, in every
// order and focus: sum over k of P(|U|, k) states.
std::vector<Circle> enumerate_circle_states(const std::vector<Label>& universe);

// Every (index, prisoners) with prisoners a nonempty arrangement of distinct
// universe labels and 0 <= index < |prisoners|: sum over k of k * P(|U|, k).
std::vector<ImperativeState> enumerate_imperative_states(const std::vector<Label>& universe);

// Circle side of the kill dynamics: identity on singletons, otherwise the
// circle left by remove_nth(m, c).
Circle kill_step(const Circle& c, std::int64_t m);

// Program side: identity with one prisoner left, otherwise one pass of the
// while-loop body (index update then pop).
ImperativeState kill_step(const ImperativeState& s, std::int64_t m);

// Line 6 alone: index = (m - 1 + index) mod len(prisoners). Prisoners unchanged.
ImperativeState gamma_line6(const ImperativeState& s, std::int64_t m);

// True when the circle, read from its smallest label, is ascending. These are
// exactly the circles reachable from mk_circle(1, [2..k]) by kill steps.
bool cyclically_sorted(const Circle& c);

// The surviving labels in ascending order with the cursor on current(c).
ImperativeState sorted_reading(const Circle& c);

// The circle read in circle order from `anchor`, cursor on current(c).
ImperativeState read_from(const Circle& c, Label anchor);

// Map from circles to program states used for the commuting-square checks.
// For cyclically sorted circles it is sorted_reading. Other circles are read
// from the smallest label of the first cyclically sorted circle on their
// kill orbit, which keeps the square commuting on every circle. Injective.
ImperativeState canonical_map(const Circle& c, std::int64_t m);

Circle initial_circle(std::int64_t k);
ImperativeState initial_imperative(std::int64_t k);

using CircleSystem = DynSystem<Circle>;
using ImperativeSystem = DynSystem<ImperativeState>;
using CanonicalMap = SystemMap<Circle, ImperativeState>;

std::shared_ptr<const CircleSystem> circle_kill_system(const std::vector<Label>& universe,
                                                       std::int64_t m);
std::shared_ptr<const ImperativeSystem> imperative_kill_system(
    const std::vector<Label>& universe, std::int64_t m);

CanonicalMap canonical_system_map(std::shared_ptr<const CircleSystem> h,
                                  std::shared_ptr<const ImperativeSystem> p, std::int64_t m);

struct EquivalenceReport {
  Verdict morphism;     // canonical map over the full enumerations
  Verdict isomorphism;  // canonical map between the reachable subsystems
  std::size_t circle_states = 0;
  std::size_t imperative_states = 0;
  std::size_t reachable_states = 0;
};

// Checks the canonical map between (H, kill_step) and (P, kill_step) over
// universe {1..k}: morphism on everything, isomorphism on states reachable
// from initial_circle(k) and initial_imperative(k).
EquivalenceReport verify_canonical(std::int64_t universe_size, std::int64_t m,
                                   unsigned jobs = 1);

}  // namespace josephus
