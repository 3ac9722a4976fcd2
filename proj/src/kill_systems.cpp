#include "josephus/kill_systems.hpp"

#include <algorithm>
#include <string>

namespace josephus {

std::vector<Label> universe_of_size(std::int64_t k) {
  if (k < 1) throw InvalidInput("universe size must be >= 1 (got " + std::to_string(k) + ")");
  if (static_cast<std::uint64_t>(k) > kMaxUniverse)
    throw ResourceGuard("universe size " + std::to_string(k) + " exceeds the limit of " +
                        std::to_string(kMaxUniverse) + " labels");
  std::vector<Label> u;
  for (Label x = 1; x <= k; ++x) u.push_back(x);
  return u;
}

namespace {

void check_universe(const std::vector<Label>& universe) {
  if (universe.empty()) throw InvalidInput("universe must be nonempty");
  if (universe.size() > kMaxUniverse)
    throw ResourceGuard("universe of " + std::to_string(universe.size()) +
                        " labels exceeds the limit of " + std::to_string(kMaxUniverse));
  std::vector<Label> sorted = universe;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("universe labels must be distinct");
}

// Calls emit(seq) for every nonempty arrangement of distinct universe labels.
template <typename Emit>
void for_each_arrangement(const std::vector<Label>& universe, Emit&& emit) {
  const std::size_t n = universe.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Label> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) subset.push_back(universe[i]);
    std::sort(subset.begin(), subset.end());
    do {
      emit(subset);
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
}

}  // namespace

std::vector<Circle> enumerate_circle_states(const std::vector<Label>& universe) {
  check_universe(universe);
  std::vector<Circle> out;
  for_each_arrangement(universe, [&](const std::vector<Label>& seq) {
    out.push_back(mk_circle(seq.front(), std::vector<Label>(seq.begin() + 1, seq.end())));
  });
  return out;
}

std::vector<ImperativeState> enumerate_imperative_states(const std::vector<Label>& universe) {
  check_universe(universe);
  std::vector<ImperativeState> out;
  for_each_arrangement(universe, [&](const std::vector<Label>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) out.push_back(ImperativeState{i, seq});
  });
  return out;
}

Circle kill_step(const Circle& c, std::int64_t m) {
  if (is_singleton(c)) return c;
  return remove_nth(m, c).second;
}

ImperativeState kill_step(const ImperativeState& s, std::int64_t m) {
  if (s.prisoners.size() <= 1) return s;
  ImperativeState out = s;
  imperative_kill(out, m);
  return out;
}

ImperativeState gamma_line6(const ImperativeState& s, std::int64_t m) {
  ImperativeState out = s;
  out.index = static_cast<std::size_t>(
      (static_cast<std::uint64_t>(m - 1) + s.index) % s.prisoners.size());
  return out;
}

bool cyclically_sorted(const Circle& c) {
  auto seq = c.labels();
  auto lo = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), lo, seq.end());
  return std::is_sorted(seq.begin(), seq.end());
}

ImperativeState read_from(const Circle& c, Label anchor) {
  auto seq = c.labels();
  auto it = std::find(seq.begin(), seq.end(), anchor);
  if (it == seq.end()) throw InvalidInput("anchor label is not on the circle");
  // seq starts at the focus, so after rotating the focus sits where the
  // anchor's distance from the end places it.
  const auto offset = static_cast<std::size_t>(it - seq.begin());
  std::rotate(seq.begin(), it, seq.end());
  return ImperativeState{(seq.size() - offset) % seq.size(), std::move(seq)};
}

ImperativeState sorted_reading(const Circle& c) {
  auto seq = c.labels();
  std::sort(seq.begin(), seq.end());
  auto pos = std::find(seq.begin(), seq.end(), current(c)) - seq.begin();
  return ImperativeState{static_cast<std::size_t>(pos), std::move(seq)};
}

ImperativeState canonical_map(const Circle& c, std::int64_t m) {
  if (cyclically_sorted(c)) return sorted_reading(c);
  // Circles of size <= 2 are always cyclically sorted, so this terminates.
  Circle walk = kill_step(c, m);
  while (!cyclically_sorted(walk)) walk = kill_step(walk, m);
  auto labels = walk.labels();
  return read_from(c, *std::min_element(labels.begin(), labels.end()));
}

Circle initial_circle(std::int64_t k) {
  std::vector<Label> rest;
  for (Label x = 2; x <= k; ++x) rest.push_back(x);
  return mk_circle(1, rest);
}

ImperativeState initial_imperative(std::int64_t k) {
  ImperativeState s;
  for (Label x = 1; x <= k; ++x) s.prisoners.push_back(x);
  return s;
}

std::shared_ptr<const CircleSystem> circle_kill_system(const std::vector<Label>& universe,
                                                       std::int64_t m) {
  return std::make_shared<const CircleSystem>(build_system(
      enumerate_circle_states(universe), [m](const Circle& c) { return kill_step(c, m); }));
}

std::shared_ptr<const ImperativeSystem> imperative_kill_system(
    const std::vector<Label>& universe, std::int64_t m) {
  return std::make_shared<const ImperativeSystem>(
      build_system(enumerate_imperative_states(universe),
                   [m](const ImperativeState& s) { return kill_step(s, m); }));
}

CanonicalMap canonical_system_map(std::shared_ptr<const CircleSystem> h,
                                  std::shared_ptr<const ImperativeSystem> p, std::int64_t m) {
  return CanonicalMap::build(std::move(h), std::move(p),
                             [m](const Circle& c) { return canonical_map(c, m); });
}

EquivalenceReport verify_canonical(std::int64_t universe_size, std::int64_t m, unsigned jobs) {
  if (m < 1) throw InvalidInput("m must be >= 1 (got " + std::to_string(m) + ")");
  const auto universe = universe_of_size(universe_size);
  auto h = circle_kill_system(universe, m);
  auto p = imperative_kill_system(universe, m);

  EquivalenceReport report;
  report.circle_states = h->size();
  report.imperative_states = p->size();
  report.morphism = is_morphism(canonical_system_map(h, p, m), jobs);

  auto h_reach = std::make_shared<const CircleSystem>(
      h->reachable_from({initial_circle(universe_size)}));
  auto p_reach = std::make_shared<const ImperativeSystem>(
      p->reachable_from({initial_imperative(universe_size)}));
  report.reachable_states = h_reach->size();
  try {
    report.isomorphism = is_isomorphism(canonical_system_map(h_reach, p_reach, m), jobs);
  } catch (const ClosureError& e) {
    report.isomorphism.holds = false;
    report.isomorphism.failure = Failure::outside_target;
    report.isomorphism.detail = e.what();
  }
  return report;
}

}  // namespace josephus
