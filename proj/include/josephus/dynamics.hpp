#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "josephus/error.hpp"

namespace josephus {

// A state is anything with equality and an ADL `to_string` giving its
// canonical serialized form. States are ordered and hashed by that form.
template <typename S>
concept StateValue = std::equality_comparable<S> && requires(const S& s) {
  { to_string(s) } -> std::convertible_to<std::string>;
};

// A finite set with a total endomap, (A, alpha). States are stored sorted by
// serialized form; that order is the documented traversal order for every
// check in this header.
template <StateValue S>
class DynSystem {
 public:
  using state_type = S;

  // Throws InvalidInput on an empty or repeated state set and ClosureError
  // naming x and step(x) when step(x) is not a state.
  template <typename Step>
  static DynSystem build(std::vector<S> states, Step&& step) {
    if (states.empty()) throw InvalidInput("a dynamical system needs at least one state");
    DynSystem sys;
    std::vector<std::pair<std::string, S>> keyed;
    keyed.reserve(states.size());
    for (auto& s : states) {
      std::string k = to_string(s);
      keyed.emplace_back(std::move(k), std::move(s));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    sys.index_.reserve(keyed.size());
    for (auto& [k, s] : keyed) {
      if (!sys.index_.emplace(k, sys.states_.size()).second)
        throw InvalidInput("state listed twice: " + k);
      sys.keys_.push_back(std::move(k));
      sys.states_.push_back(std::move(s));
    }
    sys.image_.resize(sys.states_.size());
    for (std::size_t i = 0; i < sys.states_.size(); ++i) {
      S img = step(std::as_const(sys.states_[i]));
      auto j = sys.find(img);
      if (!j)
        throw ClosureError("step escapes the state set: step(" + sys.keys_[i] +
                           ") = " + to_string(img));
      sys.image_[i] = *j;
    }
    return sys;
  }

  // Builds directly from an image table; used for derived systems.
  static DynSystem from_table(std::vector<S> sorted_states, std::vector<std::size_t> image) {
    DynSystem sys;
    for (auto& s : sorted_states) {
      sys.index_.emplace(to_string(s), sys.states_.size());
      sys.keys_.push_back(to_string(s));
      sys.states_.push_back(std::move(s));
    }
    sys.image_ = std::move(image);
    return sys;
  }

  std::size_t size() const noexcept { return states_.size(); }
  const S& state(std::size_t i) const { return states_[i]; }
  const std::string& key(std::size_t i) const { return keys_[i]; }
  const std::vector<S>& states() const noexcept { return states_; }

  // Index of step(state(i)).
  std::size_t image(std::size_t i) const { return image_[i]; }
  const S& step(std::size_t i) const { return states_[image_[i]]; }

  std::optional<std::size_t> find(const S& s) const { return find_key(to_string(s)); }
  std::optional<std::size_t> find_key(const std::string& k) const {
    auto it = index_.find(k);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Index reached after t steps from i.
  std::size_t iterate(std::size_t i, std::size_t t) const {
    while (t--) i = image_[i];
    return i;
  }

  // Every state reachable from `initial` (which must be states), as a
  // subsystem. Closed under step by construction.
  DynSystem reachable_from(const std::vector<S>& initial) const {
    std::vector<char> seen(size(), 0);
    std::vector<std::size_t> stack;
    for (const auto& s : initial) {
      auto i = find(s);
      if (!i) throw InvalidInput("initial state is not in the system: " + to_string(s));
      stack.push_back(*i);
    }
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      if (seen[i]) continue;
      seen[i] = 1;
      stack.push_back(image_[i]);
    }
    std::vector<std::size_t> remap(size(), 0);
    std::vector<S> kept;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!seen[i]) continue;
      remap[i] = kept.size();
      kept.push_back(states_[i]);
    }
    std::vector<std::size_t> img;
    img.reserve(kept.size());
    for (std::size_t i = 0; i < size(); ++i)
      if (seen[i]) img.push_back(remap[image_[i]]);
    return from_table(std::move(kept), std::move(img));
  }

 private:
  DynSystem() = default;

  std::vector<S> states_;
  std::vector<std::string> keys_;
  std::vector<std::size_t> image_;
  std::unordered_map<std::string, std::size_t> index_;
};

template <StateValue S, typename Step>
DynSystem<S> build_system(std::vector<S> states, Step&& step) {
  return DynSystem<S>::build(std::move(states), std::forward<Step>(step));
}

// A total function between the state sets of two systems. Being a morphism
// is checked by is_morphism, not assumed.
template <StateValue S, StateValue T>
class SystemMap {
 public:
  using Source = DynSystem<S>;
  using Target = DynSystem<T>;

  // Throws ClosureError naming x and f(x) when f(x) is not a target state.
  template <typename Fn>
  static SystemMap build(std::shared_ptr<const Source> source,
                         std::shared_ptr<const Target> target, Fn&& fn) {
    std::vector<std::size_t> table(source->size());
    for (std::size_t i = 0; i < source->size(); ++i) {
      T img = fn(source->state(i));
      auto j = target->find(img);
      if (!j)
        throw ClosureError("map leaves the target state set: f(" + source->key(i) +
                           ") = " + to_string(img));
      table[i] = *j;
    }
    return SystemMap(std::move(source), std::move(target), std::move(table));
  }

  SystemMap(std::shared_ptr<const Source> source, std::shared_ptr<const Target> target,
            std::vector<std::size_t> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {}

  const Source& source() const noexcept { return *source_; }
  const Target& target() const noexcept { return *target_; }
  std::shared_ptr<const Source> source_ptr() const noexcept { return source_; }
  std::shared_ptr<const Target> target_ptr() const noexcept { return target_; }
  std::size_t operator[](std::size_t i) const { return table_[i]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

 private:
  std::shared_ptr<const Source> source_;
  std::shared_ptr<const Target> target_;
  std::vector<std::size_t> table_;
};

template <StateValue S>
SystemMap<S, S> identity_map(std::shared_ptr<const DynSystem<S>> sys) {
  std::vector<std::size_t> table(sys->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return SystemMap<S, S>(sys, sys, std::move(table));
}

// g after f.
template <StateValue S, StateValue T, StateValue U>
SystemMap<S, U> compose(const SystemMap<T, U>& g, const SystemMap<S, T>& f) {
  if (&f.target() != &g.source()) throw InvalidInput("compose: f's target is not g's source");
  std::vector<std::size_t> table(f.source().size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = g[f[i]];
  return SystemMap<S, U>(f.source_ptr(), g.target_ptr(), std::move(table));
}

struct Counterexample {
  std::string state;           // x
  std::string map_after_step;  // f(alpha(x))
  std::string step_after_map;  // beta(f(x))
};

enum class Failure {
  none,
  not_morphism,
  not_injective,
  not_surjective,
  inverse_not_morphism,
  outside_target,  // the map could not even be built into the target states
};

std::string_view failure_name(Failure f) noexcept;

struct Verdict {
  bool holds = true;
  Failure failure = Failure::none;
  std::optional<Counterexample> counterexample;
  std::size_t states_checked = 0;
  std::string detail;
};

namespace detail {

// First i in [0, n) with bad(i), scanning `jobs` contiguous blocks in
// parallel. The smallest failing index wins, so the answer does not depend
// on scheduling.
template <typename Bad>
std::optional<std::size_t> first_failure(std::size_t n, unsigned jobs, const Bad& bad) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (bad(i)) return i;
    return std::nullopt;
  }
  std::vector<std::optional<std::size_t>> found(jobs);
  {
    std::vector<std::jthread> workers;
    const std::size_t block = (n + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(n, lo + block);
        for (std::size_t i = lo; i < hi; ++i) {
          if (bad(i)) {
            found[w] = i;
            return;
          }
        }
      });
    }
  }
  for (const auto& f : found)
    if (f) return f;
  return std::nullopt;
}

}  // namespace detail

// Checks f(alpha(x)) == beta(f(x)) for every source state x, in source
// order. On failure reports the first counterexample.
template <StateValue S, StateValue T>
Verdict is_morphism(const SystemMap<S, T>& f, unsigned jobs = 1) {
  const auto& a = f.source();
  const auto& b = f.target();
  Verdict v;
  v.states_checked = a.size();
  auto bad = [&](std::size_t i) { return f[a.image(i)] != b.image(f[i]); };
  if (auto i = detail::first_failure(a.size(), jobs, bad)) {
    v.holds = false;
    v.failure = Failure::not_morphism;
    v.counterexample =
        Counterexample{a.key(*i), b.key(f[a.image(*i)]), b.key(b.image(f[*i]))};
    v.detail = "f(step(x)) != step(f(x)) at x = " + a.key(*i);
  }
  return v;
}

// Morphism, bijective onto the target states, and the inverse is a morphism.
template <StateValue S, StateValue T>
Verdict is_isomorphism(const SystemMap<S, T>& f, unsigned jobs = 1) {
  Verdict v = is_morphism(f, jobs);
  if (!v.holds) return v;
  const auto& a = f.source();
  const auto& b = f.target();
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> inverse(b.size(), none);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (inverse[f[i]] != none) {
      v.holds = false;
      v.failure = Failure::not_injective;
      v.detail = "f(" + a.key(inverse[f[i]]) + ") = f(" + a.key(i) + ") = " + b.key(f[i]);
      return v;
    }
    inverse[f[i]] = i;
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (inverse[j] == none) {
      v.holds = false;
      v.failure = Failure::not_surjective;
      v.detail = "no source state maps to " + b.key(j);
      return v;
    }
  }
  SystemMap<T, S> back(f.target_ptr(), f.source_ptr(), std::move(inverse));
  Verdict w = is_morphism(back, jobs);
  v.states_checked += w.states_checked;
  if (!w.holds) {
    v.holds = false;
    v.failure = Failure::inverse_not_morphism;
    v.counterexample = w.counterexample;
    v.detail = "inverse: " + w.detail;
  }
  return v;
}

}  // namespace josephus
