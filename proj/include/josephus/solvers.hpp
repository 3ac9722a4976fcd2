#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "josephus/circle.hpp"

namespace josephus {

// n prisoners labelled 1..n, every m-th one is eliminated.
class Problem {
 public:
  // Throws InvalidInput unless n >= 1 and m >= 1.
  Problem(std::int64_t n, std::int64_t m);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }

  friend bool operator==(const Problem&, const Problem&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
};

// Elimination order (n-1 labels) plus the survivor. Survivor-only solvers
// leave `order` empty and set `has_order` to false.
struct KillSequence {
  Problem problem;
  std::vector<Label> order;
  Label survivor = 1;
  bool has_order = true;

  friend bool operator==(const KillSequence&, const KillSequence&) = default;
};

// Elementary-step counter owned by one solver invocation.
struct OpCounter {
  std::uint64_t ops = 0;

  void add(std::uint64_t k = 1) noexcept { ops += k; }
};

// The Python program's (index, prisoners) pair. `index` is a 0-based cursor.
struct ImperativeState {
  std::size_t index = 0;
  std::vector<Label> prisoners;

  friend bool operator==(const ImperativeState&, const ImperativeState&) = default;
  friend auto operator<=>(const ImperativeState&, const ImperativeState&) = default;
};

// Python tuple form, e.g. "(0, [1, 2, 3])".
std::string to_string(const ImperativeState& s);

// One pass of the while-loop body: line 6 (index update) and line 7 (pop).
// Returns the killed label. Precondition: at least two prisoners.
Label imperative_kill(ImperativeState& s, std::int64_t m, OpCounter* ops = nullptr);

// Focus `m`-1 steps forward, then remove. Returns the removed label and the
// remaining circle. On a singleton returns its only label and the same circle.
template <std::totally_ordered T>
std::pair<T, CircleOf<T>> remove_nth(std::int64_t m, CircleOf<T> c,
                                     OpCounter* ops = nullptr) {
  if (m < 1) throw InvalidInput("remove_nth: m must be >= 1");
  // next^size is the identity, so only m-1 mod size rotations matter.
  auto turns = static_cast<std::uint64_t>(m - 1) % c.size();
  for (std::uint64_t i = 0; i < turns; ++i) c = next(std::move(c));
  T killed = current(c);
  c = remove(std::move(c));
  if (ops) ops->add(turns + 1);
  return {std::move(killed), std::move(c)};
}

// Replays romans.py: prisoners = [1..n], index = 0, pos = m-1, pop until one
// remains. O(n^2) element shifts.
KillSequence simulate_imperative(const Problem& p, OpCounter* ops = nullptr);

// romans.hs: `until isSingleton (removeNth m)` on mk_circle(1, [2..n]).
KillSequence solve_zipper(const Problem& p, OpCounter* ops = nullptr);

// J(1) = 0, J(k) = (J(k-1) + m) mod k; survivor = J(n) + 1.
Label solve_recurrence(const Problem& p, OpCounter* ops = nullptr);

// m = 2 only: n = 2^a + l with 0 <= l < 2^a gives survivor 2l + 1.
Label closed_form_m2(std::int64_t n, OpCounter* ops = nullptr);

// Full elimination order in O(n log n) via rank-select over alive flags.
KillSequence solve_order_statistic(const Problem& p, OpCounter* ops = nullptr);

enum class Algorithm { imperative, zipper, recurrence, closed_form, order_statistic };

std::string_view algorithm_name(Algorithm a) noexcept;
// Throws InvalidInput for unknown names.
Algorithm parse_algorithm(std::string_view name);
bool produces_order(Algorithm a) noexcept;

// Dispatches to one solver. Survivor-only algorithms return has_order=false.
// closed_form requires m == 2.
KillSequence solve(Algorithm a, const Problem& p, OpCounter* ops = nullptr);

}  // namespace josephus
