#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "josephus/error.hpp"

namespace josephus {

using Label = std::int64_t;

// A nonempty circular arrangement of distinct values with one element in
// focus: `focus` followed by `rest` in circle order. Mirrors the Haskell
// `data CircleOf a = C a [a]`.
//
// Operations are free functions taking the circle by value, so callers that
// move into them get O(1) amortized rotation while the value semantics stay
// those of the persistent original.
template <std::totally_ordered T>
class CircleOf {
 public:
  using value_type = T;

  CircleOf(T focus, std::deque<T> rest)
      : focus_(std::move(focus)), rest_(std::move(rest)) {}

  const T& focus() const noexcept { return focus_; }
  const std::deque<T>& rest() const noexcept { return rest_; }
  std::size_t size() const noexcept { return 1 + rest_.size(); }

  // Labels in circle order starting at the focus.
  std::vector<T> labels() const {
    std::vector<T> out;
    out.reserve(size());
    out.push_back(focus_);
    out.insert(out.end(), rest_.begin(), rest_.end());
    return out;
  }

  friend bool operator==(const CircleOf&, const CircleOf&) = default;

  template <std::totally_ordered U>
  friend CircleOf<U> next(CircleOf<U> c);
  template <std::totally_ordered U>
  friend CircleOf<U> remove(CircleOf<U> c);

 private:
  T focus_;
  std::deque<T> rest_;
};

template <std::totally_ordered T, typename Range>
CircleOf<T> mk_circle_of(T focus, const Range& after) {
  std::vector<T> seen(std::begin(after), std::end(after));
  seen.push_back(focus);
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end()) {
    std::ostringstream os;
    os << "duplicate label in circle: " << *dup;
    throw InvalidInput(os.str());
  }
  return CircleOf<T>(std::move(focus),
                     std::deque<T>(std::begin(after), std::end(after)));
}

using Circle = CircleOf<Label>;

inline Circle mk_circle(Label focus, const std::vector<Label>& after) {
  return mk_circle_of(focus, after);
}

inline Circle mk_circle(Label focus, std::initializer_list<Label> after) {
  return mk_circle_of(focus, std::vector<Label>(after));
}

template <std::totally_ordered T>
const T& current(const CircleOf<T>& c) noexcept {
  return c.focus();
}

template <std::totally_ordered T>
bool is_singleton(const CircleOf<T>& c) noexcept {
  return c.rest().empty();
}

// next (C x []) = C x []; next (C x (y:ys)) = C y (ys ++ [x])
template <std::totally_ordered T>
CircleOf<T> next(CircleOf<T> c) {
  if (c.rest_.empty()) return c;
  c.rest_.push_back(std::move(c.focus_));
  c.focus_ = std::move(c.rest_.front());
  c.rest_.pop_front();
  return c;
}

// remove (C x []) = C x []; remove (C x (y:ys)) = C y ys
template <std::totally_ordered T>
CircleOf<T> remove(CircleOf<T> c) {
  if (c.rest_.empty()) return c;
  c.focus_ = std::move(c.rest_.front());
  c.rest_.pop_front();
  return c;
}

// Haskell `Show` form, e.g. "C 1 [2,3]". Used as the canonical serialized
// state for ordering and DOT node names.
template <std::totally_ordered T>
std::string to_string(const CircleOf<T>& c) {
  std::ostringstream os;
  os << "C " << c.focus() << " [";
  bool first = true;
  for (const auto& x : c.rest()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ']';
  return os.str();
}

}  // namespace josephus
