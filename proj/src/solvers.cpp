#include "josephus/solvers.hpp"

#include <bit>
#include <sstream>
#include <string>

#include "josephus/fenwick.hpp"

namespace josephus {

Problem::Problem(std::int64_t n, std::int64_t m) : n_(n), m_(m) {
  if (n < 1) throw InvalidInput("n must be >= 1 (got " + std::to_string(n) + ")");
  if (m < 1) throw InvalidInput("m must be >= 1 (got " + std::to_string(m) + ")");
}

std::string to_string(const ImperativeState& s) {
  std::ostringstream os;
  os << '(' << s.index << ", [";
  for (std::size_t i = 0; i < s.prisoners.size(); ++i) {
    if (i) os << ", ";
    os << s.prisoners[i];
  }
  os << "])";
  return os.str();
}

Label imperative_kill(ImperativeState& s, std::int64_t m, OpCounter* ops) {
  const auto len = s.prisoners.size();
  // index = (pos + index) % len(prisoners)
  s.index = static_cast<std::size_t>(
      (static_cast<std::uint64_t>(m - 1) + s.index) % len);
  Label killed = s.prisoners[s.index];
  // prisoners.pop(index)
  s.prisoners.erase(s.prisoners.begin() + static_cast<std::ptrdiff_t>(s.index));
  if (ops) ops->add(1 + (len - 1 - s.index));
  // Python leaves index == len after popping the last slot; line 6 reduces it
  // on the next pass, so wrapping here keeps the same trajectory.
  if (s.index == s.prisoners.size()) s.index = 0;
  return killed;
}

namespace {

std::vector<Label> iota_labels(Label first, Label last) {
  std::vector<Label> out;
  if (last >= first) out.reserve(static_cast<std::size_t>(last - first + 1));
  for (Label x = first; x <= last; ++x) out.push_back(x);
  return out;
}

}  // namespace

KillSequence simulate_imperative(const Problem& p, OpCounter* ops) {
  KillSequence ks{p, {}, 1, true};
  ImperativeState s{0, iota_labels(1, p.n())};
  ks.order.reserve(static_cast<std::size_t>(p.n() - 1));
  while (s.prisoners.size() > 1) ks.order.push_back(imperative_kill(s, p.m(), ops));
  ks.survivor = s.prisoners.front();
  return ks;
}

KillSequence solve_zipper(const Problem& p, OpCounter* ops) {
  KillSequence ks{p, {}, 1, true};
  Circle c = mk_circle(1, iota_labels(2, p.n()));
  ks.order.reserve(static_cast<std::size_t>(p.n() - 1));
  while (!is_singleton(c)) {
    auto [killed, rest] = remove_nth(p.m(), std::move(c), ops);
    ks.order.push_back(killed);
    c = std::move(rest);
  }
  ks.survivor = current(c);
  return ks;
}

Label solve_recurrence(const Problem& p, OpCounter* ops) {
  const auto m = static_cast<std::uint64_t>(p.m());
  std::uint64_t j = 0;
  for (std::uint64_t k = 2; k <= static_cast<std::uint64_t>(p.n()); ++k) {
    j = (j + m % k) % k;
  }
  if (ops && p.n() > 1) ops->add(static_cast<std::uint64_t>(p.n() - 1));
  return static_cast<Label>(j + 1);
}

Label closed_form_m2(std::int64_t n, OpCounter* ops) {
  if (n < 1) throw InvalidInput("n must be >= 1 (got " + std::to_string(n) + ")");
  const auto un = static_cast<std::uint64_t>(n);
  const std::uint64_t high = std::bit_floor(un);
  if (ops) ops->add(static_cast<std::uint64_t>(std::bit_width(un) - 1));
  return static_cast<Label>(2 * (un - high) + 1);
}

KillSequence solve_order_statistic(const Problem& p, OpCounter* ops) {
  KillSequence ks{p, {}, 1, true};
  if (p.n() == 1) return ks;
  const auto n = static_cast<std::size_t>(p.n());
  const auto step = static_cast<std::uint64_t>(p.m() - 1);
  AliveSet alive(n, ops);
  ks.order.reserve(n - 1);
  // `rank` plays the role of the Python index: a cursor into the alive list.
  std::size_t rank = 0;
  while (alive.alive() > 1) {
    rank = static_cast<std::size_t>((step + rank) % alive.alive());
    std::size_t pos = alive.select(rank);
    alive.erase(pos);
    ks.order.push_back(static_cast<Label>(pos + 1));
    if (rank == alive.alive()) rank = 0;
  }
  ks.survivor = static_cast<Label>(alive.select(0) + 1);
  return ks;
}

std::string_view algorithm_name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::imperative: return "imperative";
    case Algorithm::zipper: return "zipper";
    case Algorithm::recurrence: return "recurrence";
    case Algorithm::closed_form: return "closed-form";
    case Algorithm::order_statistic: return "order-statistic";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (auto a : {Algorithm::imperative, Algorithm::zipper, Algorithm::recurrence,
                 Algorithm::closed_form, Algorithm::order_statistic}) {
    if (algorithm_name(a) == name) return a;
  }
  throw InvalidInput("unknown algorithm '" + std::string(name) + "'");
}

bool produces_order(Algorithm a) noexcept {
  return a == Algorithm::imperative || a == Algorithm::zipper ||
         a == Algorithm::order_statistic;
}

KillSequence solve(Algorithm a, const Problem& p, OpCounter* ops) {
  switch (a) {
    case Algorithm::imperative: return simulate_imperative(p, ops);
    case Algorithm::zipper: return solve_zipper(p, ops);
    case Algorithm::order_statistic: return solve_order_statistic(p, ops);
    case Algorithm::recurrence: return KillSequence{p, {}, solve_recurrence(p, ops), false};
    case Algorithm::closed_form:
      if (p.m() != 2) throw InvalidInput("closed-form solver requires m = 2");
      return KillSequence{p, {}, closed_form_m2(p.n(), ops), false};
  }
  throw InvalidInput("unknown algorithm");
}

}  // namespace josephus
