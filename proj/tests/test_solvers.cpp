#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "josephus/fenwick.hpp"
#include "josephus/solvers.hpp"
#include "oracle.hpp"

using namespace josephus;

namespace {

std::vector<Label> to_labels(const std::vector<std::int64_t>& v) {
  return std::vector<Label>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("Problem validation") {
  CHECK_THROWS_AS(Problem(0, 3), InvalidInput);
  CHECK_THROWS_AS(Problem(5, 0), InvalidInput);
  CHECK_THROWS_AS(Problem(-1, -1), InvalidInput);
  CHECK_NOTHROW(Problem(1, 1));
}

TEST_CASE("oracle self-check on the frozen values") {
  CHECK(oracle::brute_force(100, 10).survivor == oracle::kSurvivor100by10);
  CHECK(oracle::brute_force(41, 3).survivor == oracle::kSurvivor41by3);
  CHECK(oracle::brute_force(10000, 10).survivor == oracle::kSurvivor10000by10);
  CHECK(oracle::brute_force(6, 3).order == oracle::kOrder6by3);
}

TEST_CASE("simulate_imperative") {
  auto ks = simulate_imperative(Problem(100, 10));
  CHECK(ks.order.front() == 10);
  CHECK(ks.survivor == oracle::kSurvivor100by10);
  CHECK(ks.order == to_labels(oracle::brute_force(100, 10).order));

  auto one = simulate_imperative(Problem(1, 5));
  CHECK(one.order.empty());
  CHECK(one.survivor == 1);

  auto six = simulate_imperative(Problem(6, 3));
  REQUIRE(six.order.size() == 5);
  CHECK(std::vector<Label>(six.order.begin(), six.order.begin() + 3) == std::vector<Label>{3, 6, 4});
}

TEST_CASE("solve_zipper") {
  CHECK(solve_zipper(Problem(100, 10)).survivor == simulate_imperative(Problem(100, 10)).survivor);
  auto two = solve_zipper(Problem(2, 1));
  CHECK(two.order == std::vector<Label>{1});
  CHECK(two.survivor == 2);
  CHECK(solve_zipper(Problem(6, 3)) == simulate_imperative(Problem(6, 3)));
}

TEST_CASE("remove_nth") {
  auto [k1, c1] = remove_nth(1, mk_circle(1, {2, 3}));
  CHECK(k1 == 1);
  CHECK(c1 == mk_circle(2, {3}));

  auto [k3, c3] = remove_nth(3, mk_circle(1, {2, 3}));
  CHECK(k3 == 3);
  CHECK(c3 == mk_circle(1, {2}));

  for (std::int64_t k : {1, 2, 7, 100}) {
    auto [killed, same] = remove_nth(k, mk_circle(4, {}));
    CHECK(killed == 4);
    CHECK(same == mk_circle(4, {}));
  }
  CHECK_THROWS_AS(remove_nth(0, mk_circle(1, {2})), InvalidInput);
}

TEST_CASE("remove_nth with m larger than the circle matches literal rotation") {
  Circle c = mk_circle(3, {9, 4, 1});
  for (std::int64_t m = 1; m <= 11; ++m) {
    Circle literal = c;
    for (std::int64_t i = 0; i < m - 1; ++i) literal = next(literal);
    Label expect = current(literal);
    literal = remove(literal);
    auto [killed, rest] = remove_nth(m, c);
    CHECK(killed == expect);
    CHECK(rest == literal);
  }
}

TEST_CASE("solve_recurrence") {
  for (std::int64_t m : {1, 2, 5, 1000}) CHECK(solve_recurrence(Problem(1, m)) == 1);
  CHECK(solve_recurrence(Problem(100, 10)) == simulate_imperative(Problem(100, 10)).survivor);
  CHECK(solve_recurrence(Problem(41, 3)) == oracle::kSurvivor41by3);
}

TEST_CASE("closed_form_m2") {
  for (int a = 0; a <= 20; ++a) CHECK(closed_form_m2(std::int64_t{1} << a) == 1);
  CHECK(closed_form_m2(1) == 1);
  CHECK(closed_form_m2(100) == solve_recurrence(Problem(100, 2)));
  CHECK(closed_form_m2(100) == 73);
  CHECK_THROWS_AS(closed_form_m2(0), InvalidInput);
}

TEST_CASE("solve_order_statistic") {
  CHECK(solve_order_statistic(Problem(6, 3)) == simulate_imperative(Problem(6, 3)));
  auto one = solve_order_statistic(Problem(1, 1));
  CHECK(one.order.empty());
  CHECK(one.survivor == 1);
  CHECK(solve_order_statistic(Problem(10000, 10)).survivor == solve_recurrence(Problem(10000, 10)));
  CHECK(solve_order_statistic(Problem(10000, 10)).survivor == oracle::kSurvivor10000by10);
}

TEST_CASE("solvers agree with the brute-force oracle on small cases") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t m = 1; m <= 12; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      Problem p(n, m);
      auto expect = oracle::brute_force(n, m);
      auto imp = simulate_imperative(p);
      CHECK(imp.order == to_labels(expect.order));
      CHECK(imp.survivor == expect.survivor);
      CHECK(solve_zipper(p) == imp);
      CHECK(solve_order_statistic(p) == imp);
      CHECK(solve_recurrence(p) == imp.survivor);
      if (m == 2) CHECK(closed_form_m2(n) == imp.survivor);
    }
  }
}

TEST_CASE("kill sequence invariants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> dn(1, 300), dm(1, 400);
  for (int trial = 0; trial < 200; ++trial) {
    Problem p(dn(rng), dm(rng));
    auto ks = solve_order_statistic(p);
    std::vector<Label> all = ks.order;
    all.push_back(ks.survivor);
    std::sort(all.begin(), all.end());
    std::vector<Label> expect(static_cast<std::size_t>(p.n()));
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(all == expect);
    if (p.n() >= p.m()) CHECK(ks.order.front() == p.m());
  }
}

TEST_CASE("m = 1 kills in label order") {
  for (std::int64_t n = 1; n <= 20; ++n) {
    auto ks = simulate_imperative(Problem(n, 1));
    std::vector<Label> expect(static_cast<std::size_t>(n - 1));
    std::iota(expect.begin(), expect.end(), 1);
    CHECK(ks.order == expect);
    CHECK(ks.survivor == n);
  }
}

TEST_CASE("operation counters") {
  for (Algorithm a : {Algorithm::imperative, Algorithm::zipper, Algorithm::recurrence,
                      Algorithm::order_statistic}) {
    OpCounter ops;
    solve(a, Problem(1, 10), &ops);
    CHECK(ops.ops == 0);
  }
  OpCounter cf;
  closed_form_m2(1, &cf);
  CHECK(cf.ops == 0);

  OpCounter rec;
  solve_recurrence(Problem(1000, 10), &rec);
  CHECK(rec.ops == 999);

  // Each kill costs one index update plus the shifts behind the popped slot.
  OpCounter imp;
  simulate_imperative(Problem(3, 1), &imp);
  CHECK(imp.ops == (1 + 2) + (1 + 1));

  // Counters are per invocation: identical runs count identically.
  OpCounter a1, a2;
  solve_order_statistic(Problem(777, 4), &a1);
  solve_order_statistic(Problem(777, 4), &a2);
  CHECK(a1.ops == a2.ops);
}

TEST_CASE("dispatch and algorithm names") {
  CHECK(parse_algorithm("order-statistic") == Algorithm::order_statistic);
  CHECK_THROWS_AS(parse_algorithm("quantum"), InvalidInput);
  auto ks = solve(Algorithm::recurrence, Problem(41, 3));
  CHECK_FALSE(ks.has_order);
  CHECK(ks.survivor == 31);
  CHECK_THROWS_AS(solve(Algorithm::closed_form, Problem(41, 3)), InvalidInput);
  CHECK(solve(Algorithm::closed_form, Problem(41, 2)).survivor == solve_recurrence(Problem(41, 2)));
}

TEST_CASE("AliveSet select and rank against a plain vector") {
  std::mt19937 rng(99);
  for (std::size_t n : {1u, 2u, 7u, 64u, 100u, 513u}) {
    AliveSet set(n);
    std::vector<std::size_t> alive(n);
    std::iota(alive.begin(), alive.end(), 0);
    while (!alive.empty()) {
      for (std::size_t k = 0; k < alive.size(); ++k) REQUIRE(set.select(k) == alive[k]);
      std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
      std::size_t victim = alive[pick(rng)];
      CHECK(set.rank(victim) == static_cast<std::size_t>(
                                    std::lower_bound(alive.begin(), alive.end(), victim) -
                                    alive.begin()));
      set.erase(victim);
      alive.erase(std::find(alive.begin(), alive.end(), victim));
      CHECK(set.alive() == alive.size());
    }
  }
}
