#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "josephus/circle.hpp"
#include "josephus/serialize.hpp"

using namespace josephus;

namespace {

// Random circle of distinct labels drawn from 1..30, size 1..max_size.
Circle random_circle(std::mt19937& rng, std::size_t max_size) {
  std::vector<Label> pool(30);
  std::iota(pool.begin(), pool.end(), 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  pool.resize(size(rng));
  return mk_circle(pool.front(), std::vector<Label>(pool.begin() + 1, pool.end()));
}

std::vector<Label> sorted_labels(const Circle& c) {
  auto v = c.labels();
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("mk_circle builds the focus and the labels after it") {
  std::vector<Label> rest;
  for (Label x = 2; x <= 100; ++x) rest.push_back(x);
  Circle c = mk_circle(1, rest);
  CHECK(c.size() == 100);
  CHECK(current(c) == 1);
  CHECK(c.rest().front() == 2);
  CHECK(c.rest().back() == 100);

  Circle single = mk_circle(7, {});
  CHECK(is_singleton(single));
  CHECK(current(single) == 7);
}

TEST_CASE("mk_circle rejects duplicate labels and names the label") {
  CHECK_THROWS_AS(mk_circle(1, {2, 1}), InvalidInput);
  try {
    mk_circle(1, {2, 1});
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(mk_circle(4, {5, 6, 5}), InvalidInput);
}

TEST_CASE("current") {
  CHECK(current(mk_circle(5, {6, 7})) == 5);
  CHECK(current(next(mk_circle(5, {6, 7}))) == 6);
  CHECK(current(mk_circle(9, {})) == 9);
}

TEST_CASE("is_singleton") {
  CHECK(is_singleton(mk_circle(3, {})));
  CHECK_FALSE(is_singleton(mk_circle(3, {4})));

  std::vector<Label> rest;
  for (Label x = 2; x <= 100; ++x) rest.push_back(x);
  Circle c = mk_circle(1, rest);
  for (int i = 0; i < 99; ++i) {
    CHECK_FALSE(is_singleton(c));
    c = remove(std::move(c));
  }
  CHECK(is_singleton(c));
  CHECK(current(c) == 100);
}

TEST_CASE("next appends the old focus at the end") {
  CHECK(next(mk_circle(1, {2, 3})) == mk_circle(2, {3, 1}));
  CHECK(next(mk_circle(1, {})) == mk_circle(1, {}));
  Circle c = mk_circle(4, {8, 1, 6});
  Circle r = c;
  for (std::size_t i = 0; i < c.size(); ++i) r = next(r);
  CHECK(r == c);
}

TEST_CASE("next leaves its argument unchanged") {
  const Circle c = mk_circle(1, {2, 3});
  Circle moved = next(c);
  CHECK(c == mk_circle(1, {2, 3}));
  CHECK(moved == mk_circle(2, {3, 1}));
}

TEST_CASE("remove deletes the focus and focuses the next element") {
  CHECK(remove(mk_circle(1, {2, 3})) == mk_circle(2, {3}));
  CHECK(remove(mk_circle(1, {})) == mk_circle(1, {}));
  CHECK(remove(next(mk_circle(1, {2}))) == mk_circle(1, {}));
}

TEST_CASE("equality is structural, rotations differ") {
  CHECK(mk_circle(1, {2, 3}) != mk_circle(2, {3, 1}));
  CHECK(mk_circle(1, {2, 3}) != mk_circle(1, {3, 2}));
}

TEST_CASE("circles of other label types") {
  auto c = mk_circle_of(std::string("a"), std::vector<std::string>{"b", "c"});
  c = next(std::move(c));
  CHECK(current(c) == "b");
  CHECK(to_string(c) == "C b [c,a]");
  CHECK_THROWS_AS(mk_circle_of(std::string("a"), std::vector<std::string>{"a"}), InvalidInput);
}

TEST_CASE("serialized forms") {
  CHECK(to_string(mk_circle(1, {2, 3})) == "C 1 [2,3]");
  CHECK(to_string(mk_circle(9, {})) == "C 9 []");
  CHECK(nlohmann::json(mk_circle(1, {2, 3})).dump() == R"({"focus":1,"rest":[2,3]})");
}

TEST_CASE("zipper laws on random circles") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 1000; ++trial) {
    const Circle c = random_circle(rng, 12);
    CAPTURE(to_string(c));

    Circle n1 = next(c);
    CHECK(n1.size() == c.size());
    CHECK(sorted_labels(n1) == sorted_labels(c));

    Circle r = c;
    for (std::size_t i = 0; i < c.size(); ++i) r = next(std::move(r));
    CHECK(r == c);

    if (c.size() > 1) {
      Circle d = remove(c);
      CHECK(d.size() == c.size() - 1);
      auto labels = d.labels();
      CHECK(std::find(labels.begin(), labels.end(), current(c)) == labels.end());
      auto s = sorted_labels(d);
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    } else {
      CHECK(next(c) == c);
      CHECK(remove(c) == c);
    }
  }
}
