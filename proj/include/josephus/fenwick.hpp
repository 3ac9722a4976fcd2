#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "josephus/solvers.hpp"

namespace josephus {

// Binary indexed tree over 0/1 alive flags supporting "k-th alive" in
// O(log n). Every node visit is charged to the optional counter.
class AliveSet {
 public:
  // All of 0..n-1 start alive. Linear-time build.
  explicit AliveSet(std::size_t n, OpCounter* ops = nullptr);

  std::size_t size() const noexcept { return n_; }
  std::size_t alive() const noexcept { return alive_; }

  // Position of the k-th alive element, k is 0-based. Requires k < alive().
  std::size_t select(std::size_t k) const;

  // Marks position `pos` dead. Requires it to be alive.
  void erase(std::size_t pos);

  // Number of alive elements in [0, pos).
  std::size_t rank(std::size_t pos) const;

 private:
  std::size_t n_;
  std::size_t alive_;
  std::vector<std::uint32_t> tree_;  // 1-based
  OpCounter* ops_;
};

}  // namespace josephus
