#include "josephus/fenwick.hpp"

#include <cassert>

namespace josephus {

AliveSet::AliveSet(std::size_t n, OpCounter* ops)
    : n_(n), alive_(n), tree_(n + 1, 0), ops_(ops) {
  for (std::size_t i = 1; i <= n_; ++i) {
    tree_[i] += 1;
    std::size_t parent = i + (i & (~i + 1));
    if (parent <= n_) tree_[parent] += tree_[i];
  }
  if (ops_) ops_->add(n_);
}

std::size_t AliveSet::select(std::size_t k) const {
  assert(k < alive_);
  std::size_t pos = 0;
  std::size_t remaining = k + 1;
  std::uint64_t visits = 0;
  for (std::size_t step = std::bit_floor(n_); step != 0; step >>= 1) {
    ++visits;
    std::size_t probe = pos + step;
    if (probe <= n_ && tree_[probe] < remaining) {
      pos = probe;
      remaining -= tree_[probe];
    }
  }
  if (ops_) ops_->add(visits);
  return pos;  // 1-based pos+1 is the answer, i.e. 0-based pos
}

void AliveSet::erase(std::size_t pos) {
  assert(pos < n_);
  std::uint64_t visits = 0;
  for (std::size_t i = pos + 1; i <= n_; i += i & (~i + 1)) {
    --tree_[i];
    ++visits;
  }
  --alive_;
  if (ops_) ops_->add(visits);
}

std::size_t AliveSet::rank(std::size_t pos) const {
  std::size_t sum = 0;
  for (std::size_t i = pos; i > 0; i -= i & (~i + 1)) sum += tree_[i];
  return sum;
}

}  // namespace josephus
