#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace sigcolor::detail {

// Union-find whose links carry a parity bit (0 = positive, 1 = negative).
// Union by size and no path compression, so every merge can be rolled back
// in LIFO order. find() is O(log n).
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), size_(n, 1), parity_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }

  // Root of v and the parity of the path v -> root.
  std::pair<std::uint32_t, std::uint8_t> find(std::uint32_t v) const {
    std::uint8_t p = 0;
    while (parent_[v] != v) {
      p ^= parity_[v];
      v = parent_[v];
    }
    return {v, p};
  }

  enum class Result { kMerged, kConsistent, kConflict };

  // Records the constraint parity(a) ^ parity(b) == edge_parity.
  // kConsistent / kConflict mean a and b were already connected, i.e. the
  // edge closes a cycle whose parity is even / odd.
  Result unite(std::uint32_t a, std::uint32_t b, std::uint8_t edge_parity) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      return ((pa ^ pb) == edge_parity) ? Result::kConsistent : Result::kConflict;
    }
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ edge_parity;
    size_[ra] += size_[rb];
    history_.push_back(rb);
    return Result::kMerged;
  }

  std::size_t checkpoint() const { return history_.size(); }

  void rollback(std::size_t mark) {
    while (history_.size() > mark) {
      const std::uint32_t child = history_.back();
      history_.pop_back();
      const std::uint32_t root = parent_[child];
      size_[root] -= size_[child];
      parent_[child] = child;
      parity_[child] = 0;
    }
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint32_t> history_;
};

inline std::uint8_t sign_parity(int sign) { return sign < 0 ? 1 : 0; }

}  // namespace sigcolor::detail
