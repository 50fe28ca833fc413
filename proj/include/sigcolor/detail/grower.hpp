#pragma once

#include <vector>

#include "sigcolor/detail/parity_union_find.hpp"
#include "sigcolor/set_family.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor::detail {

// A vertex set grown one vertex at a time while a hereditary property holds.
// Removal is LIFO only.
class Grower {
 public:
  Grower(const SignedGraph& g, SetProperty property)
      : g_(g), property_(property), uf_(g.vertex_count()), in_(g.vertex_count(), 0) {}

  bool contains(VertexId v) const { return in_[v] != 0; }
  const std::vector<VertexId>& members() const { return members_; }

  // Adds v if the property survives; on failure the state is unchanged.
  bool try_add(VertexId v) {
    const std::size_t mark = uf_.checkpoint();
    for (const Neighbor& n : g_.neighbors(v)) {
      if (!in_[n.vertex]) continue;
      const bool balanced = property_ == SetProperty::kBalanced;
      const auto r = uf_.unite(v, n.vertex, balanced ? sign_parity(n.sign) : 0);
      const bool bad = balanced ? r == ParityUnionFind::Result::kConflict
                                : r != ParityUnionFind::Result::kMerged;
      if (bad) {
        uf_.rollback(mark);
        return false;
      }
    }
    marks_.push_back(mark);
    members_.push_back(v);
    in_[v] = 1;
    return true;
  }

  void remove_last() {
    uf_.rollback(marks_.back());
    marks_.pop_back();
    in_[members_.back()] = 0;
    members_.pop_back();
  }

  bool can_add(VertexId v) {
    if (in_[v] || !try_add(v)) return false;
    remove_last();
    return true;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (VertexId v : members_) m |= std::uint64_t{1} << v;
    return m;
  }

 private:
  const SignedGraph& g_;
  SetProperty property_;
  ParityUnionFind uf_;
  std::vector<char> in_;
  std::vector<VertexId> members_;
  std::vector<std::size_t> marks_;
};

}  // namespace sigcolor::detail
