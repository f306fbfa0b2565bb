#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "hamcon/util.hpp"

namespace hamcon {

// An r-uniform family of subsets of [n], n <= 64, with O(1) membership.
// Members are stored sorted (as masks) and deduplicated on construction.
class SetFamily {
 public:
  SetFamily(int n, int r);  // empty family
  SetFamily(int n, int r, std::vector<Mask> members);
  static SetFamily from_vertex_lists(int n, int r,
                                     const std::vector<std::vector<int>>& members);

  int n() const { return n_; }
  int r() const { return r_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Mask m) const { return lookup_.count(m) != 0; }
  const std::vector<Mask>& members() const { return members_; }
  std::vector<int> member_vertices(std::size_t i) const;

  // Copy with one member removed (by mask). Throws if absent.
  SetFamily without(Mask m) const;
  // Copy with one member added. No-op if already present.
  SetFamily with(Mask m) const;

  bool operator==(const SetFamily& o) const {
    return n_ == o.n_ && r_ == o.r_ && members_ == o.members_;
  }

 private:
  void validate_and_index();
  int n_;
  int r_;
  std::vector<Mask> members_;
  std::unordered_set<Mask> lookup_;
};

}  // namespace hamcon
