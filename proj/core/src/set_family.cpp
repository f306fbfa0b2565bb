#include "hamcon/set_family.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamcon {

SetFamily::SetFamily(int n, int r) : n_(n), r_(r) { validate_and_index(); }

SetFamily::SetFamily(int n, int r, std::vector<Mask> members)
    : n_(n), r_(r), members_(std::move(members)) {
  validate_and_index();
}

SetFamily SetFamily::from_vertex_lists(int n, int r,
                                       const std::vector<std::vector<int>>& members) {
  std::vector<Mask> ms;
  ms.reserve(members.size());
  for (const auto& vs : members) ms.push_back(vertices_to_mask(vs, n));
  return SetFamily(n, r, std::move(ms));
}

void SetFamily::validate_and_index() {
  if (n_ < 1 || n_ > kMaxGroundSet) throw std::invalid_argument("family ground set out of range");
  if (r_ < 1 || r_ > n_) throw std::invalid_argument("family needs 1 <= r <= n");
  const Mask ground = full_mask(n_);
  for (Mask m : members_) {
    if ((m & ~ground) != 0) throw std::invalid_argument("member outside [n]");
    if (mask_size(m) != r_) throw std::invalid_argument("member size differs from r");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  lookup_.clear();
  lookup_.insert(members_.begin(), members_.end());
}

std::vector<int> SetFamily::member_vertices(std::size_t i) const {
  return mask_to_vertices(members_.at(i));
}

SetFamily SetFamily::without(Mask m) const {
  if (!contains(m)) throw std::invalid_argument("member not in family");
  std::vector<Mask> ms;
  ms.reserve(members_.size() - 1);
  for (Mask x : members_)
    if (x != m) ms.push_back(x);
  return SetFamily(n_, r_, std::move(ms));
}

SetFamily SetFamily::with(Mask m) const {
  std::vector<Mask> ms = members_;
  ms.push_back(m);
  return SetFamily(n_, r_, std::move(ms));
}

}  // namespace hamcon
