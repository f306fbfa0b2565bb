#pragma once

#include <optional>
#include <vector>

#include "hamcon/pattern.hpp"
#include "hamcon/placement.hpp"
#include "hamcon/set_family.hpp"

namespace hamcon {

// Concrete reason an ordering is not acceptable: the family member and the
// intervals of one pattern realizing it.
struct Violation {
  IntervalPattern pattern;
  Mask member = 0;
  Placement placement;
};

// An ordering is acceptable when no pattern of `ps` places any member of
// `fam` as a union of disjoint intervals. Returns the first violation in
// (pattern, member) order, or nullopt if acceptable.
// Throws std::invalid_argument on n or r mismatch.
std::optional<Violation> find_cycle_violation(const std::vector<int>& seq,
                                              const SetFamily& fam,
                                              const PatternSet& ps);
std::optional<Violation> find_path_violation(const std::vector<int>& seq,
                                             const SetFamily& fam,
                                             const PatternSet& ps);

bool cycle_acceptable(const std::vector<int>& seq, const SetFamily& fam,
                      const PatternSet& ps);
bool path_acceptable(const std::vector<int>& seq, const SetFamily& fam,
                     const PatternSet& ps);

}  // namespace hamcon
