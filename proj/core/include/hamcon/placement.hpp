#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcon/cyclic.hpp"
#include "hamcon/pattern.hpp"
#include "hamcon/util.hpp"

namespace hamcon {

// One interval of a placement: `length` consecutive positions of the
// ordering starting at 0-based position `start` (wrapping modulo n when
// the ordering is cyclic).
struct Interval {
  int start = 0;
  int length = 0;
  bool operator==(const Interval& o) const = default;
};

using Placement = std::vector<Interval>;  // k intervals, one per pattern part

// Searches for k disjoint intervals of the pattern lengths whose vertex
// union is exactly `member` (an r-set given as a mask). Disjointness is
// equivalent to the union having r vertices, which the search enforces
// positionally. `wrap` selects cycle (true) or path (false) semantics.
// Throws std::invalid_argument if |member| != pattern.r().
std::optional<Placement> find_placement(const std::vector<int>& seq, Mask member,
                                        const IntervalPattern& x, bool wrap);

bool has_placement(const std::vector<int>& seq, Mask member,
                   const IntervalPattern& x, bool wrap);

// Number of distinct placements (as sets of intervals) of `member` in `seq`.
std::uint64_t count_placements(const std::vector<int>& seq, Mask member,
                               const IntervalPattern& x, bool wrap);

// Number of cyclic orderings of [n], counted up to rotation only (the
// (n-1)! convention), in which `member` appears as a union of pattern
// intervals. The value does not depend on the choice of member; the
// default representative is {1,...,r}. Counts canonical classes by full
// enumeration and doubles the result. Requires r+1 <= n <= max_n.
std::uint64_t count_covering_orderings(int n, const IntervalPattern& x);
std::uint64_t count_covering_orderings(int n, const IntervalPattern& x, Mask member,
                                       int max_n = 12);

}  // namespace hamcon
