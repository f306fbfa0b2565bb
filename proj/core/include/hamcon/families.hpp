#pragma once

#include <vector>

#include "hamcon/pattern.hpp"
#include "hamcon/set_family.hpp"
#include "hamcon/simple_graph.hpp"

namespace hamcon {

// All r-sets containing {1,...,k}; size C(n-k, r-k). Blocks every cycle and
// every path for the pattern: any permutation of [n] has k disjoint
// intervals of the pattern lengths covering [k].
SetFamily star_family(int n, const IntervalPattern& x);

// The constructive witness behind star_family: k disjoint non-wrapping
// index intervals of lengths x_1,...,x_k whose vertex union contains [k].
// Scans left to right, skipping vertices outside [k]; consumes the next
// interval when the head lies in [k]; when the remaining sequence length
// equals the remaining interval total, tiles it outright. Always succeeds.
std::vector<Interval> find_covering_intervals(const std::vector<int>& perm,
                                              const IntervalPattern& x);

struct CoveringDesign {
  std::vector<int> base;  // ground set (sorted)
  int block_size = 0;
  int target_size = 0;
  std::vector<Mask> blocks;  // over the ambient [n] mask space
};

// Greedy covering design: blocks of `block_size` over `base` until every
// `target_size`-subset of base lies in some block. Each step picks the
// block covering the most uncovered target sets; ties go to the
// lexicographically least block. Exact at desk scale, no optimality claim.
CoveringDesign greedy_cover(const std::vector<int>& base, int block_size,
                            int target_size);
CoveringDesign greedy_cover(int base_size, int block_size, int target_size);

// For x with t parts > 1 and k-t singleton parts (t < k): members
// [t] union M, with M a greedy cover of [n]\[t] by (r-t)-blocks hitting all
// (r-k)-subsets. Blocks every cycle: the t long intervals covering [t]
// leave an (r-k)-set that lies inside some block, and singletons finish it.
SetFamily covering_family(int n, const IntervalPattern& x);

// Members {1} union X over a minimum-size cover of {2..n} by (r-1)-blocks,
// greedy left to right, last block right-aligned; size ceil((n-1)/(r-1)).
// Blocks every cycle at (2,1,...,1).
SetFamily partition_family(int n, int r);

// Point-line incidence graph of PG(2,q) on vertices {3,...,2(q^2+q+1)+2}
// with the edges at the first point vertex removed. Triangle-free and
// C4-free by incidence geometry; the isolated vertex rules out a Hamilton
// path.
SimpleGraph c4free_obstruction_graph(int q);

// All 4-sets {1,2,u,v} with uv not an edge of H, where H is
// c4free_obstruction_graph(q) placed on {3,...}, padded with isolated
// vertices up to n. Size C(n-2,2) - |E(H)|. Requires n-2 >= 2(q^2+q+1).
SetFamily c4free_family(int n, int q);
// Same with an explicit obstruction graph on a subset of {3..n}; an empty
// graph degenerates to the star family on {1,2}.
SetFamily c4free_family_from(int n, const SimpleGraph& h);

// The low pair-degree family: sets {1,x,x+1,y} for 2 <= x <= n-1 plus
// {1,2,y,n}, duplicates merged. Blocks every cycle at (2,2) for n >= 7.
// The measured maximum pair degree is 3n-12, attained at {1,2}.
SetFamily pair_degree_family(int n);

}  // namespace hamcon
