#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcon/pattern.hpp"
#include "hamcon/search.hpp"
#include "hamcon/set_family.hpp"
#include "hamcon/simple_graph.hpp"

namespace hamcon {

enum class Variant { Cycle, Path };
const char* variant_name(Variant v);

// Set-cover view of the blocking problem: universe = canonical cycle (or
// path) classes of K_n, candidates = all r-subsets of [n], incidence =
// classes on which some pattern places the candidate.
struct CoverInstance {
  int n = 0;
  int r = 0;
  Variant variant = Variant::Cycle;
  std::uint64_t universe_size = 0;
  int words = 0;                      // ceil(universe_size / 64)
  std::vector<Mask> candidates;       // lexicographic by mask
  std::vector<std::uint64_t> incidence;  // candidates x words, row-major

  const std::uint64_t* row(std::size_t i) const { return &incidence[i * words]; }
};

// Builds the instance by full enumeration. `threads` > 1 splits candidates
// across worker threads; the result is schedule-independent.
// Throws std::length_error when the universe exceeds max_universe.
CoverInstance build_cover_instance(int n, const PatternSet& ps, Variant variant,
                                   int threads = 1,
                                   std::uint64_t max_universe = 200000);

struct CoverSolution {
  Outcome kind = Outcome::Unknown;
  std::uint64_t size = 0;                // optimum when kind == Found
  std::vector<Mask> family;              // one optimal family
  std::uint64_t nodes = 0;
  std::uint64_t best_lower_bound = 0;    // bounds reported on Unknown
  std::uint64_t best_upper_bound = 0;
};

// Provably minimum cover by branch and bound: candidates ordered by
// coverage (ties lexicographic), bound ceil(uncovered / max remaining
// coverage). With `lexicographic_optimum` a second pass returns the
// lexicographically least family among the optima. Budget exhaustion gives
// Unknown with the best bounds seen.
CoverSolution min_blocking_family(const CoverInstance& inst,
                                  std::uint64_t node_budget = UINT64_MAX,
                                  bool lexicographic_optimum = true);

struct BlockingCertificate {
  bool blocked = false;
  Outcome kind = Outcome::Unknown;       // NoneExists <=> blocked (search mode)
  std::uint64_t classes_checked = 0;
  std::optional<std::vector<int>> counterexample;  // an acceptable ordering
  // Over all classes: least number of distinct members placed, and least
  // number of distinct placements (counting several placements of one
  // member separately). Meaningful only when blocked.
  std::uint64_t min_member_multiplicity = 0;
  std::uint64_t min_placement_multiplicity = 0;
  std::uint64_t nodes = 0;               // search mode only
};

// Exhaustive mode: enumerates every class, finds a covering member for
// each, and computes the multiplicity statistics.
BlockingCertificate verify_blocking_exhaustive(const SetFamily& fam,
                                               const PatternSet& ps, Variant variant);
// Search mode: delegates to the pruned search under a node budget.
BlockingCertificate verify_blocking_search(const SetFamily& fam, const PatternSet& ps,
                                           Variant variant,
                                           std::uint64_t node_budget);

struct MinimalityResult {
  bool minimal = false;
  std::optional<Mask> removable;  // some member whose removal still blocks
};

// Requires fam to block (throws std::invalid_argument otherwise). Checks
// whether each member is essential.
MinimalityResult minimality_check(const SetFamily& fam, const PatternSet& ps,
                                  Variant variant);

struct DegreeResult {
  std::uint64_t value = 0;
  Mask witness = 0;  // a t-set attaining the maximum (0 when t == 0)
};

// Maximum t-degree d_t: the largest number of members containing one
// t-set; d_0 = |fam|. Requires 0 <= t < r.
DegreeResult max_t_degree(const SetFamily& fam, int t);

struct AsymptoticBound {
  std::string label;    // which estimate this is
  double constant = 0;  // leading constant
  double exponent = 0;  // power of n
};

// Finite-n-valid bounds are exact integers; asymptotic estimates are
// recorded as (constant, exponent) pairs and never asserted at finite n.
struct BoundReport {
  IntervalPattern pattern;
  int n = 0;
  Variant variant = Variant::Cycle;
  std::uint64_t partition_count = 0;  // c(x)

  // Cycle variant. lb_average = ceil((n-1)! / per-member ordering count),
  // computed from enumeration when n <= enum limit (exact count), else from
  // the ordering bound (still a valid lower bound).
  std::uint64_t lb_average = 0;
  bool lb_average_exact = false;
  std::uint64_t ub_star = 0;  // C(n-k, r-k)

  // Pattern (2,1,...,1) only: exact lower bound from the K_r-deletion
  // argument and the partition construction size.
  std::optional<std::uint64_t> lb_deletion;   // ceil(n(n-1)/((n+2r)(r-1)))
  std::optional<std::uint64_t> ub_partition;  // ceil((n-1)/(r-1))

  // Path variant, pattern (2,2) only.
  std::optional<std::uint64_t> lb_path;  // ceil((n-3)(n-2)/6)
  std::optional<std::uint64_t> ub_path;  // C(n-2,2)

  std::vector<AsymptoticBound> asymptotic;

  std::optional<std::uint64_t> exact_value;
  bool sandwich_ok = true;  // lb <= exact <= ub whenever exact is present
};

BoundReport bound_report(const IntervalPattern& x, int n, Variant variant,
                         std::optional<std::uint64_t> exact_value = std::nullopt);

// K_n with the clique on every member of fam deleted. A cycle of K_n is
// (2,1,...,1)-acceptable for fam exactly when it is a cycle of this graph.
SimpleGraph kr_deletion_residual(int n, const SetFamily& fam);

}  // namespace hamcon
