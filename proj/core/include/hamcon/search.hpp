#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcon/accept.hpp"
#include "hamcon/pattern.hpp"
#include "hamcon/set_family.hpp"

namespace hamcon {

enum class Outcome { Found, NoneExists, Unknown };

const char* outcome_name(Outcome k);

struct SearchOptions {
  std::uint64_t node_budget = UINT64_MAX;
  // Deterministic mode explores children in ascending vertex order, so a
  // Found witness is the lexicographically first acceptable representative.
  bool deterministic = true;
  std::uint64_t shuffle_seed = 0;  // used only when deterministic == false
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t node_budget = UINT64_MAX;
  double elapsed_s = 0.0;
  bool budget_exhausted = false;
};

struct SearchResult {
  Outcome kind = Outcome::Unknown;
  std::optional<std::vector<int>> witness;  // acceptable cycle or path
  SearchStats stats;
};

// Backtracking search for an acceptable Hamilton cycle of K_n with respect
// to fam and ps. Fixes vertex 1 first and explores each canonical class
// once (second vertex < last vertex). After each vertex placement only the
// newly completed interval placements are tested; placements using the
// wrap-around are checked when the cycle closes. NoneExists is reported
// only after the whole canonical space is exhausted within budget.
SearchResult find_acceptable_cycle(int n, const SetFamily& fam, const PatternSet& ps,
                                   const SearchOptions& opt = {});

// Path analogue over the n!/2 paths taken up to reversal; intervals do not
// wrap.
SearchResult find_acceptable_path(int n, const SetFamily& fam, const PatternSet& ps,
                                  const SearchOptions& opt = {});

}  // namespace hamcon
