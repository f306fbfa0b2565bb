#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hamcon/search.hpp"

namespace hamcon {

// Bipartite graph on parts A, B of equal size n (vertices 0..n-1 on each
// side), adjacency as packed row bitsets. n <= 128.
class BipartiteGraph {
 public:
  explicit BipartiteGraph(int n);

  int n() const { return n_; }
  int words() const { return words_; }

  void add_edge(int a, int b);
  void remove_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int deg_a(int a) const;
  int deg_b(int b) const;
  std::uint64_t edge_count() const;

  const std::uint64_t* row_a(int a) const { return &a_rows_[a * words_]; }
  const std::uint64_t* row_b(int b) const { return &b_rows_[b * words_]; }
  std::vector<int> neighbors_a(int a) const;

  bool is_regular(int* degree_out = nullptr) const;
  bool edge_disjoint_with(const BipartiteGraph& o) const;

  bool operator==(const BipartiteGraph& o) const {
    return n_ == o.n_ && a_rows_ == o.a_rows_;
  }

 private:
  int n_;
  int words_;
  std::vector<std::uint64_t> a_rows_;  // A -> B adjacency
  std::vector<std::uint64_t> b_rows_;  // transpose
};

// Perfect matching as a permutation: row a is matched to column sigma[a].
using Matching = std::vector<int>;

// Edge pair (i, j) of the matching forming a 4-cycle with two edges of h.
struct BadFourCycle {
  int i = 0;
  int j = 0;
};

// A matching is acceptable for h when no two of its edges close a 4-cycle
// with two h-edges: no i != j with (a_i, b_sigma(j)) and (a_j, b_sigma(i))
// both in h. Returns the first bad pair, scanning pairs in order.
std::optional<BadFourCycle> find_bad_four_cycle(const Matching& m,
                                                const BipartiteGraph& h);
bool matching_acceptable(const Matching& m, const BipartiteGraph& h);

struct MatchingSearchResult {
  Outcome kind = Outcome::Unknown;
  std::optional<Matching> witness;
  SearchStats stats;
};

struct MatchingSearchOptions {
  std::uint64_t node_budget = UINT64_MAX;
  bool deterministic = true;
  // The statements this searcher supports assume E(G) and E(H) disjoint;
  // overlapping inputs are rejected unless explicitly allowed.
  bool allow_shared_edges = false;
};

// Backtracks over rows of A assigning G-neighbors, rejecting any partial
// matching that already contains a bad 4-cycle with h.
MatchingSearchResult find_acceptable_matching(const BipartiteGraph& g,
                                              const BipartiteGraph& h,
                                              const MatchingSearchOptions& opt = {});

// Bipartite complement within K_{n,n}.
BipartiteGraph complement(const BipartiteGraph& g);

// Point-hyperplane incidence graph of PG(d, q): sides of size
// (q^{d+1}-1)/(q-1), regular of degree (q^d-1)/(q-1). Vertex expansion
// |Gamma(X)| >= n - n^{1+1/d}/|X| holds for every nonempty proper X.
BipartiteGraph pg_incidence_graph(int d, int q);

// Exhaustively checks the PG expansion bound over all nonempty proper
// X subseteq A using exact integer arithmetic: (|X| * (n - |Gamma(X)|))^d
// <= n^{d+1}. Requires n <= 24.
struct ExpansionReport {
  bool holds = false;
  std::uint64_t subsets_checked = 0;
  std::uint64_t failing_subset = 0;  // mask over A, valid when !holds
};
ExpansionReport verify_expansion(const BipartiteGraph& g, int d);

// Number of common B-neighbors of A-vertices u and v.
int common_neighbors_a(const BipartiteGraph& g, int u, int v);

// Blocking constraint graph on n = m * floor(m^(1/3)) vertices per side,
// m = (q^4-1)/(q-1): complete blocks K_{m,m} on the diagonal and copies of
// the PG(3,q) incidence graph off the diagonal. Regular of degree
// m + (k-1)(q^3-1)/(q-1). No perfect matching of its complement is
// acceptable for it.
BipartiteGraph composite_blocking_graph(int q);

// Simpler non-regular variant on n = (q^4-1)/(q-1) per side: the PG(3,q)
// incidence graph plus a complete block between the first
// ceil(n^(2/3)) + 1 vertices of each side.
struct OverlayBlockingGraph {
  BipartiteGraph graph;
  int block_size = 0;  // |X| = |Y|
  int max_degree = 0;  // measured, not asserted
};
OverlayBlockingGraph overlay_blocking_graph(int q);

// The 2n-cycle graph a_0 b_0 a_1 b_1 ... a_{n-1} b_{n-1}: 2-regular with
// exactly two perfect matchings.
BipartiteGraph two_factor_cycle_graph(int n);

// Enumerates perfect matchings of g in lexicographic order, up to `limit`.
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g,
                                                  std::size_t limit = SIZE_MAX);

// Searches for a 1-regular h, edge-disjoint from the 2n-cycle graph g,
// making both perfect matchings of g unacceptable; lexicographically first
// h if one exists, nullopt after exhausting all candidates.
struct TwoRegularCounterexample {
  BipartiteGraph g;
  BipartiteGraph h;
  Matching h_sigma;
};
std::optional<TwoRegularCounterexample> two_regular_counterexample(int n);

// Degree threshold below which every s-regular constraint graph admits an
// acceptable perfect matching in its complement: s < (sqrt(2n+1)-1)/2,
// equivalently 2s(s+1) < n.
struct RegularityThreshold {
  double value = 0.0;  // (sqrt(2n+1)-1)/2
  int s_max = 0;       // largest s with 2s(s+1) < n
};
RegularityThreshold acceptable_degree_threshold(int n);

// Random r-regular bipartite graph as a union of r perfect matchings,
// avoiding the edges of `avoid` when given. Deterministic for a fixed rng
// state. Throws std::runtime_error if the degree budget is infeasible.
BipartiteGraph random_regular_bipartite(int n, int degree, std::mt19937_64& rng,
                                        const BipartiteGraph* avoid = nullptr);

}  // namespace hamcon
