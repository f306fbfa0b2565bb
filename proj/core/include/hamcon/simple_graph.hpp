#pragma once

#include <cstdint>
#include <vector>

#include "hamcon/util.hpp"

namespace hamcon {

// Simple undirected graph on a vertex set that is a subset of [n], n <= 64.
class SimpleGraph {
 public:
  explicit SimpleGraph(Mask vertices);
  static SimpleGraph complete(int n);
  static SimpleGraph empty_on(int lo, int hi);  // vertices {lo,...,hi}, no edges

  Mask vertices() const { return vmask_; }
  int vertex_count() const { return mask_size(vmask_); }
  bool has_vertex(int v) const { return (vmask_ & vertex_bit(v)) != 0; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const;
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return mask_size(adj_[v]); }
  std::uint64_t edge_count() const;

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const SimpleGraph& o) const {
    return vmask_ == o.vmask_ && adj_ == o.adj_;
  }

 private:
  Mask vmask_ = 0;
  std::vector<Mask> adj_;  // indexed 1..64
};

// Repeatedly joins nonadjacent vertex pairs with degree sum >= |V| until a
// fixed point; preserves the existence of a Hamilton cycle.
SimpleGraph bondy_chvatal_closure(const SimpleGraph& g);

// Exact Hamilton cycle test. Runs the closure first; a complete closure
// certifies the answer, otherwise falls back to backtracking on the closure.
bool is_hamiltonian(const SimpleGraph& g);

// Exact Hamilton path test by backtracking (with connectivity and isolated
// vertex short-cuts).
bool has_hamilton_path(const SimpleGraph& g);

bool has_triangle(const SimpleGraph& g);
// True if some pair of vertices has two common neighbors (a 4-cycle).
bool has_c4(const SimpleGraph& g);

}  // namespace hamcon
