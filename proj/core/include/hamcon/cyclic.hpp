#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace hamcon {

// Practical upper limit for full enumeration of the (n-1)!/2 cycle classes.
constexpr int kMaxEnumerationN = 14;

// A Hamilton cycle of K_n as a cyclic vertex sequence in canonical form:
// rotated so vertex 1 comes first, reflected so seq[1] < seq[n-1].
// Two sequences equal up to rotation/reflection canonicalize identically.
class CyclicOrdering {
 public:
  // Canonicalizes. Throws std::invalid_argument unless seq is a permutation
  // of [n] with n >= 3.
  static CyclicOrdering canonical(std::vector<int> seq);

  const std::vector<int>& seq() const { return seq_; }
  int n() const { return static_cast<int>(seq_.size()); }

  bool operator==(const CyclicOrdering& o) const { return seq_ == o.seq_; }
  bool operator<(const CyclicOrdering& o) const { return seq_ < o.seq_; }

 private:
  CyclicOrdering() = default;
  std::vector<int> seq_;
};

// Canonical form of an arbitrary cyclic vertex sequence.
CyclicOrdering canonicalize(const std::vector<int>& seq);

bool is_permutation_of_1n(const std::vector<int>& seq);

// Streams every canonical cycle class exactly once, in lexicographic order
// of the underlying sequence; (n-1)!/2 classes in total. The visitor
// receives the sequence (valid only during the call) and returns false to
// stop early. Returns false iff stopped. Requires 3 <= n <= kMaxEnumerationN.
bool enumerate_cycles(int n, const std::function<bool(const std::vector<int>&)>& visit);

// Same for Hamilton paths up to reversal (seq[0] < seq[n-1]); n!/2 classes.
bool enumerate_paths(int n, const std::function<bool(const std::vector<int>&)>& visit);

std::uint64_t cycle_class_count(int n);  // (n-1)!/2
std::uint64_t path_class_count(int n);   // n!/2

}  // namespace hamcon
