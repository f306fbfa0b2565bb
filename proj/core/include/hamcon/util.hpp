#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamcon {

// Vertex sets over a ground set [n], n <= 64, as bit masks.
// Bit (v-1) represents vertex v.
using Mask = std::uint64_t;

constexpr int kMaxGroundSet = 64;

inline Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

inline int mask_size(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<int> mask_to_vertices(Mask m);
Mask vertices_to_mask(const std::vector<int>& vs, int n);

// n! for n <= 20, throws on overflow.
std::uint64_t factorial_u64(int n);

// Binomial coefficient, throws if the exact value exceeds uint64.
std::uint64_t binomial(int n, int k);

// Largest c with c^3 <= x, by integer arithmetic only.
std::uint64_t icbrt(std::uint64_t x);

// Smallest c with c^d >= x (exact integer d-th root, rounded up).
std::uint64_t iroot_ceil(std::uint64_t x, int d);

// Enumerates k-subsets of {0,..,n-1} in lexicographic order.
// fn receives the subset as a vector of indices; return false to stop.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace hamcon
