#include "hamcon/cyclic.hpp"

#include <numeric>
#include <stdexcept>

#include "hamcon/util.hpp"

namespace hamcon {

bool is_permutation_of_1n(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : seq) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

CyclicOrdering CyclicOrdering::canonical(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) throw std::invalid_argument("cyclic ordering needs n >= 3");
  if (!is_permutation_of_1n(seq)) throw std::invalid_argument("not a permutation of [n]");

  int pos1 = 0;
  while (seq[pos1] != 1) ++pos1;
  std::vector<int> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = seq[(pos1 + i) % n];
  if (rot[1] > rot[n - 1]) {  // reflect; entries distinct so never equal
    std::vector<int> ref(n);
    ref[0] = 1;
    for (int i = 1; i < n; ++i) ref[i] = rot[n - i];
    rot = std::move(ref);
  }
  CyclicOrdering c;
  c.seq_ = std::move(rot);
  return c;
}

CyclicOrdering canonicalize(const std::vector<int>& seq) {
  return CyclicOrdering::canonical(seq);
}

static void check_enum_n(int n) {
  if (n < 3 || n > kMaxEnumerationN)
    throw std::invalid_argument("enumeration supports 3 <= n <= " +
                                std::to_string(kMaxEnumerationN));
}

bool enumerate_cycles(int n, const std::function<bool(const std::vector<int>&)>& visit) {
  check_enum_n(n);
  std::vector<int> seq(n);
  seq[0] = 1;
  std::iota(seq.begin() + 1, seq.end(), 2);
  do {
    if (seq[1] < seq[n - 1]) {
      if (!visit(seq)) return false;
    }
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return true;
}

bool enumerate_paths(int n, const std::function<bool(const std::vector<int>&)>& visit) {
  check_enum_n(n);
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  do {
    if (seq[0] < seq[n - 1]) {
      if (!visit(seq)) return false;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return true;
}

std::uint64_t cycle_class_count(int n) { return factorial_u64(n - 1) / 2; }

std::uint64_t path_class_count(int n) { return factorial_u64(n) / 2; }

}  // namespace hamcon
