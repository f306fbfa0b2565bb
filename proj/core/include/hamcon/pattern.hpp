#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hamcon {

// Interval length vector (x_1,...,x_k), stored sorted descending so that
// patterns equal as multisets compare equal. r = sum, k = part count.
class IntervalPattern {
 public:
  explicit IntervalPattern(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int r() const { return r_; }
  int k() const { return k_; }
  int singleton_count() const;  // number of parts equal to 1

  bool operator==(const IntervalPattern& o) const { return lengths_ == o.lengths_; }
  bool operator<(const IntervalPattern& o) const { return lengths_ < o.lengths_; }

  std::string to_string() const;                     // "2,2"
  static IntervalPattern parse(const std::string&);  // "2,2" or "2 2"

 private:
  std::vector<int> lengths_;
  int r_ = 0;
  int k_ = 0;
};

// Nonempty set of patterns sharing a common r. Mixed-r input is rejected.
class PatternSet {
 public:
  explicit PatternSet(std::vector<IntervalPattern> ps);

  const std::vector<IntervalPattern>& patterns() const { return patterns_; }
  int r() const { return r_; }

 private:
  std::vector<IntervalPattern> patterns_;
  int r_ = 0;
};

struct PatternStats {
  // Number of unordered partitions of an r-set into parts of the given sizes.
  std::uint64_t partition_count = 0;
  // partition_count * x_1! * ... * x_k! * (n-r+k-1)!  as an exact integer.
  unsigned __int128 ordering_bound = 0;
};

std::string u128_to_string(unsigned __int128 v);

// Exact partition count and the per-member ordering bound for ground size n.
// Throws std::invalid_argument when n < r, std::overflow_error when the
// bound does not fit 128 bits (n - r + k - 1 > 33).
PatternStats pattern_stats(const IntervalPattern& x, int n);

}  // namespace hamcon
