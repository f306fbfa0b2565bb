#include "hamcon/pattern.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hamcon/util.hpp"

namespace hamcon {

std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

Mask vertices_to_mask(const std::vector<int>& vs, int n) {
  Mask m = 0;
  for (int v : vs) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range [1,n]");
    Mask b = vertex_bit(v);
    if (m & b) throw std::invalid_argument("repeated vertex");
    m |= b;
  }
  return m;
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial out of uint64 range");
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t icbrt(std::uint64_t x) {
  std::uint64_t lo = 0, hi = 2642245;  // 2642245^3 is the largest cube in uint64
  while (lo < hi) {
    std::uint64_t mid = (lo + hi + 1) / 2;
    if (mid * mid * mid <= x) lo = mid; else hi = mid - 1;
  }
  return lo;
}

std::uint64_t iroot_ceil(std::uint64_t x, int d) {
  if (x == 0) return 0;
  std::uint64_t c = 1;
  auto pow_ge = [&](std::uint64_t b) {
    unsigned __int128 p = 1;
    for (int i = 0; i < d; ++i) {
      p *= b;
      if (p >= x) return true;
    }
    return p >= x;
  };
  while (!pow_ge(c)) ++c;
  return c;
}

IntervalPattern::IntervalPattern(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::invalid_argument("pattern must have at least one part");
  for (int x : lengths_) {
    if (x < 1) throw std::invalid_argument("pattern parts must be positive");
  }
  std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
  k_ = static_cast<int>(lengths_.size());
  r_ = std::accumulate(lengths_.begin(), lengths_.end(), 0);
  if (r_ > kMaxGroundSet) throw std::invalid_argument("pattern total exceeds ground set limit");
}

int IntervalPattern::singleton_count() const {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), 1));
}

std::string IntervalPattern::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) os << ',';
    os << lengths_[i];
  }
  return os.str();
}

IntervalPattern IntervalPattern::parse(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    std::istringstream ts(tok);
    int v;
    while (ts >> v) parts.push_back(v);
    if (ts.fail() && !ts.eof()) throw std::invalid_argument("bad pattern: " + s);
  }
  if (parts.empty()) throw std::invalid_argument("bad pattern: " + s);
  return IntervalPattern(std::move(parts));
}

PatternSet::PatternSet(std::vector<IntervalPattern> ps) : patterns_(std::move(ps)) {
  if (patterns_.empty()) throw std::invalid_argument("pattern set must be nonempty");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  r_ = patterns_.front().r();
  for (const auto& p : patterns_) {
    if (p.r() != r_) throw std::invalid_argument("patterns in a set must share r");
  }
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

PatternStats pattern_stats(const IntervalPattern& x, int n) {
  if (n < x.r()) throw std::invalid_argument("pattern_stats requires n >= r");
  // c(x) = r! / (prod x_i! * prod_s mult(s)!)
  const int r = x.r();
  unsigned __int128 num = 1;
  for (int i = 2; i <= r; ++i) num *= static_cast<unsigned>(i);
  unsigned __int128 den = 1;
  std::map<int, int> mult;
  for (int xi : x.lengths()) {
    den *= static_cast<unsigned __int128>(factorial_u64(xi));
    ++mult[xi];
  }
  for (auto& [sz, m] : mult) den *= static_cast<unsigned __int128>(factorial_u64(m));
  PatternStats st;
  st.partition_count = static_cast<std::uint64_t>(num / den);

  const int tail = n - r + x.k() - 1;
  if (tail > 33) throw std::overflow_error("ordering bound exceeds 128 bits");
  unsigned __int128 bound = st.partition_count;
  for (int xi : x.lengths()) bound *= factorial_u64(xi);
  for (int i = 2; i <= tail; ++i) bound *= static_cast<unsigned>(i);
  st.ordering_bound = bound;
  return st;
}

}  // namespace hamcon
