#include "hamcon/placement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hamcon {
namespace {

struct Run {
  int start = 0;   // 0-based position of the first element
  int length = 0;
};

// Maximal runs of positions whose vertex lies in `member`; circular runs
// when wrap is set. Returns nullopt if some member vertex is absent.
std::optional<std::vector<Run>> member_runs(const std::vector<int>& seq, Mask member,
                                            int r, bool wrap) {
  const int n = static_cast<int>(seq.size());
  std::vector<char> in(n);
  int cnt = 0;
  for (int i = 0; i < n; ++i) {
    in[i] = (seq[i] >= 1 && seq[i] <= 64 && (member & vertex_bit(seq[i]))) ? 1 : 0;
    cnt += in[i];
  }
  if (cnt != r) return std::nullopt;
  std::vector<Run> runs;
  if (cnt == n) {
    runs.push_back({0, n});
    return runs;
  }
  int first_out = 0;
  if (wrap) {
    while (in[first_out]) ++first_out;
  } else {
    first_out = n;  // sentinel: linear scan from 0
  }
  auto scan = [&](int from, int count) {
    int cur_start = -1, cur_len = 0;
    for (int d = 0; d < count; ++d) {
      int i = wrap ? (from + d) % n : d;
      if (in[i]) {
        if (cur_len == 0) cur_start = i;
        ++cur_len;
      } else if (cur_len) {
        runs.push_back({cur_start, cur_len});
        cur_len = 0;
      }
    }
    if (cur_len) runs.push_back({cur_start, cur_len});
  };
  if (wrap)
    scan(first_out + 1, n);  // starts just past a gap, so no run is split
  else
    scan(0, n);
  return runs;
}

// Assigns parts (descending) to runs, filling each run from its start.
// fill[j] tracks how much of run j is used; a solution exists iff every
// run ends exactly full.
bool assign_parts(const std::vector<int>& parts, std::size_t idx, std::vector<Run>& runs,
                  std::vector<int>& fill, std::vector<int>& chosen_run) {
  if (idx == parts.size()) {
    for (std::size_t j = 0; j < runs.size(); ++j)
      if (fill[j] != runs[j].length) return false;
    return true;
  }
  const int p = parts[idx];
  int seen_prev = -1;
  for (std::size_t j = 0; j < runs.size(); ++j) {
    const int rem = runs[j].length - fill[j];
    if (rem < p) continue;
    if (rem == seen_prev) continue;  // runs with equal residue are interchangeable
    seen_prev = rem;
    fill[j] += p;
    chosen_run[idx] = static_cast<int>(j);
    if (assign_parts(parts, idx + 1, runs, fill, chosen_run)) return true;
    fill[j] -= p;
  }
  return false;
}

}  // namespace

std::optional<Placement> find_placement(const std::vector<int>& seq, Mask member,
                                        const IntervalPattern& x, bool wrap) {
  if (mask_size(member) != x.r())
    throw std::invalid_argument("member size differs from pattern total");
  auto runs = member_runs(seq, member, x.r(), wrap);
  if (!runs) return std::nullopt;

  const auto& parts = x.lengths();
  std::vector<int> fill(runs->size(), 0);
  std::vector<int> chosen(parts.size(), -1);
  if (!assign_parts(parts, 0, *runs, fill, chosen)) return std::nullopt;

  // Lay the intervals into their runs in assignment order.
  const int n = static_cast<int>(seq.size());
  std::vector<int> offset(runs->size(), 0);
  Placement pl(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Run& run = (*runs)[chosen[i]];
    int start = run.start + offset[chosen[i]];
    if (wrap) start %= n;
    pl[i] = Interval{start, parts[i]};
    offset[chosen[i]] += parts[i];
  }
  return pl;
}

bool has_placement(const std::vector<int>& seq, Mask member, const IntervalPattern& x,
                   bool wrap) {
  return find_placement(seq, member, x, wrap).has_value();
}

std::uint64_t count_placements(const std::vector<int>& seq, Mask member,
                               const IntervalPattern& x, bool wrap) {
  if (mask_size(member) != x.r())
    throw std::invalid_argument("member size differs from pattern total");
  const int n = static_cast<int>(seq.size());
  const auto& parts = x.lengths();
  const int k = x.k();
  std::uint64_t found = 0;
  std::vector<Interval> cur(k);
  // Equal-length parts are forced into increasing start order so each
  // placement (a set of intervals) is enumerated exactly once.
  auto rec = [&](auto&& self, int idx, std::uint64_t occupied, Mask verts) -> void {
    if (idx == k) {
      if (verts == member) ++found;
      return;
    }
    const int L = parts[idx];
    const int limit = wrap ? n : n - L + 1;
    for (int s = 0; s < limit; ++s) {
      if (idx > 0 && parts[idx - 1] == L && s <= cur[idx - 1].start) continue;
      std::uint64_t pm = 0;
      Mask vm = 0;
      bool clash = false;
      for (int d = 0; d < L; ++d) {
        int p = wrap ? (s + d) % n : s + d;
        std::uint64_t pb = std::uint64_t{1} << p;
        if (occupied & pb) { clash = true; break; }
        pm |= pb;
        vm |= vertex_bit(seq[p]);
      }
      if (clash) continue;
      cur[idx] = Interval{s, L};
      self(self, idx + 1, occupied | pm, verts | vm);
    }
  };
  rec(rec, 0, 0, 0);
  return found;
}

std::uint64_t count_covering_orderings(int n, const IntervalPattern& x) {
  return count_covering_orderings(n, x, full_mask(x.r()));
}

std::uint64_t count_covering_orderings(int n, const IntervalPattern& x, Mask member,
                                       int max_n) {
  if (n < x.r() + 1) throw std::invalid_argument("requires n >= r + 1");
  if (n > max_n) throw std::length_error("enumeration budget exceeded");
  if (mask_size(member) != x.r() || (member & ~full_mask(n)) != 0)
    throw std::invalid_argument("member must be an r-subset of [n]");
  std::uint64_t classes = 0;
  enumerate_cycles(n, [&](const std::vector<int>& seq) {
    if (has_placement(seq, member, x, /*wrap=*/true)) ++classes;
    return true;
  });
  return 2 * classes;  // canonical classes to the rotation-only convention
}

}  // namespace hamcon
