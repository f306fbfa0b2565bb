#include "hamcon/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hamcon {

const char* outcome_name(Outcome k) {
  switch (k) {
    case Outcome::Found: return "Found";
    case Outcome::NoneExists: return "NoneExists";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Pattern split for incremental checking: one part length L designated as
// the interval that ends at the newest position, the rest to be placed
// anywhere earlier in the prefix.
struct PatternTail {
  int last_length;
  std::vector<int> rest;  // descending
};

std::vector<PatternTail> pattern_tails(const IntervalPattern& x) {
  std::vector<PatternTail> out;
  const auto& parts = x.lengths();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0 && parts[i] == parts[i - 1]) continue;  // one tail per distinct length
    PatternTail t;
    t.last_length = parts[i];
    t.rest = parts;
    t.rest.erase(t.rest.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(std::move(t));
  }
  return out;
}

class OrderingSearch {
 public:
  OrderingSearch(int n, const SetFamily& fam, const PatternSet& ps, bool cycle,
                 const SearchOptions& opt)
      : n_(n), fam_(fam), cycle_(cycle), opt_(opt), seq_(n, 0) {
    if (fam.n() != n) throw std::invalid_argument("family ground set differs from n");
    if (fam.r() != ps.r())
      throw std::invalid_argument("family member size differs from pattern total");
    if (cycle ? n < 3 : n < 2) throw std::invalid_argument("n too small");
    for (const auto& x : ps.patterns()) {
      patterns_.push_back(&x);
      tails_.push_back(pattern_tails(x));
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 1);
    if (!opt.deterministic) {
      std::mt19937_64 rng(opt.shuffle_seed ? opt.shuffle_seed : std::random_device{}());
      std::shuffle(order_.begin(), order_.end(), rng);
    }
  }

  SearchResult run() {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.stats.node_budget = opt_.node_budget;
    if (fam_.empty() || !fam_.members().empty() || true) {
      // placement of the first position: cycles are rooted at vertex 1
      if (cycle_) {
        seq_[0] = 1;
        used_ = vertex_bit(1);
        descend(1);
      } else {
        for (int v : order_) {
          if (stop_) break;
          seq_[0] = v;
          used_ = vertex_bit(v);
          if (count_node()) break;
          descend(1);
        }
      }
    }
    res.stats.nodes = nodes_;
    res.stats.budget_exhausted = budget_hit_;
    res.stats.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (witness_) {
      res.kind = Outcome::Found;
      res.witness = std::move(witness_);
    } else {
      res.kind = budget_hit_ ? Outcome::Unknown : Outcome::NoneExists;
    }
    return res;
  }

 private:
  // true => abort the search
  bool count_node() {
    if (nodes_ >= opt_.node_budget) {
      budget_hit_ = true;
      stop_ = true;
      return true;
    }
    ++nodes_;
    return false;
  }

  void descend(int i) {
    if (stop_) return;
    if (i == n_) {
      complete();
      return;
    }
    for (int v : order_) {
      if (stop_) return;
      const Mask vb = vertex_bit(v);
      if (used_ & vb) continue;
      seq_[i] = v;
      if (count_node()) return;
      if (prefix_violates(i)) continue;
      used_ |= vb;
      descend(i + 1);
      used_ &= ~vb;
    }
  }

  void complete() {
    if (cycle_) {
      if (seq_[1] > seq_[n_ - 1]) return;  // canonical representative only
      // wrap-around placements are only checkable on the closed cycle
      for (const auto* x : patterns_) {
        for (Mask m : fam_.members()) {
          if (has_placement(seq_, m, *x, /*wrap=*/true)) return;
        }
      }
    } else {
      if (seq_[0] > seq_[n_ - 1]) return;  // paths taken up to reversal
    }
    witness_ = seq_;
    stop_ = true;
  }

  // Does the prefix seq_[0..i] contain a completed placement whose last
  // interval ends at i? Everything else was checked at earlier depths.
  bool prefix_violates(int i) {
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
      for (const auto& t : tails_[p]) {
        const int L = t.last_length;
        if (L > i + 1) continue;
        Mask verts = 0;
        for (int d = 0; d < L; ++d) verts |= vertex_bit(seq_[i - d]);
        if (place_rest(t.rest, 0, i - L, verts, 0)) return true;
      }
    }
    return false;
  }

  // Places parts[idx..] disjointly within positions [0, hi]; occupied is a
  // position mask local to this check. Leaf tests family membership.
  bool place_rest(const std::vector<int>& parts, std::size_t idx, int hi,
                  Mask verts, std::uint64_t occupied) {
    if (idx == parts.size()) return fam_.contains(verts);
    const int L = parts[idx];
    for (int s = 0; s + L - 1 <= hi; ++s) {
      const std::uint64_t pm = ((L == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << L) - 1))
                               << s;
      if (pm & occupied) continue;
      Mask vm = verts;
      for (int d = 0; d < L; ++d) vm |= vertex_bit(seq_[s + d]);
      if (place_rest(parts, idx + 1, hi, vm, occupied | pm)) return true;
    }
    return false;
  }

  const int n_;
  const SetFamily& fam_;
  const bool cycle_;
  const SearchOptions opt_;
  std::vector<int> seq_;
  Mask used_ = 0;
  std::vector<const IntervalPattern*> patterns_;
  std::vector<std::vector<PatternTail>> tails_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  bool stop_ = false;
  std::optional<std::vector<int>> witness_;
};

}  // namespace

SearchResult find_acceptable_cycle(int n, const SetFamily& fam, const PatternSet& ps,
                                   const SearchOptions& opt) {
  return OrderingSearch(n, fam, ps, /*cycle=*/true, opt).run();
}

SearchResult find_acceptable_path(int n, const SetFamily& fam, const PatternSet& ps,
                                  const SearchOptions& opt) {
  return OrderingSearch(n, fam, ps, /*cycle=*/false, opt).run();
}

}  // namespace hamcon
