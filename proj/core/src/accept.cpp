#include "hamcon/accept.hpp"

#include <stdexcept>

namespace hamcon {
namespace {

std::optional<Violation> find_violation(const std::vector<int>& seq, const SetFamily& fam,
                                        const PatternSet& ps, bool wrap) {
  if (static_cast<int>(seq.size()) != fam.n())
    throw std::invalid_argument("ordering length differs from family ground set");
  if (fam.r() != ps.r())
    throw std::invalid_argument("family member size differs from pattern total");
  for (const auto& x : ps.patterns()) {
    for (Mask m : fam.members()) {
      if (auto pl = find_placement(seq, m, x, wrap)) {
        return Violation{x, m, std::move(*pl)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> find_cycle_violation(const std::vector<int>& seq,
                                              const SetFamily& fam, const PatternSet& ps) {
  return find_violation(seq, fam, ps, /*wrap=*/true);
}

std::optional<Violation> find_path_violation(const std::vector<int>& seq,
                                             const SetFamily& fam, const PatternSet& ps) {
  return find_violation(seq, fam, ps, /*wrap=*/false);
}

bool cycle_acceptable(const std::vector<int>& seq, const SetFamily& fam,
                      const PatternSet& ps) {
  return !find_cycle_violation(seq, fam, ps).has_value();
}

bool path_acceptable(const std::vector<int>& seq, const SetFamily& fam,
                     const PatternSet& ps) {
  return !find_path_violation(seq, fam, ps).has_value();
}

}  // namespace hamcon
