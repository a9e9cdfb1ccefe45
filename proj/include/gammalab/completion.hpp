#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gammalab/module.hpp"

namespace gammalab {

struct GroupCompletion {
  GammaModule module;
  /// m ↦ class of (m, 0).
  std::vector<Element> unit;
  /// Class of each pair (m, n), indexed m * |M| + n.
  std::vector<Element> class_of_pair;
  /// Smallest pair (m, n) in each class.
  std::vector<std::pair<Element, Element>> representatives;
  /// {t,u,unit(m)}_γ == unit({t,u,m}_γ) for all arguments.
  bool action_restricts = false;
  /// Number of additive actions on the completion that restrict correctly,
  /// per (t,u,γ); 1 everywhere means the extension is unique. Empty when the
  /// endomorphism search exceeded its budget.
  std::optional<std::uint64_t> max_compatible_extensions;
};

/// Pairs (m,n) ~ (p,q) iff m+q+k = p+n+k for some k. The action is extended
/// by {t,u,(m,n)}_γ = ({t,u,m}_γ, {t,u,n}_γ); a representative-dependent
/// extension throws ConstructionError.
GroupCompletion group_completion(const GammaModule& m, std::uint64_t budget = kDefaultHomBudget);

/// For every additive map f: M → A, the number of additive g: M^gp → A with
/// g ∘ unit = f. Initiality means every entry is 1.
std::vector<std::uint64_t> factorization_counts(const GammaModule& m, const GroupCompletion& c,
                                                const AdditiveTable& group,
                                                std::uint64_t budget = kDefaultHomBudget);

}  // namespace gammalab
