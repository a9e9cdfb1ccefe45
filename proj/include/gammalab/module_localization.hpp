#pragma once

#include <optional>
#include <vector>

#include "gammalab/completion.hpp"
#include "gammalab/localization.hpp"
#include "gammalab/module.hpp"
#include "gammalab/tensor.hpp"

namespace gammalab {

/// S⁻¹T as a module over T through numerators: {t,u,x/s}_γ = {t,u,x}_γ/s.
/// Throws ConstructionError if the action depends on the representative.
GammaModule numerator_module(std::shared_ptr<const Semiring> T, const LocalizedSemiring& L);

/// Least s ∈ S with {s,s,x}_γ = x for every x and some γ.
std::optional<Element> identity_like_element(const Semiring& T, const MultiplicativeSystem& S);

struct LocalizedModule {
  /// (S⁻¹T)^gp ⊗_T M with the S⁻¹T-action through the first factor.
  GammaModule module;
  TensorProduct tensor;
  /// The group completion of S⁻¹T as a T-module.
  GroupCompletion scalars;
  /// s₀ used for the unit map m ↦ (s₀/s₀) ⊗ m.
  Element s0 = 0;
  /// False when no identity-like element exists and s₀ = min S was used.
  bool identity_like = false;
  std::vector<Element> unit;
};

/// M must be an additive group over T. The unit map is additive by construction.
LocalizedModule localize_module(std::shared_ptr<const Semiring> T, const LocalizedSemiring& L, const GammaModule& m);

}  // namespace gammalab
