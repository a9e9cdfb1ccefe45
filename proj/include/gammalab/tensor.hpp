#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammalab/module.hpp"
#include "gammalab/smith.hpp"

namespace gammalab {

/// Generators and integer relations of an abelian group.
struct AbelianPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;  // rows = relations, columns = generators
};

/// The presented finite abelian group ⊕ Z/d_i together with the map from
/// generators to elements. Elements are mixed-radix over the nontrivial
/// invariant factors, first factor least significant.
struct PresentedGroup {
  std::vector<BigInt> factors;
  AdditiveTable additive;
  /// Element of each generator.
  std::vector<Element> generator_class;
  /// Integer combination of generators representing each basis vector.
  IntMatrix basis_lift;
  std::size_t relation_count = 0;
};

inline constexpr std::size_t kMaxPresentedOrder = 1u << 16;

/// Smith normal form of the relation matrix. A free summand or an order above
/// kMaxPresentedOrder throws ResourceError.
PresentedGroup present(const AbelianPresentation& p);

/// Coordinates of an element, one residue per factor.
std::vector<BigInt> coordinates(const PresentedGroup& g, Element x);

struct TensorProduct {
  GammaModule module;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  AdditiveTable left_additive;
  PresentedGroup group;
  AbelianPresentation presentation;

  Element pure(Element m, Element n) const { return group.generator_class[m * right_size + n]; }
};

/// Relation rows: additivity in each slot, triadic balancing
/// {t,u,m}_γ⊗n = m⊗{t,u,n}_γ, and zero absorption. Duplicates are removed.
AbelianPresentation tensor_presentation(const GammaModule& m, const GammaModule& n);

/// M ⊗ N for modules whose additive monoids are groups; the action is
/// {a,b,m⊗n}_γ = {a,b,m}_γ⊗n, checked on every relation.
TensorProduct tensor(const GammaModule& m, const GammaModule& n);

/// The tensor group with an action through the first factor by another
/// module structure on the same additive group, possibly over another base.
GammaModule transport(const TensorProduct& t, const GammaModule& first);

/// f ⊗ g between two tensor products, checked on every relation.
std::vector<Element> tensor_map(const TensorProduct& from, const TensorProduct& to, std::span<const Element> f,
                                std::span<const Element> g);

inline constexpr std::size_t kMaxBalancedPairs = 64;

/// Tables β[m * |N| + n] of maps M×N → P additive in each slot, balanced,
/// and for HomKind::GammaLinear also {a,b,β(m,n)}_γ = β({a,b,m}_γ, n).
std::vector<std::vector<Element>> enumerate_balanced_maps(const GammaModule& m, const GammaModule& n,
                                                          const GammaModule& p, HomKind kind = HomKind::Additive,
                                                          std::size_t max_pairs = kMaxBalancedPairs,
                                                          std::uint64_t budget = kDefaultHomBudget);

bool is_balanced_map(const GammaModule& m, const GammaModule& n, const GammaModule& p,
                     std::span<const Element> beta, HomKind kind = HomKind::Additive);

struct TensorUniversalVerdict {
  std::uint64_t hom_count = 0;
  std::uint64_t balanced_count = 0;
  bool injective = false;
  bool surjective = false;
  bool holds() const { return injective && surjective && hom_count == balanced_count; }
};

/// Composes every Hom(M⊗N, P) with ⊗ and compares with the balanced maps.
/// Throws StructuralError naming a witness map when the bijection fails.
TensorUniversalVerdict check_tensor_universal(const GammaModule& m, const GammaModule& n, const GammaModule& p,
                                              HomKind kind = HomKind::Additive,
                                              std::size_t max_pairs = kMaxBalancedPairs,
                                              std::uint64_t budget = kDefaultHomBudget);

}  // namespace gammalab
