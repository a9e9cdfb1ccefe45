#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammalab/semiring.hpp"

namespace gammalab {

/// The six clauses of the structure definition, in order.
enum class Axiom {
  AdditiveMonoid,    // (i)
  TernaryOperation,  // (ii) every mode gives a total operation into the carrier
  Distributivity,    // (iii)
  Associativity,     // (iv) {a,b,{c,d,e}_γ}_δ = {{a,b,c}_γ,d,e}_δ
  Absorption,        // (v) {a,0,b}_γ = 0
  Symmetry,          // (vi) {a,b,c} = {b,a,c} = {a,c,b}
};
inline constexpr std::size_t kAxiomCount = 6;

/// The individual identity a witness violates.
enum class Law {
  AddCommutative,    // a+b = b+a
  AddAssociative,    // (a+b)+c = a+(b+c)
  AddIdentity,       // 0+a = a
  TernaryInRange,    // {a,b,c}_γ is an element
  DistributeFirst,   // elements (a,a',b,c)
  DistributeSecond,  // elements (a,b,b',c)
  DistributeThird,   // elements (a,b,c,c')
  Associative,       // elements (a,b,c,d,e), modes (γ,δ)
  AbsorbZero,        // elements (a,b): {a,0,b}_γ
  SwapFirstSecond,   // {a,b,c} vs {b,a,c}
  SwapSecondThird,   // {a,b,c} vs {a,c,b}
};

std::string_view axiom_name(Axiom axiom);
std::string_view law_name(Law law);

/// A failing instance. Elements and modes are raw values: table indices for
/// finite structures, natural numbers for formula families. `lhs` and `rhs`
/// are the two evaluated sides of the violated identity.
struct Witness {
  Law law;
  std::vector<std::uint64_t> elements;
  std::vector<std::uint64_t> modes;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
};

struct AxiomVerdict {
  Axiom axiom;
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t instances_checked = 0;
  std::optional<Witness> witness;
};

struct AxiomReport {
  std::array<AxiomVerdict, kAxiomCount> verdicts;

  bool all_hold() const;
  const AxiomVerdict& operator[](Axiom axiom) const {
    return verdicts[static_cast<std::size_t>(axiom)];
  }
};

/// Exhaustive scan of all six axioms. Each failing verdict carries the
/// lexicographically smallest witness (law order within an axiom, then tuple).
AxiomReport check_axioms(const Semiring& structure);

/// A ternary Γ-family over the naturals with ordinary addition.
struct FormulaFamily {
  std::string name;
  std::string formula;
  /// Returns {a,b,c}_γ; throws InputError on 64-bit overflow.
  std::function<std::uint64_t(std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t)> tern;
};

/// Known names: "pairwise_plus_mode" (ab+bc+ca+γ), "product_times_mode"
/// (abcγ), "product_plus_last_times_mode" (abc+cγ).
FormulaFamily formula_family(std::string_view name);
std::vector<std::string> formula_family_names();

struct SampleWindow {
  std::uint64_t range_bound = 0;       // elements scanned in [0, range_bound]
  std::vector<std::uint64_t> gammas;   // modes scanned
  std::uint64_t sample_budget = 10'000'000;  // per law; beyond it tuples are sampled
  std::uint64_t seed = 0;
};

/// Scans the axioms of an unbounded formula family restricted to a window.
/// A failure found in the window is a genuine counterexample for the family.
/// Laws whose tuple count exceeds the budget are sampled (exhaustive = false).
AxiomReport check_axioms_sampled(const FormulaFamily& family, const SampleWindow& window);

/// Reduces a formula family mod `modulus` into a finite table structure.
Semiring compile_modular(const FormulaFamily& family, std::uint64_t modulus,
                         std::span<const std::uint64_t> gammas);

}  // namespace gammalab
