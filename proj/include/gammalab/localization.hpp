#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammalab/semiring.hpp"
#include "gammalab/spectrum.hpp"

namespace gammalab {

struct MultiplicativeSystem {
  Subset member_set = 0;
  std::vector<Element> generators;

  std::vector<Element> elements() const { return members(member_set); }
  bool contains(Element a) const { return gammalab::contains(member_set, a); }
  std::size_t size() const;
};

/// Least superset of `seed` closed under every {s1,s2,s3}_γ. Throws
/// ConstructionError("degenerate system ...") when the closure reaches 0.
MultiplicativeSystem close_multiplicative(const Semiring& T, std::span<const Element> seed);

/// {u,a,{t,t,t}_γ}_δ = {u,b,{s,s,s}_η}_δ
struct CubicWitness {
  Element u = 0;
  Mode gamma = 0;
  Mode delta = 0;
  Mode eta = 0;
};

/// First witness for (a,s) ~ (b,t) in lexicographic (u, γ, δ, η) order.
/// Throws PreconditionError if s or t lies outside S.
std::optional<CubicWitness> cubic_related(const Semiring& T, const MultiplicativeSystem& S,
                                          Element a, Element s, Element b, Element t);

struct Fraction {
  Element num = 0;
  Element den = 0;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// One union performed while building the congruence. `rule` is "raw" for a
/// cubic witness, "add" or "tern" for an operation-compatibility step; for
/// those, `operands` are the two operand pairs whose results were forced equal.
struct MergeStep {
  std::string rule;
  Fraction lhs;
  Fraction rhs;
  std::optional<CubicWitness> witness;
  std::vector<Fraction> operands;
  Mode mode = 0;
};

/// S⁻¹T: classes of T×S under the congruence generated by the cubic relation.
class LocalizedSemiring {
 public:
  const Semiring& structure() const { return *quotient_; }
  std::shared_ptr<const Semiring> structure_ptr() const { return quotient_; }
  const MultiplicativeSystem& system() const { return system_; }
  std::size_t class_count() const { return reps_.size(); }
  /// Lexicographically smallest (num, den) of each class; class 0 is the zero class.
  const std::vector<Fraction>& representatives() const { return reps_; }
  /// Throws InputError unless s ∈ S.
  Element class_of(Element a, Element s) const;
  Element class_of(const Fraction& f) const { return class_of(f.num, f.den); }
  /// True iff the congruence coincides with the raw cubic relation.
  bool raw_equals_closure() const { return raw_equals_closure_; }
  std::uint64_t raw_related_pairs() const { return raw_pairs_; }
  const std::vector<MergeStep>& log() const { return log_; }

 private:
  friend LocalizedSemiring localize(const Semiring&, const MultiplicativeSystem&);
  std::shared_ptr<const Semiring> quotient_;
  MultiplicativeSystem system_;
  std::vector<Element> den_index_;     // element -> position in S, or npos
  std::vector<Element> class_of_pair_; // pair a*|S|+j -> class
  std::vector<Fraction> reps_;
  bool raw_equals_closure_ = true;
  std::uint64_t raw_pairs_ = 0;
  std::vector<MergeStep> log_;
};

/// Throws ConstructionError when some pair of classes has no common-denominator
/// representatives, naming the offending fractions.
LocalizedSemiring localize(const Semiring& T, const MultiplicativeSystem& S);

/// Map-search budget shared by the exhaustive homomorphism searches.
inline constexpr std::uint64_t kDefaultMapBudget = 50'000'000;

/// a ↦ class of (a, s₀): additive and tern-preserving.
struct CanonicalMap {
  Element s0 = 0;
  std::vector<Element> image;
};

/// Uses the least s₀ ∈ S for which a ↦ a/s₀ is a homomorphism; throws
/// StructuralError when no s₀ works.
CanonicalMap canonical_map(const Semiring& T, const LocalizedSemiring& L);

struct Inverse {
  Element partner = 0;
  Mode mode = 0;
};

/// First (s̄, γ) in lexicographic order with {s, s̄, x}_γ = x for every x.
std::optional<Inverse> is_invertible(const Semiring& R, Element s);

/// Additive and tern-preserving, with mode g of `src` sent to mode g of `dst`.
bool is_homomorphism(const Semiring& src, const Semiring& dst, std::span<const Element> map);

/// Enumerates homomorphisms src → dst that agree with `pins` where pins[x] is set.
/// Throws ResourceError past `budget` search nodes.
std::uint64_t for_each_homomorphism(const Semiring& src, const Semiring& dst,
                                    std::span<const std::optional<Element>> pins,
                                    std::uint64_t budget,
                                    const std::function<bool(std::span<const Element>)>& visit);

struct FactorizationVerdict {
  std::uint64_t factorizations = 0;
  std::optional<std::vector<Element>> first;  // a factorization, when one exists
  bool exists() const { return factorizations > 0; }
  bool unique() const { return factorizations == 1; }
};

/// Counts g: S⁻¹T → R with g ∘ ℓ = f. Throws PreconditionError unless f is a
/// homomorphism sending every element of S to an invertible element of R.
FactorizationVerdict check_universal_property(const Semiring& T, const LocalizedSemiring& L,
                                              const Semiring& R, std::span<const Element> f,
                                              std::uint64_t budget = kDefaultMapBudget);

}  // namespace gammalab
