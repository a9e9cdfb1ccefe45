#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/localization.hpp"

namespace gammalab {

/// Finite commutative semiring with binary product, zero at index 0.
class BinaryRing {
 public:
  /// Throws InputError on shape errors and StructuralError when a commutative
  /// semiring law fails (message names the law and elements).
  BinaryRing(std::string name, AdditiveTable add, std::vector<Element> mul, Element one);

  const std::string& name() const { return name_; }
  std::size_t size() const { return add_.size(); }
  const AdditiveTable& additive() const { return add_; }
  Element add(Element a, Element b) const { return add_.add(a, b); }
  Element mul(Element a, Element b) const { return mul_[a * size() + b]; }
  std::span<const Element> mul_table() const { return mul_; }
  Element one() const { return one_; }
  /// True when every element has an additive inverse.
  bool is_ring() const { return ring_; }

 private:
  std::string name_;
  AdditiveTable add_;
  std::vector<Element> mul_;
  Element one_ = 0;
  bool ring_ = false;
};

BinaryRing cyclic_ring(std::size_t n);
/// Componentwise; (x, y) is indexed x·|rhs| + y.
BinaryRing product_ring(const BinaryRing& lhs, const BinaryRing& rhs);
/// {0..k} with saturating + and ·.
BinaryRing capped_semiring(std::size_t k);
/// Chain 0 < 1 < … < k with + = max and · = min.
BinaryRing chain_semiring(std::size_t k);

/// Z_n for n ≤ max_size, Z_n × Z_m for 2 ≤ n ≤ m with nm ≤ max_size, and, with
/// `semirings`, the capped and chain semirings of at most max_size elements.
std::vector<BinaryRing> ring_family(std::size_t max_size, bool semirings = false);

/// Least multiplicatively closed superset of `seed`.
Subset multiplicative_closure(const BinaryRing& R, Subset seed);

struct BinaryWitness {
  Element w = 0;
  /// Additive slack x with w·a·t + x = w·b·s + x; 0 in a ring.
  Element slack = 0;
};

/// Least w ∈ simg with w·a·t = w·b·s, or for semirings with an x making
/// w·a·t + x = w·b·s + x. Throws PreconditionError when simg is not
/// multiplicatively closed or s, t ∉ simg.
std::optional<BinaryWitness> binary_fraction_equal(const BinaryRing& R, Subset simg, Element a,
                                                   Element s, Element b, Element t);

struct ShadowCandidate {
  BinaryRing ring;
  /// ι : T → R, additive.
  std::vector<Element> iota;
};

struct PairVerdict {
  Fraction lhs, rhs;
  bool cubic = false;
  bool binary = false;
  /// Raw cubic witness, when the pair is related without the congruence closure.
  std::optional<CubicWitness> cubic_witness;
  std::optional<BinaryWitness> binary_witness;
  bool agree() const { return cubic == binary; }
};

struct ReflectionReport {
  /// Set when the candidate is rejected before any pair is compared.
  std::optional<std::string> rejected;
  Subset simg = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<PairVerdict> disagreements;
  bool raw_equals_closure = true;
  bool holds() const { return !rejected && disagreements.empty(); }
};

/// Compares a/s = b/t in S⁻¹T with ι(a)/ι(s) = ι(b)/ι(t) in the localization
/// of R at the multiplicative closure of ι(S), over all pairs. Rejects the
/// candidate when ι is not additive or that closure contains 0.
/// With `stop_at_first`, returns after the first disagreement.
ReflectionReport reflection_check(const Semiring& T, const LocalizedSemiring& L, const ShadowCandidate& cand,
                                  bool stop_at_first = false);

struct SearchBounds {
  std::size_t max_ring = 12;
  bool semirings = false;
  std::uint64_t candidate_budget = 1'000'000;
};

inline constexpr const char* kRejectNotAdditive = "iota not additive";
inline constexpr const char* kRejectZeroDenominator = "0 in closure of iota(S)";
inline constexpr const char* kRejectCubicOnly = "cubic equal, binary distinct";
inline constexpr const char* kRejectBinaryOnly = "binary equal, cubic distinct";

struct SearchReport {
  std::vector<std::string> rings;
  std::uint64_t candidates = 0;
  /// Exhaustion certificate: candidates per rejection reason.
  std::map<std::string, std::uint64_t> rejections;
  std::vector<ShadowCandidate> satisfying;
  /// False when the budget ran out before the family was exhausted.
  bool complete = true;
  bool raw_equals_closure = true;
  /// What was searched: reflection of fraction equality on the regular module only.
  std::string scope;
};

/// Every ring of the family against every additive ι : T → R.
SearchReport shadow_search(const Semiring& T, const LocalizedSemiring& L, const SearchBounds& bounds = {});

struct CubeEntry {
  std::string mode;
  Element value = 0;
};

/// {t,t,t}_γ for every mode.
std::vector<CubeEntry> cube_profile(const Semiring& T, Element t);

struct WitnessGap {
  Fraction lhs, rhs;
  CubicWitness witness;
  std::string gamma, delta, eta;  // mode labels
  Element lhs_value = 0, rhs_value = 0;
  std::vector<CubeEntry> cubes_of_s, cubes_of_t;
  /// Some cube takes different values in different modes.
  bool mode_dependent = false;
  bool degenerate = false;  // a/s against itself
  std::string statement;
};

/// Throws PreconditionError unless the pair has a raw cubic witness.
WitnessGap witness_gap_demo(const Semiring& T, const MultiplicativeSystem& S, Element a, Element s, Element b,
                            Element t);

}  // namespace gammalab
