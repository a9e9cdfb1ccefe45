#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gammalab/semiring.hpp"

namespace gammalab {

/// Carrier subset as a bitmask; bit i set means element i is a member.
using Subset = std::uint64_t;
inline constexpr std::size_t kMaxSubsetCarrier = 64;
inline constexpr std::size_t kDefaultSpecBound = 16;

Subset subset_of(std::span<const Element> elements);
std::vector<Element> members(Subset s);
inline bool contains(Subset s, Element a) { return (s >> a) & 1U; }
Subset full_subset(std::size_t carrier);

/// Failure certificate for ideal/prime tests. `law` is one of
/// contains_zero, add_closed, absorb_first, absorb_second, absorb_third,
/// prime_implication.
struct SubsetWitness {
  std::string law;
  std::vector<Element> elements;
  std::vector<Mode> modes;
  Element value = 0;
};

struct IdealVerdict {
  bool absorbing_subset = false;  // 0 in S, S+S in S, absorbing in every slot
  bool proper = false;
  std::optional<SubsetWitness> witness;
  /// Ideals are proper by convention; the full carrier is only an absorbing subset.
  bool is_ideal() const { return absorbing_subset && proper; }
};

struct PrimeVerdict {
  bool prime = false;
  std::optional<SubsetWitness> witness;
};

IdealVerdict is_ideal(const Semiring& T, Subset s);
/// Throws PreconditionError unless `s` is a proper ideal.
PrimeVerdict is_prime(const Semiring& T, Subset s);

/// Point sets over the primes of a spectrum: entry i refers to primes[i].
using PointSet = std::vector<bool>;

struct Spectrum {
  std::size_t carrier = 0;
  std::vector<Subset> primes;          // increasing mask order
  std::vector<PointSet> basic_opens;   // D(a) for every element a

  const PointSet& basic_open(Element a) const { return basic_opens.at(a); }
  PointSet everything() const { return PointSet(primes.size(), true); }
};

/// All proper ideals, in increasing mask order. Throws ResourceError when the
/// carrier exceeds `bound`.
std::vector<Subset> ideals(const Semiring& T, std::size_t bound = kDefaultSpecBound);
/// Throws ResourceError when the carrier exceeds `bound`.
Spectrum spec(const Semiring& T, std::size_t bound = kDefaultSpecBound);

PointSet intersect(const PointSet& x, const PointSet& y);
PointSet unite(const PointSet& x, const PointSet& y);
bool is_empty(const PointSet& x);
bool is_subset(const PointSet& x, const PointSet& y);

struct BasisLawReport {
  bool intersection_law = true;    // D(a) ∩ D(b) = D({a,b,b}_γ)
  bool zero_empty = true;          // D(0) = ∅
  bool intersections_are_unions = true;
  std::uint64_t instances_checked = 0;
  std::optional<SubsetWitness> witness;  // elements (a, b), modes (γ)

  bool holds() const { return intersection_law && zero_empty && intersections_are_unions; }
};

BasisLawReport check_basis_laws(const Semiring& T, const Spectrum& spectrum);

struct ClosedSet {
  Subset ideal = 0;
  PointSet points;                     // V(I)
  std::vector<Element> complement_generators;  // the a in I whose D(a) cover the complement
  bool complement_is_union = true;     // verified: Spec \ V(I) = ∪_{a ∈ I} D(a)
};

/// Requires `ideal` to be an absorbing subset (the full carrier is allowed and
/// gives the empty closed set).
ClosedSet vanishing(const Semiring& T, const Spectrum& spectrum, Subset ideal);

}  // namespace gammalab
