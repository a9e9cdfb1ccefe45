#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gammalab {

using Element = std::uint32_t;
using Mode = std::uint32_t;

/// Addition table of a finite commutative monoid with zero at index 0.
///
/// The constructor only checks shape and index range; the monoid laws are
/// checked separately so that malformed tables can still be inspected.
class AdditiveTable {
 public:
  struct Violation {
    std::string law;
    std::vector<Element> elements;
    Element lhs = 0;
    Element rhs = 0;
  };

  AdditiveTable();  // the one-element monoid
  AdditiveTable(std::size_t size, std::vector<Element> table);

  static AdditiveTable cyclic(std::size_t order);
  /// Pairs (a, b) are indexed as a * rhs.size() + b.
  static AdditiveTable direct_sum(const AdditiveTable& lhs, const AdditiveTable& rhs);

  std::size_t size() const { return size_; }
  Element add(Element a, Element b) const { return table_[a * size_ + b]; }
  std::span<const Element> table() const { return table_; }

  /// First failure of commutativity, associativity or the zero law, scanning
  /// tuples in lexicographic order.
  std::optional<Violation> first_monoid_violation() const;

  bool is_group() const;
  /// Additive inverse of every element; throws PreconditionError unless a group.
  std::vector<Element> negation_table() const;
  /// k-fold sum for k >= 0, inverse multiples for k < 0 (groups only).
  Element multiple(std::int64_t k, Element x) const;

  friend bool operator==(const AdditiveTable&, const AdditiveTable&) = default;

 private:
  std::size_t size_;
  std::vector<Element> table_;
};

/// A pair of endo-operations that an additive map must intertwine:
/// phi(source[x]) == target[phi(x)].
struct IntertwinedOperator {
  std::vector<Element> source;
  std::vector<Element> target;
};

/// Enumerates every additive map src -> dst (phi(0) = 0, phi(x+y) = phi(x)+phi(y))
/// that intertwines all `ops`, in lexicographic order of generator images.
/// `visit` returns false to stop early. Throws ResourceError once more than
/// `budget` search nodes have been expanded. Returns the number of maps visited.
std::uint64_t for_each_additive_map(
    const AdditiveTable& src, const AdditiveTable& dst,
    std::span<const IntertwinedOperator> ops, std::uint64_t budget,
    const std::function<bool(std::span<const Element>)>& visit);

std::vector<std::vector<Element>> additive_maps(
    const AdditiveTable& src, const AdditiveTable& dst,
    std::span<const IntertwinedOperator> ops, std::uint64_t budget);

bool is_additive_map(const AdditiveTable& src, const AdditiveTable& dst,
                     std::span<const Element> map);

/// Invariant factors d1 | d2 | … of a finite abelian group, all > 1, read off
/// from the counts of elements killed by each prime power. Throws
/// PreconditionError unless the table is a group.
std::vector<std::uint64_t> invariant_factors(const AdditiveTable& g);

}  // namespace gammalab
