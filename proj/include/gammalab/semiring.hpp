#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gammalab/additive.hpp"

namespace gammalab {

/// A finite ternary Γ-semiring given by explicit tables: an addition table
/// with zero at index 0 and one ternary table per mode.
///
/// Construction checks shapes, index ranges and label uniqueness only; the
/// structure axioms are decided by check_axioms().
class Semiring {
 public:
  /// `tern[g]` is the flattened n^3 table of mode g in row-major (a,b,c) order.
  Semiring(AdditiveTable add, std::vector<std::string> mode_labels,
           std::vector<std::vector<Element>> tern);

  std::size_t size() const { return add_.size(); }
  std::size_t mode_count() const { return labels_.size(); }
  const std::string& label(Mode g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws InputError for an unknown label.
  Mode mode_of(const std::string& label) const;

  const AdditiveTable& additive() const { return add_; }
  Element add(Element a, Element b) const { return add_.add(a, b); }

  /// Unchecked table lookup for hot loops.
  Element tern(Element a, Element b, Element c, Mode g) const {
    return tern_[g][(a * size() + b) * size() + c];
  }
  /// Range-checked evaluation of {a,b,c}_g.
  Element evaluate_tern(Element a, Element b, Element c, Mode g) const;

  std::span<const Element> tern_table(Mode g) const { return tern_.at(g); }

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  AdditiveTable add_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Element>> tern_;
};

/// Z_modulus with {a,b,c}_γ = a·b·c·γ mod modulus, one mode per listed residue.
Semiring standard_family(std::uint64_t modulus, std::span<const std::uint64_t> gammas);

/// {0} with `modes` modes.
Semiring singleton_structure(std::size_t modes = 1);

}  // namespace gammalab
