#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/localization.hpp"
#include "gammalab/module.hpp"
#include "gammalab/module_localization.hpp"
#include "gammalab/spectrum.hpp"

namespace gammalab {

/// One section M_a, shared by every a with the same system S(a). Node 0 is
/// the empty open, whose section is the zero module.
struct SheafNode {
  Subset system = 0;
  PointSet open;
  std::vector<Element> generators;
  std::shared_ptr<const LocalizedSemiring> scalars;  // null on the empty open
  std::optional<LocalizedModule> local;              // null on the empty open or on a defect
  std::optional<std::string> defect;

  bool empty() const { return scalars == nullptr; }
};

/// ρ: M_from → M_to for D(to) ⊆ D(from).
struct Restriction {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<Element> scalar_map;  // S⁻¹T level, empty on the empty open
  std::vector<Element> map;         // module level
  std::optional<std::string> defect;
  bool ok() const { return !defect.has_value(); }
};

class BasisPresheaf {
 public:
  /// Builds every section and every restriction between nested basic opens.
  /// M must be an additive group over T.
  BasisPresheaf(std::shared_ptr<const Semiring> T, GammaModule m, std::size_t spec_bound = kDefaultSpecBound);

  const Semiring& base() const { return *T_; }
  const std::shared_ptr<const Semiring>& base_ptr() const { return T_; }
  const GammaModule& module() const { return m_; }
  const Spectrum& spectrum() const { return spec_; }
  const std::vector<SheafNode>& nodes() const { return nodes_; }
  std::size_t node_of(Element a) const { return node_of_.at(a); }
  /// Size of the section on D(a).
  std::size_t section_size(std::size_t node) const;
  const AdditiveTable& section_additive(std::size_t node) const;
  /// Throws PreconditionError unless D(to) ⊆ D(from).
  const Restriction& restriction(std::size_t from, std::size_t to) const;
  const std::map<std::pair<std::size_t, std::size_t>, Restriction>& restrictions() const { return res_; }
  /// Unit map η_a: M → M_a.
  std::vector<Element> unit(std::size_t node) const;
  std::vector<std::string> defects() const;

 private:
  std::shared_ptr<const Semiring> T_;
  GammaModule m_;
  Spectrum spec_;
  std::vector<SheafNode> nodes_;
  std::vector<std::size_t> node_of_;
  std::map<std::pair<std::size_t, std::size_t>, Restriction> res_;
  GammaModule zero_;
};

/// Verified presheaf laws: identities, composition triangles, and comparison
/// isomorphisms between sections with equal opens.
struct PresheafLawReport {
  bool identities = true;
  bool triangles = true;
  bool generator_independent = true;
  std::uint64_t triangles_checked = 0;
  std::optional<std::string> witness;
  bool holds() const { return identities && triangles && generator_independent; }
};
PresheafLawReport check_presheaf_laws(const BasisPresheaf& p);

/// Smallest set of elements, lexicographically first, whose basic opens cover Spec.
std::vector<Element> minimal_cover(const Spectrum& s);
/// Every cover of Spec by nonempty basic opens of minimal size.
std::vector<std::vector<Element>> minimal_covers(const Spectrum& s);

inline constexpr std::uint64_t kDefaultFamilyBudget = 5'000'000;

struct GlobalSections {
  std::vector<Element> cover;
  /// Compatible families, one section per cover element.
  std::vector<std::vector<Element>> families;
  AdditiveTable additive;
  /// m ↦ (η_i(m))_i as indices into `families`, or npos when not compatible.
  std::vector<std::size_t> comparison;
  bool isomorphic = false;
  std::optional<std::string> witness;
  std::vector<std::string> defects;
};

/// Equalizer of the sections over `cover` (a minimal cover when empty),
/// compared with M. Throws ResourceError beyond `budget` candidate families.
GlobalSections global_sections(const BasisPresheaf& p, std::vector<Element> cover = {},
                               std::uint64_t budget = kDefaultFamilyBudget);

/// Counts of elements of each additive order; equal for isomorphic finite groups.
std::map<std::size_t, std::size_t> order_profile(const AdditiveTable& g);

struct GlueReport {
  std::vector<Element> cover;
  /// "M" or the element c with D(c) equal to the union.
  std::string target;
  std::uint64_t families_checked = 0;
  bool holds = false;
  std::optional<std::string> witness;
};

/// Existence and uniqueness of a glued section for every compatible family.
/// Throws PreconditionError when an overlap or the union is not a basic open.
GlueReport check_gluing(const BasisPresheaf& p, const std::vector<Element>& cover,
                        std::uint64_t budget = kDefaultFamilyBudget);

struct FaithfulnessVerdict {
  std::uint64_t hom_count = 0;
  std::uint64_t family_count = 0;
  /// f ↦ (id ⊗ f)_a lands in compatible families and is injective.
  bool restriction_injective = false;
  std::vector<std::string> defects;
  bool holds() const { return hom_count == family_count && restriction_injective; }
};

FaithfulnessVerdict check_full_faithfulness(std::shared_ptr<const Semiring> T, const GammaModule& m,
                                            const GammaModule& n, std::uint64_t budget = kDefaultFamilyBudget);

}  // namespace gammalab
