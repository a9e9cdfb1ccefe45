#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gammalab/additive.hpp"
#include "gammalab/semiring.hpp"

namespace gammalab {

/// A finite Γ-module over T: an additive monoid M with {t,u,m}_γ ∈ M.
class GammaModule {
 public:
  /// `action` is flattened over [t][u][m][γ].
  GammaModule(std::shared_ptr<const Semiring> over, AdditiveTable add, std::vector<Element> action);

  const Semiring& base() const { return *over_; }
  const std::shared_ptr<const Semiring>& base_ptr() const { return over_; }
  std::size_t size() const { return add_.size(); }
  const AdditiveTable& additive() const { return add_; }
  Element add(Element x, Element y) const { return add_.add(x, y); }
  Element act(Element t, Element u, Element m, Mode g) const {
    const std::size_t n = over_->size();
    return action_[((t * n + u) * size() + m) * over_->mode_count() + g];
  }
  std::span<const Element> action() const { return action_; }
  bool is_group() const { return add_.is_group(); }

 private:
  std::shared_ptr<const Semiring> over_;
  AdditiveTable add_;
  std::vector<Element> action_;
};

/// M = T with {t,u,m}_γ the structure's own product.
GammaModule regular_module(std::shared_ptr<const Semiring> over);
/// The given monoid with every action value 0.
GammaModule zero_action_module(std::shared_ptr<const Semiring> over, AdditiveTable add);
GammaModule zero_module(std::shared_ptr<const Semiring> over);
/// Pairs (x, y) are indexed x * |N| + y.
GammaModule direct_sum(const GammaModule& m, const GammaModule& n);

enum class ModuleClause { AdditiveMonoid, Distributivity, Associativity, ScalarZero };
inline constexpr std::size_t kModuleClauseCount = 4;
std::string_view module_clause_name(ModuleClause c);

/// Identity names: add_commutative, add_associative, add_identity,
/// distribute_first (t,t',u,m), distribute_second (t,u,u',m),
/// distribute_module (t,u,m,m'), associative (a,b,c,d,m; γ,δ),
/// zero_first (u,m), zero_second (t,m).
struct ModuleWitness {
  std::string_view law;
  std::vector<Element> scalars;
  std::vector<Element> elements;
  std::vector<Mode> modes;
  Element lhs = 0;
  Element rhs = 0;
};

struct ModuleAxiomReport {
  std::array<bool, kModuleClauseCount> holds{true, true, true, true};
  std::array<std::optional<ModuleWitness>, kModuleClauseCount> witness;
  bool all_hold() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

/// Exhaustive scan; witnesses are the first failure in lexicographic order.
ModuleAxiomReport check_module_axioms(const GammaModule& m);

/// Whether Hom counts require compatibility with the action.
enum class HomKind { Additive, GammaLinear };

/// The operators x ↦ {t,u,x}_γ of both modules, for every (t,u,γ).
std::vector<IntertwinedOperator> action_operators(const GammaModule& src, const GammaModule& dst);

bool is_module_morphism(const GammaModule& src, const GammaModule& dst, std::span<const Element> map,
                        HomKind kind = HomKind::GammaLinear);

inline constexpr std::uint64_t kDefaultHomBudget = 20'000'000;

std::vector<std::vector<Element>> module_morphisms(const GammaModule& src, const GammaModule& dst,
                                                   HomKind kind = HomKind::GammaLinear,
                                                   std::uint64_t budget = kDefaultHomBudget);
std::uint64_t count_module_morphisms(const GammaModule& src, const GammaModule& dst,
                                     HomKind kind = HomKind::GammaLinear,
                                     std::uint64_t budget = kDefaultHomBudget);

/// Whether the two modules share a base up to equality of tables.
bool same_base(const GammaModule& m, const GammaModule& n);

}  // namespace gammalab
