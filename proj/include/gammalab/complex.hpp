#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/module.hpp"
#include "gammalab/spectrum.hpp"

namespace gammalab {

/// Bounded complex with homological indexing: d_n : K_n → K_{n-1}. Degrees
/// outside [lo, hi] hold the zero module.
class ChainComplex {
 public:
  /// `modules[i]` sits in degree lo + i; `differentials[i]` is d_{lo+i} as a
  /// value table on that module. Throws StructuralError if some d is not
  /// Γ-linear or d∘d ≠ 0, InputError on shape mismatch.
  ChainComplex(std::shared_ptr<const Semiring> over, int lo, std::vector<GammaModule> modules,
               std::vector<std::vector<Element>> differentials);

  const std::shared_ptr<const Semiring>& base_ptr() const { return over_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  bool empty() const { return modules_.empty(); }
  const GammaModule& module(int n) const;
  /// d_n; the zero map outside the support.
  std::vector<Element> differential(int n) const;

 private:
  std::shared_ptr<const Semiring> over_;
  int lo_ = 0;
  std::vector<GammaModule> modules_;
  std::vector<std::vector<Element>> d_;
  GammaModule zero_;
};

/// A single module placed in degree n.
ChainComplex concentrated(const GammaModule& m, int n);

/// Degreewise maps f_n : K_n → L_n over lo..hi of the union of supports.
class ChainMap {
 public:
  /// `components[i]` is f_{lo+i} where lo = min(source.lo, target.lo).
  /// Throws StructuralError unless every f_n is Γ-linear and d f = f d.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<std::vector<Element>> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::vector<Element> at(int n) const;

 private:
  ChainComplex source_, target_;
  int lo_ = 0, hi_ = -1;
  std::vector<std::vector<Element>> f_;
};

ChainMap identity_map(const ChainComplex& k);
ChainMap zero_map(const ChainComplex& k, const ChainComplex& l);

/// Z / B for additive subgroups B ⊆ Z of a module, with the induced action.
struct Subquotient {
  GammaModule module;
  /// Class of each element of the ambient module, or npos outside Z.
  std::vector<std::size_t> class_of;
  /// Smallest element of each class.
  std::vector<Element> representative;
};

inline constexpr std::size_t kOutside = static_cast<std::size_t>(-1);

/// Throws StructuralError if the action does not descend.
Subquotient subquotient(const GammaModule& m, const std::vector<bool>& z, const std::vector<bool>& b);

/// H_n = ker d_n / im d_{n+1}.
Subquotient homology(const ChainComplex& k, int n);

/// H_n(f) on class indices.
std::vector<Element> induced_on_homology(const ChainMap& f, int n);

/// Degrees move up by k; differentials are multiplied by (−1)^k.
ChainComplex shift(const ChainComplex& k, int by);

/// C_n = L_n ⊕ K_{n-1}, d(l, x) = (d l + f x, −d x); pairs indexed l·|K_{n-1}| + x.
ChainComplex cone(const ChainMap& f);

bool is_quasi_iso(const ChainMap& f);

struct ExactnessReport {
  std::uint64_t joints_checked = 0;
  bool exact = true;
  std::optional<std::string> witness;
};

/// Exactness of … → H_n(K) → H_n(L) → H_n(cone f) → H_{n−1}(K) → H_{n−1}(L) → …
ExactnessReport check_long_exact(const ChainMap& f);

/// Cohomological names: le0 has H^i = 0 for i > 0 (homological degrees ≥ 0
/// kept, ker d_0 in degree 0); ge0 has H^i = 0 for i < 0 (degrees ≤ 0 kept,
/// coker d_1 in degree 0).
enum class TruncationSide { Le0, Ge0 };

struct Truncation {
  ChainComplex complex;
  /// le0: inclusion τ → K; ge0: projection K → τ.
  ChainMap map;
};

Truncation truncate(const ChainComplex& k, TruncationSide side);

struct HeartVerdict {
  bool concentrated = false;  // H_n = 0 for n ≠ 0
  bool zigzag_quasi_iso = false;
  std::size_t h0_size = 0;
  std::optional<std::string> witness;
  bool holds() const { return concentrated && zigzag_quasi_iso; }
};

/// Concentration in degree 0 plus the comparison K → τ≥0 K ← τ≤0 τ≥0 K ≅ H_0.
HeartVerdict heart_check(const ChainComplex& k);

struct TildeComplexVerdict {
  bool global_quasi_iso = false;
  /// Quasi-isomorphism of f on the sections over D(a), one entry per section.
  std::vector<std::pair<Element, bool>> local;
  std::vector<std::string> defects;
  bool agrees() const;
};

/// f is a quasi-isomorphism iff f restricted to every basic open is.
TildeComplexVerdict tilde_complex_check(const ChainMap& f, std::size_t spec_bound = kDefaultSpecBound);

}  // namespace gammalab
