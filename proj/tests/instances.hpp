#pragma once

#include <memory>
#include <random>
#include <vector>

#include "gammalab/axioms.hpp"
#include "gammalab/semiring.hpp"

namespace instances {

using namespace gammalab;

inline Semiring z5(std::vector<std::uint64_t> gammas) { return standard_family(5, gammas); }
inline Semiring z5_gamma1() { return z5({1}); }
inline Semiring z5_standard() { return z5({1, 2}); }
inline Semiring z6_standard() { return standard_family(6, std::vector<std::uint64_t>{1}); }

// Z6 with modes Z4 and {a,b,c}_γ = abc + cγ.
inline Semiring z6z4_shifted() {
  const std::vector<std::uint64_t> modes{0, 1, 2, 3};
  return compile_modular(formula_family("product_plus_last_times_mode"), 6, modes);
}

inline std::shared_ptr<const Semiring> shared(Semiring s) {
  return std::make_shared<const Semiring>(std::move(s));
}

// Every nonempty subset of Z_n as a mode list.
inline std::vector<std::vector<std::uint64_t>> mode_subsets(std::uint64_t n) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    std::vector<std::uint64_t> g;
    for (std::uint64_t i = 0; i < n; ++i)
      if (mask >> i & 1) g.push_back(i);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace instances
