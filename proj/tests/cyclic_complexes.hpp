#pragma once

// Complexes of cyclic groups with multiplication differentials, shared by the
// homology tests and the acceptance suite.

#include <memory>
#include <random>
#include <vector>

#include "gammalab/complex.hpp"
#include "gammalab/errors.hpp"
#include "instances.hpp"
#include "oracles.hpp"

namespace complexes {

using namespace gammalab;

using Base = std::shared_ptr<const Semiring>;

inline Base base() {
  static const Base T = instances::shared(instances::z5_gamma1());
  return T;
}

inline GammaModule cyclic(std::size_t n) { return zero_action_module(base(), AdditiveTable::cyclic(n)); }

// x ↦ c·x from Z_a to Z_b.
inline std::vector<Element> times(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<Element> v(a);
  for (std::size_t x = 0; x < a; ++x) v[x] = static_cast<Element>(x * c % b);
  return v;
}

inline bool well_defined(std::size_t a, std::size_t b, std::size_t c) { return a * c % b == 0; }

struct Cyclic {
  std::vector<std::size_t> sizes;  // degrees lo..lo+k-1
  std::vector<std::size_t> mult;   // d_n = ×mult[n-lo], mult[0] unused (into 0)
  int lo = 0;
};

inline ChainComplex build(const Cyclic& c) {
  std::vector<GammaModule> mods;
  std::vector<std::vector<Element>> ds;
  for (std::size_t i = 0; i < c.sizes.size(); ++i) {
    mods.push_back(cyclic(c.sizes[i]));
    ds.push_back(i == 0 ? std::vector<Element>(c.sizes[0], 0) : times(c.sizes[i], c.sizes[i - 1], c.mult[i]));
  }
  return {base(), c.lo, std::move(mods), std::move(ds)};
}

// Random complexes of cyclic groups with multiplication differentials.
inline std::vector<Cyclic> random_cyclic(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::vector<std::size_t> orders{1, 2, 3, 4, 6, 8};
  std::vector<Cyclic> out;
  while (static_cast<int>(out.size()) < count) {
    Cyclic c;
    c.lo = static_cast<int>(rng() % 3) - 1;
    const std::size_t len = 1 + rng() % 3;
    for (std::size_t i = 0; i < len; ++i) c.sizes.push_back(orders[rng() % orders.size()]);
    c.mult.push_back(0);
    bool ok = true;
    for (std::size_t i = 1; i < len && ok; ++i) {
      std::vector<std::size_t> valid;
      for (std::size_t m = 0; m < c.sizes[i - 1]; ++m)
        if (well_defined(c.sizes[i], c.sizes[i - 1], m)) valid.push_back(m);
      c.mult.push_back(valid[rng() % valid.size()]);
      if (i >= 2 && (c.mult[i] * c.mult[i - 1]) % c.sizes[i - 2] != 0) ok = false;
    }
    if (ok) out.push_back(std::move(c));
  }
  return out;
}

inline std::size_t order_of_h(const Cyclic& c, int n) {
  const int i = n - c.lo;
  const int len = static_cast<int>(c.sizes.size());
  if (i < 0 || i >= len) return 1;
  const std::size_t m = c.sizes[i];
  const std::size_t prev = i > 0 ? c.sizes[i - 1] : 0;
  const std::size_t next = i + 1 < len ? c.sizes[i + 1] : 0;
  const std::size_t d_out = i > 0 ? c.mult[i] : 0;
  const std::size_t d_in = i + 1 < len ? c.mult[i + 1] : 0;
  return oracle::cyclic_homology_order(prev, m, next, d_out, d_in);
}

inline std::size_t h(const ChainComplex& k, int n) { return homology(k, n).representative.size(); }

inline bool acyclic(const ChainComplex& k) {
  if (k.empty()) return true;
  for (int n = k.lo(); n <= k.hi(); ++n)
    if (h(k, n) != 1) return false;
  return true;
}

// Chain maps between two cyclic complexes with multiplication components.
inline std::vector<ChainMap> random_maps(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<ChainMap> out;
  const auto pool = random_cyclic(seed + 1, 60);
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts++ < 20000) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto K = build(a), L = build(b);
    const int lo = std::min(K.lo(), L.lo()), hi = std::max(K.hi(), L.hi());
    std::vector<std::vector<Element>> comps;
    for (int n = lo; n <= hi; ++n) {
      const std::size_t s = K.module(n).size(), t = L.module(n).size();
      std::vector<std::size_t> valid;
      for (std::size_t m = 0; m < t; ++m)
        if (well_defined(s, t, m)) valid.push_back(m);
      comps.push_back(times(s, t, valid[rng() % valid.size()]));
    }
    try {
      out.emplace_back(K, L, std::move(comps));
    } catch (const StructuralError&) {
    }
  }
  return out;
}

}  // namespace complexes
