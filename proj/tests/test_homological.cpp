#include <algorithm>

#include "cyclic_complexes.hpp"
#include "doctest.h"

using namespace gammalab;
using namespace complexes;

TEST_CASE("homology examples") {
  const auto z2 = cyclic(2), z4 = cyclic(4);
  const ChainComplex flat(base(), 0, {z4, z2}, {std::vector<Element>(4, 0), std::vector<Element>(2, 0)});
  CHECK(h(flat, 0) == 4);
  CHECK(h(flat, 1) == 2);

  const ChainComplex exact(base(), 0, {z2, z2}, {std::vector<Element>(2, 0), times(2, 2, 1)});
  CHECK(h(exact, 0) == 1);
  CHECK(h(exact, 1) == 1);

  const ChainComplex doubling(base(), 0, {z4, z4}, {std::vector<Element>(4, 0), times(4, 4, 2)});
  CHECK(h(doubling, 0) == 2);
  CHECK(h(doubling, 1) == 2);
  CHECK(homology(doubling, 1).module.is_group());

  CHECK_THROWS_AS(ChainComplex(base(), 0, {z4, z4, z4}, {std::vector<Element>(4, 0), times(4, 4, 1), times(4, 4, 1)}),
                  StructuralError);
  CHECK_THROWS_AS(ChainComplex(base(), 0, {z4}, {times(4, 4, 1)}), InputError);

  // Regular module: the induced action on homology is checked.
  const auto reg = regular_module(base());
  const auto hr = homology(concentrated(reg, 0), 0);
  CHECK(hr.module.size() == 5);
  CHECK(check_module_axioms(hr.module).all_hold());
}

TEST_CASE("homology against the cyclic kernel/image oracle") {
  for (const auto& c : random_cyclic(99, 150)) {
    const auto K = build(c);
    for (int n = K.lo() - 1; n <= K.hi() + 1; ++n) {
      CAPTURE(n);
      const auto H = homology(K, n);
      CHECK(H.module.size() == order_of_h(c, n));
      CHECK(check_module_axioms(H.module).all_hold());
      std::size_t cycles = 0;
      for (const auto cl : H.class_of) cycles += cl != kOutside;
      CHECK(cycles % H.module.size() == 0);
    }
  }
}

TEST_CASE("shift") {
  for (const auto& c : random_cyclic(5, 40)) {
    const auto K = build(c);
    const auto K0 = shift(K, 0);
    const auto back = shift(shift(K, 1), -1);
    const auto K1 = shift(K, 1);
    for (int n = K.lo() - 1; n <= K.hi() + 2; ++n) {
      CHECK(K0.differential(n) == K.differential(n));
      CHECK(back.differential(n) == K.differential(n));
      CHECK(h(K1, n) == h(K, n - 1));
    }
  }
}

TEST_CASE("cones and the long exact sequence") {
  for (const auto& c : random_cyclic(17, 60)) {
    const auto K = build(c);
    CHECK(acyclic(cone(identity_map(K))));
    const auto z = cone(zero_map(K, K));
    for (int n = K.lo(); n <= K.hi() + 1; ++n) CHECK(z.module(n).size() == K.module(n).size() * K.module(n - 1).size());
  }
  const auto maps = random_maps(23, 80);
  CHECK(maps.size() == 80);
  std::uint64_t joints = 0;
  for (const auto& f : maps) {
    const auto r = check_long_exact(f);
    CHECK(r.exact);
    joints += r.joints_checked;
    CHECK(acyclic(cone(f)) == is_quasi_iso(f));
  }
  CHECK(joints > 500);
}

TEST_CASE("quasi-isomorphisms") {
  for (const auto& c : random_cyclic(31, 30)) CHECK(is_quasi_iso(identity_map(build(c))));
  const auto z2 = cyclic(2);
  const ChainComplex exact(base(), 0, {z2, z2}, {std::vector<Element>(2, 0), times(2, 2, 1)});
  const ChainComplex exact4(base(), 3, {cyclic(4), cyclic(4)}, {std::vector<Element>(4, 0), times(4, 4, 1)});
  CHECK(is_quasi_iso(zero_map(exact, exact4)));
  // 2Z4 ↪ Z4 as one-term complexes.
  const ChainMap incl(concentrated(z2, 0), concentrated(cyclic(4), 0), {times(2, 4, 2)});
  CHECK_FALSE(is_quasi_iso(incl));
  // Composition of quasi-isomorphisms.
  for (const auto& f : random_maps(41, 40)) {
    if (!is_quasi_iso(f)) continue;
    CHECK(is_quasi_iso(identity_map(f.target())));
  }
  CHECK_NOTHROW(ChainMap(concentrated(cyclic(4), 0), concentrated(cyclic(2), 1), {times(4, 1, 0), times(1, 2, 0)}));
  CHECK_THROWS_AS(ChainMap(concentrated(cyclic(4), 0), concentrated(cyclic(2), 1), {times(4, 1, 0)}), InputError);
}

TEST_CASE("truncations") {
  const auto z4 = concentrated(cyclic(4), 0);
  for (const auto side : {TruncationSide::Le0, TruncationSide::Ge0}) {
    const auto t = truncate(z4, side);
    CHECK(t.complex.lo() == 0);
    CHECK(t.complex.hi() == 0);
    CHECK(t.complex.module(0).size() == 4);
  }
  for (const auto& c : random_cyclic(77, 120)) {
    const auto K = build(c);
    const auto le = truncate(K, TruncationSide::Le0);
    const auto both = truncate(le.complex, TruncationSide::Ge0).complex;
    CHECK(both.module(0).size() == h(K, 0));
    for (int n = K.lo() - 1; n <= K.hi() + 1; ++n)
      if (n != 0) CHECK(both.module(n).size() == 1);
    // Homology pattern of each side.
    for (int n = K.lo() - 1; n <= K.hi() + 1; ++n) {
      CHECK(h(le.complex, n) == (n >= 0 ? h(K, n) : 1));
      CHECK(h(truncate(K, TruncationSide::Ge0).complex, n) == (n <= 0 ? h(K, n) : 1));
    }
    // Idempotence.
    const auto twice = truncate(le.complex, TruncationSide::Le0).complex;
    for (int n = K.lo() - 1; n <= K.hi() + 1; ++n) CHECK(twice.module(n).size() == le.complex.module(n).size());
    if (acyclic(K)) {
      CHECK(acyclic(le.complex));
      CHECK(acyclic(truncate(K, TruncationSide::Ge0).complex));
    }
  }
}

TEST_CASE("heart") {
  CHECK(heart_check(concentrated(cyclic(4), 0)).holds());
  const auto z2 = cyclic(2);
  const ChainComplex exact(base(), 0, {z2, z2}, {std::vector<Element>(2, 0), times(2, 2, 1)});
  const auto e = heart_check(exact);
  CHECK(e.holds());
  CHECK(e.h0_size == 1);
  CHECK_FALSE(heart_check(concentrated(z2, 2)).holds());
  for (const auto& c : random_cyclic(123, 150)) {
    const auto K = build(c);
    bool concentrated0 = true;
    for (int n = K.lo(); n <= K.hi(); ++n)
      if (n != 0 && order_of_h(c, n) != 1) concentrated0 = false;
    const auto v = heart_check(K);
    CHECK(v.holds() == concentrated0);
    CHECK(v.h0_size == order_of_h(c, 0));
  }
}

TEST_CASE("tilde on complexes") {
  const auto T = base();
  const auto reg = regular_module(T);
  const ChainComplex none(T, 0, {}, {});
  const auto zv = tilde_complex_check(identity_map(none));
  CHECK(zv.global_quasi_iso);
  CHECK(zv.agrees());

  const auto K = concentrated(reg, 0);
  const auto id = tilde_complex_check(identity_map(K));
  CHECK(id.global_quasi_iso);
  CHECK(id.agrees());
  CHECK(id.local.size() == 3);

  const auto zero = tilde_complex_check(zero_map(K, K));
  CHECK_FALSE(zero.global_quasi_iso);
  CHECK(zero.agrees());
  CHECK(std::any_of(zero.local.begin(), zero.local.end(), [](const auto& e) { return !e.second; }));

  // Two-term complexes of regular modules: ×2 : Z5 → Z5 is an isomorphism.
  std::vector<Element> twice(5);
  for (Element x = 0; x < 5; ++x) twice[x] = static_cast<Element>(2 * x % 5);
  const ChainComplex cx(T, 0, {reg, reg}, {std::vector<Element>(5, 0), twice});
  const auto v = tilde_complex_check(zero_map(cx, none));
  CHECK(v.global_quasi_iso);
  CHECK(v.agrees());

  // Zero-action modules: the sections vanish, so quasi-isomorphisms are not reflected.
  const ChainMap incl(concentrated(cyclic(2), 0), concentrated(cyclic(4), 0), {times(2, 4, 2)});
  const auto zr = tilde_complex_check(incl);
  CHECK_FALSE(zr.global_quasi_iso);
  CHECK_FALSE(zr.agrees());
}
