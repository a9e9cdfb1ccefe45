#include <algorithm>
#include <array>
#include <random>

#include "doctest.h"
#include "gammalab/axioms.hpp"
#include "gammalab/errors.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace gammalab;

namespace {

// Re-evaluates a reported witness directly from the tables.
bool witness_reproduces(const Semiring& T, const Witness& w) {
  const auto& e = w.elements;
  const auto& m = w.modes;
  auto t = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t g) {
    return T.evaluate_tern(static_cast<Element>(a), static_cast<Element>(b), static_cast<Element>(c),
                           static_cast<Mode>(g));
  };
  auto add = [&](std::uint64_t a, std::uint64_t b) { return T.add(static_cast<Element>(a), static_cast<Element>(b)); };
  std::uint64_t lhs = 0, rhs = 0;
  switch (w.law) {
    case Law::AddCommutative: lhs = add(e[0], e[1]); rhs = add(e[1], e[0]); break;
    case Law::AddAssociative: lhs = add(add(e[0], e[1]), e[2]); rhs = add(e[0], add(e[1], e[2])); break;
    case Law::AddIdentity: lhs = add(0, e[0]); rhs = e[0]; break;
    case Law::TernaryInRange: return false;
    case Law::DistributeFirst:
      lhs = t(add(e[0], e[1]), e[2], e[3], m[0]);
      rhs = add(t(e[0], e[2], e[3], m[0]), t(e[1], e[2], e[3], m[0]));
      break;
    case Law::DistributeSecond:
      lhs = t(e[0], add(e[1], e[2]), e[3], m[0]);
      rhs = add(t(e[0], e[1], e[3], m[0]), t(e[0], e[2], e[3], m[0]));
      break;
    case Law::DistributeThird:
      lhs = t(e[0], e[1], add(e[2], e[3]), m[0]);
      rhs = add(t(e[0], e[1], e[2], m[0]), t(e[0], e[1], e[3], m[0]));
      break;
    case Law::Associative:
      lhs = t(e[0], e[1], t(e[2], e[3], e[4], m[0]), m[1]);
      rhs = t(t(e[0], e[1], e[2], m[0]), e[3], e[4], m[1]);
      break;
    case Law::AbsorbZero: lhs = t(e[0], 0, e[1], m[0]); rhs = 0; break;
    case Law::SwapFirstSecond: lhs = t(e[0], e[1], e[2], m[0]); rhs = t(e[1], e[0], e[2], m[0]); break;
    case Law::SwapSecondThird: lhs = t(e[0], e[1], e[2], m[0]); rhs = t(e[0], e[2], e[1], m[0]); break;
  }
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

}  // namespace

TEST_CASE("evaluation examples") {
  const auto shifted = instances::z6z4_shifted();
  CHECK(shifted.evaluate_tern(2, 2, 2, shifted.mode_of("1")) == 4);
  CHECK(oracle::shifted_family(6, 2, 2, 2, 1) == 4);

  const auto z5 = instances::z5_standard();
  CHECK(z5.evaluate_tern(2, 3, 4, z5.mode_of("2")) == 3);
  CHECK(z5.evaluate_tern(2, 3, 4, z5.mode_of("2")) == oracle::product_family(5, 2, 3, 4, 2));
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b)
      for (Mode g = 0; g < 2; ++g) CHECK(z5.evaluate_tern(a, 0, b, g) == 0);

  CHECK_THROWS_AS(z5.evaluate_tern(5, 0, 0, 0), InputError);
  CHECK_THROWS_AS(z5.evaluate_tern(0, 0, 0, 2), InputError);
  CHECK_THROWS_AS(z5.mode_of("7"), InputError);
}

TEST_CASE("standard family tables match the closed form") {
  for (std::uint64_t n = 3; n <= 8; ++n) {
    const std::vector<std::uint64_t> gammas{0, 1, n - 1};
    const auto T = standard_family(n, gammas);
    for (Mode g = 0; g < 3; ++g)
      for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
          for (Element c = 0; c < n; ++c)
            REQUIRE(T.tern(a, b, c, g) == oracle::product_family(n, a, b, c, gammas[g]));
  }
  CHECK_THROWS_AS(standard_family(0, std::vector<std::uint64_t>{1}), InputError);
  CHECK_THROWS_AS(standard_family(5, std::vector<std::uint64_t>{}), InputError);
  const auto one = standard_family(1, std::vector<std::uint64_t>{1});
  CHECK(one.size() == 1);
  CHECK(one.tern(0, 0, 0, 0) == 0);
}

TEST_CASE("valid instances pass all six axioms") {
  CHECK(check_axioms(instances::z5_standard()).all_hold());
  CHECK(check_axioms(standard_family(6, std::vector<std::uint64_t>{1})).all_hold());
  CHECK(check_axioms(singleton_structure(3)).all_hold());
  const auto r = check_axioms(instances::z5_standard());
  const auto& assoc = r[Axiom::Associativity];
  CHECK(assoc.exhaustive);
  CHECK(assoc.instances_checked == 3125 * 4);
}

TEST_CASE("shifted structure fails absorption and symmetry") {
  const auto T = instances::z6z4_shifted();
  const auto r = check_axioms(T);
  CHECK(r[Axiom::AdditiveMonoid].holds);
  // the cγ term is doubled when the first slot is split
  CHECK_FALSE(r[Axiom::Distributivity].holds);
  CHECK_FALSE(r[Axiom::Absorption].holds);
  CHECK_FALSE(r[Axiom::Symmetry].holds);
  for (const auto& v : r.verdicts)
    if (!v.holds) CHECK(witness_reproduces(T, *v.witness));

  // lexicographically least witnesses
  const auto& abs = *r[Axiom::Absorption].witness;
  CHECK(abs.elements == std::vector<std::uint64_t>{0, 1});
  CHECK(abs.modes == std::vector<std::uint64_t>{1});
  CHECK(abs.lhs == 1);
  const auto& sym = *r[Axiom::Symmetry].witness;
  CHECK(sym.law == Law::SwapSecondThird);
  CHECK(sym.elements == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(sym.lhs == 1);
  CHECK(sym.rhs == 0);

  // the hand-derived witnesses also hold
  const Mode one = T.mode_of("1");
  CHECK(T.evaluate_tern(1, 0, 1, one) == 1);
  CHECK(T.evaluate_tern(1, 1, 2, one) == 4);
  CHECK(T.evaluate_tern(2, 1, 1, one) == 3);
}

TEST_CASE("naturals family fails inside a small window") {
  const auto fam = formula_family("pairwise_plus_mode");
  SampleWindow w;
  w.range_bound = 5;
  w.gammas = {0, 1, 2, 3, 4, 5};
  const auto r = check_axioms_sampled(fam, w);
  CHECK_FALSE(r[Axiom::Absorption].holds);
  CHECK_FALSE(r[Axiom::Associativity].holds);
  CHECK(r[Axiom::Symmetry].holds);
  CHECK(r[Axiom::AdditiveMonoid].holds);

  // 1·0 + 0·1 + 1·1 + 1
  CHECK(fam.tern(1, 0, 1, 1) == 2);
  CHECK(oracle::pairwise_family(1, 0, 1, 1) == 2);
  // a=b=c=d=0, e=1, γ=1: LHS = δ, RHS = 1 + δ
  for (std::uint64_t delta = 0; delta < 4; ++delta) {
    CHECK(fam.tern(0, 0, fam.tern(0, 0, 1, 1), delta) == delta);
    CHECK(fam.tern(fam.tern(0, 0, 0, 1), 0, 1, delta) == 1 + delta);
  }
  const auto& aw = *r[Axiom::Associativity].witness;
  CHECK(fam.tern(aw.elements[0], aw.elements[1], fam.tern(aw.elements[2], aw.elements[3], aw.elements[4], aw.modes[0]),
                 aw.modes[1]) == aw.lhs);
  CHECK(aw.lhs != aw.rhs);

  SampleWindow zero_mode;
  zero_mode.range_bound = 3;
  zero_mode.gammas = {0};
  const auto r0 = check_axioms_sampled(fam, zero_mode);
  REQUIRE_FALSE(r0[Axiom::Absorption].holds);
  CHECK(fam.tern(1, 0, 1, 0) == 1);
  CHECK(r0[Axiom::Absorption].witness->lhs == oracle::pairwise_family(r0[Axiom::Absorption].witness->elements[0], 0,
                                                                       r0[Axiom::Absorption].witness->elements[1], 0));

  SampleWindow empty;
  empty.range_bound = 0;
  empty.gammas = {1};
  CHECK_THROWS_AS(check_axioms_sampled(fam, empty), InputError);
}

TEST_CASE("sampled scan is used beyond the budget and is seeded") {
  const auto fam = formula_family("product_times_mode");
  SampleWindow w;
  w.range_bound = 9;
  w.gammas = {1, 2, 3};
  w.sample_budget = 1000;
  w.seed = 7;
  const auto a = check_axioms_sampled(fam, w);
  const auto b = check_axioms_sampled(fam, w);
  CHECK(a.all_hold());
  CHECK_FALSE(a[Axiom::Associativity].exhaustive);
  CHECK(a[Axiom::AdditiveMonoid].exhaustive);  // 10^3 triples fit the budget
  CHECK(a[Axiom::Associativity].instances_checked == b[Axiom::Associativity].instances_checked);
}

TEST_CASE("compiled product family agrees with the generator") {
  const auto fam = formula_family("product_times_mode");
  const std::vector<std::uint64_t> g{1, 3};
  CHECK(compile_modular(fam, 7, g) == standard_family(7, g));
  CHECK_THROWS_AS(formula_family("nope"), InputError);
}

TEST_CASE("property: every standard family instance up to 5 passes, symmetric under all permutations") {
  for (std::uint64_t n = 1; n <= 5; ++n)
    for (const auto& g : instances::mode_subsets(n)) {
      const auto T = standard_family(n, g);
      REQUIRE(check_axioms(T).all_hold());
      for (Mode m = 0; m < T.mode_count(); ++m)
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c) {
              std::array<Element, 3> p{a, b, c};
              const Element v = T.tern(a, b, c, m);
              std::sort(p.begin(), p.end());
              do {
                REQUIRE(T.tern(p[0], p[1], p[2], m) == v);
              } while (std::next_permutation(p.begin(), p.end()));
            }
    }
}

TEST_CASE("property: random corruptions yield reproducible witnesses") {
  std::mt19937_64 rng(20240611);
  const auto base = instances::z5_standard();
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<Element>> tables;
    for (Mode g = 0; g < base.mode_count(); ++g) {
      auto t = base.tern_table(g);
      tables.emplace_back(t.begin(), t.end());
    }
    const auto g = static_cast<Mode>(rng() % tables.size());
    const auto i = rng() % tables[g].size();
    tables[g][i] = static_cast<Element>((tables[g][i] + 1 + rng() % 4) % 5);
    const Semiring T(base.additive(), base.labels(), tables);
    const auto r1 = check_axioms(T);
    const auto r2 = check_axioms(T);
    REQUIRE_FALSE(r1.all_hold());
    for (std::size_t k = 0; k < kAxiomCount; ++k) {
      const auto& v = r1.verdicts[k];
      REQUIRE(v.holds == r2.verdicts[k].holds);
      if (v.holds) continue;
      REQUIRE(witness_reproduces(T, *v.witness));
      REQUIRE(v.witness->elements == r2.verdicts[k].witness->elements);
      REQUIRE(v.witness->modes == r2.verdicts[k].witness->modes);
    }
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(AdditiveTable(2, {0, 1, 1}), InputError);
  CHECK_THROWS_AS(AdditiveTable(2, {0, 1, 1, 2}), InputError);
  CHECK_THROWS_AS(Semiring(AdditiveTable::cyclic(2), {"1"}, {{0, 0, 0}}), InputError);
  CHECK_THROWS_AS(Semiring(AdditiveTable::cyclic(2), {"1", "1"}, {std::vector<Element>(8), std::vector<Element>(8)}),
                  InputError);
  const AdditiveTable bad(2, {0, 1, 0, 0});  // 1+0 = 0, not a monoid
  CHECK(bad.first_monoid_violation().has_value());
}
