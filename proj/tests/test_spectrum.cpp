#include "doctest.h"
#include "gammalab/errors.hpp"
#include "gammalab/spectrum.hpp"
#include "instances.hpp"

using namespace gammalab;

namespace {

Subset mask(std::initializer_list<Element> e) { return subset_of(std::vector<Element>(e)); }

}  // namespace

TEST_CASE("ideal examples") {
  const auto z5 = instances::z5_standard();
  const auto z6 = instances::z6_standard();
  CHECK(is_ideal(z5, mask({0})).is_ideal());
  const auto whole = is_ideal(z5, full_subset(5));
  CHECK(whole.absorbing_subset);
  CHECK_FALSE(whole.proper);
  CHECK_FALSE(whole.is_ideal());
  CHECK(is_ideal(z6, mask({0, 2, 4})).is_ideal());

  const auto no_zero = is_ideal(z6, mask({2, 4}));
  REQUIRE(no_zero.witness);
  CHECK(no_zero.witness->law == "contains_zero");
  const auto not_closed = is_ideal(z6, mask({0, 1}));
  REQUIRE(not_closed.witness);
  CHECK(not_closed.witness->law == "add_closed");
}

TEST_CASE("prime examples") {
  const auto z6 = instances::z6_standard();
  CHECK(is_prime(z6, mask({0, 2, 4})).prime);
  CHECK(is_prime(z6, mask({0, 3})).prime);
  const auto zero = is_prime(z6, mask({0}));
  CHECK_FALSE(zero.prime);
  REQUIRE(zero.witness);
  const auto& w = *zero.witness;
  CHECK(z6.tern(w.elements[0], w.elements[1], w.elements[2], w.modes[0]) == 0);
  CHECK(w.elements == std::vector<Element>{1, 2, 3});
  CHECK_THROWS_AS(is_prime(z6, mask({0, 1})), PreconditionError);
  CHECK_THROWS_AS(is_prime(z6, full_subset(6)), PreconditionError);
}

TEST_CASE("spectrum examples") {
  const auto s5 = spec(instances::z5_standard());
  REQUIRE(s5.primes.size() == 1);
  CHECK(s5.primes[0] == mask({0}));
  for (Element a = 1; a < 5; ++a) CHECK(s5.basic_open(a) == s5.everything());

  const auto s6 = spec(instances::z6_standard());
  CHECK(s6.primes == std::vector<Subset>{mask({0, 3}), mask({0, 2, 4})});
  CHECK(is_empty(intersect(s6.basic_open(2), s6.basic_open(3))));
  CHECK(s6.basic_open(instances::z6_standard().tern(2, 3, 3, 0)) == s6.basic_open(0));

  CHECK(spec(singleton_structure()).primes.empty());
  CHECK_THROWS_AS(spec(standard_family(17, std::vector<std::uint64_t>{1})), ResourceError);
  CHECK_NOTHROW(spec(standard_family(17, std::vector<std::uint64_t>{1}), 17));
}

TEST_CASE("basis laws") {
  for (std::uint64_t n = 1; n <= 6; ++n)
    for (const auto& g : instances::mode_subsets(n)) {
      const auto T = standard_family(n, g);
      const auto sp = spec(T);
      const auto r = check_basis_laws(T, sp);
      REQUIRE(r.holds());
      REQUIRE(is_empty(sp.basic_open(0)));
    }
}

TEST_CASE("property: contrapositive of primeness and spec = ideal ∩ prime") {
  for (std::uint64_t n = 2; n <= 7; ++n)
    for (const auto& g : instances::mode_subsets(n)) {
      const auto T = standard_family(n, g);
      const auto sp = spec(T);
      for (Subset P : sp.primes) {
        REQUIRE(is_ideal(T, P).is_ideal());
        for (Element a = 0; a < n; ++a)
          for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
              for (Mode m = 0; m < T.mode_count(); ++m)
                if (!contains(P, a) && !contains(P, b) && !contains(P, c)) REQUIRE_FALSE(contains(P, T.tern(a, b, c, m)));
      }
      std::vector<Subset> expected;
      for (Subset s = 0; s < full_subset(n); ++s) {
        const auto v = is_ideal(T, s);
        if (v.is_ideal() && is_prime(T, s).prime) expected.push_back(s);
      }
      REQUIRE(sp.primes == expected);
    }
}

TEST_CASE("vanishing loci") {
  const auto z6 = instances::z6_standard();
  const auto s6 = spec(z6);
  const auto all = vanishing(z6, s6, mask({0}));
  CHECK(all.points == s6.everything());
  const auto v3 = vanishing(z6, s6, mask({0, 3}));
  CHECK(v3.points == PointSet{true, false});
  CHECK(v3.complement_is_union);
  CHECK(v3.complement_generators == std::vector<Element>{3});

  // Z5 has no nonzero proper ideal; the largest absorbing subset is the carrier.
  const auto z5 = instances::z5_standard();
  const auto s5 = spec(z5);
  const auto none = vanishing(z5, s5, full_subset(5));
  CHECK(is_empty(none.points));
  CHECK(none.complement_is_union);
  CHECK_THROWS_AS(vanishing(z5, s5, mask({0, 1})), PreconditionError);
}
