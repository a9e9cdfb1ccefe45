#include <numeric>

#include "doctest.h"
#include "gammalab/errors.hpp"
#include "gammalab/sheaf.hpp"
#include "instances.hpp"

using namespace gammalab;

namespace {

std::vector<Element> iota(std::size_t n) {
  std::vector<Element> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("tilde on the Z5 family with one mode") {
  const auto T = instances::shared(instances::z5_gamma1());
  const BasisPresheaf p(T, regular_module(T));
  CHECK(p.defects().empty());
  CHECK(p.node_of(0) == 0);
  CHECK(p.section_size(0) == 1);
  for (Element a = 1; a < 5; ++a) {
    CHECK(p.section_size(p.node_of(a)) == 5);
    for (Element b = 1; b < 5; ++b) {
      const auto& r = p.restriction(p.node_of(a), p.node_of(b));
      REQUIRE(r.ok());
      auto sorted = r.map;
      std::sort(sorted.begin(), sorted.end());
      CHECK(sorted == iota(5));
    }
  }
  const auto laws = check_presheaf_laws(p);
  CHECK(laws.holds());
  CHECK(laws.triangles_checked > 0);

  const auto gs = global_sections(p);
  CHECK(gs.cover == std::vector<Element>{1});
  CHECK(gs.isomorphic);
  CHECK(gs.families.size() == 5);
  for (const auto& cover : minimal_covers(p.spectrum())) CHECK(global_sections(p, cover).isomorphic);

  const auto glue = check_gluing(p, {1});
  CHECK(glue.holds);
  CHECK(glue.families_checked == 5);
  CHECK(check_gluing(p, {2, 3}).holds);
}

TEST_CASE("tilde of the zero module") {
  const auto T = instances::shared(instances::z5_gamma1());
  const BasisPresheaf p(T, zero_module(T));
  for (const auto& n : p.nodes()) CHECK(p.section_size(&n - p.nodes().data()) == 1);
  for (const auto& [key, r] : p.restrictions()) CHECK(r.map == std::vector<Element>{0});
  const auto gs = global_sections(p);
  CHECK(gs.isomorphic);
  CHECK(gs.families.size() == 1);
}

TEST_CASE("tilde on the Z6 standard family") {
  const auto T = instances::shared(instances::z6_standard());
  const auto reg = regular_module(T);
  const BasisPresheaf p(T, reg);
  CHECK(p.spectrum().primes.size() == 2);
  CHECK(p.defects().empty());
  CHECK(check_presheaf_laws(p).holds());
  CHECK(p.section_size(p.node_of(2)) == 3);
  CHECK(p.section_size(p.node_of(3)) == 2);

  const auto one = global_sections(p, {1});
  const auto two = global_sections(p, {2, 3});
  CHECK(one.isomorphic);
  CHECK(two.isomorphic);
  CHECK(two.families.size() == 6);
  CHECK(order_profile(one.additive) == order_profile(two.additive));
  CHECK(check_gluing(p, {2, 3}).holds);
  CHECK(check_gluing(p, {2, 3}).target == "1");
  CHECK(check_gluing(p, {2, 4}).holds);
  CHECK_THROWS_AS(global_sections(p, {2}), PreconditionError);
}

TEST_CASE("full faithfulness") {
  const auto T = instances::shared(instances::z5_gamma1());
  const auto reg = regular_module(T);
  const auto z2 = zero_action_module(T, AdditiveTable::cyclic(2));

  const auto rr = check_full_faithfulness(T, reg, reg);
  CHECK(rr.hom_count == 5);
  CHECK(rr.family_count == 5);
  CHECK(rr.holds());

  const auto r0 = check_full_faithfulness(T, reg, zero_module(T));
  CHECK(r0.hom_count == 1);
  CHECK(r0.family_count == 1);
  CHECK(r0.holds());

  const auto r2 = check_full_faithfulness(T, reg, z2);
  CHECK(r2.hom_count == 1);
  CHECK(r2.family_count == 1);
  CHECK(r2.holds());

  const auto rs = check_full_faithfulness(T, direct_sum(reg, reg), reg);
  CHECK(rs.hom_count == 25);
  CHECK(rs.holds());

  // Zero-action modules have vanishing tilde, so their endomorphisms are lost.
  const auto zz = check_full_faithfulness(T, z2, z2);
  CHECK(zz.hom_count == 2);
  CHECK(zz.family_count == 1);
  CHECK_FALSE(zz.holds());
  CHECK_FALSE(global_sections(BasisPresheaf(T, z2)).isomorphic);
}
