#include <doctest.h>

#include "test_util.hpp"

using namespace finsemi;

namespace {

HomTable z4_mod2() {
  SemiringPtr z4 = make_zmod(4);
  return HomTable::checked(module_self(z4), module_zmod_action(z4, 2), {0, 1, 0, 1});
}

}  // namespace

TEST_SUITE("hom") {
  TEST_CASE("reduction mod 2 out of Z4") {
    HomTable f = z4_mod2();
    CHECK(f.surjective());
    CHECK(hom_kernel(f).members() == ElemSet::of(4, {0, 2}));
    CHECK(hom_image(f, SubsemSet::trusted(f.source(), ElemSet::full(4))).members().is_full());
    CHECK(hom_preimage(f, zero_subsemimodule(f.target())).members() == ElemSet::of(4, {0, 2}));
  }

  TEST_CASE("multiplication by 2 as an endomorphism of Z4") {
    SemimodulePtr m = module_self(make_zmod(4));
    HomTable f = HomTable::checked(m, m, {0, 2, 0, 2});
    CHECK(!f.surjective());
    CHECK(f.image_set() == ElemSet::of(4, {0, 2}));
    CHECK(hom_image(f, SubsemSet::trusted(m, ElemSet::full(4))).members() ==
          ElemSet::of(4, {0, 2}));
  }

  TEST_CASE("non-homomorphisms are rejected with a witness") {
    SemimodulePtr m = module_self(make_zmod(4));
    CHECK_THROWS_AS(HomTable::checked(m, m, {1, 2, 3, 0}), NotAHomomorphism);  // 0 -> 1
    try {
      HomTable::checked(m, m, {0, 1, 3, 3});  // additive break
      CHECK(false);
    } catch (const NotAHomomorphism& e) {
      CHECK(!e.witness.empty());
    }
    CHECK_THROWS_AS(HomTable::checked(m, module_self(make_zmod(6)), {0, 1, 2, 3}),
                    ParentMismatch);
    CHECK_THROWS_AS(HomTable::checked(m, m, {0, 1, 2}), InvalidParam);
  }

  TEST_CASE("images and preimages are genuine subsemimodules") {
    for (const Instance& inst : testutil::catalog())
      for (const NamedHom& nh : inst.homs) {
        for (const SubsemSet& sub : enumerate_subsemimodules(nh.hom.source())) {
          SubsemSet img = hom_image(nh.hom, sub);
          CHECK_NOTHROW(SubsemSet::checked(nh.hom.target(), img.members()));
        }
        for (const SubsemSet& sub : enumerate_subsemimodules(nh.hom.target())) {
          SubsemSet pre = hom_preimage(nh.hom, sub);
          CHECK_NOTHROW(SubsemSet::checked(nh.hom.source(), pre.members()));
        }
      }
  }

  TEST_CASE("colon containments hold for every catalog homomorphism") {
    for (const Instance& inst : testutil::catalog())
      for (const NamedHom& nh : inst.homs) {
        const HomTable& f = nh.hom;
        for (const SubsemSet& n2 : enumerate_subsemimodules(f.target()))
          CHECK(colon_ideal(n2).members().subset_of(
              colon_ideal(hom_preimage(f, n2)).members()));
        if (f.surjective())
          for (const SubsemSet& n1 : enumerate_subsemimodules(f.source()))
            CHECK(colon_ideal(n1).members().subset_of(
                colon_ideal(hom_image(f, n1)).members()));
      }
  }

  TEST_CASE("wrong-parent subsemimodules are rejected") {
    HomTable f = z4_mod2();
    SubsemSet target_sub = zero_subsemimodule(f.target());
    SubsemSet source_sub = zero_subsemimodule(f.source());
    CHECK_THROWS_AS(hom_image(f, target_sub), ParentMismatch);
    CHECK_THROWS_AS(hom_preimage(f, source_sub), ParentMismatch);
  }
}
