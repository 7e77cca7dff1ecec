#include <doctest.h>

#include "test_util.hpp"

using namespace finsemi;

TEST_SUITE("constructions") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_zmod(1), InvalidParam);
    CHECK_THROWS_AS(make_zmod(0), InvalidParam);
    CHECK_THROWS_AS(make_ntrunc(0, 5), InvalidParam);
    CHECK_THROWS_AS(make_ntrunc(3, 0), InvalidParam);
    CHECK_THROWS_AS(module_zmod_action(make_boolean(), 0), InvalidParam);
  }

  TEST_CASE("truncated naturals have the declared shape") {
    SemiringPtr s = make_ntrunc(3, 8);
    CHECK(s->size() == 11);
    CHECK(s->add(10, 1) == 3);  // 11 wraps to 3
    CHECK(s->mul(2, 8) == 8);   // 16 wraps to 8
    CHECK(s->mul(5, 4) == 4);   // 20 wraps to 3 + (17 mod 8) = 4
  }

  TEST_CASE("truncation agrees with direct normalization") {
    for (auto [r, d] : {std::pair{2, 3}, std::pair{3, 8}, std::pair{3, 20}, std::pair{1, 1}}) {
      SemiringPtr s = make_ntrunc(r, d);
      auto norm = [&](long long k) { return k < r ? Elem(k) : Elem(r + int((k - r) % d)); };
      for (int i = 0; i < s->size(); ++i)
        for (int j = 0; j < s->size(); ++j) {
          CHECK(s->add(i, j) == norm(i + j));
          CHECK(s->mul(i, j) == norm(1LL * i * j));
        }
    }
    CHECK(make_ntrunc(1, 1)->size() == 2);  // the boolean shape
  }

  TEST_CASE("product of Z2 and Z3 is Z6 under the CRT relabeling") {
    SemiringPtr p = make_product(make_zmod(2), make_zmod(3));
    SemiringPtr z6 = make_zmod(6);
    REQUIRE(p->size() == 6);
    // x in Z6 corresponds to (x mod 2, x mod 3), laid out as i*3+j
    auto phi = [&](Elem x) { return Elem((x % 2) * 3 + (x % 3)); };
    for (Elem x = 0; x < 6; ++x)
      for (Elem y = 0; y < 6; ++y) {
        CHECK(phi(z6->add(x, y)) == p->add(phi(x), phi(y)));
        CHECK(phi(z6->mul(x, y)) == p->mul(phi(x), phi(y)));
      }
    CHECK(phi(z6->zero()) == p->zero());
    CHECK(phi(z6->one()) == p->one());
  }

  TEST_CASE("module constructions validate") {
    CHECK(module_zmod_action(make_ntrunc(3, 20), 20)->size() == 20);
    SemiringPtr b = make_boolean();
    SemimodulePtr bb = module_product(module_self(b), module_self(b));
    CHECK(bb->size() == 4);
    CHECK_THROWS_AS(module_zmod_action(make_ntrunc(3, 8), 5), AxiomViolation);
    // scalars are compared by identity: two structurally equal semirings from
    // separate builds do not share modules
    CHECK_THROWS_AS(module_product(module_self(b), module_self(make_boolean())),
                    ParentMismatch);
  }

  TEST_CASE("product modules act componentwise") {
    SemiringPtr b = make_boolean();
    SemimodulePtr bb = module_product(module_self(b), module_self(b));
    // index (i, j) = i*2 + j
    CHECK(bb->add(1, 2) == 3);   // (0,1) + (1,0) = (1,1)
    CHECK(bb->act(1, 2) == 2);   // 1 * (1,0) = (1,0)
    CHECK(bb->act(0, 3) == 0);
    CHECK(bb->label(2) == "(1,0)");
  }

  TEST_CASE("the zero module is a valid semimodule") {
    SemimodulePtr z = module_zero(make_ntrunc(2, 3));
    CHECK(z->size() == 1);
    CHECK(annihilator(z).members().is_full());
  }

  TEST_CASE("every default catalog structure revalidates from raw tables") {
    for (const Instance& inst : testutil::catalog()) {
      const SemiringPtr& s = inst.semiring;
      CHECK_NOTHROW(FiniteSemiring::create(s->name(), s->labels(), s->add_table(),
                                           s->mul_table(), s->zero(), s->one()));
      const SemimodulePtr& m = inst.module;
      CHECK_NOTHROW(FiniteSemimodule::create(m->name(), s, m->labels(), m->add_table(),
                                             m->zero(), m->action_table()));
    }
  }
}
