#include <doctest.h>

#include "test_util.hpp"

using namespace finsemi;

TEST_SUITE("semiring") {
  TEST_CASE("element sets behave as sets") {
    ElemSet a = ElemSet::of(100, {0, 3, 70});
    CHECK(a.count() == 3);
    CHECK(a.contains(70));
    CHECK(!a.contains(1));
    CHECK(a.first() == 0);
    a.erase(0);
    CHECK(a.first() == 3);
    ElemSet b = ElemSet::of(100, {3});
    CHECK(b.subset_of(a));
    CHECK((a & b) == b);
    CHECK((a | b) == a);
    CHECK(a.complement().count() == 98);
    CHECK(ElemSet::full(100).is_full());
    CHECK(a.members() == std::vector<int>{3, 70});
  }

  TEST_CASE("canonical set order is by size then smallest difference") {
    ElemSet a = ElemSet::of(8, {0, 3});
    ElemSet b = ElemSet::of(8, {0, 2});
    ElemSet c = ElemSet::of(8, {1});
    CHECK(ElemSet::compare(b, a) < 0);
    CHECK(ElemSet::compare(c, a) < 0);  // smaller set first
    CHECK(ElemSet::compare(a, a) == 0);
  }

  TEST_CASE("zmod and boolean tables validate") {
    CHECK(make_zmod(4)->size() == 4);
    SemiringPtr b = make_boolean();
    CHECK(b->add(1, 1) == 1);
    CHECK(b->mul(1, 1) == 1);
    // raw-table entry point
    SemiringPtr b2 = validate_semiring("B", b->labels(), b->add_table(), b->mul_table(),
                                       b->zero(), b->one());
    CHECK(b2->units() == units(b2));
    CHECK(b2->units() == ElemSet::of(2, {1}));
  }

  TEST_CASE("identity collapse is rejected") {
    CHECK_THROWS_AS(FiniteSemiring::create("bad", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 0),
                    IdentityCollapse);
  }

  TEST_CASE("each broken axiom is reported with a witness") {
    SemiringPtr z4 = make_zmod(4);
    auto tamper = [&](bool in_add, int i, int j, Elem v) {
      std::vector<Elem> add = z4->add_table(), mul = z4->mul_table();
      (in_add ? add : mul)[std::size_t(i) * 4 + j] = v;
      return FiniteSemiring::create("tampered", z4->labels(), add, mul, 0, 1);
    };
    // 1+2 := 0 breaks commutativity first
    CHECK_THROWS_WITH_AS(tamper(true, 1, 2, 0), doctest::Contains("add-commutative"),
                         AxiomViolation);
    // tampering both mirror cells keeps commutativity, breaks associativity
    {
      std::vector<Elem> add = z4->add_table();
      add[1 * 4 + 2] = 0;
      add[2 * 4 + 1] = 0;
      CHECK_THROWS_WITH_AS(FiniteSemiring::create("t", z4->labels(), add, z4->mul_table(), 0, 1),
                           doctest::Contains("add-associative"), AxiomViolation);
    }
    {
      std::vector<Elem> mul = z4->mul_table();
      mul[2 * 4 + 3] = 1;
      mul[3 * 4 + 2] = 1;
      try {
        FiniteSemiring::create("t", z4->labels(), z4->add_table(), mul, 0, 1);
        CHECK(false);
      } catch (const AxiomViolation& e) {
        CHECK(!e.witness.empty());
        CHECK((e.axiom == "mul-associative" || e.axiom == "distributive"));
      }
    }
    CHECK_THROWS_AS(tamper(true, 0, 2, 1), AxiomViolation);  // breaks add identity row
  }

  TEST_CASE("table shape errors are invalid params") {
    CHECK_THROWS_AS(FiniteSemiring::create("bad", {"0", "1"}, {0, 1, 1}, {0, 0, 0, 1}, 0, 1),
                    InvalidParam);
    CHECK_THROWS_AS(FiniteSemiring::create("bad", {"0", "1"}, {0, 1, 1, 7}, {0, 0, 0, 1}, 0, 1),
                    InvalidParam);
  }

  TEST_CASE("units of the catalog semirings") {
    CHECK(make_zmod(4)->units() == ElemSet::of(4, {1, 3}));
    CHECK(make_boolean()->units() == ElemSet::of(2, {1}));

    // N(3,8): brute force over all pairs straight off the tables
    SemiringPtr s = make_ntrunc(3, 8);
    ElemSet expected(s->size());
    for (Elem a = 0; a < s->size(); ++a)
      for (Elem b = 0; b < s->size(); ++b)
        if (s->mul(a, b) == s->one()) expected.insert(a);
    CHECK(expected == ElemSet::of(s->size(), {1}));
    CHECK(s->units() == expected);
  }

  TEST_CASE("units are closed under multiplication and contain one") {
    for (const Instance& inst : testutil::catalog()) {
      const SemiringPtr& s = inst.semiring;
      CHECK(s->units().contains(s->one()));
      s->units().for_each([&](int a) {
        s->units().for_each([&](int b) { CHECK(s->units().contains(s->mul(Elem(a), Elem(b)))); });
      });
    }
  }

  TEST_CASE("locality by nonunit sums") {
    LocalCheck z4 = is_local(make_zmod(4));
    REQUIRE(z4.local);
    CHECK(z4.maximal_ideal->members() == ElemSet::of(4, {0, 2}));

    CHECK(!is_local(make_zmod(6)).local);  // 2+3 is a unit

    SemiringPtr n38 = make_ntrunc(3, 8);
    LocalCheck r = is_local(n38);
    REQUIRE(r.local);
    ElemSet all_but_one = ElemSet::full(n38->size());
    all_but_one.erase(n38->one());
    CHECK(r.maximal_ideal->members() == all_but_one);
  }

  TEST_CASE("locality agrees with unique-maximal-ideal enumeration") {
    for (const Instance& inst : testutil::catalog()) {
      const SemiringPtr& s = inst.semiring;
      std::vector<IdealSet> maxes = maximal_ideals(s);
      CHECK(s->local() == (maxes.size() == 1));
      if (s->local()) {
        REQUIRE(maxes.size() == 1);
        CHECK(maxes[0].members() == s->nonunits());
      }
    }
  }

  TEST_CASE("multiplicatively closed sets validate and close") {
    SemiringPtr z6 = make_zmod(6);
    MultClosedSet t = MultClosedSet::closure(z6, ElemSet::of(6, {2}));
    CHECK(t.members() == ElemSet::of(6, {1, 2, 4}));
    CHECK_THROWS_AS(MultClosedSet::checked(z6, ElemSet::of(6, {2, 4})), AxiomViolation);
    CHECK_THROWS_AS(MultClosedSet::checked(z6, ElemSet::of(6, {1, 2})), AxiomViolation);
  }
}
