#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace finsemi;

TEST_SUITE("search") {
  TEST_CASE("the separating examples are found smallest-first") {
    SearchResult weakly = search_counterexample("weakly-not-1abs", testutil::catalog());
    REQUIRE(weakly.found);
    CHECK(weakly.hit->instance.name == "bxb-self");
    CHECK(weakly.hit->subsemimodule == "{(0,0)}");

    SearchResult oa = search_counterexample("1abs-not-prime", testutil::catalog());
    REQUIRE(oa.found);
    CHECK(oa.hit->instance.name == "z4-self");
    CHECK(oa.hit->subsemimodule == "{0}");
  }

  TEST_CASE("impossible relations come back empty") {
    CHECK(!search_counterexample("prime-not-1abs", testutil::catalog()).found);
    CHECK(!search_counterexample("1abs-not-prime-nonlocal", testutil::catalog()).found);
  }

  TEST_CASE("the colon-converse separation needs the big product module") {
    CHECK(!search_counterexample("colon-converse-fails", testutil::catalog()).found);
    std::vector<Instance> extended = testutil::catalog();
    extended.push_back(ntrunc38_square_instance());
    SearchResult r = search_counterexample("colon-converse-fails", extended);
    REQUIRE(r.found);
    CHECK(r.hit->instance.name == "n38-square");
  }

  TEST_CASE("unknown relations and bad bounds are rejected") {
    CHECK_THROWS_AS(search_counterexample("bogus", testutil::catalog()), InvalidParam);
    SearchOptions opt;
    opt.random_samples = 1;
    opt.random_min_size = 1;
    CHECK_THROWS_AS(search_counterexample("prime-not-1abs", {}, opt), InvalidParam);
  }

  TEST_CASE("carrier bounds prune the scan") {
    SearchOptions opt;
    opt.max_total_carrier = 7;  // excludes both separating instances
    SearchResult r = search_counterexample("weakly-not-1abs", testutil::catalog(), opt);
    CHECK(!r.found);
  }

  TEST_CASE("random semirings validate and vary") {
    std::mt19937_64 rng(7);
    std::set<std::vector<Elem>> seen;
    for (int i = 0; i < 60; ++i) {
      SemiringPtr s = random_semiring(rng, 2 + i % 5);
      REQUIRE(s != nullptr);  // create() already re-validated every axiom
      CHECK(s->size() == 2 + i % 5);
      seen.insert(s->add_table());
    }
    CHECK(seen.size() > 10);  // the sampler does not keep emitting one structure
  }

  TEST_CASE("lattice enumeration agrees with the powerset oracle on random semirings") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> dist(2, 5);
    for (int i = 0; i < 25; ++i) {
      SemiringPtr s = random_semiring(rng, dist(rng));
      REQUIRE(s != nullptr);
      std::vector<ElemSet> expected = testutil::powerset_ideals(s);
      std::vector<IdealSet> got = enumerate_ideals(s);
      REQUIRE(got.size() == expected.size());
      for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].members() == expected[k]);
    }
  }

  TEST_CASE("classification invariants extend to random self-modules") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> dist(2, 6);
    for (int i = 0; i < 40; ++i) {
      SemiringPtr s = random_semiring(rng, dist(rng));
      REQUIRE(s != nullptr);
      SemimodulePtr m = module_self(s);
      for (const SubsemSet& sub : enumerate_subsemimodules(m)) {
        if (!sub.proper()) continue;
        ClassificationRecord rec = classify(sub);
        if (rec.prime->holds) CHECK(rec.one_absorbing->holds);
        if (rec.one_absorbing->holds) CHECK(rec.weakly_one_absorbing->holds);
        CHECK(rec.one_absorbing->holds ==
              (rec.weakly_one_absorbing->holds && rec.triple_zeros.empty()));
        if (!s->local()) CHECK(rec.one_absorbing->holds == rec.prime->holds);
      }
    }
  }

  TEST_CASE("random sampling is reproducible by seed") {
    SearchOptions opt;
    opt.random_samples = 50;
    opt.seed = 424242;
    SearchResult a = search_counterexample("prime-not-1abs", {}, opt);
    SearchResult b = search_counterexample("prime-not-1abs", {}, opt);
    CHECK(a.subsemimodules_examined == b.subsemimodules_examined);
    CHECK(!a.found);
  }

  TEST_CASE("random negative search holds on a small run") {
    SearchOptions opt;
    opt.random_samples = 200;
    opt.seed = 11;
    CHECK(!search_counterexample("prime-not-1abs", {}, opt).found);
    CHECK(!search_counterexample("1abs-not-prime-nonlocal", {}, opt).found);
  }
}
