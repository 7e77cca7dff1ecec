#include <doctest.h>

#include <set>

#include "test_util.hpp"

using namespace finsemi;

namespace {

Instance bare_instance() {
  SemiringPtr z4 = make_zmod(4);
  return Instance{"bare-z4", z4, module_self(z4), {}, {}, {}, {}};
}

}  // namespace

TEST_SUITE("theorems") {
  TEST_CASE("the registry holds exactly the published ids") {
    const std::vector<std::string> expected = {
        "char-1abs",      "mult-char",          "local-necessity", "nonlocal-prime",
        "colon-corr",     "mc-lift",            "mc-im-equiv",     "mc-colon-corr",
        "hom-colon",      "hom-transfer",       "loc-transfer",    "char-weakly",
        "weakly-mult-char", "weakly-mc-lift",   "weakly-mc-im-equiv", "weakly-colon-corr",
        "weakly-loc-transfer", "cyclic-equiv",  "subtractive-union", "tz-products",
        "tz-square",      "tz-cube-ann",        "tz-ncube",        "icubed-equiv"};
    std::set<std::string> got;
    for (const TheoremEntry& e : theorem_registry()) {
      got.insert(e.id);
      CHECK(std::string(e.statement).size() > 20);
    }
    CHECK(got.size() == 24);
    for (const std::string& id : expected) CHECK(got.count(id) == 1);
  }

  TEST_CASE("unknown theorem ids are rejected") {
    CHECK_THROWS_AS(theorem_entry("no-such-theorem"), UnknownTheorem);
    CHECK_THROWS_AS(verify("no-such-theorem", bare_instance()), UnknownTheorem);
  }

  TEST_CASE("characterizations agree on a focused instance") {
    Instance inst = bare_instance();
    inst.subsemimodules.push_back(
        {"N", subsemimodule_generated(inst.module, {2})});
    Verdict v = verify("char-1abs", inst);
    CHECK(v.status == Status::Pass);
  }

  TEST_CASE("local necessity passes vacuously-satisfied hypotheses as PASS") {
    SemiringPtr z6 = make_zmod(6);
    Instance inst{"z6", z6, module_self(z6), {}, {}, {}, {}};
    Verdict v = verify("local-necessity", inst);
    CHECK(v.status == Status::Pass);
    bool noted = false;
    for (const auto& [k, val] : v.hypotheses)
      noted = noted || (k == "one-absorbing-not-prime-witness" && val == "none");
    CHECK(noted);
  }

  TEST_CASE("structural hypotheses produce VACUOUS verdicts") {
    Instance z4 = bare_instance();
    CHECK(verify("mc-im-equiv", z4).status == Status::Vacuous);   // Z4 is not MC
    CHECK(verify("nonlocal-prime", z4).status == Status::Vacuous);  // Z4 is local
    SemiringPtr z6 = make_zmod(6);
    Instance i6{"z6", z6, module_self(z6), {}, {}, {}, {}};
    CHECK(verify("nonlocal-prime", i6).status == Status::Pass);
    CHECK(verify("tz-products", i6).status == Status::Vacuous);  // Z6 is not local
  }

  TEST_CASE("triple-zero consequences pass where the paper example lives") {
    const Instance& inst = testutil::instance("z20-over-n320");
    InstanceAnalysis a = analyze(inst);
    for (const char* id : {"tz-products", "tz-square", "tz-cube-ann", "tz-ncube"}) {
      Verdict v = verify(id, a);
      CHECK(v.status == Status::Pass);
    }
    // and the focused variant on N = {0}
    Instance focused = inst;
    focused.subsemimodules.push_back({"N", zero_subsemimodule(inst.module)});
    CHECK(verify("tz-ncube", focused).status == Status::Pass);
  }

  TEST_CASE("missing parts raise MissingInstancePart") {
    Instance inst = bare_instance();
    CHECK_THROWS_AS(verify("hom-colon", inst), MissingInstancePart);
    CHECK_THROWS_AS(verify("hom-transfer", inst), MissingInstancePart);
    CHECK_THROWS_AS(verify("loc-transfer", inst), MissingInstancePart);
    CHECK_THROWS_AS(verify("weakly-loc-transfer", inst), MissingInstancePart);
  }

  TEST_CASE("mc ids pass on the boolean and prime-field instances") {
    for (const char* name : {"b-self", "z2-self", "z3-self"}) {
      InstanceAnalysis a = analyze(testutil::instance(name));
      for (const char* id : {"mc-lift", "mc-im-equiv", "weakly-mc-lift", "weakly-mc-im-equiv",
                             "icubed-equiv", "mc-colon-corr", "weakly-colon-corr"}) {
        Verdict v = verify(id, a);
        CHECK(v.status == Status::Pass);
      }
    }
  }

  TEST_CASE("sweeping an empty catalog yields an empty report") {
    SweepReport r = sweep({});
    CHECK(r.cells.empty());
    CHECK(r.pass + r.fail + r.vacuous + r.errors == 0);
  }

  TEST_CASE("per-cell errors are recorded, not thrown") {
    SweepOptions opt;
    opt.analysis.cap = 2;  // far below every lattice size
    SweepReport r = sweep({bare_instance()}, opt);
    CHECK(r.errors == int(r.cells.size()));
    for (const SweepCell& cell : r.cells) CHECK(!cell.error.empty());
  }

  TEST_CASE("sweep reports are deterministic across thread counts") {
    std::vector<Instance> cat;
    for (const char* name : {"z4-self", "z6-self", "b-self", "z8-over-n38"})
      cat.push_back(testutil::instance(name));
    SweepOptions seq;
    seq.threads = 1;
    SweepOptions par;
    par.threads = 4;
    SweepReport a = sweep(cat, seq);
    SweepReport b = sweep(cat, par);
    REQUIRE(a.cells.size() == b.cells.size());
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
      CHECK(a.cells[i].instance == b.cells[i].instance);
      CHECK(a.cells[i].theorem == b.cells[i].theorem);
      CHECK(a.cells[i].verdict.status == b.cells[i].verdict.status);
      CHECK(a.cells[i].verdict.witness == b.cells[i].verdict.witness);
    }
    CHECK(a.fail == 0);
  }

  TEST_CASE("mc-restricted sweeps pass exactly on the cancellative instances") {
    SweepOptions opt;
    opt.ids = {"mc-lift", "mc-im-equiv", "weakly-mc-lift", "weakly-mc-im-equiv"};
    SweepReport r = sweep(testutil::catalog(), opt);
    CHECK(r.fail == 0);
    CHECK(r.errors == 0);
    for (const SweepCell& cell : r.cells) {
      bool cancellative = cell.instance == "b-self" || cell.instance == "z2-self" ||
                          cell.instance == "z3-self";
      CHECK(cell.verdict.status == (cancellative ? Status::Pass : Status::Vacuous));
    }
  }

  TEST_CASE("sweeping a subset of ids honors the selection") {
    SweepOptions opt;
    opt.ids = {"char-1abs", "subtractive-union"};
    SweepReport r = sweep({bare_instance()}, opt);
    REQUIRE(r.cells.size() == 2);
    CHECK(r.cells[0].theorem == "char-1abs");
    CHECK(r.cells[1].theorem == "subtractive-union");
    CHECK(r.pass == 2);

    opt.ids = {"bogus"};
    CHECK_THROWS_AS(sweep({bare_instance()}, opt), UnknownTheorem);
  }

  TEST_CASE("the registry holds on random table-generated semirings") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> dist(2, 6);
    std::vector<Instance> cat;
    for (int i = 0; i < 60;) {
      SemiringPtr s = random_semiring(rng, dist(rng));
      if (!s) continue;
      ++i;
      Instance inst{"r" + std::to_string(i), s, module_self(s), {}, {}, {}, {}};
      detail::attach_default_parts(inst);
      cat.push_back(std::move(inst));
    }
    SweepReport rep = sweep(cat);
    CHECK(rep.fail == 0);
    CHECK(rep.errors == 0);
    CHECK(rep.pass > 0);
  }

  TEST_CASE("verdict plumbing keeps witnesses attached to failures") {
    Verdict v = hdetail::fail({{"N", "{0}"}}, {{"local", "true"}});
    CHECK(v.status == Status::Fail);
    CHECK(v.witness.size() == 1);
    CHECK(std::string(to_string(v.status)) == "FAIL");
    CHECK(std::string(to_string(Status::Vacuous)) == "VACUOUS");
  }

  TEST_CASE("named improper subsemimodules fall out of the quantifier range") {
    Instance inst = bare_instance();
    inst.subsemimodules.push_back(
        {"M", SubsemSet::trusted(inst.module, ElemSet::full(inst.module->size()))});
    InstanceAnalysis a = analyze(inst);
    CHECK(a.focus_subs == a.proper_subs);  // nothing proper named, fall back to the lattice
  }
}
