#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "finsemi/classify.hpp"
#include "finsemi/instance.hpp"
#include "finsemi/localize.hpp"

namespace finsemi {

enum class Status { Pass, Fail, Vacuous };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    default: return "VACUOUS";
  }
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Outcome of one theorem check on one instance. FAIL carries the violating
/// tuple. VACUOUS means a structural hypothesis of the statement (scalars
/// local, module MC or multiplication, a homomorphism or T-set present)
/// failed on the instance as a whole; conditions on quantified objects only
/// narrow the range, and an empty range verifies the statement trivially.
struct Verdict {
  Status status = Status::Pass;
  KeyValues witness;
  KeyValues hypotheses;
};

struct AnalysisOptions {
  int cap = kDefaultEnumerationCap;
};

/// Everything the per-theorem checks share for one instance, computed once.
struct InstanceAnalysis {
  Instance instance;
  SemiringPtr S;
  SemimodulePtr M;
  bool local = false;
  std::vector<int> nonunits;
  std::vector<IdealSet> ideals;
  std::vector<int> proper_ideals;
  std::vector<SubsemSet> lattice;
  std::vector<int> proper_subs;
  std::vector<IdealSet> colon;                 // per lattice entry
  std::vector<ClassificationRecord> record;    // per lattice entry
  bool multiplication = false;
  bool mc = false;
  std::vector<int> product_idx;                // lattice product table, multiplication only
  std::vector<int> ideal_prod_idx;             // ideal-product table (ideal indices)
  std::vector<int> ideal_act_idx;              // lattice index of IM per ideal
  IdealSet ann;
  std::vector<int> focus_subs;                 // outer-quantifier range (lattice indices)
  std::vector<int> focus_ideals;               // outer-quantifier range (ideal indices)
  int cap = kDefaultEnumerationCap;

  InstanceAnalysis(Instance inst, const AnalysisOptions& opt)
      : instance(std::move(inst)),
        S(instance.semiring),
        M(instance.module),
        ann(annihilator(M)),
        cap(opt.cap) {
    local = S->local();
    nonunits = S->nonunits().members();
    ideals = enumerate_ideals(S, opt.cap);
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i].proper()) proper_ideals.push_back(int(i));
    lattice = enumerate_subsemimodules(M, opt.cap);
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].proper()) proper_subs.push_back(int(i));
    colon.reserve(lattice.size());
    record.reserve(lattice.size());
    for (const SubsemSet& sub : lattice) {
      colon.push_back(colon_ideal(sub));
      record.push_back(classify(sub));
    }
    MultiplicationCheck mchk;
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (ideal_action(colon[i], M).members() != lattice[i].members()) {
        mchk = {false, lattice[i]};
        break;
      }
    multiplication = mchk.holds;
    mc = is_mc(M).holds;
    build_ideal_tables();
    if (multiplication) build_product_table();

    // outer quantifiers follow explicitly named parts when present
    for (const NamedSubsem& ns : instance.subsemimodules) {
      if (!ns.set.proper()) continue;
      focus_subs.push_back(lattice_index(ns.set.members()));
    }
    if (focus_subs.empty()) focus_subs = proper_subs;
    for (const NamedIdeal& ni : instance.ideals) {
      if (!ni.set.proper()) continue;
      focus_ideals.push_back(ideal_index(ni.set.members()));
    }
    if (focus_ideals.empty()) focus_ideals = proper_ideals;
  }

  int lattice_index(const ElemSet& mask) const {
    for (std::size_t i = 0; i < lattice.size(); ++i)
      if (lattice[i].members() == mask) return int(i);
    throw MissingInstancePart("named subsemimodule is not in the enumerated lattice");
  }

  int ideal_index(const ElemSet& mask) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i].members() == mask) return int(i);
    throw MissingInstancePart("named ideal is not in the enumerated ideal lattice");
  }

  int product(int i, int j) const { return product_idx[std::size_t(i) * lattice.size() + j]; }
  int ideal_product_of(int i, int j) const {
    return ideal_prod_idx[std::size_t(i) * ideals.size() + j];
  }
  int ideal_action_of(int i) const { return ideal_act_idx[std::size_t(i)]; }

 private:
  void build_ideal_tables() {
    std::unordered_map<ElemSet, int, ElemSetHash> ideal_by_mask;
    for (std::size_t i = 0; i < ideals.size(); ++i)
      ideal_by_mask.emplace(ideals[i].members(), int(i));
    std::unordered_map<ElemSet, int, ElemSetHash> sub_by_mask;
    for (std::size_t i = 0; i < lattice.size(); ++i)
      sub_by_mask.emplace(lattice[i].members(), int(i));
    const std::size_t k = ideals.size();
    ideal_prod_idx.assign(k * k, -1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        int idx = ideal_by_mask.at(ideal_product(ideals[i], ideals[j]).members());
        ideal_prod_idx[i * k + j] = idx;
        ideal_prod_idx[j * k + i] = idx;
      }
    ideal_act_idx.assign(k, -1);
    for (std::size_t i = 0; i < k; ++i)
      ideal_act_idx[i] = sub_by_mask.at(ideal_action(ideals[i], M).members());
  }

  void build_product_table() {
    std::unordered_map<ElemSet, int, ElemSetHash> by_mask;
    for (std::size_t i = 0; i < lattice.size(); ++i) by_mask.emplace(lattice[i].members(), int(i));
    const std::size_t L = lattice.size();
    product_idx.assign(L * L, -1);
    for (std::size_t i = 0; i < L; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        SubsemSet p = ideal_action(ideal_product(colon[i], colon[j]), M);
        int idx = by_mask.at(p.members());
        product_idx[i * L + j] = idx;
        product_idx[j * L + i] = idx;
      }
  }
};

inline InstanceAnalysis analyze(const Instance& inst, const AnalysisOptions& opt = {}) {
  return InstanceAnalysis(inst, opt);
}

namespace hdetail {

// Definition scans used by the harness. They deliberately do not call the
// classify module: the characterization checks compare these against each
// other and against classify's answers, so each route stays independent.

inline bool def_one_absorbing(const FiniteSemimodule& m, const std::vector<int>& nonunits,
                              const ElemSet& nmask, const ElemSet& cmask) {
  const auto& s = *m.scalars();
  for (Elem x = 0; x < m.size(); ++x) {
    if (nmask.contains(x)) continue;
    for (int a : nonunits)
      for (int b : nonunits) {
        Elem ab = s.mul(Elem(a), Elem(b));
        if (!cmask.contains(ab) && nmask.contains(m.act(ab, x))) return false;
      }
  }
  return true;
}

inline bool def_weakly_one_absorbing(const FiniteSemimodule& m, const std::vector<int>& nonunits,
                                     const ElemSet& nmask, const ElemSet& cmask) {
  const auto& s = *m.scalars();
  for (Elem x = 0; x < m.size(); ++x) {
    if (nmask.contains(x)) continue;
    for (int a : nonunits)
      for (int b : nonunits) {
        Elem ab = s.mul(Elem(a), Elem(b));
        if (cmask.contains(ab)) continue;
        Elem abm = m.act(ab, x);
        if (abm != m.zero() && nmask.contains(abm)) return false;
      }
  }
  return true;
}

inline ElemSet residual_mask(const FiniteSemimodule& m, const ElemSet& nmask,
                             const std::vector<Elem>& scalars) {
  ElemSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool in = true;
    for (Elem j : scalars)
      if (!nmask.contains(m.act(j, x))) {
        in = false;
        break;
      }
    if (in) out.insert(x);
  }
  return out;
}

inline Verdict fail(KeyValues witness, KeyValues hypotheses = {}) {
  return {Status::Fail, std::move(witness), std::move(hypotheses)};
}

inline Verdict pass(KeyValues hypotheses = {}) { return {Status::Pass, {}, std::move(hypotheses)}; }

inline Verdict vacuous(KeyValues hypotheses) { return {Status::Vacuous, {}, std::move(hypotheses)}; }

}  // namespace hdetail

// ---------------------------------------------------------------------------
// Individual theorem checks. Each returns PASS iff the statement holds for
// every tuple it quantifies over inside the instance.
// ---------------------------------------------------------------------------

namespace checks {

using hdetail::fail;
using hdetail::pass;
using hdetail::vacuous;

inline Verdict char_1abs(const InstanceAnalysis& a) {
  const auto& m = *a.M;
  const auto& s = *a.S;
  int checked = 0;
  for (int li : a.focus_subs) {
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    const ElemSet& cmask = a.colon[std::size_t(li)].members();
    ++checked;

    bool s1 = hdetail::def_one_absorbing(m, a.nonunits, nmask, cmask);

    bool s2 = true;
    for (int x : a.nonunits) {
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (cmask.contains(ab)) continue;
        if (!hdetail::residual_mask(m, nmask, {ab}).subset_of(nmask)) {
          s2 = false;
          break;
        }
      }
      if (!s2) break;
    }

    bool s3 = true;
    for (int x : a.nonunits) {
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (cmask.contains(ab)) continue;
        ElemSet w = hdetail::residual_mask(m, nmask, {ab});
        for (const SubsemSet& k : a.lattice)
          if (k.members().subset_of(w) && !k.members().subset_of(nmask)) {
            s3 = false;
            break;
          }
        if (!s3) break;
      }
      if (!s3) break;
    }

    bool s4 = true;
    for (int ii : a.proper_ideals) {
      for (int jj : a.proper_ideals) {
        std::vector<Elem> prods;
        ElemSet prodset(s.size());
        a.ideals[std::size_t(ii)].members().for_each([&](int p) {
          a.ideals[std::size_t(jj)].members().for_each([&](int q) {
            Elem v = s.mul(Elem(p), Elem(q));
            if (!prodset.contains(v)) {
              prodset.insert(v);
              prods.push_back(v);
            }
          });
        });
        if (prodset.subset_of(cmask)) continue;
        ElemSet w = hdetail::residual_mask(m, nmask, prods);
        for (const SubsemSet& k : a.lattice)
          if (k.members().subset_of(w) && !k.members().subset_of(nmask)) {
            s4 = false;
            break;
          }
        if (!s4) break;
      }
      if (!s4) break;
    }

    if (!(s1 == s2 && s2 == s3 && s3 == s4))
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"statements", std::string(s1 ? "1" : "0") + (s2 ? "1" : "0") +
                                      (s3 ? "1" : "0") + (s4 ? "1" : "0")}});
  }
  return pass({{"subsemimodules-checked", std::to_string(checked)}});
}

inline Verdict char_weakly(const InstanceAnalysis& a) {
  const auto& m = *a.M;
  const auto& s = *a.S;
  const ElemSet zero_mask = [&] {
    ElemSet z(m.size());
    z.insert(m.zero());
    return z;
  }();
  int checked = 0;
  for (int li : a.focus_subs) {
    if (!a.record[std::size_t(li)].subtractive) continue;
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    const ElemSet& cmask = a.colon[std::size_t(li)].members();
    ++checked;

    bool s1 = hdetail::def_weakly_one_absorbing(m, a.nonunits, nmask, cmask);

    bool s2 = true, s3 = true;
    for (int x : a.nonunits) {
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (cmask.contains(ab)) continue;
        ElemSet res = hdetail::residual_mask(m, nmask, {ab});
        ElemSet zres = hdetail::residual_mask(m, zero_mask, {ab});
        if (s2 && res != (zres | nmask)) s2 = false;
        if (s3 && res != zres && res != nmask) s3 = false;
      }
      if (!s2 && !s3) break;
    }

    bool s4 = true;
    for (int x : a.nonunits) {
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (cmask.contains(ab)) continue;
        ElemSet w = hdetail::residual_mask(m, nmask, {ab});
        ElemSet z = hdetail::residual_mask(m, zero_mask, {ab});
        for (const SubsemSet& k : a.lattice)
          if (k.members().subset_of(w) && !k.members().subset_of(z) &&
              !k.members().subset_of(nmask)) {
            s4 = false;
            break;
          }
        if (!s4) break;
      }
      if (!s4) break;
    }

    auto ideal_clause = [&](bool left_is_element) {
      for (std::size_t ai = 0; ai < (left_is_element ? a.nonunits.size() : a.proper_ideals.size());
           ++ai) {
        for (int jj : a.proper_ideals) {
          std::vector<Elem> prods;
          ElemSet prodset(s.size());
          auto collect = [&](Elem p) {
            a.ideals[std::size_t(jj)].members().for_each([&](int q) {
              Elem v = s.mul(p, Elem(q));
              if (!prodset.contains(v)) {
                prodset.insert(v);
                prods.push_back(v);
              }
            });
          };
          if (left_is_element)
            collect(Elem(a.nonunits[ai]));
          else
            a.ideals[std::size_t(a.proper_ideals[ai])].members().for_each(
                [&](int p) { collect(Elem(p)); });
          if (prodset.subset_of(cmask)) continue;
          ElemSet w = hdetail::residual_mask(m, nmask, prods);
          ElemSet z = hdetail::residual_mask(m, zero_mask, prods);
          for (const SubsemSet& k : a.lattice)
            if (k.members().subset_of(w) && !k.members().subset_of(z) &&
                !k.members().subset_of(nmask))
              return false;
        }
      }
      return true;
    };
    bool s5 = ideal_clause(true);
    bool s6 = ideal_clause(false);

    if (!(s1 == s2 && s2 == s3 && s3 == s4 && s4 == s5 && s5 == s6))
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"statements", std::string(s1 ? "1" : "0") + (s2 ? "1" : "0") +
                                      (s3 ? "1" : "0") + (s4 ? "1" : "0") + (s5 ? "1" : "0") +
                                      (s6 ? "1" : "0")}});
  }
  return pass({{"subtractive-subsemimodules-checked", std::to_string(checked)}});
}

// The product characterizations quantify over decompositions N_i = I_i M
// with I1, I2 proper ideals and I3 arbitrary, products taken through those
// ideals. Quantifying N1, N2 over the whole lattice with colon-ideal products
// is refuted by a finite instance (N = {0} in Z4 over itself, triple
// (2Z4, M, 2Z4)): the decomposition of M itself has no proper ideal.
inline Verdict mult_char(const InstanceAnalysis& a) {
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int checked = 0;
  for (int li : a.focus_subs) {
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    bool lhs = hdetail::def_one_absorbing(*a.M, a.nonunits, nmask,
                                          a.colon[std::size_t(li)].members());
    bool rhs = true;
    for (int i1 : a.proper_ideals) {
      for (int i2 : a.proper_ideals) {
        int p12 = a.ideal_product_of(i1, i2);
        const ElemSet& n12 = a.lattice[std::size_t(a.ideal_action_of(p12))].members();
        for (std::size_t i3 = 0; i3 < a.ideals.size(); ++i3) {
          int p123 = a.ideal_product_of(p12, int(i3));
          const ElemSet& n3 = a.lattice[std::size_t(a.ideal_action_of(int(i3)))].members();
          if (a.lattice[std::size_t(a.ideal_action_of(p123))].members().subset_of(nmask) &&
              !n12.subset_of(nmask) && !n3.subset_of(nmask)) {
            rhs = false;
            break;
          }
        }
        if (!rhs) break;
      }
      if (!rhs) break;
    }
    ++checked;
    if (lhs != rhs)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"definition", lhs ? "true" : "false"},
                   {"product-form", rhs ? "true" : "false"}},
                  {{"multiplication", "true"}});
  }
  return pass({{"multiplication", "true"}, {"subsemimodules-checked", std::to_string(checked)}});
}

inline Verdict weakly_mult_char(const InstanceAnalysis& a) {
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int checked = 0;
  for (int li : a.focus_subs) {
    if (!a.record[std::size_t(li)].subtractive) continue;
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    bool lhs = hdetail::def_weakly_one_absorbing(*a.M, a.nonunits, nmask,
                                                 a.colon[std::size_t(li)].members());
    bool rhs = true;
    for (int i1 : a.proper_ideals) {
      for (int i2 : a.proper_ideals) {
        int p12 = a.ideal_product_of(i1, i2);
        const ElemSet& n12 = a.lattice[std::size_t(a.ideal_action_of(p12))].members();
        for (std::size_t i3 = 0; i3 < a.ideals.size(); ++i3) {
          int p123 = a.ideal_product_of(p12, int(i3));
          const ElemSet& n123 = a.lattice[std::size_t(a.ideal_action_of(p123))].members();
          const ElemSet& n3 = a.lattice[std::size_t(a.ideal_action_of(int(i3)))].members();
          if (n123.count() > 1 && n123.subset_of(nmask) && !n12.subset_of(nmask) &&
              !n3.subset_of(nmask)) {
            rhs = false;
            break;
          }
        }
        if (!rhs) break;
      }
      if (!rhs) break;
    }
    ++checked;
    if (lhs != rhs)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"definition", lhs ? "true" : "false"},
                   {"product-form", rhs ? "true" : "false"}},
                  {{"multiplication", "true"}});
  }
  return pass({{"multiplication", "true"},
               {"subtractive-subsemimodules-checked", std::to_string(checked)}});
}

inline Verdict local_necessity(const InstanceAnalysis& a) {
  for (int li : a.proper_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (r.one_absorbing->holds && !r.prime->holds) {
      if (!a.local)
        return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                     {"local", "false"}});
      return pass({{"one-absorbing-not-prime-witness", a.lattice[std::size_t(li)].to_string()},
                   {"local", "true"}});
    }
  }
  return pass({{"one-absorbing-not-prime-witness", "none"}});
}

inline Verdict nonlocal_prime(const InstanceAnalysis& a) {
  if (a.local) return vacuous({{"local", "true"}});
  for (int li : a.proper_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (r.one_absorbing->holds != r.prime->holds)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"one-absorbing", r.one_absorbing->holds ? "true" : "false"},
                   {"prime", r.prime->holds ? "true" : "false"}},
                  {{"local", "false"}});
  }
  return pass({{"local", "false"},
               {"subsemimodules-checked", std::to_string(a.proper_subs.size())}});
}

inline Verdict colon_corr(const InstanceAnalysis& a) {
  int qualifying = 0;
  for (int li : a.focus_subs) {
    if (!a.record[std::size_t(li)].one_absorbing->holds) continue;
    ++qualifying;
    IdealClassification ic = classify_ideal(a.colon[std::size_t(li)]);
    if (!ic.one_absorbing.holds)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"colon", a.colon[std::size_t(li)].to_string()}});
  }
  return pass({{"one-absorbing-subsemimodules", std::to_string(qualifying)}});
}

inline Verdict mc_lift(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  const auto& s = *a.S;
  const auto& m = *a.M;
  int qualifying = 0;
  for (int ii : a.focus_ideals) {
    const IdealSet& ideal = a.ideals[std::size_t(ii)];
    if (!classify_ideal(ideal).one_absorbing.holds) continue;
    ++qualifying;
    ElemSet im = ideal_action(ideal, a.M).members();
    for (int x : a.nonunits)
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (ideal.contains(ab)) continue;
        for (Elem v = 0; v < m.size(); ++v)
          if (im.contains(m.act(ab, v)) && !im.contains(v))
            return fail({{"I", ideal.to_string()},
                         {"a", s.label(x)},
                         {"b", s.label(y)},
                         {"x", m.label(v)}},
                        {{"mc", "true"}, {"multiplication", "true"}});
      }
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"one-absorbing-ideals", std::to_string(qualifying)}});
}

inline Verdict weakly_mc_lift(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  const auto& s = *a.S;
  const auto& m = *a.M;
  int qualifying = 0;
  for (int ii : a.focus_ideals) {
    const IdealSet& ideal = a.ideals[std::size_t(ii)];
    if (!classify_ideal(ideal).weakly_one_absorbing.holds) continue;
    ++qualifying;
    ElemSet im = ideal_action(ideal, a.M).members();
    for (int x : a.nonunits)
      for (int y : a.nonunits) {
        Elem ab = s.mul(Elem(x), Elem(y));
        if (ideal.contains(ab)) continue;
        for (Elem v = 0; v < m.size(); ++v) {
          Elem abx = m.act(ab, v);
          if (abx != m.zero() && im.contains(abx) && !im.contains(v))
            return fail({{"I", ideal.to_string()},
                         {"a", s.label(x)},
                         {"b", s.label(y)},
                         {"x", m.label(v)}},
                        {{"mc", "true"}, {"multiplication", "true"}});
        }
      }
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"weakly-one-absorbing-ideals", std::to_string(qualifying)}});
}

inline Verdict mc_im_equiv(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int qualifying = 0;
  for (int ii : a.focus_ideals) {
    const IdealSet& ideal = a.ideals[std::size_t(ii)];
    SubsemSet im = ideal_action(ideal, a.M);
    if (!im.proper())
      return fail({{"I", ideal.to_string()}, {"IM", "whole module"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
    ++qualifying;
    bool module_side =
        hdetail::def_one_absorbing(*a.M, a.nonunits, im.members(), colon_ideal(im).members());
    bool ideal_side = classify_ideal(ideal).one_absorbing.holds;
    if (module_side != ideal_side)
      return fail({{"I", ideal.to_string()},
                   {"IM-one-absorbing", module_side ? "true" : "false"},
                   {"I-one-absorbing", ideal_side ? "true" : "false"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"proper-ideals", std::to_string(qualifying)}});
}

inline Verdict weakly_mc_im_equiv(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int qualifying = 0;
  for (int ii : a.focus_ideals) {
    const IdealSet& ideal = a.ideals[std::size_t(ii)];
    SubsemSet im = ideal_action(ideal, a.M);
    if (!im.proper())
      return fail({{"I", ideal.to_string()}, {"IM", "whole module"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
    if (!is_subtractive(im)) continue;
    ++qualifying;
    bool module_side = hdetail::def_weakly_one_absorbing(*a.M, a.nonunits, im.members(),
                                                         colon_ideal(im).members());
    bool ideal_side = classify_ideal(ideal).weakly_one_absorbing.holds;
    if (module_side != ideal_side)
      return fail({{"I", ideal.to_string()},
                   {"IM-weakly", module_side ? "true" : "false"},
                   {"I-weakly", ideal_side ? "true" : "false"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"qualifying-ideals", std::to_string(qualifying)}});
}

inline Verdict mc_colon_corr(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int checked = 0;
  for (int li : a.focus_subs) {
    const auto& r = a.record[std::size_t(li)];
    bool n_side = r.one_absorbing->holds;
    bool colon_side = classify_ideal(a.colon[std::size_t(li)]).one_absorbing.holds;
    bool exists_im = false;
    for (int ii : a.proper_ideals) {
      if (a.ideal_action_of(ii) == li &&
          classify_ideal(a.ideals[std::size_t(ii)]).one_absorbing.holds) {
        exists_im = true;
        break;
      }
    }
    ++checked;
    if (n_side != colon_side || n_side != exists_im)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"N-one-absorbing", n_side ? "true" : "false"},
                   {"colon-one-absorbing", colon_side ? "true" : "false"},
                   {"is-IM-of-one-absorbing-ideal", exists_im ? "true" : "false"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"subsemimodules-checked", std::to_string(checked)}});
}

inline Verdict weakly_colon_corr(const InstanceAnalysis& a) {
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int checked = 0;
  for (int li : a.focus_subs) {
    if (!a.record[std::size_t(li)].subtractive) continue;
    bool n_side = a.record[std::size_t(li)].weakly_one_absorbing->holds;
    bool colon_side = classify_ideal(a.colon[std::size_t(li)]).weakly_one_absorbing.holds;
    bool exists_im = false;
    for (int ii : a.proper_ideals) {
      if (a.ideal_action_of(ii) == li &&
          classify_ideal(a.ideals[std::size_t(ii)]).weakly_one_absorbing.holds) {
        exists_im = true;
        break;
      }
    }
    ++checked;
    if (n_side != colon_side || n_side != exists_im)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"N-weakly", n_side ? "true" : "false"},
                   {"colon-weakly", colon_side ? "true" : "false"},
                   {"is-IM-of-weakly-ideal", exists_im ? "true" : "false"}},
                  {{"mc", "true"}, {"multiplication", "true"}});
  }
  return pass({{"mc", "true"},
               {"multiplication", "true"},
               {"subtractive-subsemimodules-checked", std::to_string(checked)}});
}

inline Verdict hom_colon(const InstanceAnalysis& a) {
  if (a.instance.homs.empty())
    throw MissingInstancePart("hom-colon: instance '" + a.instance.name +
                              "' carries no homomorphism");
  for (const NamedHom& nh : a.instance.homs) {
    const HomTable& f = nh.hom;
    std::vector<SubsemSet> target_lattice =
        f.target() == a.M ? a.lattice : enumerate_subsemimodules(f.target(), a.cap);
    for (const SubsemSet& n2 : target_lattice) {
      IdealSet lhs = colon_ideal(n2);
      IdealSet rhs = colon_ideal(hom_preimage(f, n2));
      if (!lhs.members().subset_of(rhs.members()))
        return fail({{"hom", nh.name},
                     {"N2", n2.to_string()},
                     {"colon-N2", lhs.to_string()},
                     {"colon-preimage", rhs.to_string()}});
    }
    if (f.surjective()) {
      for (const SubsemSet& n1 : a.lattice) {
        IdealSet lhs = colon_ideal(n1);
        IdealSet rhs = colon_ideal(hom_image(f, n1));
        if (!lhs.members().subset_of(rhs.members()))
          return fail({{"hom", nh.name},
                       {"N1", n1.to_string()},
                       {"colon-N1", lhs.to_string()},
                       {"colon-image", rhs.to_string()}});
      }
    }
  }
  return pass({{"homs-checked", std::to_string(a.instance.homs.size())}});
}

inline Verdict hom_transfer(const InstanceAnalysis& a) {
  if (a.instance.homs.empty())
    throw MissingInstancePart("hom-transfer: instance '" + a.instance.name +
                              "' carries no homomorphism");
  int qualifying = 0;
  for (const NamedHom& nh : a.instance.homs) {
    const HomTable& f = nh.hom;
    const auto& m2 = *f.target();
    std::vector<SubsemSet> target_lattice =
        f.target() == a.M ? a.lattice : enumerate_subsemimodules(f.target(), a.cap);

    ElemSet image = f.image_set();
    for (const SubsemSet& n2 : target_lattice) {
      if (!n2.proper()) continue;
      if (image.subset_of(n2.members())) continue;
      if (!hdetail::def_one_absorbing(m2, a.nonunits, n2.members(), colon_ideal(n2).members()))
        continue;
      ++qualifying;
      SubsemSet pre = hom_preimage(f, n2);
      if (!pre.proper())
        return fail({{"hom", nh.name}, {"N2", n2.to_string()}, {"preimage", "whole module"}});
      if (!hdetail::def_one_absorbing(*a.M, a.nonunits, pre.members(),
                                      colon_ideal(pre).members()))
        return fail({{"hom", nh.name},
                     {"N2", n2.to_string()},
                     {"preimage", pre.to_string()}});
    }

    if (f.surjective()) {
      ElemSet kernel = hom_kernel(f).members();
      for (int li : a.proper_subs) {
        const auto& r = a.record[std::size_t(li)];
        if (!r.one_absorbing->holds || !r.subtractive || !r.strong) continue;
        if (!kernel.subset_of(a.lattice[std::size_t(li)].members())) continue;
        ++qualifying;
        SubsemSet img = hom_image(f, a.lattice[std::size_t(li)]);
        if (!img.proper())
          return fail({{"hom", nh.name},
                       {"N1", a.lattice[std::size_t(li)].to_string()},
                       {"image", "whole module"}});
        if (!hdetail::def_one_absorbing(m2, a.nonunits, img.members(),
                                        colon_ideal(img).members()))
          return fail({{"hom", nh.name},
                       {"N1", a.lattice[std::size_t(li)].to_string()},
                       {"image", img.to_string()}});
      }
    }
  }
  return pass({{"qualifying-pairs", std::to_string(qualifying)}});
}

inline Verdict loc_transfer_impl(const InstanceAnalysis& a, bool weakly) {
  if (a.instance.tsets.empty())
    throw MissingInstancePart("localization transfer: instance '" + a.instance.name +
                              "' carries no multiplicatively closed set");
  int qualifying = 0, collapsed = 0;
  for (const NamedTset& nt : a.instance.tsets) {
    Localization loc(a.M, nt.set);
    loc.verify_well_defined();
    if (loc.collapsed()) {
      ++collapsed;
      continue;
    }
    std::vector<int> loc_nonunits = loc.scalars()->nonunits().members();
    for (int li : a.focus_subs) {
      const auto& r = a.record[std::size_t(li)];
      bool holds = weakly ? r.weakly_one_absorbing->holds : r.one_absorbing->holds;
      if (!holds) continue;
      SubsemSet ln = loc.localize_subsemimodule(a.lattice[std::size_t(li)]);
      if (!ln.proper()) continue;
      ++qualifying;
      bool transferred =
          weakly ? hdetail::def_weakly_one_absorbing(*loc.module(), loc_nonunits, ln.members(),
                                                     colon_ideal(ln).members())
                 : hdetail::def_one_absorbing(*loc.module(), loc_nonunits, ln.members(),
                                              colon_ideal(ln).members());
      if (!transferred)
        return fail({{"T", nt.name},
                     {"N", a.lattice[std::size_t(li)].to_string()},
                     {"localized-N", ln.to_string()}});
    }
  }
  return pass({{"qualifying-pairs", std::to_string(qualifying)},
               {"collapsed-tsets", std::to_string(collapsed)}});
}

inline Verdict loc_transfer(const InstanceAnalysis& a) { return loc_transfer_impl(a, false); }
inline Verdict weakly_loc_transfer(const InstanceAnalysis& a) {
  return loc_transfer_impl(a, true);
}

inline Verdict cyclic_equiv(const InstanceAnalysis& a) {
  const auto& m = *a.M;
  int qualifying = 0;
  for (Elem x = 0; x < m.size(); ++x) {
    SubsemSet sx = subsemimodule_generated(a.M, {x});
    if (!sx.proper()) continue;
    IdealSet colon = colon_ideal(sx);
    if (!elem_annihilator(a.M, x).members().subset_of(colon.members())) continue;
    if (!is_subtractive(sx)) continue;
    ++qualifying;
    bool weak = hdetail::def_weakly_one_absorbing(m, a.nonunits, sx.members(), colon.members());
    bool strong = hdetail::def_one_absorbing(m, a.nonunits, sx.members(), colon.members());
    if (weak != strong)
      return fail({{"x", m.label(x)},
                   {"Sx", sx.to_string()},
                   {"weakly", weak ? "true" : "false"},
                   {"one-absorbing", strong ? "true" : "false"}});
  }
  return pass({{"qualifying-elements", std::to_string(qualifying)}});
}

inline Verdict subtractive_union(const InstanceAnalysis& a) {
  const auto& m = *a.M;
  int unions = 0;
  for (std::size_t i = 0; i < a.lattice.size(); ++i) {
    if (!a.record[i].subtractive) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (!a.record[j].subtractive) continue;
      ElemSet u = a.lattice[i].members() | a.lattice[j].members();
      bool closed = true;
      u.for_each([&](int x) {
        if (!closed) return;
        u.for_each([&](int y) {
          if (closed && !u.contains(m.add(Elem(x), Elem(y)))) closed = false;
        });
      });
      if (!closed) continue;
      ++unions;
      if (u != a.lattice[i].members() && u != a.lattice[j].members())
        return fail({{"N1", a.lattice[i].to_string()}, {"N2", a.lattice[j].to_string()}});
    }
  }
  return pass({{"subsemimodule-unions-checked", std::to_string(unions)}});
}

// Shared range for the triple-zero theorems: proper subtractive weakly
// 1-absorbing N over local scalars, together with its triple-zeros.
inline Verdict tz_products(const InstanceAnalysis& a) {
  if (!a.local) return vacuous({{"local", "false"}});
  const auto& m = *a.M;
  const auto& s = *a.S;
  int checked = 0;
  for (int li : a.focus_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (!r.subtractive || !r.weakly_one_absorbing->holds) continue;
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    const ElemSet& cmask = a.colon[std::size_t(li)].members();
    for (const TripleZero& tz : r.triple_zeros) {
      ++checked;
      Elem ab = s.mul(tz.a, tz.b);
      auto all_zero = [&](auto&& gen) {
        bool ok = true;
        gen([&](Elem v) {
          if (v != m.zero()) ok = false;
        });
        return ok;
      };
      bool ok =
          all_zero([&](auto&& f) { nmask.for_each([&](int n) { f(m.act(ab, Elem(n))); }); }) &&
          all_zero([&](auto&& f) {
            cmask.for_each([&](int t) { f(m.act(s.mul(tz.a, Elem(t)), tz.m)); });
          }) &&
          all_zero([&](auto&& f) {
            cmask.for_each([&](int t) { f(m.act(s.mul(tz.b, Elem(t)), tz.m)); });
          }) &&
          all_zero([&](auto&& f) {
            cmask.for_each([&](int t) {
              nmask.for_each([&](int n) { f(m.act(s.mul(tz.a, Elem(t)), Elem(n))); });
            });
          }) &&
          all_zero([&](auto&& f) {
            cmask.for_each([&](int t) {
              nmask.for_each([&](int n) { f(m.act(s.mul(tz.b, Elem(t)), Elem(n))); });
            });
          }) &&
          all_zero([&](auto&& f) {
            cmask.for_each([&](int t) {
              cmask.for_each([&](int u) { f(m.act(s.mul(Elem(t), Elem(u)), tz.m)); });
            });
          });
      if (!ok)
        return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                     {"triple-zero", "(" + s.label(tz.a) + "," + s.label(tz.b) + "," +
                                         m.label(tz.m) + ")"}},
                    {{"local", "true"}});
    }
  }
  return pass({{"local", "true"}, {"triple-zeros-checked", std::to_string(checked)}});
}

inline Verdict tz_square(const InstanceAnalysis& a) {
  if (!a.local) return vacuous({{"local", "false"}});
  const auto& m = *a.M;
  const auto& s = *a.S;
  int qualifying = 0;
  for (int li : a.focus_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (!r.subtractive || !r.weakly_one_absorbing->holds || r.one_absorbing->holds) continue;
    ++qualifying;
    const ElemSet& nmask = a.lattice[std::size_t(li)].members();
    const ElemSet& cmask = a.colon[std::size_t(li)].members();
    bool ok = true;
    cmask.for_each([&](int t) {
      cmask.for_each([&](int u) {
        nmask.for_each([&](int n) {
          if (m.act(s.mul(Elem(t), Elem(u)), Elem(n)) != m.zero()) ok = false;
        });
      });
    });
    if (!ok)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()}}, {{"local", "true"}});
  }
  return pass({{"local", "true"}, {"qualifying-subsemimodules", std::to_string(qualifying)}});
}

inline Verdict tz_cube_ann(const InstanceAnalysis& a) {
  if (!a.local) return vacuous({{"local", "false"}});
  const auto& s = *a.S;
  int qualifying = 0;
  for (int li : a.focus_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (!r.subtractive || !r.weakly_one_absorbing->holds || r.one_absorbing->holds) continue;
    ++qualifying;
    const ElemSet& cmask = a.colon[std::size_t(li)].members();
    bool ok = true;
    cmask.for_each([&](int t) {
      cmask.for_each([&](int u) {
        cmask.for_each([&](int v) {
          if (!a.ann.contains(s.mul(s.mul(Elem(t), Elem(u)), Elem(v)))) ok = false;
        });
      });
    });
    if (!ok)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"colon", a.colon[std::size_t(li)].to_string()},
                   {"annihilator", a.ann.to_string()}},
                  {{"local", "true"}});
  }
  return pass({{"local", "true"}, {"qualifying-subsemimodules", std::to_string(qualifying)}});
}

inline Verdict tz_ncube(const InstanceAnalysis& a) {
  if (!a.local) return vacuous({{"local", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  int qualifying = 0;
  for (int li : a.focus_subs) {
    const auto& r = a.record[std::size_t(li)];
    if (!r.subtractive || !r.weakly_one_absorbing->holds || r.one_absorbing->holds) continue;
    ++qualifying;
    int cube = a.product(a.product(li, li), li);
    if (a.lattice[std::size_t(cube)].count() != 1)
      return fail({{"N", a.lattice[std::size_t(li)].to_string()},
                   {"N-cubed", a.lattice[std::size_t(cube)].to_string()}},
                  {{"local", "true"}, {"multiplication", "true"}});
  }
  return pass({{"local", "true"},
               {"multiplication", "true"},
               {"qualifying-subsemimodules", std::to_string(qualifying)}});
}

inline Verdict icubed_equiv(const InstanceAnalysis& a) {
  if (!a.local) return vacuous({{"local", "false"}});
  if (!a.mc) return vacuous({{"mc", "false"}});
  if (!a.multiplication) return vacuous({{"multiplication", "false"}});
  const auto& s = *a.S;
  int qualifying = 0;
  for (int ii : a.focus_ideals) {
    const IdealSet& ideal = a.ideals[std::size_t(ii)];
    // I^3 != 0
    bool cube_nonzero = false;
    ideal.members().for_each([&](int t) {
      ideal.members().for_each([&](int u) {
        ideal.members().for_each([&](int v) {
          if (s.mul(s.mul(Elem(t), Elem(u)), Elem(v)) != s.zero()) cube_nonzero = true;
        });
      });
    });
    if (!cube_nonzero) continue;
    SubsemSet im = ideal_action(ideal, a.M);
    if (!im.proper())
      return fail({{"I", ideal.to_string()}, {"IM", "whole module"}},
                  {{"local", "true"}, {"mc", "true"}, {"multiplication", "true"}});
    if (!is_subtractive(im)) continue;
    ++qualifying;
    IdealSet im_colon = colon_ideal(im);
    bool s1 = hdetail::def_weakly_one_absorbing(*a.M, a.nonunits, im.members(),
                                                im_colon.members());
    bool s2 = hdetail::def_one_absorbing(*a.M, a.nonunits, im.members(), im_colon.members());
    IdealClassification ic = classify_ideal(ideal);
    bool s3 = ic.one_absorbing.holds;
    bool s4 = ic.weakly_one_absorbing.holds;
    if (!(s1 == s2 && s2 == s3 && s3 == s4))
      return fail({{"I", ideal.to_string()},
                   {"statements", std::string(s1 ? "1" : "0") + (s2 ? "1" : "0") +
                                      (s3 ? "1" : "0") + (s4 ? "1" : "0")}},
                  {{"local", "true"}, {"mc", "true"}, {"multiplication", "true"}});
  }
  return pass({{"local", "true"},
               {"mc", "true"},
               {"multiplication", "true"},
               {"qualifying-ideals", std::to_string(qualifying)}});
}

}  // namespace checks

struct TheoremEntry {
  const char* id;
  const char* statement;
  Verdict (*run)(const InstanceAnalysis&);
};

/// The fixed theorem registry. Ids are part of the external interface and
/// must not change; statements summarize what each check quantifies over.
inline const std::vector<TheoremEntry>& theorem_registry() {
  static const std::vector<TheoremEntry> reg = {
      {"char-1abs",
       "for every proper subsemimodule N the four formulations of 1-absorbing prime agree: "
       "the definition; (N :_M ab) <= N whenever nonunits a,b have ab outside (N :_S M); the "
       "subsemimodule form abK <= N => ab in (N :_S M) or K <= N; and the ideal form IJK <= N "
       "=> IJ <= (N :_S M) or K <= N for proper ideals I,J",
       checks::char_1abs},
      {"mult-char",
       "over a multiplication semimodule, N is 1-absorbing prime iff N1 N2 N3 <= N forces "
       "N1 N2 <= N or N3 <= N, where N1 = I1 M, N2 = I2 M range over proper-ideal "
       "decompositions, N3 = I3 M over all of them, and products are taken through the "
       "decomposition ideals",
       checks::mult_char},
      {"local-necessity",
       "if some proper subsemimodule is 1-absorbing prime but not prime, the scalar semiring "
       "is local",
       checks::local_necessity},
      {"nonlocal-prime",
       "over a non-local semiring, a proper subsemimodule is 1-absorbing prime iff it is prime",
       checks::nonlocal_prime},
      {"colon-corr",
       "if N is a 1-absorbing prime subsemimodule then (N :_S M) is a 1-absorbing prime ideal",
       checks::colon_corr},
      {"mc-lift",
       "over an MC multiplication semimodule with a 1-absorbing prime ideal I: abx in IM "
       "forces ab in I or x in IM for nonunits a,b",
       checks::mc_lift},
      {"mc-im-equiv",
       "over an MC multiplication semimodule and proper ideal I: IM is a 1-absorbing prime "
       "subsemimodule iff I is a 1-absorbing prime ideal",
       checks::mc_im_equiv},
      {"mc-colon-corr",
       "over an MC multiplication semimodule, proper N is 1-absorbing prime iff (N :_S M) is "
       "a 1-absorbing prime ideal, iff N = IM for some 1-absorbing prime ideal I",
       checks::mc_colon_corr},
      {"hom-colon",
       "for a homomorphism f: (N2 :_S M2) <= (f^-1(N2) :_S M1); for surjective f also "
       "(N1 :_S M1) <= (f(N1) :_S M2)",
       checks::hom_colon},
      {"hom-transfer",
       "preimages of 1-absorbing prime subsemimodules with Im(f) not inside N2 are "
       "1-absorbing prime; images under surjections of 1-absorbing prime subtractive strong "
       "N1 containing Ker(f) are 1-absorbing prime",
       checks::hom_transfer},
      {"loc-transfer",
       "if N is 1-absorbing prime and T^-1 N is proper then T^-1 N is 1-absorbing prime in "
       "T^-1 M",
       checks::loc_transfer},
      {"char-weakly",
       "for every proper subtractive N the six formulations of weakly 1-absorbing prime "
       "agree: the definition; (N :_M ab) = (0 :_M ab) union N; (N :_M ab) = (0 :_M ab) or "
       "= N; the subsemimodule form with 0 != abK; the mixed form with 0 != aJK; and the "
       "ideal form with 0 != IJK",
       checks::char_weakly},
      {"weakly-mult-char",
       "over a multiplication semimodule, proper subtractive N is weakly 1-absorbing prime "
       "iff 0 != N1 N2 N3 <= N forces N1 N2 <= N or N3 <= N, with N1, N2 ranging over "
       "proper-ideal decompositions and products taken through the decomposition ideals",
       checks::weakly_mult_char},
      {"weakly-mc-lift",
       "over an MC multiplication semimodule with a weakly 1-absorbing prime ideal I: "
       "0 != abx in IM forces ab in I or x in IM for nonunits a,b",
       checks::weakly_mc_lift},
      {"weakly-mc-im-equiv",
       "over an MC multiplication semimodule and proper ideal I with IM subtractive: IM is "
       "weakly 1-absorbing prime iff I is a weakly 1-absorbing prime ideal",
       checks::weakly_mc_im_equiv},
      {"weakly-colon-corr",
       "over an MC multiplication semimodule, proper subtractive N is weakly 1-absorbing "
       "prime iff (N :_S M) is a weakly 1-absorbing prime ideal, iff N = IM for some weakly "
       "1-absorbing prime ideal I",
       checks::weakly_colon_corr},
      {"weakly-loc-transfer",
       "if N is weakly 1-absorbing prime and T^-1 N is proper then T^-1 N is weakly "
       "1-absorbing prime in T^-1 M",
       checks::weakly_loc_transfer},
      {"cyclic-equiv",
       "if (0 :_S x) <= (Sx :_S M) and Sx is proper and subtractive, then Sx is weakly "
       "1-absorbing prime iff it is 1-absorbing prime",
       checks::cyclic_equiv},
      {"subtractive-union",
       "if the union of two subtractive subsemimodules is a subsemimodule, it equals one of "
       "them",
       checks::subtractive_union},
      {"tz-products",
       "over local scalars, each triple-zero (a,b,m) of a weakly 1-absorbing prime "
       "subtractive N satisfies abN = a(N :_S M)m = b(N :_S M)m = a(N :_S M)N = "
       "b(N :_S M)N = (N :_S M)^2 m = 0",
       checks::tz_products},
      {"tz-square",
       "over local scalars, weakly 1-absorbing prime subtractive N that is not 1-absorbing "
       "prime satisfies (N :_S M)^2 N = 0",
       checks::tz_square},
      {"tz-cube-ann",
       "over local scalars, weakly 1-absorbing prime subtractive N that is not 1-absorbing "
       "prime satisfies (N :_S M)^3 <= Ann(M)",
       checks::tz_cube_ann},
      {"tz-ncube",
       "over local scalars and a multiplication semimodule, weakly 1-absorbing prime "
       "subtractive N that is not 1-absorbing prime satisfies N^3 = 0",
       checks::tz_ncube},
      {"icubed-equiv",
       "over a local semiring and MC multiplication semimodule, for proper I with I^3 != 0 "
       "and IM subtractive these agree: IM weakly 1-absorbing prime; IM 1-absorbing prime; "
       "I 1-absorbing prime; I weakly 1-absorbing prime",
       checks::icubed_equiv},
  };
  return reg;
}

inline const TheoremEntry& theorem_entry(const std::string& id) {
  for (const TheoremEntry& e : theorem_registry())
    if (id == e.id) return e;
  throw UnknownTheorem("unknown theorem id '" + id + "'");
}

inline Verdict verify(const std::string& id, const InstanceAnalysis& analysis) {
  return theorem_entry(id).run(analysis);
}

inline Verdict verify(const std::string& id, const Instance& inst,
                      const AnalysisOptions& opt = {}) {
  const TheoremEntry& entry = theorem_entry(id);  // reject unknown ids before analyzing
  InstanceAnalysis analysis(inst, opt);
  return entry.run(analysis);
}

// ---------------------------------------------------------------------------
// Catalog sweeps.
// ---------------------------------------------------------------------------

struct SweepOptions {
  std::vector<std::string> ids;  // empty means every registry id
  int threads = 0;               // 0 means hardware concurrency
  AnalysisOptions analysis;
};

struct SweepCell {
  std::string instance;
  std::string theorem;
  Verdict verdict;
  std::string error;  // nonempty when the check threw
};

struct SweepReport {
  std::vector<SweepCell> cells;
  int pass = 0, fail = 0, vacuous = 0, errors = 0;
};

/// Runs every requested theorem on every instance. Instances are processed
/// in parallel; the cell matrix is preallocated so the report ordering is
/// independent of scheduling. Per-cell exceptions are recorded, never thrown.
inline SweepReport sweep(const std::vector<Instance>& catalog, const SweepOptions& opt = {}) {
  std::vector<std::string> ids = opt.ids;
  if (ids.empty())
    for (const TheoremEntry& e : theorem_registry()) ids.push_back(e.id);
  for (const std::string& id : ids) theorem_entry(id);  // validate up front

  SweepReport report;
  report.cells.resize(catalog.size() * ids.size());

  unsigned threads = opt.threads > 0 ? unsigned(opt.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(catalog.size(), 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t ci = next.fetch_add(1);
      if (ci >= catalog.size()) return;
      const Instance& inst = catalog[ci];
      std::optional<InstanceAnalysis> analysis;
      std::string analysis_error;
      try {
        analysis.emplace(inst, opt.analysis);
      } catch (const Error& e) {
        analysis_error = e.what();
      }
      for (std::size_t ti = 0; ti < ids.size(); ++ti) {
        SweepCell& cell = report.cells[ci * ids.size() + ti];
        cell.instance = inst.name;
        cell.theorem = ids[ti];
        if (!analysis_error.empty()) {
          cell.error = analysis_error;
          continue;
        }
        try {
          cell.verdict = verify(ids[ti], *analysis);
        } catch (const Error& e) {
          cell.error = e.what();
        }
      }
    }
  };

  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  for (const SweepCell& cell : report.cells) {
    if (!cell.error.empty())
      ++report.errors;
    else if (cell.verdict.status == Status::Pass)
      ++report.pass;
    else if (cell.verdict.status == Status::Fail)
      ++report.fail;
    else
      ++report.vacuous;
  }
  return report;
}

}  // namespace finsemi
