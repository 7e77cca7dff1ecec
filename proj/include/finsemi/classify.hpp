#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "finsemi/semimodule.hpp"

namespace finsemi {

/// Witness that a weakly 1-absorbing prime subsemimodule fails to be
/// 1-absorbing prime: nonunits a, b and module element m with abm = 0,
/// ab outside (N :_S M), m outside N.
struct TripleZero {
  Elem a;
  Elem b;
  Elem m;
  friend auto operator<=>(const TripleZero&, const TripleZero&) = default;
};

/// am in N forces a in (N :_S M) or m in N, over all scalars a.
inline PredicateResult is_prime_subsemimodule(const SubsemSet& sub) {
  if (!sub.proper())
    throw NotProper("is_prime_subsemimodule: subsemimodule is all of '" +
                    sub.parent()->name() + "'");
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  const IdealSet colon = colon_ideal(sub);
  for (Elem a = 0; a < s.size(); ++a) {
    if (colon.contains(a)) continue;
    for (Elem x = 0; x < m.size(); ++x)
      if (sub.contains(m.act(a, x)) && !sub.contains(x)) return {false, {a, x}};
  }
  return {};
}

/// abm in N forces ab in (N :_S M) or m in N, over all nonunits a, b.
inline PredicateResult is_one_absorbing_prime(const SubsemSet& sub) {
  if (!sub.proper())
    throw NotProper("is_one_absorbing_prime: subsemimodule is all of '" +
                    sub.parent()->name() + "'");
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  const IdealSet colon = colon_ideal(sub);
  const std::vector<int> nonunits = s.nonunits().members();
  for (int a : nonunits)
    for (int b : nonunits) {
      Elem ab = s.mul(Elem(a), Elem(b));
      if (colon.contains(ab)) continue;
      for (Elem x = 0; x < m.size(); ++x)
        if (sub.contains(m.act(ab, x)) && !sub.contains(x))
          return {false, {Elem(a), Elem(b), x}};
    }
  return {};
}

/// Same with the hypothesis restricted to abm != 0.
inline PredicateResult is_weakly_one_absorbing_prime(const SubsemSet& sub) {
  if (!sub.proper())
    throw NotProper("is_weakly_one_absorbing_prime: subsemimodule is all of '" +
                    sub.parent()->name() + "'");
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  const IdealSet colon = colon_ideal(sub);
  const std::vector<int> nonunits = s.nonunits().members();
  for (int a : nonunits)
    for (int b : nonunits) {
      Elem ab = s.mul(Elem(a), Elem(b));
      if (colon.contains(ab)) continue;
      for (Elem x = 0; x < m.size(); ++x) {
        Elem abm = m.act(ab, x);
        if (abm != m.zero() && sub.contains(abm) && !sub.contains(x))
          return {false, {Elem(a), Elem(b), x}};
      }
    }
  return {};
}

/// All triple-zeros of N in lexicographic (a, b, m) order. In strict mode the
/// notion is only applied to weakly 1-absorbing prime subsemimodules; lax mode
/// returns the raw solutions of the defining conditions regardless.
inline std::vector<TripleZero> find_triple_zeros(const SubsemSet& sub, bool lax = false) {
  if (!sub.proper())
    throw NotProper("find_triple_zeros: subsemimodule is all of '" + sub.parent()->name() +
                    "'");
  if (!lax) {
    PredicateResult weakly = is_weakly_one_absorbing_prime(sub);
    if (!weakly.holds)
      throw InvalidParam(
          "find_triple_zeros: subsemimodule is not weakly 1-absorbing prime; use lax mode "
          "for raw solutions");
  }
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  const IdealSet colon = colon_ideal(sub);
  const std::vector<int> nonunits = s.nonunits().members();
  std::vector<TripleZero> out;
  for (int a : nonunits)
    for (int b : nonunits) {
      Elem ab = s.mul(Elem(a), Elem(b));
      if (colon.contains(ab)) continue;
      for (Elem x = 0; x < m.size(); ++x)
        if (m.act(ab, x) == m.zero() && !sub.contains(x))
          out.push_back({Elem(a), Elem(b), x});
    }
  return out;
}

/// Everything classify() decides about one subsemimodule. For improper N the
/// three predicates are skipped. triple_zeros is populated exactly when N is
/// weakly 1-absorbing prime, so one_absorbing holds iff weakly holds and the
/// list is empty.
struct ClassificationRecord {
  bool proper = false;
  std::optional<PredicateResult> prime;
  std::optional<PredicateResult> one_absorbing;
  std::optional<PredicateResult> weakly_one_absorbing;
  bool subtractive = false;
  bool strong = false;
  std::vector<TripleZero> triple_zeros;
};

inline ClassificationRecord classify(const SubsemSet& sub) {
  ClassificationRecord rec;
  rec.proper = sub.proper();
  rec.subtractive = is_subtractive(sub);
  rec.strong = is_strong(sub);
  if (!rec.proper) return rec;
  rec.prime = is_prime_subsemimodule(sub);
  rec.one_absorbing = is_one_absorbing_prime(sub);
  rec.weakly_one_absorbing = is_weakly_one_absorbing_prime(sub);
  if (rec.weakly_one_absorbing->holds) rec.triple_zeros = find_triple_zeros(sub);
  return rec;
}

}  // namespace finsemi
