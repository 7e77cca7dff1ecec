#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "finsemi/semiring.hpp"

namespace finsemi {

/// Default bound on lattice enumerations. Enumeration throws CapExceeded
/// instead of silently grinding when a structure has more ideals or
/// subsemimodules than this.
inline constexpr int kDefaultEnumerationCap = 20000;

/// Subset of a semiring that contains zero and is closed under addition and
/// under multiplication by arbitrary semiring elements.
class IdealSet {
 public:
  static IdealSet checked(SemiringPtr parent, ElemSet members) {
    if (members.universe() != parent->size())
      throw InvalidParam("ideal over '" + parent->name() + "': universe mismatch");
    if (!members.contains(parent->zero()))
      throw AxiomViolation("ideal-contains-zero", {},
                           "ideal over '" + parent->name() + "' does not contain zero");
    int wx = -1, wy = -1;
    bool ok = true;
    members.for_each([&](int x) {
      members.for_each([&](int y) {
        if (ok && !members.contains(parent->add(Elem(x), Elem(y)))) {
          ok = false;
          wx = x;
          wy = y;
        }
      });
    });
    if (!ok)
      throw AxiomViolation("ideal-add-closed", {wx, wy},
                           "subset of '" + parent->name() + "' is not closed under add at (" +
                               parent->label(wx) + ", " + parent->label(wy) + ')');
    for (Elem s = 0; ok && s < parent->size(); ++s) {
      members.for_each([&](int x) {
        if (ok && !members.contains(parent->mul(s, Elem(x)))) {
          ok = false;
          wx = s;
          wy = x;
        }
      });
    }
    if (!ok)
      throw AxiomViolation("ideal-mul-closed", {wx, wy},
                           "subset of '" + parent->name() +
                               "' is not closed under scalar multiplication at (" +
                               parent->label(wx) + ", " + parent->label(wy) + ')');
    return IdealSet(std::move(parent), std::move(members));
  }

  /// Internal fast path for sets produced by closure; skips re-validation.
  static IdealSet trusted(SemiringPtr parent, ElemSet members) {
    return IdealSet(std::move(parent), std::move(members));
  }

  const SemiringPtr& parent() const { return parent_; }
  const ElemSet& members() const { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }
  bool proper() const { return !members_.is_full(); }
  int count() const { return members_.count(); }
  std::string to_string() const { return parent_->set_to_string(members_); }

  friend bool operator==(const IdealSet& a, const IdealSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  IdealSet(SemiringPtr parent, ElemSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  SemiringPtr parent_;
  ElemSet members_;
};

namespace detail {

/// Closure of `seed` under addition and external multiplication; always
/// contains zero. Worklist over newly added elements.
inline ElemSet ideal_closure(const FiniteSemiring& s, ElemSet seed) {
  seed.insert(s.zero());
  std::vector<Elem> work = seed.members();
  ElemSet out = seed;
  auto push = [&](Elem e) {
    if (!out.contains(e)) {
      out.insert(e);
      work.push_back(e);
    }
  };
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    out.for_each([&](int y) { push(s.add(x, Elem(y))); });
    for (Elem t = 0; t < s.size(); ++t) push(s.mul(t, x));
  }
  return out;
}

}  // namespace detail

inline IdealSet ideal_generated(const SemiringPtr& s, const ElemSet& seed) {
  if (seed.universe() != s->size() && !(seed.universe() == 0 && seed.empty()))
    throw InvalidParam("ideal_generated: seed universe mismatch");
  ElemSet start = seed.universe() == s->size() ? seed : ElemSet(s->size());
  return IdealSet::trusted(s, detail::ideal_closure(*s, start));
}

inline IdealSet ideal_generated(const SemiringPtr& s, std::initializer_list<Elem> seed) {
  ElemSet m(s->size());
  for (Elem e : seed) m.insert(e);
  return ideal_generated(s, m);
}

/// All ideals, obtained by closing single generators and joining pairwise to
/// fixpoint; the powerset is never scanned. Result is sorted canonically.
inline std::vector<IdealSet> enumerate_ideals(const SemiringPtr& s,
                                              int cap = kDefaultEnumerationCap) {
  std::vector<ElemSet> found;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  auto add = [&](const ElemSet& m) {
    if (seen.insert(m).second) {
      found.push_back(m);
      if (int(found.size()) > cap)
        throw CapExceeded("enumerate_ideals('" + s->name() + "') exceeded cap " +
                          std::to_string(cap));
      return true;
    }
    return false;
  };
  add(detail::ideal_closure(*s, ElemSet(s->size())));
  for (Elem a = 0; a < s->size(); ++a) {
    ElemSet seed(s->size());
    seed.insert(a);
    add(detail::ideal_closure(*s, seed));
  }
  // Join newly discovered ideals against everything until no joins are new.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElemSet u = found[i] | found[j];
      if (!seen.count(u)) add(detail::ideal_closure(*s, u));
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<IdealSet> out;
  out.reserve(found.size());
  for (auto& m : found) out.push_back(IdealSet::trusted(s, std::move(m)));
  return out;
}

inline IdealSet ideal_product(const IdealSet& lhs, const IdealSet& rhs) {
  if (lhs.parent() != rhs.parent())
    throw ParentMismatch("ideal_product: operands live in different semirings");
  const auto& s = *lhs.parent();
  ElemSet prods(s.size());
  lhs.members().for_each([&](int a) {
    rhs.members().for_each([&](int b) { prods.insert(s.mul(Elem(a), Elem(b))); });
  });
  return IdealSet::trusted(lhs.parent(), detail::ideal_closure(s, prods));
}

/// x in I and x+y in I force y in I.
inline bool is_subtractive_ideal(const IdealSet& ideal) {
  const auto& s = *ideal.parent();
  bool ok = true;
  ideal.members().for_each([&](int x) {
    if (!ok) return;
    for (Elem y = 0; y < s.size(); ++y)
      if (ideal.contains(s.add(Elem(x), y)) && !ideal.contains(y)) {
        ok = false;
        return;
      }
  });
  return ok;
}

/// Maximality via generator extension: proper, and adjoining any outside
/// element generates the whole semiring.
inline bool is_maximal_ideal(const IdealSet& ideal) {
  if (!ideal.proper()) return false;
  const auto& s = *ideal.parent();
  for (Elem a = 0; a < s.size(); ++a) {
    if (ideal.contains(a)) continue;
    ElemSet seed = ideal.members();
    seed.insert(a);
    if (!detail::ideal_closure(s, seed).is_full()) return false;
  }
  return true;
}

inline std::vector<IdealSet> maximal_ideals(const SemiringPtr& s,
                                            int cap = kDefaultEnumerationCap) {
  std::vector<IdealSet> out;
  for (const IdealSet& ideal : enumerate_ideals(s, cap))
    if (is_maximal_ideal(ideal)) out.push_back(ideal);
  return out;
}

struct LocalCheck {
  bool local = false;
  std::optional<IdealSet> maximal_ideal;  // the nonunit set, when local
};

/// Locality by the nonunit-sum formulation. Agreement with the
/// unique-maximal-ideal formulation is a tested invariant, not an assumption.
inline LocalCheck is_local(const SemiringPtr& s) {
  LocalCheck r;
  r.local = s->local();
  if (r.local) r.maximal_ideal = IdealSet::checked(s, s->nonunits());
  return r;
}

/// Outcome of a single predicate check: holds, or fails with the
/// lexicographically first witness tuple.
struct PredicateResult {
  bool holds = true;
  std::vector<Elem> witness;  // empty iff holds
};

struct IdealClassification {
  PredicateResult prime;
  PredicateResult one_absorbing;
  PredicateResult weakly_one_absorbing;
};

/// The three ideal-level predicates, each decided by direct scan with
/// lexicographic first-witness reporting.
inline IdealClassification classify_ideal(const IdealSet& ideal) {
  if (!ideal.proper())
    throw NotProper("classify_ideal: ideal is the whole semiring '" +
                    ideal.parent()->name() + "'");
  const auto& s = *ideal.parent();
  IdealClassification out;

  for (Elem a = 0; a < s.size() && out.prime.holds; ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (ideal.contains(s.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b)) {
        out.prime = {false, {a, b}};
        break;
      }

  const std::vector<int> nonunits = s.nonunits().members();
  for (int a : nonunits) {
    if (!out.one_absorbing.holds) break;
    for (int b : nonunits) {
      if (!out.one_absorbing.holds) break;
      Elem ab = s.mul(Elem(a), Elem(b));
      if (ideal.contains(ab)) continue;
      for (int c : nonunits) {
        if (ideal.contains(s.mul(ab, Elem(c))) && !ideal.contains(Elem(c))) {
          out.one_absorbing = {false, {Elem(a), Elem(b), Elem(c)}};
          break;
        }
      }
    }
  }

  for (int a : nonunits) {
    if (!out.weakly_one_absorbing.holds) break;
    for (int b : nonunits) {
      if (!out.weakly_one_absorbing.holds) break;
      Elem ab = s.mul(Elem(a), Elem(b));
      if (ideal.contains(ab)) continue;
      for (int c : nonunits) {
        Elem abc = s.mul(ab, Elem(c));
        if (abc != s.zero() && ideal.contains(abc) && !ideal.contains(Elem(c))) {
          out.weakly_one_absorbing = {false, {Elem(a), Elem(b), Elem(c)}};
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace finsemi
