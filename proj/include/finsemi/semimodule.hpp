#pragma once

#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "finsemi/ideal.hpp"
#include "finsemi/semiring.hpp"

namespace finsemi {

class FiniteSemimodule;
using SemimodulePtr = std::shared_ptr<const FiniteSemimodule>;

/// Finite commutative additive monoid with a validated left action of a
/// FiniteSemiring. The action table is row-major (scalar x element).
class FiniteSemimodule {
 public:
  static SemimodulePtr create(std::string name, SemiringPtr scalars,
                              std::vector<std::string> labels, std::vector<Elem> add,
                              Elem zero, std::vector<Elem> action) {
    const int n = int(labels.size());
    const int ns = scalars->size();
    if (n < 1) throw InvalidParam("semimodule '" + name + "': carrier is empty");
    if (add.size() != std::size_t(n) * n)
      throw InvalidParam("semimodule '" + name + "': add table must be " + std::to_string(n) +
                         "x" + std::to_string(n));
    if (action.size() != std::size_t(ns) * n)
      throw InvalidParam("semimodule '" + name + "': action table must be " +
                         std::to_string(ns) + "x" + std::to_string(n));
    for (Elem v : add)
      if (v < 0 || v >= n) throw InvalidParam("semimodule '" + name + "': add entry out of range");
    for (Elem v : action)
      if (v < 0 || v >= n)
        throw InvalidParam("semimodule '" + name + "': action entry out of range");
    if (zero < 0 || zero >= n)
      throw InvalidParam("semimodule '" + name + "': zero out of range");

    SemimodulePtr m(new FiniteSemimodule(std::move(name), std::move(scalars),
                                         std::move(labels), std::move(add), zero,
                                         std::move(action)));
    m->validate();
    return m;
  }

  const SemiringPtr& scalars() const { return scalars_; }
  int size() const { return n_; }
  Elem add(Elem x, Elem y) const { return add_[std::size_t(x) * n_ + y]; }
  Elem act(Elem s, Elem x) const { return act_[std::size_t(s) * n_ + x]; }
  Elem zero() const { return zero_; }
  const std::string& name() const { return name_; }
  const std::string& label(Elem e) const { return labels_[std::size_t(e)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& action_table() const { return act_; }

  std::string set_to_string(const ElemSet& s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int e) {
      if (!first) out += ',';
      first = false;
      out += labels_[std::size_t(e)];
    });
    out += '}';
    return out;
  }

 private:
  FiniteSemimodule(std::string name, SemiringPtr scalars, std::vector<std::string> labels,
                   std::vector<Elem> add, Elem zero, std::vector<Elem> action)
      : name_(std::move(name)),
        scalars_(std::move(scalars)),
        labels_(std::move(labels)),
        n_(int(labels_.size())),
        add_(std::move(add)),
        zero_(zero),
        act_(std::move(action)) {}

  [[noreturn]] void fail(const char* axiom, std::vector<int> w, const std::string& detail) const {
    throw AxiomViolation(axiom, std::move(w),
                         "semimodule '" + name_ + "': axiom " + axiom + " fails at " + detail);
  }

  void validate() const {
    const auto& s = *scalars_;
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = x + 1; y < n_; ++y)
        if (add(x, y) != add(y, x))
          fail("add-commutative", {x, y}, "(" + label(x) + ", " + label(y) + ')');
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y)
        for (Elem z = 0; z < n_; ++z)
          if (add(add(x, y), z) != add(x, add(y, z)))
            fail("add-associative", {x, y, z},
                 "(" + label(x) + ", " + label(y) + ", " + label(z) + ')');
    for (Elem x = 0; x < n_; ++x)
      if (add(zero_, x) != x) fail("add-identity", {x}, "(" + label(x) + ')');
    for (Elem x = 0; x < n_; ++x)
      if (act(s.one(), x) != x) fail("action-identity", {x}, "(" + label(x) + ')');
    for (Elem x = 0; x < n_; ++x)
      if (act(s.zero(), x) != zero_) fail("action-zero-scalar", {x}, "(" + label(x) + ')');
    for (Elem a = 0; a < s.size(); ++a)
      if (act(a, zero_) != zero_) fail("action-zero-module", {a}, "(" + s.label(a) + ')');
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem x = 0; x < n_; ++x)
        for (Elem y = 0; y < n_; ++y)
          if (act(a, add(x, y)) != add(act(a, x), act(a, y)))
            fail("action-distributes-over-module-add", {a, x, y},
                 "(" + s.label(a) + ", " + label(x) + ", " + label(y) + ')');
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b)
        for (Elem x = 0; x < n_; ++x)
          if (act(s.add(a, b), x) != add(act(a, x), act(b, x)))
            fail("action-distributes-over-scalar-add", {a, b, x},
                 "(" + s.label(a) + ", " + s.label(b) + ", " + label(x) + ')');
    for (Elem a = 0; a < s.size(); ++a)
      for (Elem b = 0; b < s.size(); ++b)
        for (Elem x = 0; x < n_; ++x)
          if (act(s.mul(a, b), x) != act(a, act(b, x)))
            fail("action-compatible", {a, b, x},
                 "(" + s.label(a) + ", " + s.label(b) + ", " + label(x) + ')');
  }

  std::string name_;
  SemiringPtr scalars_;
  std::vector<std::string> labels_;
  int n_;
  std::vector<Elem> add_;
  Elem zero_;
  std::vector<Elem> act_;
};

inline SemimodulePtr validate_semimodule(std::string name, SemiringPtr scalars,
                                         std::vector<std::string> labels, std::vector<Elem> add,
                                         Elem zero, std::vector<Elem> action) {
  return FiniteSemimodule::create(std::move(name), std::move(scalars), std::move(labels),
                                  std::move(add), zero, std::move(action));
}

/// Subset of a semimodule containing zero, closed under addition and under
/// the scalar action.
class SubsemSet {
 public:
  static SubsemSet checked(SemimodulePtr parent, ElemSet members) {
    if (members.universe() != parent->size())
      throw InvalidParam("subsemimodule of '" + parent->name() + "': universe mismatch");
    if (!members.contains(parent->zero()))
      throw AxiomViolation("subsemimodule-contains-zero", {},
                           "subset of '" + parent->name() + "' does not contain zero");
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
      throw AxiomViolation("subsemimodule-add-closed", {wx, wy},
                           "subset of '" + parent->name() + "' is not closed under add at (" +
                               parent->label(wx) + ", " + parent->label(wy) + ')');
    for (Elem s = 0; ok && s < parent->scalars()->size(); ++s) {
      members.for_each([&](int x) {
        if (ok && !members.contains(parent->act(s, Elem(x)))) {
          ok = false;
          wx = s;
          wy = x;
        }
      });
    }
    if (!ok)
      throw AxiomViolation("subsemimodule-action-closed", {wx, wy},
                           "subset of '" + parent->name() +
                               "' is not closed under the action at (" +
                               parent->scalars()->label(wx) + ", " + parent->label(wy) + ')');
    return SubsemSet(std::move(parent), std::move(members));
  }

  static SubsemSet trusted(SemimodulePtr parent, ElemSet members) {
    return SubsemSet(std::move(parent), std::move(members));
  }

  const SemimodulePtr& parent() const { return parent_; }
  const ElemSet& members() const { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }
  bool proper() const { return !members_.is_full(); }
  int count() const { return members_.count(); }
  std::string to_string() const { return parent_->set_to_string(members_); }

  friend bool operator==(const SubsemSet& a, const SubsemSet& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  SubsemSet(SemimodulePtr parent, ElemSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  SemimodulePtr parent_;
  ElemSet members_;
};

namespace detail {

inline ElemSet subsemimodule_closure(const FiniteSemimodule& m, ElemSet seed) {
  seed.insert(m.zero());
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
    out.for_each([&](int y) { push(m.add(x, Elem(y))); });
    for (Elem s = 0; s < m.scalars()->size(); ++s) push(m.act(s, x));
  }
  return out;
}

}  // namespace detail

inline SubsemSet subsemimodule_generated(const SemimodulePtr& m, const ElemSet& seed) {
  ElemSet start = seed.universe() == m->size() ? seed : ElemSet(m->size());
  return SubsemSet::trusted(m, detail::subsemimodule_closure(*m, start));
}

inline SubsemSet subsemimodule_generated(const SemimodulePtr& m,
                                         std::initializer_list<Elem> seed) {
  ElemSet e(m->size());
  for (Elem x : seed) e.insert(x);
  return subsemimodule_generated(m, e);
}

/// Full subsemimodule lattice via cyclic subsemimodules joined pairwise to
/// fixpoint; sorted canonically.
inline std::vector<SubsemSet> enumerate_subsemimodules(const SemimodulePtr& m,
                                                       int cap = kDefaultEnumerationCap) {
  std::vector<ElemSet> found;
  std::unordered_set<ElemSet, ElemSetHash> seen;
  auto add = [&](const ElemSet& e) {
    if (seen.insert(e).second) {
      found.push_back(e);
      if (int(found.size()) > cap)
        throw CapExceeded("enumerate_subsemimodules('" + m->name() + "') exceeded cap " +
                          std::to_string(cap));
    }
  };
  add(detail::subsemimodule_closure(*m, ElemSet(m->size())));
  for (Elem x = 0; x < m->size(); ++x) {
    ElemSet seed(m->size());
    seed.insert(x);
    add(detail::subsemimodule_closure(*m, seed));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      ElemSet u = found[i] | found[j];
      if (!seen.count(u)) add(detail::subsemimodule_closure(*m, u));
    }
  std::sort(found.begin(), found.end());
  std::vector<SubsemSet> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(SubsemSet::trusted(m, std::move(e)));
  return out;
}

/// (N :_S M) = scalars sending all of M into N.
inline IdealSet colon_ideal(const SubsemSet& sub) {
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  ElemSet out(s.size());
  for (Elem a = 0; a < s.size(); ++a) {
    bool in = true;
    for (Elem x = 0; x < m.size() && in; ++x)
      if (!sub.contains(m.act(a, x))) in = false;
    if (in) out.insert(a);
  }
  return IdealSet::trusted(m.scalars(), out);
}

inline IdealSet colon_ideal(const SubsemSet& sub, const SemimodulePtr& m) {
  if (sub.parent() != m)
    throw ParentMismatch("colon_ideal: subsemimodule does not live in the given semimodule");
  return colon_ideal(sub);
}

/// (N :_M J) = module elements sent into N by every element of J.
inline SubsemSet residual(const SubsemSet& sub, const ElemSet& scalar_set) {
  const auto& m = *sub.parent();
  ElemSet out(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    bool in = true;
    scalar_set.for_each([&](int j) {
      if (in && !sub.contains(m.act(Elem(j), x))) in = false;
    });
    if (in) out.insert(x);
  }
  return SubsemSet::trusted(sub.parent(), out);
}

/// (N :_M ab), the residual by the single product ab.
inline SubsemSet residual_by_product(const SubsemSet& sub, Elem a, Elem b) {
  const auto& m = *sub.parent();
  ElemSet j(m.scalars()->size());
  j.insert(m.scalars()->mul(a, b));
  return residual(sub, j);
}

inline SubsemSet zero_subsemimodule(const SemimodulePtr& m) {
  ElemSet z(m->size());
  z.insert(m->zero());
  return SubsemSet::trusted(m, z);
}

/// Ann(M) = (0 :_S M).
inline IdealSet annihilator(const SemimodulePtr& m) {
  return colon_ideal(zero_subsemimodule(m));
}

/// (0 :_S x); equals the annihilator of the cyclic subsemimodule Sx.
inline IdealSet elem_annihilator(const SemimodulePtr& m, Elem x) {
  const auto& s = *m->scalars();
  ElemSet out(s.size());
  for (Elem a = 0; a < s.size(); ++a)
    if (m->act(a, x) == m->zero()) out.insert(a);
  return IdealSet::trusted(m->scalars(), out);
}

/// x in N and x+y in N force y in N.
inline bool is_subtractive(const SubsemSet& sub) {
  const auto& m = *sub.parent();
  bool ok = true;
  sub.members().for_each([&](int x) {
    if (!ok) return;
    for (Elem y = 0; y < m.size(); ++y)
      if (sub.contains(m.add(Elem(x), y)) && !sub.contains(y)) {
        ok = false;
        return;
      }
  });
  return ok;
}

/// Every member has an additive inverse inside the set.
inline bool is_strong(const SubsemSet& sub) {
  const auto& m = *sub.parent();
  bool ok = true;
  sub.members().for_each([&](int x) {
    if (!ok) return;
    bool inv = false;
    sub.members().for_each([&](int y) {
      if (!inv && m.add(Elem(x), Elem(y)) == m.zero()) inv = true;
    });
    if (!inv) ok = false;
  });
  return ok;
}

/// IM = subsemimodule generated by all products i*x.
inline SubsemSet ideal_action(const IdealSet& ideal, const SemimodulePtr& m) {
  if (ideal.parent() != m->scalars())
    throw ParentMismatch("ideal_action: ideal and semimodule have different scalars");
  ElemSet prods(m->size());
  ideal.members().for_each([&](int i) {
    for (Elem x = 0; x < m->size(); ++x) prods.insert(m->act(Elem(i), x));
  });
  return SubsemSet::trusted(m, detail::subsemimodule_closure(*m, prods));
}

struct MultiplicationCheck {
  bool holds = true;
  std::optional<SubsemSet> witness;  // first N != (N :_S M)M in canonical order
};

/// Every subsemimodule equals (N :_S M)M.
inline MultiplicationCheck is_multiplication(const SemimodulePtr& m,
                                             int cap = kDefaultEnumerationCap) {
  for (const SubsemSet& sub : enumerate_subsemimodules(m, cap)) {
    if (ideal_action(colon_ideal(sub), m).members() != sub.members())
      return {false, sub};
  }
  return {};
}

struct McCheck {
  bool holds = true;
  std::array<Elem, 3> witness{-1, -1, -1};  // (s, s', x) with sx = s'x, x != 0
};

/// Multiplicatively cancellative: sx = s'x with x != 0 forces s = s'.
inline McCheck is_mc(const SemimodulePtr& m) {
  const auto& s = *m->scalars();
  for (Elem a = 0; a < s.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b) {
      if (a == b) continue;
      for (Elem x = 0; x < m->size(); ++x)
        if (x != m->zero() && m->act(a, x) == m->act(b, x)) return {false, {a, b, x}};
    }
  return {};
}

struct MCyclicCheck {
  bool holds = false;
  std::array<Elem, 3> witness{-1, -1, -1};  // (s, q, x) with s+q = 1, sM <= Sx
};

/// Searches for s, q in the maximal ideal, and x with s+q = 1 and sM <= Sx.
inline MCyclicCheck is_m_cyclic(const SemimodulePtr& m, const IdealSet& maxideal) {
  if (maxideal.parent() != m->scalars())
    throw ParentMismatch("is_m_cyclic: maximal ideal has different scalars");
  if (!is_maximal_ideal(maxideal))
    throw NotMaximal("is_m_cyclic: '" + maxideal.to_string() + "' is not a maximal ideal of '" +
                     m->scalars()->name() + "'");
  const auto& s = *m->scalars();
  std::vector<ElemSet> cyclic;
  cyclic.reserve(std::size_t(m->size()));
  for (Elem x = 0; x < m->size(); ++x) {
    ElemSet seed(m->size());
    seed.insert(x);
    cyclic.push_back(detail::subsemimodule_closure(*m, seed));
  }
  for (Elem sv = 0; sv < s.size(); ++sv)
    for (Elem q = 0; q < s.size(); ++q) {
      if (!maxideal.contains(q) || s.add(sv, q) != s.one()) continue;
      for (Elem x = 0; x < m->size(); ++x) {
        bool inside = true;
        for (Elem y = 0; y < m->size() && inside; ++y)
          if (!cyclic[std::size_t(x)].contains(m->act(sv, y))) inside = false;
        if (inside) return {true, {sv, q, x}};
      }
    }
  return {};
}

enum class ProductMode { Strict, Lax };

/// N1*N2 := ((N1 :_S M)(N2 :_S M))M. The notation is only meaningful over
/// multiplication semimodules; strict mode refuses other parents.
inline SubsemSet subsemimodule_product(const SubsemSet& lhs, const SubsemSet& rhs,
                                       ProductMode mode = ProductMode::Strict,
                                       int cap = kDefaultEnumerationCap) {
  if (lhs.parent() != rhs.parent())
    throw ParentMismatch("subsemimodule_product: operands live in different semimodules");
  if (mode == ProductMode::Strict) {
    MultiplicationCheck mc = is_multiplication(lhs.parent(), cap);
    if (!mc.holds)
      throw NotMultiplication("subsemimodule_product: '" + lhs.parent()->name() +
                              "' is not a multiplication semimodule (witness " +
                              mc.witness->to_string() + ")");
  }
  return ideal_action(ideal_product(colon_ideal(lhs), colon_ideal(rhs)), lhs.parent());
}

}  // namespace finsemi
