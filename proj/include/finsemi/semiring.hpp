#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "finsemi/elem_set.hpp"
#include "finsemi/errors.hpp"

namespace finsemi {

class FiniteSemiring;
using SemiringPtr = std::shared_ptr<const FiniteSemiring>;

/// Commutative semiring on a finite carrier, given by full operation tables.
/// Instances are immutable once created; `create` validates every axiom
/// exhaustively and throws on the first violation, scanning axioms in a fixed
/// order and witnesses lexicographically, so error reports are reproducible.
class FiniteSemiring {
 public:
  static SemiringPtr create(std::string name, std::vector<std::string> labels,
                            std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                            Elem one) {
    const int n = int(labels.size());
    if (n < 2) throw InvalidParam("semiring '" + name + "': carrier needs at least two elements");
    if (add.size() != std::size_t(n) * n || mul.size() != std::size_t(n) * n)
      throw InvalidParam("semiring '" + name + "': operation tables must be " +
                         std::to_string(n) + "x" + std::to_string(n));
    for (Elem v : add)
      if (v < 0 || v >= n) throw InvalidParam("semiring '" + name + "': add table entry out of range");
    for (Elem v : mul)
      if (v < 0 || v >= n) throw InvalidParam("semiring '" + name + "': mul table entry out of range");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
      throw InvalidParam("semiring '" + name + "': zero/one out of range");
    if (zero == one)
      throw IdentityCollapse("semiring '" + name + "': one coincides with zero");

    SemiringPtr s(new FiniteSemiring(std::move(name), std::move(labels), std::move(add),
                                     std::move(mul), zero, one));
    s->validate();
    const_cast<FiniteSemiring*>(s.get())->compute_units();
    return s;
  }

  int size() const { return n_; }
  Elem add(Elem a, Elem b) const { return add_[std::size_t(a) * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[std::size_t(a) * n_ + b]; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  const std::string& name() const { return name_; }
  const std::string& label(Elem e) const { return labels_[std::size_t(e)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

  bool is_unit(Elem a) const { return units_.contains(a); }
  const ElemSet& units() const { return units_; }
  ElemSet nonunits() const { return units_.complement(); }

  /// Nonunits closed under addition. The other formulation of locality
  /// (exactly one maximal ideal) lives in ideal.hpp; the two are cross-checked
  /// rather than assumed equal.
  bool local() const { return local_; }

  std::string set_to_string(const ElemSet& s) const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](int e) {
      if (!first) os << ',';
      first = false;
      os << labels_[std::size_t(e)];
    });
    os << '}';
    return os.str();
  }

 private:
  FiniteSemiring(std::string name, std::vector<std::string> labels, std::vector<Elem> add,
                 std::vector<Elem> mul, Elem zero, Elem one)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        n_(int(labels_.size())),
        add_(std::move(add)),
        mul_(std::move(mul)),
        zero_(zero),
        one_(one),
        units_(n_) {}

  [[noreturn]] void fail(const char* axiom, std::vector<int> w) const {
    std::ostringstream os;
    os << "semiring '" << name_ << "': axiom " << axiom << " fails at (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) os << ", ";
      os << labels_[std::size_t(w[i])];
    }
    os << ')';
    throw AxiomViolation(axiom, std::move(w), os.str());
  }

  void validate() const {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (add(a, b) != add(b, a)) fail("add-commutative", {a, b});
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          if (add(add(a, b), c) != add(a, add(b, c))) fail("add-associative", {a, b, c});
    for (Elem a = 0; a < n_; ++a)
      if (add(zero_, a) != a) fail("add-identity", {a});
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = a + 1; b < n_; ++b)
        if (mul(a, b) != mul(b, a)) fail("mul-commutative", {a, b});
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul-associative", {a, b, c});
    for (Elem a = 0; a < n_; ++a)
      if (mul(one_, a) != a) fail("mul-identity", {a});
    for (Elem a = 0; a < n_; ++a)
      if (mul(zero_, a) != zero_) fail("zero-absorbing", {a});
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        for (Elem c = 0; c < n_; ++c)
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributive", {a, b, c});
  }

  void compute_units() {
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (mul(a, b) == one_) {
          units_.insert(a);
          break;
        }
    local_ = true;
    ElemSet nu = nonunits();
    nu.for_each([&](int a) {
      nu.for_each([&](int b) {
        if (units_.contains(add(Elem(a), Elem(b)))) local_ = false;
      });
    });
  }

  std::string name_;
  std::vector<std::string> labels_;
  int n_;
  std::vector<Elem> add_, mul_;
  Elem zero_, one_;
  ElemSet units_;
  bool local_ = false;
};

/// Alias for the validating constructor.
inline SemiringPtr validate_semiring(std::string name, std::vector<std::string> labels,
                                     std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                                     Elem one) {
  return FiniteSemiring::create(std::move(name), std::move(labels), std::move(add),
                                std::move(mul), zero, one);
}

inline ElemSet units(const SemiringPtr& s) { return s->units(); }

/// Multiplicatively closed subset: contains one, closed under mul.
class MultClosedSet {
 public:
  static MultClosedSet checked(SemiringPtr parent, ElemSet members) {
    if (members.universe() != parent->size())
      throw InvalidParam("multiplicatively closed set: universe mismatch");
    if (!members.contains(parent->one()))
      throw AxiomViolation("tset-contains-one", {},
                           "multiplicatively closed set over '" + parent->name() +
                               "' does not contain one");
    bool ok = true;
    int wa = -1, wb = -1;
    members.for_each([&](int a) {
      members.for_each([&](int b) {
        if (ok && !members.contains(parent->mul(Elem(a), Elem(b)))) {
          ok = false;
          wa = a;
          wb = b;
        }
      });
    });
    if (!ok)
      throw AxiomViolation("tset-mul-closed", {wa, wb},
                           "subset of '" + parent->name() + "' is not closed under mul at (" +
                               parent->label(wa) + ", " + parent->label(wb) + ')');
    return MultClosedSet(std::move(parent), std::move(members));
  }

  /// Closure of {one} ∪ gens under multiplication.
  static MultClosedSet closure(SemiringPtr parent, const ElemSet& gens) {
    ElemSet m(parent->size());
    m.insert(parent->one());
    m |= gens;
    bool grew = true;
    while (grew) {
      grew = false;
      ElemSet next = m;
      m.for_each([&](int a) {
        m.for_each([&](int b) {
          Elem p = parent->mul(Elem(a), Elem(b));
          if (!next.contains(p)) {
            next.insert(p);
            grew = true;
          }
        });
      });
      m = next;
    }
    return MultClosedSet(std::move(parent), std::move(m));
  }

  const SemiringPtr& parent() const { return parent_; }
  const ElemSet& members() const { return members_; }
  bool contains(Elem e) const { return members_.contains(e); }

 private:
  MultClosedSet(SemiringPtr parent, ElemSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  SemiringPtr parent_;
  ElemSet members_;
};

}  // namespace finsemi
