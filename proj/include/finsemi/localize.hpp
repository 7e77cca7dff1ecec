#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finsemi/semimodule.hpp"
#include "finsemi/semiring.hpp"

namespace finsemi {

/// Localization of a finite semimodule at a multiplicatively closed subset T
/// of its scalars. Fractions m/t are classes of pairs (m, t) under
/// (m, t) ~ (m', t') iff s*t*m' = s*t'*m for some s in T; the scalar
/// semiring localizes the same way with S acting on itself. Class
/// representatives are the minimal (element-index, t-index) pair, and classes
/// are numbered by representative order.
///
/// When 0 lies in T every fraction collapses into a single class and the
/// localized scalars would have one = zero; the object is still constructed
/// (class partitions, counts) but carries no validated structures.
class Localization {
 public:
  Localization(SemimodulePtr base, MultClosedSet tset)
      : base_(std::move(base)), tset_(std::move(tset)) {
    if (tset_.parent() != base_->scalars())
      throw ParentMismatch("localize: T-set lives in a different semiring");
    tlist_ = tset_.members().members();
    const auto& s = *base_->scalars();

    scalar_class_ = partition(
        s.size(), [&](Elem a, Elem t, Elem b, Elem u) {
          // a/t ~ b/u  iff  v*t*b = v*u*a for some v in T
          for (Elem v : tlist_)
            if (s.mul(s.mul(v, t), b) == s.mul(s.mul(v, u), a)) return true;
          return false;
        },
        scalar_classes_);
    module_class_ = partition(
        base_->size(), [&](Elem x, Elem t, Elem y, Elem u) {
          for (Elem v : tlist_)
            if (base_->act(s.mul(v, t), y) == base_->act(s.mul(v, u), x)) return true;
          return false;
        },
        module_classes_);

    collapsed_ = scalar_classes_ == 1;
    if (!collapsed_) build_structures();
  }

  const SemimodulePtr& base() const { return base_; }
  const MultClosedSet& tset() const { return tset_; }
  bool collapsed() const { return collapsed_; }
  int scalar_class_count() const { return scalar_classes_; }
  int module_class_count() const { return module_classes_; }

  /// Validated localized structures; null when collapsed.
  const SemiringPtr& scalars() const { return loc_scalars_; }
  const SemimodulePtr& module() const { return loc_module_; }

  Elem scalar_class_of(Elem a, Elem t) const { return scalar_class_[pair_index(a, t)]; }
  Elem module_class_of(Elem x, Elem t) const { return module_class_[pair_index(x, t)]; }

  /// T^{-1}N: classes containing some fraction n/t with n in N.
  SubsemSet localize_subsemimodule(const SubsemSet& sub) const {
    if (sub.parent() != base_)
      throw ParentMismatch("localize_subsemimodule: subsemimodule lives in a different module");
    if (collapsed_)
      throw InvalidParam("localize_subsemimodule: localization collapsed (0 lies in T)");
    ElemSet out(module_classes_);
    sub.members().for_each([&](int n) {
      for (std::size_t ti = 0; ti < tlist_.size(); ++ti)
        out.insert(module_class_[std::size_t(n) * tlist_.size() + ti]);
    });
    return SubsemSet::checked(loc_module_, out);
  }

  /// Re-derives every induced table entry from every representative pair and
  /// throws IllDefined on any disagreement. The constructor already relies on
  /// well-definedness; this is the exhaustive double check.
  void verify_well_defined() const {
    if (collapsed_) return;  // one class everywhere, nothing can disagree
    const auto& s = *base_->scalars();
    const std::size_t nt = tlist_.size();
    // scalar add and mul
    for (std::size_t p = 0; p < scalar_class_.size(); ++p)
      for (std::size_t q = 0; q < scalar_class_.size(); ++q) {
        Elem a = Elem(p / nt), t = tlist_[p % nt];
        Elem b = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        Elem sum = s.add(s.mul(u, a), s.mul(t, b));
        Elem prod = s.mul(a, b);
        Elem rsum = scalar_class_[pair_key(sum, tu, nt)];
        Elem rprod = scalar_class_[pair_key(prod, tu, nt)];
        Elem esum = scalar_add_[std::size_t(scalar_class_[p]) * scalar_classes_ + scalar_class_[q]];
        Elem eprod = scalar_mul_[std::size_t(scalar_class_[p]) * scalar_classes_ + scalar_class_[q]];
        if (rsum != esum || rprod != eprod)
          throw IllDefined("localized scalar table disagrees across representatives of (" +
                           s.label(a) + "/" + s.label(t) + ", " + s.label(b) + "/" + s.label(u) +
                           ")");
      }
    // module add and action
    for (std::size_t p = 0; p < module_class_.size(); ++p)
      for (std::size_t q = 0; q < module_class_.size(); ++q) {
        Elem x = Elem(p / nt), t = tlist_[p % nt];
        Elem y = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        Elem sum = base_->add(base_->act(u, x), base_->act(t, y));
        Elem rsum = module_class_[pair_key(sum, tu, nt)];
        Elem esum = module_add_[std::size_t(module_class_[p]) * module_classes_ + module_class_[q]];
        if (rsum != esum)
          throw IllDefined("localized module add disagrees across representatives of (" +
                           base_->label(x) + "/" + s.label(t) + ", " + base_->label(y) + "/" +
                           s.label(u) + ")");
      }
    for (std::size_t p = 0; p < scalar_class_.size(); ++p)
      for (std::size_t q = 0; q < module_class_.size(); ++q) {
        Elem a = Elem(p / nt), t = tlist_[p % nt];
        Elem x = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        Elem ax = base_->act(a, x);
        Elem r = module_class_[pair_key(ax, tu, nt)];
        Elem e = module_act_[std::size_t(scalar_class_[p]) * module_classes_ + module_class_[q]];
        if (r != e)
          throw IllDefined("localized action disagrees across representatives of (" +
                           s.label(a) + "/" + s.label(t) + ", " + base_->label(x) + "/" +
                           s.label(u) + ")");
      }
  }

  /// Test hook: checks that the defining relation, computed pairwise, is an
  /// equivalence relation and matches the class partition.
  bool relation_is_equivalence() const {
    return relation_ok(scalar_class_, true) && relation_ok(module_class_, false);
  }

 private:
  std::size_t pair_index(Elem x, Elem t) const {
    std::size_t ti = 0;
    while (ti < tlist_.size() && tlist_[ti] != t) ++ti;
    if (ti == tlist_.size()) throw InvalidParam("localize: denominator is not in T");
    return std::size_t(x) * tlist_.size() + ti;
  }

  std::size_t pair_key(Elem x, Elem t_elem, std::size_t nt) const {
    for (std::size_t ti = 0; ti < nt; ++ti)
      if (tlist_[ti] == t_elem) return std::size_t(x) * nt + ti;
    throw IllDefined("localize: product of denominators left T");
  }

  template <class Rel>
  std::vector<Elem> partition(int carrier, Rel rel, int& classes) const {
    const std::size_t nt = tlist_.size();
    const std::size_t total = std::size_t(carrier) * nt;
    std::vector<Elem> cls(total, -1);
    classes = 0;
    for (std::size_t p = 0; p < total; ++p) {
      if (cls[p] != -1) continue;
      Elem id = classes++;
      cls[p] = id;
      Elem x = Elem(p / nt), t = tlist_[p % nt];
      for (std::size_t q = p + 1; q < total; ++q) {
        if (cls[q] != -1) continue;
        Elem y = Elem(q / nt), u = tlist_[q % nt];
        if (rel(x, t, y, u)) cls[q] = id;
      }
    }
    return cls;
  }

  template <class Cls>
  bool relation_ok(const Cls& cls, bool scalar) const {
    const auto& s = *base_->scalars();
    const std::size_t nt = tlist_.size();
    auto rel = [&](std::size_t p, std::size_t q) {
      Elem x = Elem(p / nt), t = tlist_[p % nt];
      Elem y = Elem(q / nt), u = tlist_[q % nt];
      for (Elem v : tlist_) {
        if (scalar) {
          if (s.mul(s.mul(v, t), y) == s.mul(s.mul(v, u), x)) return true;
        } else {
          if (base_->act(s.mul(v, t), y) == base_->act(s.mul(v, u), x)) return true;
        }
      }
      return false;
    };
    for (std::size_t p = 0; p < cls.size(); ++p)
      for (std::size_t q = 0; q < cls.size(); ++q)
        if ((cls[p] == cls[q]) != rel(p, q)) return false;
    return true;
  }

  void build_structures() {
    const auto& s = *base_->scalars();
    const std::size_t nt = tlist_.size();
    auto rep_label = [&](const std::vector<Elem>& cls, int classes,
                         const std::vector<std::string>& labels) {
      std::vector<std::string> out{};
      out.resize(std::size_t(classes));
      std::vector<bool> done(std::size_t(classes), false);
      for (std::size_t p = 0; p < cls.size(); ++p)
        if (!done[std::size_t(cls[p])]) {
          done[std::size_t(cls[p])] = true;
          out[std::size_t(cls[p])] =
              labels[p / nt] + "/" + s.label(tlist_[p % nt]);
        }
      return out;
    };

    scalar_add_.assign(std::size_t(scalar_classes_) * scalar_classes_, -1);
    scalar_mul_.assign(std::size_t(scalar_classes_) * scalar_classes_, -1);
    for (std::size_t p = 0; p < scalar_class_.size(); ++p)
      for (std::size_t q = 0; q < scalar_class_.size(); ++q) {
        Elem a = Elem(p / nt), t = tlist_[p % nt];
        Elem b = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        std::size_t cell = std::size_t(scalar_class_[p]) * scalar_classes_ + scalar_class_[q];
        Elem sum = scalar_class_[pair_key(s.add(s.mul(u, a), s.mul(t, b)), tu, nt)];
        Elem prod = scalar_class_[pair_key(s.mul(a, b), tu, nt)];
        if (scalar_add_[cell] == -1) {
          scalar_add_[cell] = sum;
          scalar_mul_[cell] = prod;
        } else if (scalar_add_[cell] != sum || scalar_mul_[cell] != prod) {
          throw IllDefined("localized scalar tables are not well defined");
        }
      }

    module_add_.assign(std::size_t(module_classes_) * module_classes_, -1);
    for (std::size_t p = 0; p < module_class_.size(); ++p)
      for (std::size_t q = 0; q < module_class_.size(); ++q) {
        Elem x = Elem(p / nt), t = tlist_[p % nt];
        Elem y = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        std::size_t cell = std::size_t(module_class_[p]) * module_classes_ + module_class_[q];
        Elem sum = module_class_[pair_key(base_->add(base_->act(u, x), base_->act(t, y)), tu, nt)];
        if (module_add_[cell] == -1)
          module_add_[cell] = sum;
        else if (module_add_[cell] != sum)
          throw IllDefined("localized module add is not well defined");
      }

    module_act_.assign(std::size_t(scalar_classes_) * module_classes_, -1);
    for (std::size_t p = 0; p < scalar_class_.size(); ++p)
      for (std::size_t q = 0; q < module_class_.size(); ++q) {
        Elem a = Elem(p / nt), t = tlist_[p % nt];
        Elem x = Elem(q / nt), u = tlist_[q % nt];
        Elem tu = s.mul(t, u);
        std::size_t cell = std::size_t(scalar_class_[p]) * module_classes_ + module_class_[q];
        Elem ax = module_class_[pair_key(base_->act(a, x), tu, nt)];
        if (module_act_[cell] == -1)
          module_act_[cell] = ax;
        else if (module_act_[cell] != ax)
          throw IllDefined("localized action is not well defined");
      }

    Elem zero_cls = scalar_class_[pair_key(s.zero(), s.one(), nt)];
    Elem one_cls = scalar_class_[pair_key(s.one(), s.one(), nt)];
    loc_scalars_ = FiniteSemiring::create(
        "T^-1 " + s.name(), rep_label(scalar_class_, scalar_classes_, s.labels()), scalar_add_,
        scalar_mul_, zero_cls, one_cls);
    Elem mzero_cls = module_class_[pair_key(base_->zero(), s.one(), nt)];
    loc_module_ = FiniteSemimodule::create(
        "T^-1 " + base_->name(), loc_scalars_,
        rep_label(module_class_, module_classes_, base_->labels()), module_add_, mzero_cls,
        module_act_);
  }

  SemimodulePtr base_;
  MultClosedSet tset_;
  std::vector<Elem> tlist_;
  std::vector<Elem> scalar_class_, module_class_;
  int scalar_classes_ = 0, module_classes_ = 0;
  std::vector<Elem> scalar_add_, scalar_mul_, module_add_, module_act_;
  bool collapsed_ = false;
  SemiringPtr loc_scalars_;
  SemimodulePtr loc_module_;
};

inline Localization localize(const SemimodulePtr& m, const MultClosedSet& tset) {
  return Localization(m, tset);
}

}  // namespace finsemi
