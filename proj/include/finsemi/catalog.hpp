#pragma once

#include <string>
#include <vector>

#include "finsemi/constructions.hpp"
#include "finsemi/instance.hpp"

namespace finsemi {

namespace detail {

inline void attach_tset(Instance& inst, const std::string& name,
                        std::initializer_list<Elem> gens) {
  ElemSet g(inst.semiring->size());
  for (Elem e : gens) g.insert(e);
  MultClosedSet t = MultClosedSet::closure(inst.semiring, g);
  for (const auto& existing : inst.tsets)
    if (existing.set.members() == t.members()) return;
  inst.tsets.push_back({name, std::move(t)});
}

inline void attach_default_parts(Instance& inst) {
  // every instance carries the trivial T-set and the identity endomorphism
  attach_tset(inst, "one", {});
  if (inst.semiring->units().count() > 1)
    inst.tsets.push_back({"units", MultClosedSet::checked(inst.semiring,
                                                          inst.semiring->units())});
  std::vector<Elem> id(std::size_t(inst.module->size()), 0);
  for (Elem x = 0; x < inst.module->size(); ++x) id[std::size_t(x)] = x;
  inst.homs.push_back({"id", HomTable::checked(inst.module, inst.module, std::move(id))});
}

inline std::vector<Elem> mod_map(int n_from, int n_to) {
  std::vector<Elem> m(std::size_t(n_from), 0);
  for (int x = 0; x < n_from; ++x) m[std::size_t(x)] = Elem(x % n_to);
  return m;
}

inline std::vector<Elem> scale_map(const SemimodulePtr& mod, Elem factor) {
  std::vector<Elem> m(std::size_t(mod->size()), 0);
  for (Elem x = 0; x < mod->size(); ++x) m[std::size_t(x)] = mod->act(factor, x);
  return m;
}

}  // namespace detail

/// The instance catalog every sweep and acceptance run uses. Carriers stay
/// at or below 24 elements so exhaustive triple scans remain cheap.
inline std::vector<Instance> default_catalog() {
  std::vector<Instance> out;
  auto add = [&](std::string name, SemiringPtr s, SemimodulePtr m) -> Instance& {
    out.push_back({std::move(name), std::move(s), std::move(m), {}, {}, {}, {}});
    detail::attach_default_parts(out.back());
    return out.back();
  };

  SemiringPtr b = make_boolean();
  SemiringPtr z2 = make_zmod(2);
  SemiringPtr z3 = make_zmod(3);
  SemiringPtr z4 = make_zmod(4);
  SemiringPtr z6 = make_zmod(6);
  SemiringPtr z8 = make_zmod(8);
  SemiringPtr z12 = make_zmod(12);
  SemiringPtr n23 = make_ntrunc(2, 3);
  SemiringPtr n38 = make_ntrunc(3, 8);
  SemiringPtr n320 = make_ntrunc(3, 20);
  SemiringPtr bxb = make_product(b, b);

  add("b-self", b, module_self(b));
  add("z2-self", z2, module_self(z2));
  add("z3-self", z3, module_self(z3));

  {
    Instance& inst = add("z4-self", z4, module_self(z4));
    detail::attach_tset(inst, "t2", {2});  // collapses: 2*2 = 0 lands in T
    SemimodulePtr z2_over_z4 = module_zmod_action(z4, 2);
    inst.homs.push_back(
        {"mod2", HomTable::checked(inst.module, z2_over_z4, detail::mod_map(4, 2))});
    inst.homs.push_back(
        {"mul2", HomTable::checked(inst.module, inst.module, detail::scale_map(inst.module, 2))});
  }
  {
    Instance& inst = add("z6-self", z6, module_self(z6));
    detail::attach_tset(inst, "t2", {2});  // {1,2,4}
    detail::attach_tset(inst, "t3", {3});  // {1,3}
  }
  {
    Instance& inst = add("z8-self", z8, module_self(z8));
    detail::attach_tset(inst, "t2", {2});  // collapses
    SemimodulePtr z4_over_z8 = module_zmod_action(z8, 4);
    inst.homs.push_back(
        {"mod4", HomTable::checked(inst.module, z4_over_z8, detail::mod_map(8, 4))});
  }
  {
    Instance& inst = add("z12-self", z12, module_self(z12));
    detail::attach_tset(inst, "t2", {2});  // {1,2,4,8}, localizes to three classes
  }
  add("n23-self", n23, module_self(n23));
  {
    Instance& inst = add("n38-self", n38, module_self(n38));
    detail::attach_tset(inst, "t2", {2});  // {1,2,4,8}
  }
  {
    Instance& inst = add("n320-self", n320, module_self(n320));
    detail::attach_tset(inst, "t2", {2});
  }
  {
    Instance& inst = add("bxb-self", bxb, module_self(bxb));
    detail::attach_tset(inst, "tp", {2});  // {(1,1),(1,0)}
    std::vector<Elem> proj(std::size_t(inst.module->size()), 0);
    for (Elem x = 0; x < inst.module->size(); ++x)
      proj[std::size_t(x)] = inst.module->act(2, x);  // (a,b) -> (a,0)
    inst.homs.push_back({"proj1", HomTable::checked(inst.module, inst.module, std::move(proj))});
  }

  add("z2-over-z4", z4, module_zmod_action(z4, 2));
  add("z4-over-z8", z8, module_zmod_action(z8, 4));
  {
    Instance& inst = add("z8-over-n38", n38, module_zmod_action(n38, 8));
    detail::attach_tset(inst, "t2", {2});
    inst.homs.push_back(
        {"mul2", HomTable::checked(inst.module, inst.module, detail::scale_map(inst.module, 2))});
  }
  {
    Instance& inst = add("z20-over-n320", n320, module_zmod_action(n320, 20));
    detail::attach_tset(inst, "t2", {2});
    inst.homs.push_back(
        {"mul5", HomTable::checked(inst.module, inst.module, detail::scale_map(inst.module, 5))});
  }
  {
    SemimodulePtr bself = module_self(b);
    Instance& inst = add("bxb-over-b", b, module_product(bself, bself));
    std::vector<Elem> proj(std::size_t(inst.module->size()), 0);
    for (Elem x = 0; x < inst.module->size(); ++x) proj[std::size_t(x)] = Elem(x / 2);
    inst.homs.push_back({"proj1", HomTable::checked(inst.module, bself, std::move(proj))});
  }
  {
    SemimodulePtr z2self = module_self(z2);
    Instance& inst = add("z2xz2-over-z2", z2, module_product(z2self, z2self));
    detail::attach_tset(inst, "t0", {0});  // collapsing T-set
    std::vector<Elem> proj(std::size_t(inst.module->size()), 0);
    for (Elem x = 0; x < inst.module->size(); ++x) proj[std::size_t(x)] = Elem(x / 2);
    inst.homs.push_back({"proj1", HomTable::checked(inst.module, z2self, std::move(proj))});
  }
  return out;
}

/// The 121-element replica of the product-module separation: S = N(3,8),
/// M = S x S, N = 2S x 0. Kept out of the default catalog so sweep carriers
/// stay small; classification and search tests build it on demand.
inline Instance ntrunc38_square_instance() {
  SemiringPtr s = make_ntrunc(3, 8);
  SemimodulePtr self = module_self(s);
  SemimodulePtr m = module_product(self, self);
  Instance inst{"n38-square", s, m, {}, {}, {}, {}};
  IdealSet evens = ideal_generated(s, {2});
  ElemSet members(m->size());
  evens.members().for_each([&](int x) { members.insert(x * s->size() + s->zero()); });
  inst.subsemimodules.push_back({"N", SubsemSet::checked(m, members)});
  detail::attach_default_parts(inst);
  return inst;
}

}  // namespace finsemi
