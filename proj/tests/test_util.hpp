#pragma once

#include <cstdint>
#include <vector>

#include "finsemi/finsemi.hpp"

namespace testutil {

using namespace finsemi;

inline const std::vector<Instance>& catalog() {
  static const std::vector<Instance> cat = default_catalog();
  return cat;
}

inline const Instance& instance(const std::string& name) {
  for (const Instance& inst : catalog())
    if (inst.name == name) return inst;
  throw std::runtime_error("no catalog instance named " + name);
}

/// Independent oracle: all ideals of a small semiring by powerset filtering.
inline std::vector<ElemSet> powerset_ideals(const SemiringPtr& s) {
  const int n = s->size();
  std::vector<ElemSet> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (!(bits & (1u << s->zero()))) continue;
    ElemSet e(n);
    for (int i = 0; i < n; ++i)
      if (bits & (1u << i)) e.insert(i);
    bool ok = true;
    e.for_each([&](int x) {
      e.for_each([&](int y) {
        if (!e.contains(s->add(Elem(x), Elem(y)))) ok = false;
      });
    });
    for (int t = 0; t < n && ok; ++t)
      e.for_each([&](int x) {
        if (!e.contains(s->mul(Elem(t), Elem(x)))) ok = false;
      });
    if (ok) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Independent oracle: all subsemimodules of a small semimodule.
inline std::vector<ElemSet> powerset_subsemimodules(const SemimodulePtr& m) {
  const int n = m->size();
  std::vector<ElemSet> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (!(bits & (1u << m->zero()))) continue;
    ElemSet e(n);
    for (int i = 0; i < n; ++i)
      if (bits & (1u << i)) e.insert(i);
    bool ok = true;
    e.for_each([&](int x) {
      e.for_each([&](int y) {
        if (!e.contains(m->add(Elem(x), Elem(y)))) ok = false;
      });
    });
    for (int t = 0; t < m->scalars()->size() && ok; ++t)
      e.for_each([&](int x) {
        if (!e.contains(m->act(Elem(t), Elem(x)))) ok = false;
      });
    if (ok) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testutil
