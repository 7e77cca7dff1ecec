#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finsemi/hom.hpp"
#include "finsemi/semimodule.hpp"
#include "finsemi/semiring.hpp"

namespace finsemi {

struct NamedSubsem {
  std::string name;
  SubsemSet set;
};

struct NamedIdeal {
  std::string name;
  IdealSet set;
};

struct NamedTset {
  std::string name;
  MultClosedSet set;
};

struct NamedHom {
  std::string name;
  HomTable hom;  // source is always the instance's module
};

/// One verification instance: a semiring, a semimodule over it, and optional
/// named parts. Theorems that quantify over a subsemimodule or ideal range
/// over the named ones when any are given, and over the full enumerated
/// lattice otherwise.
struct Instance {
  std::string name;
  SemiringPtr semiring;
  SemimodulePtr module;
  std::vector<NamedSubsem> subsemimodules;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedTset> tsets;
  std::vector<NamedHom> homs;

  const NamedSubsem* find_subsemimodule(const std::string& n) const {
    for (const auto& s : subsemimodules)
      if (s.name == n) return &s;
    return nullptr;
  }
  const NamedIdeal* find_ideal(const std::string& n) const {
    for (const auto& s : ideals)
      if (s.name == n) return &s;
    return nullptr;
  }
  const NamedTset* find_tset(const std::string& n) const {
    for (const auto& s : tsets)
      if (s.name == n) return &s;
    return nullptr;
  }
};

}  // namespace finsemi
