#pragma once

#include <string>
#include <utility>
#include <vector>

#include "finsemi/semimodule.hpp"

namespace finsemi {

/// Semimodule homomorphism between two semimodules over the same scalars,
/// given by its full element map.
class HomTable {
 public:
  static HomTable checked(SemimodulePtr source, SemimodulePtr target, std::vector<Elem> map) {
    if (source->scalars() != target->scalars())
      throw ParentMismatch("homomorphism: source and target have different scalars");
    if (map.size() != std::size_t(source->size()))
      throw InvalidParam("homomorphism: map must list one target element per source element");
    for (Elem v : map)
      if (v < 0 || v >= target->size())
        throw InvalidParam("homomorphism: map entry out of range");
    if (map[std::size_t(source->zero())] != target->zero())
      throw NotAHomomorphism({source->zero()},
                             "map does not send zero to zero");
    for (Elem x = 0; x < source->size(); ++x)
      for (Elem y = 0; y < source->size(); ++y)
        if (map[std::size_t(source->add(x, y))] !=
            target->add(map[std::size_t(x)], map[std::size_t(y)]))
          throw NotAHomomorphism({x, y}, "map is not additive at (" + source->label(x) + ", " +
                                             source->label(y) + ')');
    for (Elem s = 0; s < source->scalars()->size(); ++s)
      for (Elem x = 0; x < source->size(); ++x)
        if (map[std::size_t(source->act(s, x))] != target->act(s, map[std::size_t(x)]))
          throw NotAHomomorphism({s, x}, "map is not linear at (" +
                                             source->scalars()->label(s) + ", " +
                                             source->label(x) + ')');
    return HomTable(std::move(source), std::move(target), std::move(map));
  }

  const SemimodulePtr& source() const { return source_; }
  const SemimodulePtr& target() const { return target_; }
  Elem apply(Elem x) const { return map_[std::size_t(x)]; }
  const std::vector<Elem>& map() const { return map_; }

  bool surjective() const {
    ElemSet hit(target_->size());
    for (Elem v : map_) hit.insert(v);
    return hit.is_full();
  }

  ElemSet image_set() const {
    ElemSet hit(target_->size());
    for (Elem v : map_) hit.insert(v);
    return hit;
  }

 private:
  HomTable(SemimodulePtr source, SemimodulePtr target, std::vector<Elem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  SemimodulePtr source_;
  SemimodulePtr target_;
  std::vector<Elem> map_;
};

inline HomTable hom_validate(SemimodulePtr source, SemimodulePtr target, std::vector<Elem> map) {
  return HomTable::checked(std::move(source), std::move(target), std::move(map));
}

/// f(N); the image of a subsemimodule is a subsemimodule, no closure needed.
inline SubsemSet hom_image(const HomTable& f, const SubsemSet& sub) {
  if (sub.parent() != f.source())
    throw ParentMismatch("hom_image: subsemimodule does not live in the source");
  ElemSet out(f.target()->size());
  sub.members().for_each([&](int x) { out.insert(f.apply(Elem(x))); });
  return SubsemSet::trusted(f.target(), out);
}

/// f^{-1}(N).
inline SubsemSet hom_preimage(const HomTable& f, const SubsemSet& sub) {
  if (sub.parent() != f.target())
    throw ParentMismatch("hom_preimage: subsemimodule does not live in the target");
  ElemSet out(f.source()->size());
  for (Elem x = 0; x < f.source()->size(); ++x)
    if (sub.contains(f.apply(x))) out.insert(x);
  return SubsemSet::trusted(f.source(), out);
}

/// Ker(f) = f^{-1}(0).
inline SubsemSet hom_kernel(const HomTable& f) {
  return hom_preimage(f, zero_subsemimodule(f.target()));
}

}  // namespace finsemi
