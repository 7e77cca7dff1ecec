#pragma once

#include <string>
#include <vector>

#include "finsemi/semimodule.hpp"
#include "finsemi/semiring.hpp"

namespace finsemi {

/// Boolean semiring {0, 1} with 1 + 1 = 1.
inline SemiringPtr make_boolean() {
  return FiniteSemiring::create("B", {"0", "1"}, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

/// Integers modulo n.
inline SemiringPtr make_zmod(int n) {
  if (n < 2) throw InvalidParam("make_zmod: n must be at least 2");
  std::vector<std::string> labels;
  std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[std::size_t(i) * n + j] = Elem((i + j) % n);
      mul[std::size_t(i) * n + j] = Elem((i * j) % n);
    }
  return FiniteSemiring::create("Z" + std::to_string(n), std::move(labels), std::move(add),
                                std::move(mul), 0, 1);
}

/// Quotient of the non-negative integers identifying i and j when both are
/// >= threshold and i = j mod period. Carrier {0, ..., threshold+period-1};
/// the elements below the threshold behave like plain naturals, the tail is a
/// cycle of length `period`. Units are exactly {1}.
inline SemiringPtr make_ntrunc(int threshold, int period) {
  if (threshold < 1 || period < 1)
    throw InvalidParam("make_ntrunc: threshold and period must be at least 1");
  const int n = threshold + period;
  auto norm = [&](long long k) -> Elem {
    return k < threshold ? Elem(k) : Elem(threshold + int((k - threshold) % period));
  };
  std::vector<std::string> labels;
  std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[std::size_t(i) * n + j] = norm(i + j);
      mul[std::size_t(i) * n + j] = norm(1LL * i * j);
    }
  return FiniteSemiring::create("N(" + std::to_string(threshold) + "," +
                                    std::to_string(period) + ")",
                                std::move(labels), std::move(add), std::move(mul), 0, 1);
}

/// Direct product with componentwise operations. Element (i, j) has index
/// i*|S2| + j.
inline SemiringPtr make_product(const SemiringPtr& s1, const SemiringPtr& s2) {
  const int n1 = s1->size(), n2 = s2->size(), n = n1 * n2;
  std::vector<std::string> labels;
  labels.reserve(std::size_t(n));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) labels.push_back("(" + s1->label(i) + "," + s2->label(j) + ")");
  std::vector<Elem> add(std::size_t(n) * n), mul(std::size_t(n) * n);
  auto idx = [&](int i, int j) { return Elem(i * n2 + j); };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n1; ++k)
        for (int l = 0; l < n2; ++l) {
          add[std::size_t(idx(i, j)) * n + idx(k, l)] = idx(s1->add(i, k), s2->add(j, l));
          mul[std::size_t(idx(i, j)) * n + idx(k, l)] = idx(s1->mul(i, k), s2->mul(j, l));
        }
  return FiniteSemiring::create(s1->name() + "x" + s2->name(), std::move(labels),
                                std::move(add), std::move(mul),
                                idx(s1->zero(), s2->zero()), idx(s1->one(), s2->one()));
}

/// S acting on itself by multiplication.
inline SemimodulePtr module_self(const SemiringPtr& s) {
  return FiniteSemimodule::create(s->name(), s, s->labels(), s->add_table(), s->zero(),
                                  s->mul_table());
}

/// Z_n with the action s.x = s*x mod n, where a scalar acts through the
/// integer its carrier index denotes. Validation rejects scalars whose
/// collapsing is incompatible with n.
inline SemimodulePtr module_zmod_action(const SemiringPtr& s, int n) {
  if (n < 1) throw InvalidParam("module_zmod_action: n must be at least 1");
  std::vector<std::string> labels;
  std::vector<Elem> add(std::size_t(n) * n), action(std::size_t(s->size()) * n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) add[std::size_t(i) * n + j] = Elem((i + j) % n);
  for (int a = 0; a < s->size(); ++a)
    for (int x = 0; x < n; ++x) action[std::size_t(a) * n + x] = Elem((a * x) % n);
  return FiniteSemimodule::create("Z" + std::to_string(n) + " over " + s->name(), s,
                                  std::move(labels), std::move(add), 0, std::move(action));
}

/// Direct product of two semimodules over the same scalars, componentwise
/// action. Element (i, j) has index i*|M2| + j.
inline SemimodulePtr module_product(const SemimodulePtr& m1, const SemimodulePtr& m2) {
  if (m1->scalars() != m2->scalars())
    throw ParentMismatch("module_product: factors have different scalar semirings");
  const int n1 = m1->size(), n2 = m2->size(), n = n1 * n2;
  const int ns = m1->scalars()->size();
  std::vector<std::string> labels;
  labels.reserve(std::size_t(n));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) labels.push_back("(" + m1->label(i) + "," + m2->label(j) + ")");
  std::vector<Elem> add(std::size_t(n) * n), action(std::size_t(ns) * n);
  auto idx = [&](int i, int j) { return Elem(i * n2 + j); };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n1; ++k)
        for (int l = 0; l < n2; ++l)
          add[std::size_t(idx(i, j)) * n + idx(k, l)] = idx(m1->add(i, k), m2->add(j, l));
  for (int a = 0; a < ns; ++a)
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        action[std::size_t(a) * n + idx(i, j)] = idx(m1->act(a, i), m2->act(a, j));
  return FiniteSemimodule::create(m1->name() + "x" + m2->name(), m1->scalars(),
                                  std::move(labels), std::move(add),
                                  idx(m1->zero(), m2->zero()), std::move(action));
}

/// One-element zero module.
inline SemimodulePtr module_zero(const SemiringPtr& s) {
  return FiniteSemimodule::create("0 over " + s->name(), s, {"0"}, {0}, 0,
                                  std::vector<Elem>(std::size_t(s->size()), 0));
}

}  // namespace finsemi
