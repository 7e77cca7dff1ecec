#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "finsemi/catalog.hpp"
#include "finsemi/classify.hpp"
#include "finsemi/instance.hpp"

namespace finsemi {

inline const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {
      "prime-not-1abs",          // prime but not 1-absorbing prime (impossible)
      "1abs-not-prime",          // 1-absorbing prime but not prime
      "1abs-not-prime-nonlocal", // same, restricted to non-local scalars (impossible)
      "weakly-not-1abs",         // weakly 1-absorbing prime but not 1-absorbing prime
      "colon-converse-fails",    // (N :_S M) 1-absorbing prime ideal, N not 1-absorbing
  };
  return ids;
}

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct SearchOptions {
  int max_total_carrier = -1;      // skip instances with |S|+|M| above this; -1 = no bound
  int cap = kDefaultEnumerationCap;
  long long random_samples = 0;    // additionally scan this many random semirings
  int random_min_size = 2;
  int random_max_size = 6;
  std::uint64_t seed = 20240001;
};

struct SearchHit {
  Instance instance;
  std::string subsemimodule;       // rendered member set
  ElemSet subsemimodule_mask;
  KeyValues witness;
};

struct SearchResult {
  bool found = false;
  std::optional<SearchHit> hit;
  long long instances_examined = 0;
  long long subsemimodules_examined = 0;
};

namespace sdetail {

inline std::string render_predicate_witness(const SubsemSet& sub, const PredicateResult& p) {
  if (p.holds || p.witness.empty()) return "";
  const auto& m = *sub.parent();
  const auto& s = *m.scalars();
  std::string out = "(";
  for (std::size_t i = 0; i < p.witness.size(); ++i) {
    if (i) out += ",";
    // trailing component of a witness tuple is a module element
    out += (i + 1 == p.witness.size()) ? m.label(p.witness[i]) : s.label(p.witness[i]);
  }
  return out + ")";
}

/// Does this proper subsemimodule exhibit the relation? Fills the witness.
inline bool exhibits(const std::string& relation, const SubsemSet& sub, bool local,
                     KeyValues& witness) {
  if (relation == "prime-not-1abs") {
    PredicateResult pr = is_prime_subsemimodule(sub);
    if (!pr.holds) return false;
    PredicateResult oa = is_one_absorbing_prime(sub);
    if (oa.holds) return false;
    witness = {{"one-absorbing-failure", render_predicate_witness(sub, oa)}};
    return true;
  }
  if (relation == "1abs-not-prime" || relation == "1abs-not-prime-nonlocal") {
    if (relation == "1abs-not-prime-nonlocal" && local) return false;
    PredicateResult oa = is_one_absorbing_prime(sub);
    if (!oa.holds) return false;
    PredicateResult pr = is_prime_subsemimodule(sub);
    if (pr.holds) return false;
    witness = {{"prime-failure", render_predicate_witness(sub, pr)}};
    return true;
  }
  if (relation == "weakly-not-1abs") {
    PredicateResult wk = is_weakly_one_absorbing_prime(sub);
    if (!wk.holds) return false;
    PredicateResult oa = is_one_absorbing_prime(sub);
    if (oa.holds) return false;
    witness = {{"one-absorbing-failure", render_predicate_witness(sub, oa)}};
    return true;
  }
  if (relation == "colon-converse-fails") {
    IdealSet colon = colon_ideal(sub);
    if (!colon.proper()) return false;
    if (!classify_ideal(colon).one_absorbing.holds) return false;
    PredicateResult oa = is_one_absorbing_prime(sub);
    if (oa.holds) return false;
    witness = {{"colon", colon.to_string()},
               {"one-absorbing-failure", render_predicate_witness(sub, oa)}};
    return true;
  }
  throw InvalidParam("unknown counterexample relation '" + relation + "'");
}

/// Smallest-first order: total carrier, then carrier pair, then tables.
inline bool instance_order(const Instance& a, const Instance& b) {
  int ta = a.semiring->size() + a.module->size();
  int tb = b.semiring->size() + b.module->size();
  if (ta != tb) return ta < tb;
  if (a.semiring->size() != b.semiring->size()) return a.semiring->size() < b.semiring->size();
  if (a.semiring->add_table() != b.semiring->add_table())
    return a.semiring->add_table() < b.semiring->add_table();
  if (a.semiring->mul_table() != b.semiring->mul_table())
    return a.semiring->mul_table() < b.semiring->mul_table();
  if (a.module->add_table() != b.module->add_table())
    return a.module->add_table() < b.module->add_table();
  if (a.module->action_table() != b.module->action_table())
    return a.module->action_table() < b.module->action_table();
  return a.name < b.name;
}

}  // namespace sdetail

/// Randomized backtracking sampler for commutative semirings on a fixed
/// carrier: zero is element 0, one is element 1, the zero/one rows are forced
/// and the remaining cells of the commutative add and mul tables are filled
/// depth-first in random value order with incremental associativity and
/// distributivity pruning. Returns nullptr when the node budget runs out.
inline SemiringPtr random_semiring(std::mt19937_64& rng, int n, long long node_budget = 100000) {
  if (n < 2) throw InvalidParam("random_semiring: carrier must have at least 2 elements");
  std::vector<int> add(std::size_t(n) * n, -1), mul(std::size_t(n) * n, -1);
  auto A = [&](int i, int j) -> int& { return add[std::size_t(i) * n + j]; };
  auto Mu = [&](int i, int j) -> int& { return mul[std::size_t(i) * n + j]; };
  for (int j = 0; j < n; ++j) {
    A(0, j) = j;
    A(j, 0) = j;
    Mu(0, j) = 0;
    Mu(j, 0) = 0;
    Mu(1, j) = j;
    Mu(j, 1) = j;
  }

  struct Cell {
    bool is_add;
    int i, j;
  };
  std::vector<Cell> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.push_back({true, i, j});
  for (int i = 2; i < n; ++i)
    for (int j = i; j < n; ++j) cells.push_back({false, i, j});

  // Partial consistency: every fully determined instance of each law holds.
  auto consistent = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          int ab = A(a, b), bc = A(b, c);
          if (ab >= 0 && bc >= 0) {
            int l = A(ab, c), r = A(a, bc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          int mab = Mu(a, b), mbc = Mu(b, c);
          if (mab >= 0 && mbc >= 0) {
            int l = Mu(mab, c), r = Mu(a, mbc);
            if (l >= 0 && r >= 0 && l != r) return false;
          }
          int s = A(b, c);
          if (s >= 0) {
            int l = Mu(a, s), x = Mu(a, b), y = Mu(a, c);
            if (l >= 0 && x >= 0 && y >= 0) {
              int r = A(x, y);
              if (r >= 0 && l != r) return false;
            }
          }
        }
      }
    return true;
  };

  long long nodes = 0;
  std::function<bool(std::size_t)> dfs = [&](std::size_t k) -> bool {
    if (nodes > node_budget) return false;
    if (k == cells.size()) return consistent();
    const Cell& cell = cells[k];
    std::vector<int> order(std::size_t(n), 0);
    for (int v = 0; v < n; ++v) order[std::size_t(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int v : order) {
      ++nodes;
      if (nodes > node_budget) return false;
      if (cell.is_add) {
        A(cell.i, cell.j) = v;
        A(cell.j, cell.i) = v;
      } else {
        Mu(cell.i, cell.j) = v;
        Mu(cell.j, cell.i) = v;
      }
      if (consistent() && dfs(k + 1)) return true;
      if (cell.is_add) {
        A(cell.i, cell.j) = -1;
        A(cell.j, cell.i) = -1;
      } else {
        Mu(cell.i, cell.j) = -1;
        Mu(cell.j, cell.i) = -1;
      }
    }
    return false;
  };

  if (!dfs(0)) return nullptr;

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  labels[0] = "0";
  labels[1] = "1";
  std::vector<Elem> addt(add.begin(), add.end()), mult(mul.begin(), mul.end());
  return FiniteSemiring::create("random" + std::to_string(n), std::move(labels),
                                std::move(addt), std::move(mult), 0, 1);
}

/// Finds the smallest instance exhibiting `relation`, scanning the given
/// catalog smallest-first and then, when requested, a stream of random
/// semirings acting on themselves.
inline SearchResult search_counterexample(const std::string& relation,
                                          const std::vector<Instance>& catalog,
                                          const SearchOptions& opt = {}) {
  // reject unknown relations before doing any work
  {
    bool known = false;
    for (const std::string& r : relation_ids()) known = known || r == relation;
    if (!known) throw InvalidParam("unknown counterexample relation '" + relation + "'");
  }
  SearchResult result;
  std::vector<const Instance*> ordered;
  for (const Instance& inst : catalog) ordered.push_back(&inst);
  std::sort(ordered.begin(), ordered.end(),
            [](const Instance* a, const Instance* b) { return sdetail::instance_order(*a, *b); });

  auto scan_instance = [&](const Instance& inst) -> bool {
    ++result.instances_examined;
    bool local = inst.semiring->local();
    std::vector<SubsemSet> range;
    if (!inst.subsemimodules.empty()) {
      for (const NamedSubsem& ns : inst.subsemimodules)
        if (ns.set.proper()) range.push_back(ns.set);
    } else {
      for (SubsemSet& sub : enumerate_subsemimodules(inst.module, opt.cap))
        if (sub.proper()) range.push_back(std::move(sub));
    }
    for (const SubsemSet& sub : range) {
      ++result.subsemimodules_examined;
      KeyValues witness;
      if (sdetail::exhibits(relation, sub, local, witness)) {
        result.found = true;
        result.hit = SearchHit{inst, sub.to_string(), sub.members(), std::move(witness)};
        return true;
      }
    }
    return false;
  };

  for (const Instance* inst : ordered) {
    if (opt.max_total_carrier > 0 &&
        inst->semiring->size() + inst->module->size() > opt.max_total_carrier)
      continue;
    if (scan_instance(*inst)) return result;
  }

  if (opt.random_samples > 0) {
    if (opt.random_min_size < 2 || opt.random_max_size < opt.random_min_size)
      throw InvalidParam("search_counterexample: bad random size bounds");
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> size_dist(opt.random_min_size, opt.random_max_size);
    for (long long i = 0; i < opt.random_samples;) {
      SemiringPtr s = random_semiring(rng, size_dist(rng));
      if (!s) continue;  // budget ran out on this draw; redraw
      ++i;
      Instance inst{"random-" + std::to_string(s->size()) + "-" + std::to_string(i),
                    s,
                    module_self(s),
                    {},
                    {},
                    {},
                    {}};
      if (opt.max_total_carrier > 0 &&
          inst.semiring->size() + inst.module->size() > opt.max_total_carrier)
        continue;
      if (scan_instance(inst)) return result;
    }
  }
  return result;
}

}  // namespace finsemi
