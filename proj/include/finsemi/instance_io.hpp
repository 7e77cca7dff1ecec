#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "finsemi/catalog.hpp"
#include "finsemi/constructions.hpp"
#include "finsemi/instance.hpp"
#include "finsemi/search.hpp"
#include "finsemi/theorems.hpp"

namespace finsemi {

using nlohmann::json;

namespace io_detail {

inline std::vector<Elem> elem_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of carrier indices");
  std::vector<Elem> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(where + ": expected integer indices");
    out.push_back(v.get<Elem>());
  }
  return out;
}

inline ElemSet elem_set(const json& j, int universe, const std::string& where) {
  ElemSet out(universe);
  for (Elem e : elem_vector(j, where)) {
    if (e < 0 || e >= universe) throw ParseError(where + ": index out of range");
    out.insert(e);
  }
  return out;
}

inline std::vector<std::string> label_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of labels");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace io_detail

inline SemiringPtr semiring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("semiring: expected an object with a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "boolean") return make_boolean();
  if (kind == "zmod") return make_zmod(j.at("n").get<int>());
  if (kind == "ntrunc") return make_ntrunc(j.at("r").get<int>(), j.at("d").get<int>());
  if (kind == "product") {
    const auto& factors = j.at("factors");
    if (!factors.is_array() || factors.size() != 2)
      throw ParseError("semiring product: expected exactly two factors");
    return make_product(semiring_from_json(factors[0]), semiring_from_json(factors[1]));
  }
  if (kind == "tables") {
    auto labels = io_detail::label_vector(j.at("labels"), "semiring labels");
    return FiniteSemiring::create(
        j.value("name", std::string("semiring")), labels,
        io_detail::elem_vector(j.at("add"), "semiring add"),
        io_detail::elem_vector(j.at("mul"), "semiring mul"), j.at("zero").get<Elem>(),
        j.at("one").get<Elem>());
  }
  throw ParseError("semiring: unknown kind '" + kind + "'");
}

inline SemimodulePtr module_from_json(const json& j, const SemiringPtr& s) {
  if (!j.is_object() || !j.contains("kind"))
    throw ParseError("module: expected an object with a 'kind' field");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "self") return module_self(s);
  if (kind == "zmod-action") return module_zmod_action(s, j.at("n").get<int>());
  if (kind == "product") {
    const auto& factors = j.at("factors");
    if (!factors.is_array() || factors.size() != 2)
      throw ParseError("module product: expected exactly two factors");
    return module_product(module_from_json(factors[0], s), module_from_json(factors[1], s));
  }
  if (kind == "tables") {
    auto labels = io_detail::label_vector(j.at("labels"), "module labels");
    return FiniteSemimodule::create(
        j.value("name", std::string("module")), s, labels,
        io_detail::elem_vector(j.at("add"), "module add"), j.at("zero").get<Elem>(),
        io_detail::elem_vector(j.at("action"), "module action"));
  }
  throw ParseError("module: unknown kind '" + kind + "'");
}

namespace io_detail {

inline ElemSet named_set(const json& j, int universe, const std::string& where) {
  if (j.contains("members")) return elem_set(j.at("members"), universe, where + " members");
  if (j.contains("generators")) return elem_set(j.at("generators"), universe, where + " generators");
  throw ParseError(where + ": expected 'members' or 'generators'");
}

}  // namespace io_detail

inline Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected an object");
  if (!j.contains("semiring")) throw ParseError("instance: missing 'semiring'");
  if (!j.contains("module")) throw ParseError("instance: missing 'module'");
  Instance inst;
  inst.name = j.value("name", std::string("instance"));
  inst.semiring = semiring_from_json(j.at("semiring"));
  inst.module = module_from_json(j.at("module"), inst.semiring);

  if (j.contains("subsemimodules")) {
    for (const auto& [name, node] : j.at("subsemimodules").items()) {
      ElemSet set = io_detail::named_set(node, inst.module->size(), "subsemimodule " + name);
      SubsemSet sub = node.contains("generators")
                          ? subsemimodule_generated(inst.module, set)
                          : SubsemSet::checked(inst.module, set);
      inst.subsemimodules.push_back({name, std::move(sub)});
    }
  }
  if (j.contains("ideals")) {
    for (const auto& [name, node] : j.at("ideals").items()) {
      ElemSet set = io_detail::named_set(node, inst.semiring->size(), "ideal " + name);
      IdealSet ideal = node.contains("generators") ? ideal_generated(inst.semiring, set)
                                                   : IdealSet::checked(inst.semiring, set);
      inst.ideals.push_back({name, std::move(ideal)});
    }
  }
  if (j.contains("tsets")) {
    for (const auto& [name, node] : j.at("tsets").items()) {
      ElemSet set = io_detail::named_set(node, inst.semiring->size(), "tset " + name);
      MultClosedSet t = node.contains("generators")
                            ? MultClosedSet::closure(inst.semiring, set)
                            : MultClosedSet::checked(inst.semiring, set);
      inst.tsets.push_back({name, std::move(t)});
    }
  }
  if (j.contains("homs")) {
    for (const auto& [name, node] : j.at("homs").items()) {
      if (!node.is_object() || !node.contains("map"))
        throw ParseError("hom " + name + ": expected an object with a 'map'");
      SemimodulePtr target = node.contains("target")
                                 ? module_from_json(node.at("target"), inst.semiring)
                                 : inst.module;
      inst.homs.push_back(
          {name, HomTable::checked(inst.module, target,
                                   io_detail::elem_vector(node.at("map"), "hom " + name))});
    }
  }
  return inst;
}

inline json semiring_to_json(const SemiringPtr& s) {
  return json{{"kind", "tables"}, {"name", s->name()},     {"labels", s->labels()},
              {"add", s->add_table()}, {"mul", s->mul_table()}, {"zero", s->zero()},
              {"one", s->one()}};
}

inline json module_to_json(const SemimodulePtr& m) {
  return json{{"kind", "tables"},      {"name", m->name()},
              {"labels", m->labels()}, {"add", m->add_table()},
              {"zero", m->zero()},     {"action", m->action_table()}};
}

/// Serializes with explicit tables; parsing the result reproduces the same
/// tables bit for bit.
inline json instance_to_json(const Instance& inst) {
  json j{{"name", inst.name},
         {"semiring", semiring_to_json(inst.semiring)},
         {"module", module_to_json(inst.module)}};
  if (!inst.subsemimodules.empty()) {
    json subs = json::object();
    for (const auto& ns : inst.subsemimodules)
      subs[ns.name] = json{{"members", ns.set.members().members()}};
    j["subsemimodules"] = std::move(subs);
  }
  if (!inst.ideals.empty()) {
    json ideals = json::object();
    for (const auto& ni : inst.ideals)
      ideals[ni.name] = json{{"members", ni.set.members().members()}};
    j["ideals"] = std::move(ideals);
  }
  if (!inst.tsets.empty()) {
    json tsets = json::object();
    for (const auto& nt : inst.tsets)
      tsets[nt.name] = json{{"members", nt.set.members().members()}};
    j["tsets"] = std::move(tsets);
  }
  if (!inst.homs.empty()) {
    json homs = json::object();
    for (const auto& nh : inst.homs) {
      json h{{"map", nh.hom.map()}};
      if (nh.hom.target() != inst.module) h["target"] = module_to_json(nh.hom.target());
      homs[nh.name] = std::move(h);
    }
    j["homs"] = std::move(homs);
  }
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return j;
}

inline Instance parse_instance(const std::string& path) {
  try {
    return instance_from_json(load_json_file(path));
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

inline std::vector<Instance> parse_catalog(const std::string& path) {
  json j = load_json_file(path);
  try {
    if (!j.is_object() || !j.contains("instances"))
      throw ParseError("catalog: expected an object with an 'instances' array");
    std::vector<Instance> out;
    for (const auto& node : j.at("instances")) out.push_back(instance_from_json(node));
    return out;
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

inline json keyvalues_to_json(const KeyValues& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json j{{"status", to_string(v.status)}};
  j["witness"] = v.witness.empty() ? json() : keyvalues_to_json(v.witness);
  if (!v.hypotheses.empty()) j["hypotheses"] = keyvalues_to_json(v.hypotheses);
  return j;
}

inline json verify_report_to_json(const std::string& instance_name,
                                  const std::vector<std::pair<std::string, Verdict>>& results) {
  json rows = json::array();
  int pass = 0, fail = 0, vacuous = 0;
  for (const auto& [id, verdict] : results) {
    json row = verdict_to_json(verdict);
    row["theorem"] = id;
    row["statement"] = theorem_entry(id).statement;
    rows.push_back(std::move(row));
    if (verdict.status == Status::Pass) ++pass;
    else if (verdict.status == Status::Fail) ++fail;
    else ++vacuous;
  }
  return json{{"instance", instance_name},
              {"results", std::move(rows)},
              {"summary", {{"pass", pass}, {"fail", fail}, {"vacuous", vacuous}}}};
}

inline json sweep_report_to_json(const SweepReport& report) {
  json rows = json::array();
  for (const SweepCell& cell : report.cells) {
    json row;
    if (cell.error.empty()) {
      row = verdict_to_json(cell.verdict);
    } else {
      row = json{{"status", "ERROR"}, {"error", cell.error}};
    }
    row["instance"] = cell.instance;
    row["theorem"] = cell.theorem;
    rows.push_back(std::move(row));
  }
  return json{{"results", std::move(rows)},
              {"summary",
               {{"pass", report.pass},
                {"fail", report.fail},
                {"vacuous", report.vacuous},
                {"error", report.errors}}}};
}

inline json classification_to_json(const Instance& inst, const std::string& name,
                                   const SubsemSet& sub, const ClassificationRecord& rec) {
  auto pred = [&](const std::optional<PredicateResult>& p) -> json {
    if (!p) return json();
    json j{{"holds", p->holds}};
    if (!p->holds) {
      json w = json::array();
      for (std::size_t i = 0; i < p->witness.size(); ++i) {
        bool is_module = i + 1 == p->witness.size();
        w.push_back(is_module ? inst.module->label(p->witness[i])
                              : inst.semiring->label(p->witness[i]));
      }
      j["witness"] = std::move(w);
    }
    return j;
  };
  json tz = json::array();
  for (const TripleZero& t : rec.triple_zeros)
    tz.push_back(json::array({inst.semiring->label(t.a), inst.semiring->label(t.b),
                              inst.module->label(t.m)}));
  return json{{"instance", inst.name},
              {"subsemimodule", name},
              {"members", sub.members().members()},
              {"record",
               {{"proper", rec.proper},
                {"prime", pred(rec.prime)},
                {"one_absorbing", pred(rec.one_absorbing)},
                {"weakly_one_absorbing", pred(rec.weakly_one_absorbing)},
                {"subtractive", rec.subtractive},
                {"strong", rec.strong},
                {"triple_zeros", std::move(tz)}}}};
}

inline json search_result_to_json(const std::string& relation, const SearchResult& result) {
  json j{{"relation", relation},
         {"found", result.found},
         {"instances_examined", result.instances_examined},
         {"subsemimodules_examined", result.subsemimodules_examined}};
  if (result.found) {
    j["instance"] = instance_to_json(result.hit->instance);
    j["subsemimodule"] = result.hit->subsemimodule_mask.members();
    j["witness"] = keyvalues_to_json(result.hit->witness);
  }
  return j;
}

}  // namespace finsemi
