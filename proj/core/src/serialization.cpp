#include "typespace/serialization.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "typespace/builtins.hpp"

namespace typespace {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw FormatError(path + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, "missing field '" + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

int int_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

std::vector<ElementId> table_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<ElementId> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_unsigned()) bad(path + "[" + std::to_string(i) + "]", "expected a nonnegative integer");
    out.push_back(j[i].get<ElementId>());
  }
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto last_nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto col = last_nl == std::string::npos ? upto : upto - last_nl - 1;
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

Json functor_to_json(const TruncatedSymSS& T, std::size_t cap) {
  const auto M = materialize(T, cap);
  const auto g = generator_tables(M);
  Json levels = Json::array();
  for (int n = 1; n <= M.max_dim(); ++n) {
    Json lv = Json::array();
    for (ElementId t = 0; t < M.level_size(n); ++t) lv.push_back(M.label(n, t));
    levels.push_back(std::move(lv));
  }
  Json j;
  j["schema"] = kFunctorSchema;
  j["name"] = T.name();
  j["max_dim"] = T.max_dim();
  j["levels"] = std::move(levels);
  j["action"] = {{"swap", g.swap}, {"forget_last", g.forget_last}, {"dup_last", g.dup_last}};
  return j;
}

TruncatedSymSS functor_from_json(const Json& j) {
  const std::string root = "functor";
  if (auto it = j.find("schema"); it != j.end() && *it != kFunctorSchema) bad(root + ".schema", "unsupported schema");
  const int D = int_at(field(j, "max_dim", root), root + ".max_dim");
  const auto& lv = array_at(field(j, "levels", root), root + ".levels");
  if (D < 1 || lv.size() != static_cast<std::size_t>(D)) bad(root + ".levels", "expected max_dim levels");
  std::vector<std::vector<std::string>> labels;
  for (std::size_t n = 0; n < lv.size(); ++n) {
    const auto path = root + ".levels[" + std::to_string(n) + "]";
    std::vector<std::string> names;
    for (const auto& x : array_at(lv[n], path)) {
      if (!x.is_string()) bad(path, "labels must be strings");
      names.push_back(x.get<std::string>());
    }
    labels.push_back(std::move(names));
  }
  const auto& act = field(j, "action", root);
  GeneratorTables g;
  auto per_level = [&](const std::string& key) {
    const auto path = root + ".action." + key;
    const auto& a = array_at(field(act, key, root + ".action"), path);
    if (a.size() != static_cast<std::size_t>(D)) bad(path, "expected one entry per level");
    return std::pair<const Json&, std::string>(a, path);
  };
  {
    auto [a, path] = per_level("swap");
    for (std::size_t n = 0; n < a.size(); ++n) {
      std::vector<std::vector<ElementId>> tabs;
      const auto p = path + "[" + std::to_string(n) + "]";
      for (std::size_t i = 0; i < array_at(a[n], p).size(); ++i) {
        tabs.push_back(table_from_json(a[n][i], p + "[" + std::to_string(i) + "]"));
      }
      g.swap.push_back(std::move(tabs));
    }
  }
  for (auto* key : {"forget_last", "dup_last"}) {
    auto [a, path] = per_level(key);
    auto& dst = std::string(key) == "forget_last" ? g.forget_last : g.dup_last;
    for (std::size_t n = 0; n < a.size(); ++n) dst.push_back(table_from_json(a[n], path + "[" + std::to_string(n) + "]"));
  }
  std::string name = "functor";
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  try {
    return TruncatedSymSS::from_tables(std::move(name), std::move(labels), std::move(g));
  } catch (const std::invalid_argument& e) {
    bad(root + ".action", e.what());
  }
}

TruncatedSymSS functor_ref_from_json(const Json& j, std::size_t cap) {
  if (j.is_object() && j.contains("builtin")) {
    const auto& b = j["builtin"];
    if (!b.is_string()) bad("builtin", "expected a theory name");
    const int D = j.contains("max_dim") ? int_at(j["max_dim"], "max_dim") : 0;
    auto T = builtin(b.get<std::string>(), D, cap);
    const int s = j.contains("shift") ? int_at(j["shift"], "shift") : 0;
    return s > 0 ? decalage(T, s) : T;
  }
  return functor_from_json(j);
}

Json map_to_json(const SimplicialMapHandle& F, std::size_t cap) {
  Json j;
  j["schema"] = kMapSchema;
  j["name"] = F.name();
  j["source"] = functor_to_json(F.source(), cap);
  j["target"] = functor_to_json(F.target(), cap);
  Json comps = Json::array();
  for (int n = 1; n <= F.levels(); ++n) comps.push_back(F.component(n));
  j["components"] = std::move(comps);
  if (const auto& a = F.augmentation()) {
    j["augmentation"] = {{"source_size", a->source_size},
                         {"target_size", a->target_size},
                         {"component", a->component},
                         {"source_restrict", a->source_restrict},
                         {"target_restrict", a->target_restrict}};
  }
  return j;
}

SimplicialMapHandle map_from_json(const Json& j, std::size_t cap) {
  const std::string root = "map";
  auto source = functor_ref_from_json(field(j, "source", root), cap);
  auto target = functor_ref_from_json(field(j, "target", root), cap);
  const auto& c = array_at(field(j, "components", root), root + ".components");
  std::vector<std::vector<ElementId>> comps;
  for (std::size_t n = 0; n < c.size(); ++n) {
    comps.push_back(table_from_json(c[n], root + ".components[" + std::to_string(n) + "]"));
  }
  std::string name = "map";
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  std::optional<SimplicialMapHandle> F;
  try {
    F.emplace(std::move(name), std::move(source), std::move(target), std::move(comps));
  } catch (const std::invalid_argument& e) {
    bad(root + ".components", e.what());
  }
  if (auto it = j.find("augmentation"); it != j.end()) {
    const std::string where = root + ".augmentation";
    Augmentation a;
    try {
      a.source_size = field(*it, "source_size", where).get<std::size_t>();
      a.target_size = field(*it, "target_size", where).get<std::size_t>();
    } catch (const Json::exception&) {
      bad(where, "sizes must be nonnegative integers");
    }
    a.component = table_from_json(field(*it, "component", where), where + ".component");
    for (const char* key : {"source_restrict", "target_restrict"}) {
      const auto& arr = array_at(field(*it, key, where), where + "." + key);
      auto& dst = std::string(key) == "source_restrict" ? a.source_restrict : a.target_restrict;
      for (std::size_t n = 0; n < arr.size(); ++n) {
        dst.push_back(table_from_json(arr[n], where + "." + key + "[" + std::to_string(n) + "]"));
      }
    }
    try {
      F->set_augmentation(std::move(a));
    } catch (const std::invalid_argument& e) {
      bad(where, e.what());
    }
  }
  return std::move(*F);
}

Json structure_to_json(const FinStructure& M) {
  Json rels = Json::object();
  for (const auto& [name, r] : M.relations) {
    Json tuples = Json::array();
    for (const auto& t : r.tuples) {
      Json row = Json::array();
      for (int x : t) row.push_back(M.domain[static_cast<std::size_t>(x)]);
      tuples.push_back(std::move(row));
    }
    rels[name] = {{"arity", r.arity}, {"tuples", std::move(tuples)}};
  }
  return {{"domain", M.domain}, {"relations", std::move(rels)}};
}

FinStructure structure_from_json(const Json& j) {
  const std::string root = "structure";
  const auto& dom = array_at(field(j, "domain", root), root + ".domain");
  std::vector<std::string> domain;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    const auto path = root + ".domain[" + std::to_string(i) + "]";
    if (!dom[i].is_string()) bad(path, "point names must be strings");
    auto name = dom[i].get<std::string>();
    if (!index.emplace(name, static_cast<int>(i)).second) bad(path, "repeated point '" + name + "'");
    domain.push_back(std::move(name));
  }
  if (domain.empty()) bad(root + ".domain", "domain must be nonempty");
  std::map<std::string, Relation> rels;
  if (auto it = j.find("relations"); it != j.end()) {
    if (!it->is_object()) bad(root + ".relations", "expected an object");
    for (const auto& [name, body] : it->items()) {
      const auto path = root + ".relations." + name;
      Relation r;
      r.arity = int_at(field(body, "arity", path), path + ".arity");
      if (r.arity < 1) bad(path + ".arity", "arity must be positive");
      const auto& tuples = array_at(field(body, "tuples", path), path + ".tuples");
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto tp = path + ".tuples[" + std::to_string(t) + "]";
        const auto& row = array_at(tuples[t], tp);
        if (row.size() != static_cast<std::size_t>(r.arity)) {
          bad(tp, "tuple of length " + std::to_string(row.size()) + " in relation of arity " + std::to_string(r.arity));
        }
        std::vector<int> tuple;
        for (const auto& x : row) {
          if (!x.is_string()) bad(tp, "tuple entries must be point names");
          auto found = index.find(x.get<std::string>());
          if (found == index.end()) bad(tp, "unknown point '" + x.get<std::string>() + "'");
          tuple.push_back(found->second);
        }
        r.tuples.push_back(std::move(tuple));
      }
      rels.emplace(name, std::move(r));
    }
  }
  return make_structure(std::move(domain), std::move(rels));
}

Json report_to_json(const Report& r) {
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json els = Json::array();
    for (const auto& e : w.elements) els.push_back({{"role", e.role}, {"level", e.level}, {"id", e.id}, {"label", e.label}});
    ws.push_back({{"condition", w.condition}, {"params", w.params}, {"elements", std::move(els)}, {"maps", w.maps}});
  }
  return {{"schema", kReportSchema}, {"check", r.check}, {"pass", r.pass}, {"stats", r.stats}, {"witnesses", std::move(ws)}};
}

Json cohomology_to_json(const std::vector<CohomologyGroup>& groups, const CochainComplex& c) {
  Json degrees = Json::array();
  for (const auto& h : groups) {
    Json torsion = Json::array();
    for (const auto& t : h.torsion) {
      if (t <= std::numeric_limits<std::int64_t>::max()) torsion.push_back(static_cast<std::int64_t>(t));
      else torsion.push_back(t.str());
    }
    degrees.push_back({{"degree", h.degree}, {"rank", h.rank}, {"torsion", std::move(torsion)}, {"truncation", h.truncation}});
  }
  Json cochains = Json::array();
  for (int q = 0; q < c.degrees(); ++q) cochains.push_back(c.rank(q));
  return {{"schema", kReportSchema},
          {"check", "cohomology"},
          {"functor", c.name},
          {"truncation", c.truncation},
          {"cochain_ranks", std::move(cochains)},
          {"degrees", std::move(degrees)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace typespace
