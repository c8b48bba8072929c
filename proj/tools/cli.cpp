#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "typespace/axioms.hpp"
#include "typespace/builtins.hpp"
#include "typespace/cohomology.hpp"
#include "typespace/parallel.hpp"
#include "typespace/serialization.hpp"
#include "typespace/simplicial_map.hpp"
#include "typespace/stability.hpp"
#include "typespace/structures.hpp"

namespace typespace::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDotLimit = 200;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Levels a command needs beyond the default truncation.
int needed_levels(const CommandConfig& c) {
  if (c.command == "check-theory" || c.command == "check-bc") return c.bound.value_or(0);
  if (c.command == "check-vibrant") return c.bound ? *c.bound + 1 : 0;
  if (c.command == "cohomology") return c.max_degree + 4;
  if (c.command == "stability") {
    if (c.stability == "order-property") return 2 * c.N;
    if (c.stability == "indiscernible") return c.n * c.L;
    return c.m + c.n * c.L;
  }
  return 0;
}

struct Loaded {
  TruncatedSymSS T;
  std::optional<FinStructure> structure;
  std::optional<OrbitTheory> orbit;
};

TruncatedSymSS load_builtin(const std::string& name, int D, std::size_t cap) {
  const char* dir = std::getenv("TYPESPACE_CACHE_DIR");
  if (!dir || !*dir) return builtin(name, D, cap);
  const auto path = std::filesystem::path(dir) / (name + "-D" + std::to_string(D) + ".json");
  if (std::filesystem::exists(path)) return functor_from_json(parse_json(read_file(path.string()), path.string()));
  auto T = builtin(name, D, cap);
  std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  write_file(tmp, dump(functor_to_json(T, cap)));
  std::filesystem::rename(tmp, path);
  return T;
}

Loaded load_theory(const CommandConfig& c) {
  const int want = needed_levels(c);
  auto pick_dim = [&](int fallback) {
    if (c.max_dim) {
      if (*c.max_dim < 1) throw UsageError("--max-dim must be positive");
      if (want > *c.max_dim) {
        throw UsageError("--max-dim " + std::to_string(*c.max_dim) + " is below the " + std::to_string(want) +
                         " levels this command needs");
      }
      return *c.max_dim;
    }
    return std::max(fallback, want);
  };
  if (!c.structure.empty()) {
    auto M = structure_from_json(parse_json(read_file(c.structure), c.structure));
    auto orbit = orbit_theory(M, pick_dim(4), c.cap);
    auto T = orbit.theory;
    return {std::move(T), std::move(M), std::move(orbit)};
  }
  if (!c.functor.empty()) {
    auto T = functor_from_json(parse_json(read_file(c.functor), c.functor));
    if (want > T.max_dim()) throw UsageError("functor truncation is below the levels this command needs");
    return {std::move(T), std::nullopt, std::nullopt};
  }
  std::string name = c.builtin;
  if (name.empty() && !c.theory.empty()) {
    const auto& names = builtin_names();
    if (std::find(names.begin(), names.end(), c.theory) != names.end()) {
      name = c.theory;
    } else {
      auto T = functor_from_json(parse_json(read_file(c.theory), c.theory));
      return {std::move(T), std::nullopt, std::nullopt};
    }
  }
  if (name.empty()) throw UsageError("no theory given (use --builtin, --theory, --structure or --functor)");
  return {load_builtin(name, pick_dim(default_max_dim(name)), c.cap), std::nullopt, std::nullopt};
}

/// Finds an element by label, trying shorthand normalization. level 0 = any level.
std::pair<int, ElementId> resolve(const TruncatedSymSS& T, const std::string& text, int level = 0) {
  for (const auto& cand : {text, normalize_label(text)}) {
    for (int n = level ? level : 1; n <= (level ? level : T.max_dim()); ++n) {
      if (auto id = T.find(n, cand)) return {n, *id};
    }
  }
  throw std::invalid_argument("no element labelled '" + text + "' in " + T.name());
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.check << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
  for (const auto& [k, v] : r.stats) os << "  " << k << ": " << v << "\n";
  for (const auto& w : r.witnesses) {
    os << "  witness " << w.condition;
    for (const auto& [k, v] : w.params) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& e : w.elements) {
      os << "    " << e.role << " [level " << e.level << " #" << e.id << "] " << e.label << "\n";
    }
    for (const auto& m : w.maps) os << "    map " << m << "\n";
  }
  return os.str();
}

class Output {
 public:
  Output(const CommandConfig& c, std::ostream& out) : config_(c), out_(out) {}
  ~Output() = default;

  void text(const std::string& s) {
    if (config_.output.empty()) {
      out_ << s;
    } else {
      write_file(config_.output, s);
    }
  }
  int report(const Report& r) {
    if (config_.format == "text") {
      text(render_text(r));
    } else {
      text(dump(report_to_json(r)));
    }
    return r.pass ? kExitPass : kExitFail;
  }

 private:
  const CommandConfig& config_;
  std::ostream& out_;
};

SimplicialMapHandle load_map(const CommandConfig& c, const Loaded* loaded) {
  if (!c.map_file.empty()) return map_from_json(parse_json(read_file(c.map_file), c.map_file), c.cap);
  if (loaded && loaded->orbit) return loaded->orbit->projection;
  if (loaded) return head_projection(loaded->T, 1, 0);
  throw UsageError("no map given (use --map-file or --structure)");
}

int cmd_info(const CommandConfig& c, Output& out) {
  const auto th = load_theory(c);
  const auto& T = th.T;
  const auto v = validate_functor(T);
  if (c.format == "text") {
    std::ostringstream os;
    os << "name: " << T.name() << "\nmax_dim: " << T.max_dim() << "\n";
    for (int n = 1; n <= T.max_dim(); ++n) os << "level " << n << ": " << T.level_size(n) << "\n";
    os << "validate_functor: " << (v.pass ? "pass" : "FAIL") << "\n";
    out.text(os.str());
  } else {
    Json j{{"schema", kReportSchema},
           {"check", "info"},
           {"name", T.name()},
           {"max_dim", T.max_dim()},
           {"level_sizes", T.level_sizes()},
           {"validation", report_to_json(v)}};
    out.text(dump(j));
  }
  return v.pass ? kExitPass : kExitFail;
}

int cmd_export_dot(const CommandConfig& c, Output& out) {
  const auto th = load_theory(c);
  const auto& T = th.T;
  std::ostringstream os;
  os << "digraph \"" << T.name() << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  int top = 0;
  for (int n = 1; n <= T.max_dim() && T.level_size(n) <= kDotLimit; ++n) top = n;
  auto quote = [](const std::string& s) {
    std::string q;
    for (char ch : s) {
      if (ch == '"' || ch == '\\') q += '\\';
      q += ch;
    }
    return q;
  };
  for (int n = 1; n <= top; ++n) {
    os << "  subgraph level" << n << " {\n    rank=same;\n";
    for (ElementId t = 0; t < T.level_size(n); ++t) {
      os << "    \"L" << n << "_" << t << "\" [label=\"" << quote(T.label(n, t)) << "\"];\n";
    }
    os << "  }\n";
  }
  for (int n = 2; n <= top; ++n) {
    std::map<std::pair<ElementId, ElementId>, std::string> edges;
    for (int i = 0; i < n; ++i) {
      const auto face = T.induced_map(FinSetMap::skip(n, i));
      for (ElementId t = 0; t < face.size(); ++t) {
        auto& lbl = edges[{t, face[t]}];
        lbl += (lbl.empty() ? "d" : ",d") + std::to_string(i + 1);
      }
    }
    for (const auto& [e, lbl] : edges) {
      os << "  \"L" << n << "_" << e.first << "\" -> \"L" << n - 1 << "_" << e.second << "\" [label=\"" << lbl << "\"];\n";
    }
  }
  os << "}\n";
  out.text(os.str());
  return kExitPass;
}

int cmd_stability(const CommandConfig& c, Output& out) {
  const auto th = load_theory(c);
  const auto& T = th.T;
  if (c.stability == "order-property") {
    if (!c.phi) throw UsageError("order-property needs --phi");
    std::vector<ElementId> elems;
    int level = 0;
    if (!c.phi->empty()) {
      for (const auto& part : split(*c.phi, '|')) {
        auto [n, id] = resolve(T, part, level);
        level = n;
        elems.push_back(id);
      }
    }
    const auto phi = make_definable_set(T, level ? level : 2, elems);
    return out.report(to_report(order_property(T, phi, c.N), T, phi, c.N));
  }
  if (c.stability == "indiscernible") return out.report(to_report(indiscernible_gap(T, c.n, c.L), c.n, c.L));
  if (c.stability == "divides") {
    if (c.p.empty()) throw UsageError("divides needs --p");
    auto [level, p] = resolve(T, c.p);
    const int n = level - c.m;
    auto r = divides_at_level(T, p, c.m, n, c.L, c.k);
    return out.report(to_report(r, T, p, c.m, n, c.L, c.k));
  }
  throw UsageError("unknown stability test '" + c.stability + "'");
}

int cmd_cohomology(const CommandConfig& c, Output& out) {
  if (c.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  const int K = c.max_degree + 2;
  std::optional<SimplicialMapHandle> base;
  CochainComplex cx;
  if (!c.base_map.empty()) {
    base = map_from_json(parse_json(read_file(c.base_map), c.base_map), c.cap);
    cx = build_complex(base->target(), K, base);
  } else {
    const auto th = load_theory(c);
    cx = build_complex(th.T, K);
  }
  const auto H = cohomology(cx);
  if (c.format == "text") {
    std::ostringstream os;
    os << "cohomology of " << cx.name << " (truncation " << cx.truncation << ")\n";
    for (const auto& h : H) {
      os << "  H^" << h.degree << ": rank " << h.rank;
      if (!h.torsion.empty()) {
        os << ", torsion";
        for (const auto& t : h.torsion) os << " Z/" << t;
      }
      os << "\n";
    }
    out.text(os.str());
  } else {
    out.text(dump(cohomology_to_json(H, cx)));
  }
  return kExitPass;
}

int cmd_quotient(const CommandConfig& c, Output& out) {
  if (c.structure.empty()) throw UsageError("quotient needs --structure");
  if (c.relation.empty()) throw UsageError("quotient needs --relation (level-2 orbit labels separated by '|')");
  const auto M = structure_from_json(parse_json(read_file(c.structure), c.structure));
  const auto th = orbit_theory(M, 2, c.cap);
  std::vector<ElementId> elems;
  for (const auto& part : split(c.relation, '|')) elems.push_back(resolve(th.theory, part, 2).second);
  const auto q = definable_quotient(M, th, make_definable_set(th.theory, 2, elems));
  Json j = structure_to_json(q.structure);
  j["map"] = q.map;
  out.text(dump(j));
  return kExitPass;
}

int dispatch(const CommandConfig& c, std::ostream& out_stream) {
  Output out(c, out_stream);
  const auto& cmd = c.command;
  if (cmd == "build") {
    const auto th = load_theory(c);
    out.text(dump(functor_to_json(th.T, c.cap)));
    return kExitPass;
  }
  if (cmd == "info") return cmd_info(c, out);
  if (cmd == "export-dot") return cmd_export_dot(c, out);
  if (cmd == "check-theory" || cmd == "check-bc") {
    const auto th = load_theory(c);
    const int bound = c.bound.value_or(std::min(5, th.T.max_dim()));
    return out.report(cmd == "check-theory" ? check_theory(th.T, bound, c.workers) : check_beck_chevalley(th.T, bound));
  }
  if (cmd == "check-vibrant") {
    std::optional<Loaded> th;
    if (c.map_file.empty()) th = load_theory(c);
    const auto F = load_map(c, th ? &*th : nullptr);
    return out.report(check_vibrant(F, c.bound.value_or(std::min(4, F.levels()))));
  }
  if (cmd == "check-model") {
    std::optional<Loaded> th;
    if (c.map_file.empty()) {
      if (c.structure.empty()) throw UsageError("check-model needs --structure or --map-file");
      th = load_theory(c);
    }
    const auto F = load_map(c, th ? &*th : nullptr);
    return out.report(check_model(F, c.bound.value_or(std::min(3, F.levels())), parse_model_mode(c.mode)));
  }
  if (cmd == "stability") return cmd_stability(c, out);
  if (cmd == "cohomology") return cmd_cohomology(c, out);
  if (cmd == "quotient") return cmd_quotient(c, out);
  throw UsageError("unknown subcommand '" + cmd + "'");
}

}  // namespace

std::string normalize_label(const std::string& text) {
  static const std::map<std::string, std::string> aliases{
      {"<", "x1<x2"}, {">", "x2<x1"}, {"=", "x1=x2"}, {"!=", "x1!=x2"}, {"≠", "x1!=x2"}};
  if (auto it = aliases.find(text); it != aliases.end()) return it->second;
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "≠") == 0) {
      s += "!=";
      i += 2;
      continue;
    }
    const char ch = text[i];
    const bool next_digit = i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
    const bool prev_alpha = i > 0 && std::isalpha(static_cast<unsigned char>(text[i - 1]));
    if (!next_digit && !prev_alpha && (ch == 'x' || ch == 'y' || ch == 'z')) {
      const bool next_alpha = i + 1 < text.size() && std::isalpha(static_cast<unsigned char>(text[i + 1]));
      if (!next_alpha) {
        s += "x" + std::to_string(ch - 'x' + 1);
        continue;
      }
    }
    s += ch;
  }
  return s;
}

std::optional<CommandConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                        int* exit_code) {
  CommandConfig c;
  CLI::App app{"typespace: type-space functors of first-order theories"};
  app.require_subcommand(1);
  app.fallthrough();
  int max_dim = 0;
  int bound = 0;
  std::string phi;
  bool phi_given = false;
  app.add_option("--builtin", c.builtin, "builtin theory")->check(CLI::IsMember(builtin_names()));
  app.add_option("--theory", c.theory, "builtin name or functor JSON file");
  app.add_option("--structure", c.structure, "finite structure JSON file");
  app.add_option("--functor", c.functor, "functor JSON file");
  app.add_option("--map-file", c.map_file, "simplicial map JSON file");
  app.add_option("--base-map", c.base_map, "map into a decalage, for cohomology");
  app.add_option("--max-dim", max_dim, "truncation D");
  app.add_option("--bound", bound, "check bound B");
  app.add_option("--mode", c.mode, "check-model mode")->check(CLI::IsMember({"saturated", "tv", "tarski_vaught"}));
  app.add_option_function<std::string>("--phi", [&](const std::string& s) { phi = s, phi_given = true; },
                                       "formula as element labels separated by '|'");
  app.add_option("--N", c.N, "order property length");
  app.add_option("--n", c.n, "tuple width");
  app.add_option("--L", c.L, "sequence length");
  app.add_option("--k", c.k, "consistency arity");
  app.add_option("--m", c.m, "x-block width for divides");
  app.add_option("--p", c.p, "type label for divides");
  app.add_option("--relation", c.relation, "equivalence as level-2 labels separated by '|'");
  app.add_option("--max-degree", c.max_degree, "highest cohomology degree");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("--cap", c.cap, "per-level element cap");
  app.add_option("--workers", c.workers, "worker threads (0 = all cores)");
  app.add_option("--output", c.output, "write the report to a file");

  const std::pair<const char*, const char*> commands[] = {
      {"build", "construct a functor and write it as JSON"},
      {"info", "level sizes and validation summary"},
      {"check-theory", "amalgamation up to --bound"},
      {"check-bc", "Beck-Chevalley up to --bound"},
      {"check-vibrant", "lifting for the map in --map-file"},
      {"check-model", "orbit projection of --structure into its theory"},
      {"cohomology", "decalage cohomology up to --max-degree"},
      {"quotient", "quotient of --structure by --relation"},
      {"export-dot", "restriction graph of the small levels"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();
  auto* stab = app.add_subcommand("stability", "stability tests");
  stab->fallthrough();
  stab->require_subcommand(1);
  stab->add_subcommand("order-property", "search for the order pattern of --phi")->fallthrough();
  stab->add_subcommand("indiscernible", "order-coherent but not permutation-invariant sequences")->fallthrough();
  stab->add_subcommand("divides", "dividing of --p at length --L")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    *exit_code = code == 0 ? kExitPass : kExitError;
    return std::nullopt;
  }
  auto* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  if (c.command == "stability") c.stability = stab->get_subcommands().front()->get_name();
  if (max_dim) c.max_dim = max_dim;
  if (bound) c.bound = bound;
  if (phi_given) c.phi = phi;
  c.workers = resolve_workers(c.workers);
  return c;
}

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format == "dot" && config.command != "export-dot") throw UsageError("--format dot is only for export-dot");
    return dispatch(config, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace typespace::cli
