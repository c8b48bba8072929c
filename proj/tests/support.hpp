#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "typespace/builtins.hpp"
#include "typespace/serialization.hpp"
#include "typespace/simplicial_map.hpp"
#include "typespace/structures.hpp"

namespace typespace::testing {

inline std::string data_path(const std::string& file) { return std::string(TYPESPACE_TEST_DATA) + "/" + file; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline FinStructure load_structure(const std::string& name) {
  const auto path = data_path(name + ".json");
  return structure_from_json(parse_json(slurp(path), path));
}

inline const std::vector<std::string>& structure_names() {
  static const std::vector<std::string> names = {
      "single_point", "two_points", "edge",  "cycle3",     "path4",     "cycle5",  "k23",
      "order4",       "unary4",     "two_edges", "cycles_2_4", "equiv_123", "ternary"};
  return names;
}

inline ElementId id_of(const TruncatedSymSS& T, int n, const std::string& label) {
  auto t = T.find(n, label);
  if (!t) throw std::runtime_error("no element " + label + " at level " + std::to_string(n) + " of " + T.name());
  return *t;
}

/// dlo without the strict chain x1<x2<x3 and everything restricting to it.
inline TruncatedSymSS punctured_dlo(int D = 5) {
  const auto T = builtin("dlo", D);
  return puncture(T, 3, id_of(T, 3, "x1<x2<x3"));
}

/// equality without three pairwise distinct points.
inline TruncatedSymSS punctured_equality(int D = 5) {
  const auto T = builtin("equality", D);
  return puncture(T, 3, id_of(T, 3, "x1!=x2!=x3"));
}

/// Diagonal tuples of the representable functor on two points, with inclusion.
inline SimplicialMapHandle diagonal_inclusion(int D = 4) {
  const auto R = representable({"a", "b"}, D);
  std::vector<std::vector<bool>> keep;
  for (int n = 1; n <= D; ++n) {
    std::vector<bool> k(R.level_size(n), false);
    for (ElementId t = 0; t < k.size(); ++t) {
      const auto x = R.label(n, t);
      k[t] = x.find('a') == std::string::npos || x.find('b') == std::string::npos;
    }
    keep.push_back(std::move(k));
  }
  return subfunctor_inclusion(R, keep, "diagonal");
}

/// One point sent to the all-equal types of equality.
inline SimplicialMapHandle point_into_equality(int D) {
  const auto E = builtin("equality", D);
  const auto P = representable({"a"}, D);
  std::vector<std::vector<ElementId>> comps;
  for (int n = 1; n <= D; ++n) comps.push_back({E.act(FinSetMap(n, std::vector<int>(static_cast<std::size_t>(n), 0)), 0)});
  return SimplicialMapHandle("point->equality", P, E, std::move(comps));
}

/// Functors the equivalence and cohomology suites range over.
inline std::vector<TruncatedSymSS> corpus_functors() {
  std::vector<TruncatedSymSS> out = {builtin("equality", 6), builtin("dlo", 6),    builtin("random_graph", 6),
                                     builtin("vect_f2", 5),  builtin("point", 6),  punctured_dlo(6),
                                     punctured_equality(6),  representable({"a", "b"}, 6),
                                     classifying_space(cyclic_group(2), 6), classifying_space(cyclic_group(3), 6),
                                     diagonal_inclusion(6).source()};
  for (const auto& name : structure_names()) {
    auto th = orbit_theory(load_structure(name), 6).theory;
    out.push_back(TruncatedSymSS(th));
  }
  return out;
}

/// The corpus member's name, stable across runs.
inline std::string corpus_name(std::size_t i) {
  static const std::vector<std::string> fixed = {"equality",         "dlo",       "random_graph", "vect_f2",
                                                 "point",            "punctured_dlo", "punctured_equality",
                                                 "rep2",             "BZ2",       "BZ3",          "diagonal2"};
  if (i < fixed.size()) return fixed[i];
  return "orbit:" + structure_names()[i - fixed.size()];
}

}  // namespace typespace::testing
