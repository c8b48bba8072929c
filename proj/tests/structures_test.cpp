#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "support.hpp"
#include "typespace/axioms.hpp"
#include "typespace/structures.hpp"

using namespace typespace;
using namespace typespace::testing;

namespace {

// Every permutation of the domain that maps each relation onto itself.
std::vector<Permutation> brute_force_automorphisms(const FinStructure& M) {
  std::vector<int> p(static_cast<std::size_t>(M.size()));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto& [name, r] : M.relations) {
      for (const auto& t : r.tuples) {
        std::vector<int> u;
        for (int x : t) u.push_back(p[static_cast<std::size_t>(x)]);
        ok = ok && M.holds(name, u);
      }
    }
    if (ok) out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_force_orbits(const FinStructure& M, int n) {
  const auto G = brute_force_automorphisms(M);
  std::set<std::vector<int>> reps;
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (;;) {
    auto best = t;
    for (const auto& g : G) {
      std::vector<int> u;
      for (int x : t) u.push_back(g(x));
      best = std::min(best, u);
    }
    reps.insert(best);
    int i = n - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == M.size() - 1) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return reps.size();
}

DefinableSet by_labels(const TruncatedSymSS& T, int n, const std::vector<std::string>& labels) {
  std::vector<ElementId> ids;
  for (const auto& l : labels) ids.push_back(id_of(T, n, l));
  return make_definable_set(T, n, ids);
}

}  // namespace

TEST(Structures, MakeStructureValidates) {
  EXPECT_THROW(make_structure({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(make_structure({"a"}, {{"R", Relation{2, {{0}}}}}), std::invalid_argument);
  EXPECT_THROW(make_structure({"a"}, {{"R", Relation{1, {{1}}}}}), std::invalid_argument);
  const auto M = make_structure({"a", "b"}, {{"R", Relation{2, {{1, 0}, {0, 1}, {0, 1}}}}});
  EXPECT_EQ(M.relations.at("R").tuples, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(M.max_arity(), 2);
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(load_structure("two_points")).size(), 2u);
  EXPECT_EQ(automorphisms(load_structure("edge")), (std::vector<Permutation>{Permutation::identity(2)}));
  const auto c3 = automorphisms(load_structure("cycle3"));
  EXPECT_EQ(c3.size(), 3u);
  EXPECT_TRUE(is_group(c3));
}

TEST(Automorphisms, MatchBruteForceOnCorpus) {
  for (const auto& name : structure_names()) {
    const auto M = load_structure(name);
    EXPECT_EQ(automorphisms(M), brute_force_automorphisms(M)) << name;
  }
}

TEST(Automorphisms, DomainBound) {
  std::vector<std::string> dom;
  std::vector<std::vector<int>> next;
  for (int i = 0; i < 11; ++i) dom.push_back("p" + std::to_string(i));
  for (int i = 0; i + 1 < 11; ++i) next.push_back({i, i + 1});
  const auto M = make_structure(dom, {{"S", Relation{2, next}}});
  EXPECT_THROW(automorphisms(M), std::invalid_argument);
  EXPECT_EQ(automorphisms(M, 11).size(), 1u);
}

TEST(OrbitTheory, Examples) {
  const auto two = orbit_theory(load_structure("two_points"), 2).theory;
  EXPECT_EQ(two.level_size(1), 1u);
  EXPECT_EQ(two.level_size(2), 2u);
  EXPECT_EQ(orbit_theory(load_structure("edge"), 2).theory.level_size(2), 4u);
  EXPECT_EQ(orbit_theory(load_structure("cycle3"), 1).theory.level_size(1), 1u);
}

TEST(OrbitTheory, CountsMatchBruteForce) {
  for (const auto& name : structure_names()) {
    const auto M = load_structure(name);
    const auto T = orbit_theory(M, 3).theory;
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(T.level_size(n), brute_force_orbits(M, n)) << name << " " << n;
  }
}

TEST(OrbitTheory, ProjectionIsNaturalAndSurjective) {
  for (const auto& name : structure_names()) {
    const auto th = orbit_theory(load_structure(name), 3);
    EXPECT_TRUE(simplicial_map_validate(th.projection).pass) << name;
    EXPECT_TRUE(is_representable(th.projection.source())) << name;
    for (int n = 1; n <= 3; ++n) {
      std::set<ElementId> hit(th.projection.component(n).begin(), th.projection.component(n).end());
      EXPECT_EQ(hit.size(), th.theory.level_size(n)) << name;
    }
  }
}

TEST(OrbitTheory, CapExceeded) {
  EXPECT_THROW(orbit_theory(load_structure("equiv_123"), 6, 1000), CapExceeded);
}

TEST(ClosureTheory, Examples) {
  const auto two = definable_closure_theory(load_structure("two_points"), 2);
  EXPECT_EQ(two.level_size(2), 2u);
  const auto edge = definable_closure_theory(load_structure("edge"), 1);
  ASSERT_EQ(edge.level_size(1), 2u);
  EXPECT_EQ(edge.label(1, 0), "[a]");
  EXPECT_EQ(edge.label(1, 1), "[b]");
  const auto one = definable_closure_theory(load_structure("single_point"), 4);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(one.level_size(n), 1u);
}

TEST(ClosureTheory, AgreesWithOrbitsOnCorpus) {
  for (const auto& name : structure_names()) {
    const auto M = load_structure(name);
    const auto O = orbit_theory(M, 3).theory;
    const auto C = definable_closure_theory(M, 3);
    ASSERT_EQ(O.level_sizes(), C.level_sizes()) << name;
    for (int n = 1; n <= 3; ++n) {
      for (ElementId t = 0; t < O.level_size(n); ++t) EXPECT_EQ(O.label(n, t), C.label(n, t)) << name;
    }
    for (int m = 1; m <= 3; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& f : all_maps(m, n)) EXPECT_EQ(O.induced_map(f), C.induced_map(f)) << name;
      }
    }
    EXPECT_TRUE(validate_functor(C).pass) << name;
  }
}

TEST(Interpretations, SubstructureOfEdge) {
  const auto M = load_structure("edge");
  const auto th = orbit_theory(M, 2);
  const auto sub = induced_substructure(M, th, by_labels(th.theory, 1, {"[a]"}));
  EXPECT_EQ(sub.structure.domain, (std::vector<std::string>{"a"}));
  EXPECT_TRUE(sub.structure.relations.at("R").tuples.empty());
  EXPECT_EQ(sub.map, (std::vector<int>{0}));
}

TEST(Interpretations, WholeLevelGivesM) {
  for (const auto* name : {"edge", "cycle3", "path4"}) {
    const auto M = load_structure(name);
    const auto th = orbit_theory(M, 2);
    std::vector<ElementId> all(th.theory.level_size(1));
    std::iota(all.begin(), all.end(), ElementId{0});
    const auto sub = induced_substructure(M, th, make_definable_set(th.theory, 1, all));
    EXPECT_TRUE(isomorphic(sub.structure, M)) << name;
  }
}

TEST(Interpretations, EmptyPullbackRejected) {
  const auto M = load_structure("edge");
  const auto th = orbit_theory(M, 2);
  EXPECT_THROW(induced_substructure(M, th, make_definable_set(th.theory, 1, {})), std::invalid_argument);
}

TEST(Interpretations, QuotientByDiagonalIsIsomorphism) {
  for (const auto& name : structure_names()) {
    const auto M = load_structure(name);
    const auto th = orbit_theory(M, 2);
    std::vector<ElementId> diag;
    for (int x = 0; x < M.size(); ++x) diag.push_back(th.projection(2, static_cast<ElementId>(x * M.size() + x)));
    std::sort(diag.begin(), diag.end());
    diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
    const auto q = definable_quotient(M, th, make_definable_set(th.theory, 2, diag));
    EXPECT_TRUE(isomorphic(q.structure, M)) << name;
  }
}

TEST(Interpretations, QuotientByEverythingIsAPoint) {
  const auto M = load_structure("two_points");
  const auto th = orbit_theory(M, 2);
  const auto q = definable_quotient(M, th, by_labels(th.theory, 2, {"[a,a]", "[a,b]"}));
  EXPECT_EQ(q.structure.size(), 1);
  EXPECT_EQ(q.map, (std::vector<int>{0, 0}));
  const auto T = orbit_theory(q.structure, 4).theory;
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(T.level_size(n), 1u);
}

TEST(Interpretations, QuotientByClasses) {
  const auto M = load_structure("equiv_123");
  const auto th = orbit_theory(M, 2);
  const auto q = definable_quotient(M, th, by_labels(th.theory, 2, {"[a,a]", "[b,b]", "[b,c]", "[d,d]", "[d,e]"}));
  EXPECT_EQ(q.structure.size(), 3);
  EXPECT_EQ(q.map, (std::vector<int>{0, 1, 1, 2, 2, 2}));
  // E becomes the diagonal on the three classes
  EXPECT_EQ(q.structure.relations.at("E").tuples.size(), 3u);
}

TEST(Interpretations, NonEquivalenceRejected) {
  const auto M = load_structure("edge");
  const auto th = orbit_theory(M, 2);
  // not reflexive
  EXPECT_THROW(definable_quotient(M, th, by_labels(th.theory, 2, {"[a,a]"})), std::invalid_argument);
  // not symmetric
  EXPECT_THROW(definable_quotient(M, th, by_labels(th.theory, 2, {"[a,a]", "[b,b]", "[a,b]"})),
               std::invalid_argument);
  const auto P = load_structure("path4");
  const auto tp = orbit_theory(P, 2);
  // adjacency plus diagonal is not transitive on a path
  std::vector<ElementId> ids;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      if (x == y || P.holds("E", {x, y})) ids.push_back(tp.projection(2, static_cast<ElementId>(x * 4 + y)));
    }
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  EXPECT_THROW(definable_quotient(P, tp, make_definable_set(tp.theory, 2, ids)), std::invalid_argument);
}

TEST(Isomorphic, Basics) {
  const auto a = make_structure({"x", "y"}, {{"R", Relation{2, {{0, 1}}}}});
  const auto b = make_structure({"p", "q"}, {{"R", Relation{2, {{1, 0}}}}});
  const auto c = make_structure({"p", "q"}, {{"R", Relation{2, {{1, 1}}}}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
}
