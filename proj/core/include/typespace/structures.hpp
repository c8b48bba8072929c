#pragma once

#include <map>
#include <string>
#include <vector>

#include "typespace/group.hpp"
#include "typespace/simplicial_map.hpp"
#include "typespace/symmetric_set.hpp"

namespace typespace {

struct Relation {
  int arity = 0;
  std::vector<std::vector<int>> tuples;  // sorted, unique, indices into the domain
};

/// A finite relational structure.
struct FinStructure {
  std::vector<std::string> domain;
  std::map<std::string, Relation> relations;

  int size() const { return static_cast<int>(domain.size()); }
  int max_arity() const;
  bool holds(const std::string& relation, const std::vector<int>& tuple) const;
};

/// Sorts and dedups tuples; throws std::invalid_argument when a tuple has the
/// wrong length, leaves the domain, or point names repeat.
FinStructure make_structure(std::vector<std::string> domain, std::map<std::string, Relation> relations);

/// Aut(M) in sorted order (identity first). Throws std::invalid_argument when
/// the domain exceeds max_domain.
std::vector<Permutation> automorphisms(const FinStructure& M, int max_domain = 10);

struct OrbitTheory {
  TruncatedSymSS theory;
  /// |M| -> T sending a tuple to its orbit.
  SimplicialMapHandle projection;
};

/// Levels are Aut(M)-orbits on M^n. Throws CapExceeded when |M|^D passes cap.
OrbitTheory orbit_theory(const FinStructure& M, int max_dim, std::size_t cap = kDefaultSizeCap);

/// Atoms of the algebra of subsets of M^n generated by the relations and the
/// diagonal under Boolean operations, preimages along coordinate maps and
/// projections. The working truncation is raised to max(D, arity, |M|) so
/// that closure captures every invariant set; elements are labelled and
/// ordered by their least tuple, as in orbit_theory.
TruncatedSymSS definable_closure_theory(const FinStructure& M, int max_dim, std::size_t cap = kDefaultSizeCap);

struct StructureMorphism {
  FinStructure structure;
  /// Image in M of each point (inclusion) or class of each point of M (quotient).
  std::vector<int> map;
};

/// Substructure on the points whose 1-type lies in `dset` (a level-1 set of
/// orbit_theory(M)); map[i] is the point of M behind point i.
StructureMorphism induced_substructure(const FinStructure& M, const OrbitTheory& th, const DefinableSet& dset);

/// Quotient by the equivalence whose pairs have 2-type in `E`; map[p] is the
/// class of p. Throws std::invalid_argument when the pullback is not an
/// equivalence relation.
StructureMorphism definable_quotient(const FinStructure& M, const OrbitTheory& th, const DefinableSet& E);

/// Same domain size, same relation names and arities, and a bijection carrying
/// one relation set onto the other (brute force).
bool isomorphic(const FinStructure& a, const FinStructure& b);

}  // namespace typespace
