#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "typespace/symmetric_set.hpp"

namespace typespace {

/// act(map)(t) must land in `allowed` (sorted). map.target_size() is the
/// search level N.
struct Constraint {
  FinSetMap map;
  std::vector<ElementId> allowed;

  static Constraint exactly(FinSetMap f, ElementId t) { return {std::move(f), {t}}; }
  static Constraint any_of(FinSetMap f, const DefinableSet& s) { return {std::move(f), s.elements}; }
  static Constraint none_of(const TruncatedSymSS& T, FinSetMap f, const DefinableSet& s);
};

/// Backtracking search for simplices of level N with prescribed restrictions.
/// A simplex is built one coordinate at a time along the forget-last tree,
/// coordinates taken in order of descending constraint degree; a constraint
/// is tested as soon as its coordinates are assigned. Complete: reports no
/// solution only when none exists. Not thread-safe; use one per thread.
class SimplexSearch {
 public:
  SimplexSearch(TruncatedSymSS T, int N);

  const TruncatedSymSS& functor() const { return T_; }
  int level() const { return N_; }

  /// Some t in level N meeting all constraints, the least one in search order.
  /// Throws std::invalid_argument when a constraint targets another level.
  std::optional<ElementId> find(const std::vector<Constraint>& constraints);
  /// Number of solutions (used for cross-checks).
  std::size_t count(const std::vector<Constraint>& constraints);

  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  struct Plan;
  Plan plan(const std::vector<Constraint>& constraints);
  template <class Visit>
  bool run(const Plan& p, Visit&& visit);
  const std::vector<ElementId>& table(const FinSetMap& f);
  const std::vector<std::vector<ElementId>>& children(int n);

  TruncatedSymSS T_;
  int N_;
  std::map<FinSetMap, std::vector<ElementId>> tables_;
  std::vector<std::vector<std::vector<ElementId>>> children_;  // [n-1][u] : extensions at level n+1
  std::uint64_t nodes_ = 0;
};

std::optional<ElementId> simplex_search(const TruncatedSymSS& T, int N, const std::vector<Constraint>& constraints);

}  // namespace typespace
