#include "typespace/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace typespace {

Constraint Constraint::none_of(const TruncatedSymSS& T, FinSetMap f, const DefinableSet& s) {
  return {std::move(f), complement(T, s).elements};
}

struct SimplexSearch::Plan {
  FinSetMap back;  // t = act(back)(s)
  // at_depth[d-1]: constraints decided by the first d coordinates of s.
  std::vector<std::vector<std::pair<FinSetMap, const std::vector<ElementId>*>>> at_depth;
  bool impossible = false;
};

SimplexSearch::SimplexSearch(TruncatedSymSS T, int N) : T_(std::move(T)), N_(N) {
  if (N < 1 || N > T_.max_dim()) {
    throw std::out_of_range("simplex_search: level " + std::to_string(N) + " outside 1.." + std::to_string(T_.max_dim()));
  }
  children_.resize(static_cast<std::size_t>(N));
}

const std::vector<ElementId>& SimplexSearch::table(const FinSetMap& f) {
  auto it = tables_.find(f);
  if (it == tables_.end()) it = tables_.emplace(f, T_.induced_map(f)).first;
  return it->second;
}

const std::vector<std::vector<ElementId>>& SimplexSearch::children(int n) {
  auto& ch = children_[static_cast<std::size_t>(n - 1)];
  if (ch.empty()) {
    ch.resize(T_.level_size(n));
    const auto& down = table(FinSetMap::forget_last(n + 1));
    for (ElementId t = 0; t < down.size(); ++t) ch[down[t]].push_back(t);
  }
  return ch;
}

SimplexSearch::Plan SimplexSearch::plan(const std::vector<Constraint>& constraints) {
  std::vector<int> degree(static_cast<std::size_t>(N_), 0);
  for (const auto& c : constraints) {
    if (c.map.target_size() != N_) {
      throw std::invalid_argument("simplex_search: constraint map " + c.map.to_string() + " does not target level " +
                                  std::to_string(N_));
    }
    std::vector<bool> hit(static_cast<std::size_t>(N_), false);
    for (int v : c.map.values()) hit[static_cast<std::size_t>(v)] = true;
    for (int j = 0; j < N_; ++j) degree[static_cast<std::size_t>(j)] += hit[static_cast<std::size_t>(j)] ? 1 : 0;
  }
  std::vector<int> order(static_cast<std::size_t>(N_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)]; });
  const FinSetMap pi(N_, order);
  const FinSetMap pinv = pi.inverse();

  Plan p;
  p.back = pinv;
  p.at_depth.resize(static_cast<std::size_t>(N_));
  for (const auto& c : constraints) {
    if (c.allowed.empty()) p.impossible = true;
    const auto moved = compose(pinv, c.map);
    const int depth = *std::max_element(moved.values().begin(), moved.values().end()) + 1;
    p.at_depth[static_cast<std::size_t>(depth - 1)].emplace_back(FinSetMap(depth, moved.values()), &c.allowed);
  }
  return p;
}

template <class Visit>
bool SimplexSearch::run(const Plan& p, Visit&& visit) {
  if (p.impossible) return false;
  std::vector<std::vector<const std::vector<ElementId>*>> tabs(static_cast<std::size_t>(N_));
  for (int d = 1; d <= N_; ++d) {
    for (const auto& [f, allowed] : p.at_depth[static_cast<std::size_t>(d - 1)]) {
      tabs[static_cast<std::size_t>(d - 1)].push_back(&table(f));
    }
  }
  for (int d = 1; d < N_; ++d) children(d);

  auto ok = [&](int d, ElementId u) {
    const auto& cs = p.at_depth[static_cast<std::size_t>(d - 1)];
    const auto& ts = tabs[static_cast<std::size_t>(d - 1)];
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const auto& allowed = *cs[i].second;
      if (!std::binary_search(allowed.begin(), allowed.end(), (*ts[i])[u])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int d, ElementId u) -> bool {
    ++nodes_;
    if (!ok(d, u)) return false;
    if (d == N_) return visit(T_.act(p.back, u));
    for (ElementId v : children_[static_cast<std::size_t>(d - 1)][u]) {
      if (self(self, d + 1, v)) return true;
    }
    return false;
  };
  const auto roots = T_.level_size(1);
  for (ElementId u = 0; u < roots; ++u) {
    if (rec(rec, 1, u)) return true;
  }
  return false;
}

std::optional<ElementId> SimplexSearch::find(const std::vector<Constraint>& constraints) {
  const auto p = plan(constraints);
  std::optional<ElementId> out;
  run(p, [&](ElementId t) {
    out = t;
    return true;
  });
  return out;
}

std::size_t SimplexSearch::count(const std::vector<Constraint>& constraints) {
  const auto p = plan(constraints);
  std::size_t n = 0;
  run(p, [&](ElementId) {
    ++n;
    return false;
  });
  return n;
}

std::optional<ElementId> simplex_search(const TruncatedSymSS& T, int N, const std::vector<Constraint>& constraints) {
  SimplexSearch s(T, N);
  return s.find(constraints);
}

}  // namespace typespace
