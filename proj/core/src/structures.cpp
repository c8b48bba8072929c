#include "typespace/structures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "typespace/builtins.hpp"

namespace typespace {

int FinStructure::max_arity() const {
  int a = 0;
  for (const auto& [name, r] : relations) a = std::max(a, r.arity);
  return a;
}

bool FinStructure::holds(const std::string& relation, const std::vector<int>& tuple) const {
  auto it = relations.find(relation);
  if (it == relations.end()) throw std::invalid_argument("unknown relation '" + relation + "'");
  return std::binary_search(it->second.tuples.begin(), it->second.tuples.end(), tuple);
}

FinStructure make_structure(std::vector<std::string> domain, std::map<std::string, Relation> relations) {
  std::set<std::string> names(domain.begin(), domain.end());
  if (names.size() != domain.size()) throw std::invalid_argument("structure: repeated point name");
  if (domain.empty()) throw std::invalid_argument("structure: empty domain");
  const int d = static_cast<int>(domain.size());
  for (auto& [name, r] : relations) {
    if (r.arity < 1) throw std::invalid_argument("relation " + name + ": arity must be positive");
    for (const auto& t : r.tuples) {
      if (static_cast<int>(t.size()) != r.arity) {
        throw std::invalid_argument("relation " + name + ": tuple length differs from arity " + std::to_string(r.arity));
      }
      for (int x : t) {
        if (x < 0 || x >= d) throw std::invalid_argument("relation " + name + ": tuple leaves the domain");
      }
    }
    std::sort(r.tuples.begin(), r.tuples.end());
    r.tuples.erase(std::unique(r.tuples.begin(), r.tuples.end()), r.tuples.end());
  }
  return {std::move(domain), std::move(relations)};
}

namespace {

/// Calls `emit` with every bijection a -> b carrying each relation of a into
/// the same-named relation of b. Stops when emit returns false.
void for_each_isomorphism(const FinStructure& a, const FinStructure& b,
                          const std::function<bool(const std::vector<int>&)>& emit) {
  const int n = a.size();
  if (n != b.size()) return;
  // Tuples of a grouped by their largest coordinate: checkable once that coordinate is assigned.
  std::vector<std::vector<std::pair<const std::vector<std::vector<int>>*, const std::vector<int>*>>> due(
      static_cast<std::size_t>(n));
  for (const auto& [name, r] : a.relations) {
    auto it = b.relations.find(name);
    if (it == b.relations.end() || it->second.arity != r.arity || it->second.tuples.size() != r.tuples.size()) return;
    for (const auto& t : r.tuples) {
      due[static_cast<std::size_t>(*std::max_element(t.begin(), t.end()))].emplace_back(&it->second.tuples, &t);
    }
  }
  if (b.relations.size() != a.relations.size()) return;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> buf;
  bool stop = false;
  auto rec = [&](auto&& self, int i) -> void {
    if (stop) return;
    if (i == n) {
      if (!emit(img)) stop = true;
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      img[static_cast<std::size_t>(i)] = v;
      bool ok = true;
      for (const auto& [target, t] : due[static_cast<std::size_t>(i)]) {
        buf.clear();
        for (int x : *t) buf.push_back(img[static_cast<std::size_t>(x)]);
        if (!std::binary_search(target->begin(), target->end(), buf)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = true;
      self(self, i + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
    img[static_cast<std::size_t>(i)] = -1;
  };
  rec(rec, 0);
}

std::size_t checked_power(std::size_t d, int L, const std::string& who, std::size_t cap) {
  std::size_t total = 1;
  for (int i = 1; i <= L; ++i) {
    total *= d;
    if (total > cap) throw CapExceeded(who, i, total, cap);
  }
  return total;
}

std::string tuple_label(const FinStructure& M, const std::vector<int>& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += M.domain[static_cast<std::size_t>(t[i])];
  }
  return out + "]";
}

}  // namespace

std::vector<Permutation> automorphisms(const FinStructure& M, int max_domain) {
  if (M.size() > max_domain) {
    throw std::invalid_argument("automorphisms: domain of " + std::to_string(M.size()) + " points exceeds bound " +
                                std::to_string(max_domain));
  }
  std::vector<Permutation> out;
  for_each_isomorphism(M, M, [&](const std::vector<int>& img) {
    out.emplace_back(img);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const FinStructure& a, const FinStructure& b) {
  bool found = false;
  for_each_isomorphism(a, b, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

OrbitTheory orbit_theory(const FinStructure& M, int max_dim, std::size_t cap) {
  checked_power(static_cast<std::size_t>(M.size()), max_dim, "orbit", cap);
  const auto G = automorphisms(M);
  auto T = simplicial_quotient(M.domain, G, max_dim, cap, "orbit");
  auto rep = representable(M.domain, max_dim, cap);
  std::vector<std::vector<ElementId>> comps;
  for (int n = 1; n <= max_dim; ++n) {
    std::vector<ElementId> c(rep.level_size(n));
    for (ElementId x = 0; x < c.size(); ++x) {
      auto id = T.find_code(n, canonical_tuple(G, *rep.code(n, x)));
      if (!id) throw std::logic_error("orbit_theory: orbit representative missing");
      c[x] = *id;
    }
    comps.push_back(std::move(c));
  }
  SimplicialMapHandle proj("orbit-projection", rep, T, std::move(comps));
  return {std::move(T), std::move(proj)};
}

TruncatedSymSS definable_closure_theory(const FinStructure& M, int max_dim, std::size_t cap) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be positive");
  const auto d = static_cast<std::size_t>(M.size());
  checked_power(d, max_dim, "closure", cap);
  const int L = std::max({max_dim, M.max_arity(), M.size()});
  checked_power(d, L, "closure", cap);

  std::vector<std::size_t> pw(static_cast<std::size_t>(L) + 2, 1);
  for (std::size_t i = 1; i < pw.size(); ++i) pw[i] = pw[i - 1] * d;
  auto digit = [&](std::size_t idx, int n, int i) {
    return static_cast<int>(idx / pw[static_cast<std::size_t>(n - 1 - i)] % d);
  };
  auto tuple_of = [&](std::size_t idx, int n) {
    std::vector<int> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = digit(idx, n, i);
    return t;
  };
  auto swapped = [&](std::size_t idx, int n, int i) {
    const int a = digit(idx, n, i);
    const int b = digit(idx, n, i + 1);
    const auto hi = pw[static_cast<std::size_t>(n - 1 - i)];
    const auto lo = pw[static_cast<std::size_t>(n - 2 - i)];
    return idx - static_cast<std::size_t>(a) * hi - static_cast<std::size_t>(b) * lo + static_cast<std::size_t>(b) * hi +
           static_cast<std::size_t>(a) * lo;
  };

  // cls[n][idx]: atom of the tuple with base-d index idx in M^n, numbered by first occurrence.
  std::vector<std::vector<int>> cls(static_cast<std::size_t>(L) + 1);
  std::vector<int> count(static_cast<std::size_t>(L) + 1, 1);
  for (int n = 1; n <= L; ++n) cls[static_cast<std::size_t>(n)].assign(pw[static_cast<std::size_t>(n)], 0);

  auto refine = [&](int n, const std::function<void(std::size_t, std::vector<int>&)>& key) {
    auto& c = cls[static_cast<std::size_t>(n)];
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(c.size());
    std::vector<int> k;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      k.assign(1, c[idx]);
      key(idx, k);
      next[idx] = ids.emplace(k, static_cast<int>(ids.size())).first->second;
    }
    c = std::move(next);
    const bool grew = static_cast<int>(ids.size()) > count[static_cast<std::size_t>(n)];
    count[static_cast<std::size_t>(n)] = static_cast<int>(ids.size());
    return grew;
  };

  for (const auto& [name, r] : M.relations) {
    refine(r.arity, [&](std::size_t idx, std::vector<int>& k) {
      k.push_back(std::binary_search(r.tuples.begin(), r.tuples.end(), tuple_of(idx, r.arity)) ? 1 : 0);
    });
  }
  if (L >= 2) {
    refine(2, [&](std::size_t idx, std::vector<int>& k) { k.push_back(digit(idx, 2, 0) == digit(idx, 2, 1)); });
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (int n = 1; n <= L; ++n) {
      const auto& cur = cls[static_cast<std::size_t>(n)];
      changed |= refine(n, [&](std::size_t idx, std::vector<int>& k) {
        for (int i = 0; i + 1 < n; ++i) k.push_back(cur[swapped(idx, n, i)]);
        if (n >= 2) k.push_back(cls[static_cast<std::size_t>(n - 1)][idx / d]);
        if (n < L) {
          const auto& up = cls[static_cast<std::size_t>(n + 1)];
          const auto base = idx * d;
          k.push_back(up[base + static_cast<std::size_t>(digit(idx, n, n - 1))]);
          std::vector<int> fiber;
          for (std::size_t x = 0; x < d; ++x) fiber.push_back(up[base + x]);
          std::sort(fiber.begin(), fiber.end());
          fiber.erase(std::unique(fiber.begin(), fiber.end()), fiber.end());
          k.push_back(-1);
          k.insert(k.end(), fiber.begin(), fiber.end());
        }
      });
    }
  }

  // Atoms are numbered by least tuple, the order used by orbit_theory.
  std::vector<std::vector<std::size_t>> rep(static_cast<std::size_t>(max_dim) + 1);
  std::vector<std::vector<std::string>> labels;
  for (int n = 1; n <= max_dim; ++n) {
    const auto& c = cls[static_cast<std::size_t>(n)];
    auto& r = rep[static_cast<std::size_t>(n)];
    r.assign(static_cast<std::size_t>(count[static_cast<std::size_t>(n)]), 0);
    std::vector<bool> seen(r.size(), false);
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const auto a = static_cast<std::size_t>(c[idx]);
      if (!seen[a]) {
        seen[a] = true;
        r[a] = idx;
      }
    }
    std::vector<std::string> lv;
    for (auto idx : r) lv.push_back(tuple_label(M, tuple_of(idx, n)));
    labels.push_back(std::move(lv));
  }
  GeneratorTables g;
  g.swap.resize(static_cast<std::size_t>(max_dim));
  g.forget_last.resize(static_cast<std::size_t>(max_dim));
  g.dup_last.resize(static_cast<std::size_t>(max_dim));
  for (int n = 1; n <= max_dim; ++n) {
    const auto lv = static_cast<std::size_t>(n - 1);
    const auto& r = rep[static_cast<std::size_t>(n)];
    auto table = [&](auto&& target_index, int m) {
      std::vector<ElementId> tab;
      for (auto idx : r) tab.push_back(static_cast<ElementId>(cls[static_cast<std::size_t>(m)][target_index(idx)]));
      return tab;
    };
    for (int i = 0; i + 1 < n; ++i) {
      g.swap[lv].push_back(table([&](std::size_t idx) { return swapped(idx, n, i); }, n));
    }
    if (n >= 2) g.forget_last[lv] = table([&](std::size_t idx) { return idx / d; }, n - 1);
    if (n < max_dim) {
      g.dup_last[lv] = table(
          [&](std::size_t idx) { return idx * d + static_cast<std::size_t>(digit(idx, n, n - 1)); }, n + 1);
    }
  }
  return TruncatedSymSS::from_tables("closure", std::move(labels), std::move(g));
}

StructureMorphism induced_substructure(const FinStructure& M, const OrbitTheory& th, const DefinableSet& dset) {
  if (dset.level != 1) throw std::invalid_argument("induced_substructure: set must live at level 1");
  const auto& proj = th.projection.component(1);
  std::vector<int> keep;
  std::vector<int> index(static_cast<std::size_t>(M.size()), -1);
  for (int p = 0; p < M.size(); ++p) {
    if (dset.contains(proj[static_cast<std::size_t>(p)])) {
      index[static_cast<std::size_t>(p)] = static_cast<int>(keep.size());
      keep.push_back(p);
    }
  }
  if (keep.empty()) throw std::invalid_argument("induced_substructure: the set has no points in M");
  std::vector<std::string> domain;
  for (int p : keep) domain.push_back(M.domain[static_cast<std::size_t>(p)]);
  std::map<std::string, Relation> rels;
  for (const auto& [name, r] : M.relations) {
    Relation out{r.arity, {}};
    for (const auto& t : r.tuples) {
      std::vector<int> u;
      for (int x : t) {
        if (index[static_cast<std::size_t>(x)] < 0) break;
        u.push_back(index[static_cast<std::size_t>(x)]);
      }
      if (u.size() == t.size()) out.tuples.push_back(std::move(u));
    }
    rels.emplace(name, std::move(out));
  }
  return {make_structure(std::move(domain), std::move(rels)), std::move(keep)};
}

StructureMorphism definable_quotient(const FinStructure& M, const OrbitTheory& th, const DefinableSet& E) {
  if (E.level != 2) throw std::invalid_argument("definable_quotient: relation must live at level 2");
  const int d = M.size();
  const auto& proj = th.projection.component(2);
  auto rel = [&](int a, int b) { return E.contains(proj[static_cast<std::size_t>(a * d + b)]); };
  for (int a = 0; a < d; ++a) {
    if (!rel(a, a)) throw std::invalid_argument("definable_quotient: not reflexive at " + M.domain[static_cast<std::size_t>(a)]);
    for (int b = 0; b < d; ++b) {
      if (rel(a, b) != rel(b, a)) throw std::invalid_argument("definable_quotient: not symmetric");
      for (int c = 0; c < d; ++c) {
        if (rel(a, b) && rel(b, c) && !rel(a, c)) throw std::invalid_argument("definable_quotient: not transitive");
      }
    }
  }
  std::vector<int> cls(static_cast<std::size_t>(d), -1);
  std::vector<std::string> domain;
  for (int a = 0; a < d; ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    const int id = static_cast<int>(domain.size());
    std::vector<std::string> members;
    for (int b = a; b < d; ++b) {
      if (rel(a, b)) {
        cls[static_cast<std::size_t>(b)] = id;
        members.push_back(M.domain[static_cast<std::size_t>(b)]);
      }
    }
    std::string name = members.front();
    if (members.size() > 1) {
      name = "{";
      for (std::size_t i = 0; i < members.size(); ++i) name += (i ? "," : "") + members[i];
      name += "}";
    }
    domain.push_back(std::move(name));
  }
  std::map<std::string, Relation> rels;
  for (const auto& [name, r] : M.relations) {
    Relation out{r.arity, {}};
    for (const auto& t : r.tuples) {
      std::vector<int> u;
      for (int x : t) u.push_back(cls[static_cast<std::size_t>(x)]);
      out.tuples.push_back(std::move(u));
    }
    rels.emplace(name, std::move(out));
  }
  return {make_structure(std::move(domain), std::move(rels)), std::move(cls)};
}

}  // namespace typespace
