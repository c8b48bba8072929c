#include "typespace/simplicial_map.hpp"

#include <algorithm>
#include <numeric>

namespace typespace {

SimplicialMapHandle::SimplicialMapHandle(std::string name, TruncatedSymSS source, TruncatedSymSS target,
                                         std::vector<std::vector<ElementId>> components)
    : name_(std::move(name)), source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const int L = levels();
  if (L < 1 || L > source_.max_dim() || L > target_.max_dim()) {
    throw std::invalid_argument(name_ + ": mismatched truncations (" + std::to_string(L) + " component levels, source " +
                                std::to_string(source_.max_dim()) + ", target " + std::to_string(target_.max_dim()) +
                                ")");
  }
  for (int n = 1; n <= L; ++n) {
    const auto& c = component(n);
    const auto tsize = target_.level_size(n);
    if (c.size() != source_.level_size(n) ||
        std::any_of(c.begin(), c.end(), [&](ElementId y) { return y >= tsize; })) {
      throw std::invalid_argument(name_ + ": malformed component at level " + std::to_string(n));
    }
  }
}

void SimplicialMapHandle::set_augmentation(Augmentation a) {
  auto bad = [&](const std::string& what) { throw std::invalid_argument(name_ + ": augmentation " + what); };
  if (a.source_size == 0 || a.target_size == 0) bad("has an empty level 0");
  if (a.component.size() != a.source_size) bad("component has the wrong size");
  for (ElementId y : a.component) {
    if (y >= a.target_size) bad("component leaves the target");
  }
  if (a.source_restrict.size() != static_cast<std::size_t>(levels()) ||
      a.target_restrict.size() != static_cast<std::size_t>(levels())) {
    bad("needs one restriction table per level");
  }
  for (int n = 1; n <= levels(); ++n) {
    const auto& s = a.source_restrict[static_cast<std::size_t>(n - 1)];
    const auto& t = a.target_restrict[static_cast<std::size_t>(n - 1)];
    if (s.size() != source_.level_size(n) || t.size() != target_.level_size(n)) bad("table shape mismatch");
    if (std::any_of(s.begin(), s.end(), [&](ElementId x) { return x >= a.source_size; }) ||
        std::any_of(t.begin(), t.end(), [&](ElementId y) { return y >= a.target_size; })) {
      bad("restriction leaves level 0");
    }
  }
  augmentation_ = std::move(a);
}

Report simplicial_map_validate(const SimplicialMapHandle& F, int bound) {
  Report r;
  r.check = "simplicial_map_validate";
  const int L = bound <= 0 ? F.levels() : std::min(bound, F.levels());
  std::uint64_t checks = 0;
  for (const auto& g : generator_maps(L)) {
    const int n = g.target_size();
    const int m = g.source_size();
    const auto X = F.source().induced_map(g);
    const auto Y = F.target().induced_map(g);
    const auto& Fn = F.component(n);
    const auto& Fm = F.component(m);
    for (ElementId x = 0; x < X.size(); ++x, ++checks) {
      if (Fm[X[x]] != Y[Fn[x]]) {
        Witness w;
        w.condition = "naturality";
        w.params["level"] = n;
        w.elements = {F.source().describe("x", n, x), F.target().describe("F(act(g)(x))", m, Fm[X[x]]),
                      F.target().describe("act(g)(F(x))", m, Y[Fn[x]])};
        w.maps = {g.to_string()};
        r.fail(std::move(w));
        r.stats["checks"] = checks;
        return r;
      }
    }
  }
  if (const auto& a = F.augmentation()) {
    for (int n = 1; n <= L; ++n) {
      const auto& s = a->source_restrict[static_cast<std::size_t>(n - 1)];
      const auto& t = a->target_restrict[static_cast<std::size_t>(n - 1)];
      const auto& Fn = F.component(n);
      for (ElementId x = 0; x < s.size(); ++x, ++checks) {
        if (a->component[s[x]] == t[Fn[x]]) continue;
        Witness w;
        w.condition = "augmentation";
        w.params["level"] = n;
        w.elements = {F.source().describe("x", n, x)};
        r.fail(std::move(w));
        r.stats["checks"] = checks;
        return r;
      }
    }
  }
  r.stats["checks"] = checks;
  return r;
}

bool is_isomorphism(const SimplicialMapHandle& F) {
  for (int n = 1; n <= F.levels(); ++n) {
    if (F.source().level_size(n) != F.target().level_size(n)) return false;
    auto c = F.component(n);
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
  }
  return simplicial_map_validate(F).pass;
}

SimplicialMapHandle identity_map(const TruncatedSymSS& T) {
  std::vector<std::vector<ElementId>> comps;
  for (int n = 1; n <= T.max_dim(); ++n) {
    std::vector<ElementId> c(T.level_size(n));
    std::iota(c.begin(), c.end(), ElementId{0});
    comps.push_back(std::move(c));
  }
  return SimplicialMapHandle("id(" + T.name() + ")", T, T, std::move(comps));
}

SimplicialMapHandle head_projection(const TruncatedSymSS& T, int s, int head) {
  if (head < 0 || head >= s) throw std::out_of_range("head_projection: head coordinate out of range");
  auto source = decalage(T, s);
  auto target = s == 1 ? T : decalage(T, s - 1);
  std::vector<std::vector<ElementId>> comps;
  for (int n = 1; n <= source.max_dim(); ++n) comps.push_back(T.induced_map(FinSetMap::skip(n + s, head)));
  auto name = "pr" + std::to_string(head + 1) + ":" + source.name() + "->" + target.name();
  Augmentation a;
  a.source_size = T.level_size(s);
  a.target_size = s == 1 ? 1 : T.level_size(s - 1);
  a.component = s == 1 ? std::vector<ElementId>(a.source_size, 0) : T.induced_map(FinSetMap::skip(s, head));
  for (int n = 1; n <= source.max_dim(); ++n) {
    a.source_restrict.push_back(T.induced_map(FinSetMap::inclusion(s, n + s, 0)));
    a.target_restrict.push_back(s == 1 ? std::vector<ElementId>(target.level_size(n), 0)
                                       : T.induced_map(FinSetMap::inclusion(s - 1, n + s - 1, 0)));
  }
  SimplicialMapHandle F(std::move(name), std::move(source), std::move(target), std::move(comps));
  F.set_augmentation(std::move(a));
  return F;
}

std::vector<SimplicialMapHandle> decalage_projections(const TruncatedSymSS& T, int s) {
  std::vector<SimplicialMapHandle> out;
  for (int h = 0; h < s; ++h) out.push_back(head_projection(T, s, h));
  return out;
}

SimplicialMapHandle subfunctor_inclusion(const TruncatedSymSS& T, const std::vector<std::vector<bool>>& keep,
                                         std::string name) {
  const int D = T.max_dim();
  if (keep.size() != static_cast<std::size_t>(D)) throw std::invalid_argument("subfunctor: one mask per level required");
  std::vector<std::vector<ElementId>> old_of_new(static_cast<std::size_t>(D));
  std::vector<std::vector<ElementId>> new_of_old(static_cast<std::size_t>(D));
  std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(D));
  constexpr ElementId kDropped = ~ElementId{0};
  for (int n = 1; n <= D; ++n) {
    const auto lv = static_cast<std::size_t>(n - 1);
    const auto size = T.level_size(n);
    if (keep[lv].size() != size) throw std::invalid_argument("subfunctor: mask size mismatch at level " + std::to_string(n));
    new_of_old[lv].assign(size, kDropped);
    for (ElementId t = 0; t < size; ++t) {
      if (!keep[lv][t]) continue;
      new_of_old[lv][t] = static_cast<ElementId>(old_of_new[lv].size());
      old_of_new[lv].push_back(t);
      labels[lv].push_back(T.label(n, t));
    }
    if (old_of_new[lv].empty()) throw std::invalid_argument("subfunctor: level " + std::to_string(n) + " is empty");
  }
  auto restrict = [&](const FinSetMap& g) {
    const auto tab = T.induced_map(g);
    const auto from = static_cast<std::size_t>(g.target_size() - 1);
    const auto to = static_cast<std::size_t>(g.source_size() - 1);
    std::vector<ElementId> out;
    for (ElementId t : old_of_new[from]) {
      ElementId img = new_of_old[to][tab[t]];
      if (img == kDropped) {
        throw std::invalid_argument("subfunctor: kept element " + T.label(g.target_size(), t) + " maps outside along " +
                                    g.to_string());
      }
      out.push_back(img);
    }
    return out;
  };
  GeneratorTables g;
  g.swap.resize(static_cast<std::size_t>(D));
  g.forget_last.resize(static_cast<std::size_t>(D));
  g.dup_last.resize(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n) {
    const auto lv = static_cast<std::size_t>(n - 1);
    for (int i = 0; i + 1 < n; ++i) g.swap[lv].push_back(restrict(FinSetMap::adjacent_swap(n, i)));
    if (n >= 2) g.forget_last[lv] = restrict(FinSetMap::forget_last(n));
    if (n < D) g.dup_last[lv] = restrict(FinSetMap::dup_last(n));
  }
  auto sub = TruncatedSymSS::from_tables(name, std::move(labels), std::move(g));
  auto map_name = "incl:" + name + "->" + T.name();
  return SimplicialMapHandle(std::move(map_name), std::move(sub), T, std::move(old_of_new));
}

TruncatedSymSS puncture(const TruncatedSymSS& T, int level, ElementId element) {
  if (element >= T.level_size(level)) throw std::out_of_range("puncture: element out of range");
  const int D = T.max_dim();
  std::vector<std::vector<bool>> keep;
  for (int n = 1; n <= D; ++n) {
    std::vector<bool> k(T.level_size(n), true);
    for (const auto& f : all_maps(level, n)) {
      const auto tab = T.induced_map(f);
      for (ElementId t = 0; t < tab.size(); ++t) {
        if (tab[t] == element) k[t] = false;
      }
    }
    keep.push_back(std::move(k));
  }
  return subfunctor_inclusion(T, keep, T.name() + "\\" + T.label(level, element)).source();
}

}  // namespace typespace
