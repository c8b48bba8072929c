#include "typespace/axioms.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_set>

#include "typespace/parallel.hpp"
#include "typespace/search.hpp"

namespace typespace {

namespace {

void require_bound(int bound, int limit, const std::string& who) {
  if (bound < 1 || bound > limit) {
    throw std::out_of_range(who + ": bound " + std::to_string(bound) + " outside 1.." + std::to_string(limit));
  }
}

/// Restriction table to a block of k coordinates, or all zeros when k == 0.
std::vector<ElementId> block_restriction(const TruncatedSymSS& T, int k, int n, int offset) {
  if (k == 0) return std::vector<ElementId>(T.level_size(n), 0);
  return T.induced_map(FinSetMap::inclusion(k, n, offset));
}

std::vector<std::vector<ElementId>> buckets(const std::vector<ElementId>& key, std::size_t keys) {
  std::vector<std::vector<ElementId>> out(std::max<std::size_t>(keys, 1));
  for (ElementId i = 0; i < key.size(); ++i) out[key[i]].push_back(i);
  return out;
}

Witness amalgamation_witness(const std::string& condition, const TruncatedSymSS& T, int k, int m, int n, int bound,
                             ElementId p, ElementId q) {
  Witness w;
  w.condition = condition;
  w.params = {{"k", k}, {"m", m}, {"n", n}, {"bound", bound}};
  w.elements.push_back(T.describe("p", m + k, p));
  w.elements.push_back(T.describe("q", k + n, q));
  if (k > 0) w.elements.push_back(T.describe("shared", k, T.act(FinSetMap::inclusion(k, k + n, 0), q)));
  w.maps = {FinSetMap::inclusion(m + k, m + k + n, 0).to_string(), FinSetMap::inclusion(k + n, m + k + n, m).to_string()};
  return w;
}

}  // namespace

Report check_theory(const TruncatedSymSS& T, int bound, int workers) {
  require_bound(bound, T.max_dim(), "check_theory");
  Report rep;
  rep.check = "check_theory";
  std::atomic<std::uint64_t> pairs{0};
  for (int k = 0; k + 2 <= bound && rep.pass; ++k) {
    for (int m = 1; m + k + 1 <= bound && rep.pass; ++m) {
      for (int n = 1; m + k + n <= bound && rep.pass; ++n) {
        const int N = m + k + n;
        const auto pk = block_restriction(T, k, m + k, m);
        const auto qk = block_restriction(T, k, k + n, 0);
        const auto byk = buckets(qk, k ? T.level_size(k) : 1);
        const auto cp = FinSetMap::inclusion(m + k, N, 0);
        const auto cq = FinSetMap::inclusion(k + n, N, m);
        constexpr auto kNone = std::numeric_limits<ElementId>::max();
        std::vector<std::pair<ElementId, ElementId>> first(static_cast<std::size_t>(std::max(1, workers)),
                                                           {kNone, kNone});
        parallel_for(pk.size(), workers, [&](std::size_t begin, std::size_t end, int w) {
          SimplexSearch search(T, N);
          for (auto p = static_cast<ElementId>(begin); p < end; ++p) {
            for (ElementId q : byk[pk[p]]) {
              ++pairs;
              if (!search.find({Constraint::exactly(cp, p), Constraint::exactly(cq, q)})) {
                first[static_cast<std::size_t>(w)] = {p, q};
                return;
              }
            }
          }
        });
        const auto worst = *std::min_element(first.begin(), first.end());
        if (worst.first != kNone) rep.fail(amalgamation_witness("amalgamation", T, k, m, n, bound, worst.first, worst.second));
      }
    }
  }
  rep.stats["pairs"] = pairs;
  return rep;
}

Report check_beck_chevalley(const TruncatedSymSS& T, int bound) {
  require_bound(bound, T.max_dim(), "check_beck_chevalley");
  Report rep;
  rep.check = "check_beck_chevalley";
  std::uint64_t checked = 0;
  for (int k = 0; k + 2 <= bound && rep.pass; ++k) {
    for (int m = 1; m + k + 1 <= bound && rep.pass; ++m) {
      for (int n = 1; m + k + n <= bound && rep.pass; ++n) {
        const int N = m + k + n;
        const auto a = block_restriction(T, k, m + k, m);
        const auto b = block_restriction(T, k, k + n, 0);
        const auto c = T.induced_map(FinSetMap::inclusion(m + k, N, 0));
        const auto d = T.induced_map(FinSetMap::inclusion(k + n, N, m));
        const auto over = buckets(b, k ? T.level_size(k) : 1);
        std::vector<std::vector<ElementId>> lifted(a.size());
        for (ElementId r = 0; r < c.size(); ++r) lifted[c[r]].push_back(d[r]);
        for (ElementId p = 0; p < a.size() && rep.pass; ++p, ++checked) {
          auto& lhs = lifted[p];
          std::sort(lhs.begin(), lhs.end());
          lhs.erase(std::unique(lhs.begin(), lhs.end()), lhs.end());
          const auto& rhs = over[a[p]];
          std::vector<ElementId> diff;
          std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(diff));
          if (!diff.empty()) {
            rep.fail(amalgamation_witness("beck_chevalley", T, k, m, n, bound, p, diff.front()));
            break;
          }
          std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
          if (!diff.empty()) rep.fail(amalgamation_witness("functoriality", T, k, m, n, bound, p, diff.front()));
        }
      }
    }
  }
  rep.stats["checked"] = checked;
  return rep;
}

namespace {

/// k = n = 0: y in Y_m over the image of x in level 0 lifts to r in X_m.
void lift_from_base(const SimplicialMapHandle& F, int m, int bound, std::uint64_t& pairs, Report& rep) {
  const auto& a = *F.augmentation();
  const auto& Fm = F.component(m);
  const auto& xs = a.source_restrict[static_cast<std::size_t>(m - 1)];
  const auto& ys = a.target_restrict[static_cast<std::size_t>(m - 1)];
  std::unordered_set<std::uint64_t> realized;
  for (ElementId r = 0; r < Fm.size(); ++r) realized.insert(std::uint64_t{Fm[r]} * a.source_size + xs[r]);
  const auto over = buckets(a.component, a.target_size);
  for (ElementId y = 0; y < ys.size(); ++y) {
    for (ElementId x : over[ys[y]]) {
      ++pairs;
      if (realized.contains(std::uint64_t{y} * a.source_size + x)) continue;
      Witness w;
      w.condition = "lift";
      w.params = {{"k", 0}, {"m", m}, {"n", 0}, {"bound", bound}};
      w.elements = {F.target().describe("y", m, y), {"x", 0, x, "base " + std::to_string(x)}};
      rep.fail(std::move(w));
      return;
    }
  }
}

}  // namespace

Report check_vibrant(const SimplicialMapHandle& F, int bound) {
  require_bound(bound, F.levels(), "check_vibrant");
  if (!simplicial_map_validate(F, bound).pass) {
    throw std::invalid_argument("check_vibrant: " + F.name() + " is not a simplicial map");
  }
  const auto& X = F.source();
  const auto& Y = F.target();
  Report rep;
  rep.check = "check_vibrant";
  std::uint64_t pairs = 0;
  for (int k = 0; k + 1 <= bound && rep.pass; ++k) {
    for (int m = 1; m + k <= bound && rep.pass; ++m) {
      for (int n = 0; m + k + n <= bound && rep.pass; ++n) {
        if (k + n == 0) {
          if (F.augmentation()) lift_from_base(F, m, bound, pairs, rep);
          continue;
        }
        const int N = m + k + n;
        const auto Xkn = X.level_size(k + n);
        const auto& Fmk = F.component(m + k);
        std::unordered_set<std::uint64_t> realized;
        {
          const auto head = X.induced_map(FinSetMap::inclusion(m + k, N, 0));
          const auto tail = X.induced_map(FinSetMap::inclusion(k + n, N, m));
          for (ElementId r = 0; r < head.size(); ++r) realized.insert(std::uint64_t{Fmk[head[r]]} * Xkn + tail[r]);
        }
        const auto ya = block_restriction(Y, k, m + k, m);
        auto xb = block_restriction(X, k, k + n, 0);
        if (k > 0) {
          for (auto& v : xb) v = F.component(k)[v];
        }
        const auto over = buckets(xb, k ? Y.level_size(k) : 1);
        for (ElementId y = 0; y < ya.size() && rep.pass; ++y) {
          for (ElementId x : over[ya[y]]) {
            ++pairs;
            if (realized.contains(std::uint64_t{y} * Xkn + x)) continue;
            Witness w;
            w.condition = "lift";
            w.params = {{"k", k}, {"m", m}, {"n", n}, {"bound", bound}};
            w.elements = {Y.describe("y", m + k, y), X.describe("x", k + n, x)};
            w.maps = {FinSetMap::inclusion(m + k, N, 0).to_string(), FinSetMap::inclusion(k + n, N, m).to_string()};
            rep.fail(std::move(w));
            break;
          }
        }
      }
    }
  }
  rep.stats["pairs"] = pairs;
  return rep;
}

bool is_representable(const TruncatedSymSS& X) {
  const auto d = X.level_size(1);
  std::size_t expected = 1;
  for (int n = 1; n <= X.max_dim(); ++n) {
    expected *= d;
    if (X.level_size(n) != expected) return false;
    std::vector<std::vector<ElementId>> coords;
    for (int i = 0; i < n; ++i) coords.push_back(X.induced_map(FinSetMap::inclusion(1, n, i)));
    std::vector<bool> hit(expected, false);
    for (ElementId t = 0; t < expected; ++t) {
      std::size_t idx = 0;
      for (int i = 0; i < n; ++i) idx = idx * d + coords[static_cast<std::size_t>(i)][t];
      if (hit[idx]) return false;
      hit[idx] = true;
    }
  }
  return true;
}

ModelMode parse_model_mode(const std::string& s) {
  if (s == "saturated") return ModelMode::Saturated;
  if (s == "tv" || s == "tarski_vaught") return ModelMode::TarskiVaught;
  throw std::invalid_argument("unknown model mode '" + s + "' (expected saturated or tv)");
}

Report check_model(const SimplicialMapHandle& F, int bound, ModelMode mode) {
  if (!is_representable(F.source())) {
    throw std::invalid_argument("check_model: source " + F.source().name() + " is not representable");
  }
  if (mode == ModelMode::Saturated) {
    auto r = check_vibrant(F, bound);
    r.check = "check_model[saturated]";
    return r;
  }
  require_bound(bound, F.levels(), "check_model");
  if (!simplicial_map_validate(F, bound).pass) {
    throw std::invalid_argument("check_model: " + F.name() + " is not a simplicial map");
  }
  const auto& M = F.source();
  const auto& T = F.target();
  Report rep;
  rep.check = "check_model[tarski_vaught]";
  std::uint64_t pairs = 0;
  for (int k = 1; k + 1 <= bound && rep.pass; ++k) {
    for (int n = 1; k + n <= bound && rep.pass; ++n) {
      const int N = k + n;
      const auto TN = T.level_size(N);
      const auto& FN = F.component(N);
      const auto mk = M.induced_map(FinSetMap::inclusion(k, N, 0));
      std::unordered_set<std::uint64_t> realized;
      for (ElementId r = 0; r < mk.size(); ++r) realized.insert(std::uint64_t{mk[r]} * TN + FN[r]);
      const auto over = buckets(T.induced_map(FinSetMap::inclusion(k, N, 0)), T.level_size(k));
      const auto& Fk = F.component(k);
      for (ElementId x = 0; x < Fk.size() && rep.pass; ++x) {
        for (ElementId t : over[Fk[x]]) {
          ++pairs;
          if (realized.contains(std::uint64_t{x} * TN + t)) continue;
          Witness w;
          w.condition = "tarski_vaught";
          w.params = {{"k", k}, {"n", n}, {"bound", bound}};
          w.elements = {M.describe("x", k, x), T.describe("t", N, t)};
          w.maps = {FinSetMap::inclusion(k, N, 0).to_string()};
          rep.fail(std::move(w));
          break;
        }
      }
    }
  }
  rep.stats["pairs"] = pairs;
  return rep;
}

}  // namespace typespace
