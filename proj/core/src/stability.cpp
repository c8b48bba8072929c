#include "typespace/stability.hpp"

#include <map>
#include <stdexcept>

#include "typespace/search.hpp"

namespace typespace {

namespace {

/// The map placing the chosen blocks (width n) side by side inside `total` coordinates.
FinSetMap block_map(int n, const std::vector<int>& blocks, int total, int offset = 0) {
  std::vector<int> v;
  for (int b : blocks) {
    for (int c = 0; c < n; ++c) v.push_back(offset + b * n + c);
  }
  return FinSetMap(total, std::move(v));
}

FinSetMap block_swap(int n, int L, int i) {
  std::vector<int> v(static_cast<std::size_t>(n * L));
  for (int b = 0; b < L; ++b) {
    const int src = b == i ? i + 1 : b == i + 1 ? i : b;
    for (int c = 0; c < n; ++c) v[static_cast<std::size_t>(b * n + c)] = src * n + c;
  }
  return FinSetMap(n * L, std::move(v));
}

void require_level(const TruncatedSymSS& T, int level, const std::string& who) {
  if (level < 1 || level > T.max_dim()) {
    throw std::out_of_range(who + ": needs level " + std::to_string(level) + " but truncation is " +
                            std::to_string(T.max_dim()));
  }
}

std::vector<std::vector<int>> increasing_subsets(int L, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == j) {
      out.push_back(cur);
      return;
    }
    for (int b = from; b < L; ++b) {
      cur.push_back(b);
      self(self, b + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// For each j < L, restriction tables along every increasing j-subset of blocks.
class Coherence {
 public:
  Coherence(const TruncatedSymSS& T, int n, int L) {
    for (int j = 1; j < L; ++j) {
      std::vector<std::vector<ElementId>> group;
      for (const auto& s : increasing_subsets(L, j)) group.push_back(T.induced_map(block_map(n, s, n * L)));
      tables_.push_back(std::move(group));
    }
  }
  bool holds(ElementId t) const {
    for (const auto& group : tables_) {
      for (const auto& tab : group) {
        if (tab[t] != group.front()[t]) return false;
      }
    }
    return true;
  }
  /// Restriction of t to a single block (all blocks agree when coherent).
  ElementId block(ElementId t) const { return tables_.front().front()[t]; }

 private:
  std::vector<std::vector<std::vector<ElementId>>> tables_;
};

}  // namespace

std::optional<OrderWitness> order_property(const TruncatedSymSS& T, const DefinableSet& phi, int N) {
  if (phi.level % 2 != 0) throw std::invalid_argument("order_property: formula level must be even (2d)");
  if (N < 1) throw std::invalid_argument("order_property: N must be positive");
  const int d = phi.level / 2;
  const int level = 2 * d * N;
  require_level(T, level, "order_property");
  const auto neg = complement(T, phi);
  std::vector<Constraint> cs;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      std::vector<int> v;
      for (int c = 0; c < d; ++c) v.push_back(i * d + c);
      for (int c = 0; c < d; ++c) v.push_back(N * d + j * d + c);
      cs.push_back({FinSetMap(level, std::move(v)), i <= j ? phi.elements : neg.elements});
    }
  }
  auto t = simplex_search(T, level, cs);
  if (!t) return std::nullopt;
  OrderWitness w;
  w.N = N;
  w.d = d;
  w.t = *t;
  w.label = T.label(level, *t);
  for (int i = 0; i < N; ++i) {
    std::vector<int> a;
    std::vector<int> b;
    for (int c = 0; c < d; ++c) {
      a.push_back(i * d + c);
      b.push_back(N * d + i * d + c);
    }
    w.a_blocks.push_back(std::move(a));
    w.b_blocks.push_back(std::move(b));
  }
  return w;
}

bool order_coherent(const TruncatedSymSS& T, int n, int L, ElementId t) {
  return Coherence(T, n, L).holds(t);
}

std::optional<IndiscernibleWitness> indiscernible_gap(const TruncatedSymSS& T, int n, int L) {
  if (n < 1 || L < 1) throw std::invalid_argument("indiscernible_gap: n and L must be positive");
  const int level = n * L;
  require_level(T, level, "indiscernible_gap");
  if (L == 1) return std::nullopt;
  const Coherence coh(T, n, L);
  std::vector<std::vector<ElementId>> swaps;
  for (int i = 0; i + 1 < L; ++i) swaps.push_back(T.induced_map(block_swap(n, L, i)));
  const auto size = T.level_size(level);
  for (ElementId t = 0; t < size; ++t) {
    if (!coh.holds(t)) continue;
    for (int i = 0; i + 1 < L; ++i) {
      const auto u = swaps[static_cast<std::size_t>(i)][t];
      if (u == t) continue;
      return IndiscernibleWitness{n, L, t, T.label(level, t), i, u, T.label(level, u)};
    }
  }
  return std::nullopt;
}

DividingResult divides_at_level(const TruncatedSymSS& T, ElementId p, int m, int n, int L, int k) {
  if (m < 1 || n < 1) throw std::invalid_argument("divides_at_level: x-block and y-block must be nonempty");
  if (k < 1 || k > L) throw std::invalid_argument("divides_at_level: k must lie in 1..L");
  require_level(T, m + n, "divides_at_level");
  require_level(T, m + n * L, "divides_at_level");
  require_level(T, m + n * k, "divides_at_level");
  if (p >= T.level_size(m + n)) throw std::out_of_range("divides_at_level: p outside level m+n");
  const auto b = T.act(FinSetMap::inclusion(n, m + n, m), p);

  const int level = n * L;
  const int top = m + n * k;
  const Coherence coh(T, n, L);
  const auto first_k = T.induced_map(FinSetMap::inclusion(n * k, level, 0));
  std::vector<Constraint> cs;
  cs.push_back({FinSetMap::inclusion(n * k, top, m), {}});
  for (int i = 0; i < k; ++i) {
    std::vector<int> v;
    for (int c = 0; c < m; ++c) v.push_back(c);
    for (int c = 0; c < n; ++c) v.push_back(m + i * n + c);
    cs.push_back(Constraint::exactly(FinSetMap(top, std::move(v)), p));
  }
  SimplexSearch search(T, top);
  std::map<ElementId, bool> consistent;

  DividingResult out;
  const auto size = T.level_size(level);
  for (ElementId s = 0; s < size; ++s) {
    if (L > 1 && (!coh.holds(s) || coh.block(s) != b)) continue;
    if (L == 1 && s != b) continue;
    ++out.sequences_checked;
    const auto sk = first_k[s];
    auto it = consistent.find(sk);
    if (it == consistent.end()) {
      cs.front().allowed = {sk};
      it = consistent.emplace(sk, search.find(cs).has_value()).first;
    }
    if (!it->second) {
      out.divides = true;
      out.sequence = s;
      out.sequence_label = T.label(level, s);
      return out;
    }
  }
  return out;
}

Report to_report(const std::optional<OrderWitness>& w, const TruncatedSymSS& T, const DefinableSet& phi, int N) {
  Report r;
  r.check = "order_property";
  r.stats["level"] = static_cast<std::uint64_t>(phi.level * N);
  if (w) {
    Witness x;
    x.condition = "order_property";
    x.params = {{"N", w->N}, {"d", w->d}};
    x.elements.push_back({"t", 2 * w->d * w->N, w->t, w->label});
    for (auto e : phi.elements) x.elements.push_back(T.describe("phi", phi.level, e));
    r.fail(std::move(x));
  }
  return r;
}

Report to_report(const std::optional<IndiscernibleWitness>& w, int n, int L) {
  Report r;
  r.check = "indiscernible_gap";
  r.stats["level"] = static_cast<std::uint64_t>(n * L);
  if (w) {
    Witness x;
    x.condition = "not_set_indiscernible";
    x.params = {{"n", n}, {"L", L}, {"block", w->block + 1}};
    x.elements = {{"t", n * L, w->t, w->label}, {"permuted", n * L, w->permuted, w->permuted_label}};
    x.maps = {block_swap(n, L, w->block).to_string()};
    r.fail(std::move(x));
  }
  return r;
}

Report to_report(const DividingResult& d, const TruncatedSymSS& T, ElementId p, int m, int n, int L, int k) {
  Report r;
  r.check = "divides_at_level";
  r.stats["level"] = static_cast<std::uint64_t>(n * L);
  r.stats["sequences"] = d.sequences_checked;
  if (d.divides) {
    Witness x;
    x.condition = "divides";
    x.params = {{"m", m}, {"n", n}, {"L", L}, {"k", k}};
    x.elements = {T.describe("p", m + n, p), {"sequence", n * L, *d.sequence, d.sequence_label}};
    r.fail(std::move(x));
  }
  return r;
}

}  // namespace typespace
