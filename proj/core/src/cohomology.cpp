#include "typespace/cohomology.hpp"

#include <numeric>
#include <stdexcept>

namespace typespace {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

CoherenceClasses coherence_classes(const TruncatedSymSS& T, int n) {
  if (n < 1 || n + 2 > T.max_dim()) {
    throw std::out_of_range("coherence classes at level " + std::to_string(n) + " need truncation " +
                            std::to_string(n + 2) + ", have " + std::to_string(T.max_dim()));
  }
  const auto size = T.level_size(n + 1);
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  const auto first = T.induced_map(FinSetMap::skip(n + 2, n + 1));
  const auto second = T.induced_map(FinSetMap::skip(n + 2, n));
  for (std::size_t t = 0; t < first.size(); ++t) {
    const int a = find_root(parent, static_cast<int>(first[t]));
    const int b = find_root(parent, static_cast<int>(second[t]));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  CoherenceClasses c;
  c.n = n;
  c.class_of.assign(size, -1);
  std::vector<int> id_of_root(size, -1);
  for (std::size_t u = 0; u < size; ++u) {
    const auto r = static_cast<std::size_t>(find_root(parent, static_cast<int>(u)));
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(c.representative.size());
      c.representative.push_back(static_cast<ElementId>(u));
    }
    c.class_of[u] = id_of_root[r];
  }
  return c;
}

CochainComplex build_complex(const TruncatedSymSS& T, int K, const std::optional<SimplicialMapHandle>& base) {
  if (K < 1) throw std::invalid_argument("build_complex: K must be positive");
  const TruncatedSymSS* C = &T;
  if (base) {
    if (!simplicial_map_validate(*base).pass) throw std::invalid_argument("build_complex: base map is not simplicial");
    C = &base->source();
  }
  if (K + 2 > C->max_dim()) {
    throw std::out_of_range("build_complex: K=" + std::to_string(K) + " needs truncation " + std::to_string(K + 2) +
                            ", have " + std::to_string(C->max_dim()));
  }
  CochainComplex cx;
  cx.name = C->name();
  cx.truncation = C->max_dim();
  for (int n = 1; n <= K; ++n) cx.classes.push_back(coherence_classes(*C, n));
  for (int n = 1; n < K; ++n) {
    const auto& lo = cx.classes[static_cast<std::size_t>(n - 1)];
    const auto& hi = cx.classes[static_cast<std::size_t>(n)];
    IntMatrix delta(hi.size(), lo.size());
    for (int i = 0; i <= n; ++i) {
      const auto pr = C->induced_map(FinSetMap::skip(n + 2, i));
      for (std::size_t u = 0; u < pr.size(); ++u) {
        const auto row = static_cast<std::size_t>(hi.class_of[u]);
        const auto rep = hi.representative[row];
        if (lo.class_of[pr[u]] != lo.class_of[pr[rep]]) {
          throw std::logic_error("coface " + std::to_string(i) + " does not respect coherence at level " +
                                 std::to_string(n + 1) + " (" + C->label(n + 2, static_cast<ElementId>(u)) + ")");
        }
      }
      for (std::size_t row = 0; row < hi.size(); ++row) {
        const auto col = static_cast<std::size_t>(lo.class_of[pr[hi.representative[row]]]);
        delta(row, col) += (i % 2 == 0) ? 1 : -1;
      }
    }
    cx.coboundary.push_back(std::move(delta));
  }
  return cx;
}

bool coboundaries_compose_to_zero(const CochainComplex& c) {
  for (std::size_t q = 0; q + 1 < c.coboundary.size(); ++q) {
    if (!(c.coboundary[q + 1] * c.coboundary[q]).is_zero()) return false;
  }
  return true;
}

std::vector<CohomologyGroup> cohomology(const CochainComplex& c) {
  if (!coboundaries_compose_to_zero(c)) throw std::logic_error("cohomology: coboundaries do not compose to zero");
  std::vector<SNFResult> snf;
  for (const auto& d : c.coboundary) snf.push_back(smith_normal_form(d));
  std::vector<CohomologyGroup> out;
  for (std::size_t q = 0; q < c.coboundary.size(); ++q) {
    CohomologyGroup h;
    h.degree = static_cast<int>(q);
    h.truncation = c.truncation;
    const std::size_t prev_rank = q ? snf[q - 1].rank : 0;
    h.rank = c.rank(static_cast<int>(q)) - snf[q].rank - prev_rank;
    if (q) {
      for (const auto& x : snf[q - 1].diagonal) {
        if (x > 1) h.torsion.push_back(x);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace typespace
