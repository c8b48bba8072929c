#include "typespace/finset_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace typespace {

FinSetMap::FinSetMap(int target_size, std::vector<int> values)
    : target_(target_size), values_(std::move(values)) {
  if (target_ <= 0 || values_.empty()) {
    throw std::invalid_argument("FinSetMap: source and target must be nonempty");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] >= target_) {
      throw std::invalid_argument("FinSetMap: entry " + std::to_string(i + 1) + " = " +
                                  std::to_string(values_[i] + 1) + " outside {1.." +
                                  std::to_string(target_) + "}");
    }
  }
}

FinSetMap FinSetMap::one_based(int target_size, std::initializer_list<int> values) {
  return one_based(target_size, std::vector<int>(values));
}

FinSetMap FinSetMap::one_based(int target_size, const std::vector<int>& values) {
  std::vector<int> v(values);
  for (int& x : v) --x;
  return FinSetMap(target_size, std::move(v));
}

FinSetMap FinSetMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return FinSetMap(n, std::move(v));
}

FinSetMap FinSetMap::inclusion(int m, int n, int offset) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), offset);
  return FinSetMap(n, std::move(v));
}

FinSetMap FinSetMap::adjacent_swap(int n, int i) {
  auto f = identity(n);
  std::swap(f.values_.at(static_cast<std::size_t>(i)), f.values_.at(static_cast<std::size_t>(i + 1)));
  return f;
}

FinSetMap FinSetMap::forget_last(int n) { return inclusion(n - 1, n); }

FinSetMap FinSetMap::dup_last(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  std::iota(v.begin(), v.end() - 1, 0);
  v.back() = n - 1;
  return FinSetMap(n, std::move(v));
}

FinSetMap FinSetMap::skip(int n, int skipped) {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) {
    if (i != skipped) v.push_back(i);
  }
  return FinSetMap(n, std::move(v));
}

bool FinSetMap::is_injective() const {
  std::vector<bool> seen(static_cast<std::size_t>(target_), false);
  for (int v : values_) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool FinSetMap::is_surjective() const {
  std::vector<bool> seen(static_cast<std::size_t>(target_), false);
  for (int v : values_) seen[static_cast<std::size_t>(v)] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool FinSetMap::is_increasing() const {
  return std::adjacent_find(values_.begin(), values_.end(), std::greater_equal<>()) == values_.end();
}

FinSetMap FinSetMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("FinSetMap::inverse: not a bijection");
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) inv[static_cast<std::size_t>(values_[i])] = static_cast<int>(i);
  return FinSetMap(target_, std::move(inv));
}

std::string FinSetMap::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ',';
    os << values_[i] + 1;
  }
  os << "]:" << values_.size() << "->" << target_;
  return os.str();
}

FinSetMap compose(const FinSetMap& f, const FinSetMap& g) {
  if (g.target_size() != f.source_size()) {
    throw std::invalid_argument("compose: " + f.to_string() + " o " + g.to_string() + " not composable");
  }
  std::vector<int> v(static_cast<std::size_t>(g.source_size()));
  for (int i = 0; i < g.source_size(); ++i) v[static_cast<std::size_t>(i)] = f(g(i));
  return FinSetMap(f.target_size(), std::move(v));
}

FinSetMap shift(const FinSetMap& f, int s) {
  if (s == 0) return f;
  std::vector<int> v(static_cast<std::size_t>(s + f.source_size()));
  std::iota(v.begin(), v.begin() + s, 0);
  for (int i = 0; i < f.source_size(); ++i) v[static_cast<std::size_t>(s + i)] = s + f(i);
  return FinSetMap(s + f.target_size(), std::move(v));
}

Factorization canonical_factorization(const FinSetMap& f) {
  std::vector<int> image(f.values());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  std::vector<int> rank(static_cast<std::size_t>(f.target_size()), -1);
  for (std::size_t j = 0; j < image.size(); ++j) rank[static_cast<std::size_t>(image[j])] = static_cast<int>(j);
  std::vector<int> surj(static_cast<std::size_t>(f.source_size()));
  for (int i = 0; i < f.source_size(); ++i) surj[static_cast<std::size_t>(i)] = rank[static_cast<std::size_t>(f(i))];
  const int r = static_cast<int>(image.size());
  return {FinSetMap(r, std::move(surj)), FinSetMap(f.target_size(), std::move(image))};
}

namespace {

// Appends swaps realizing act(perm) on an element of `level` coordinates:
// afterwards coordinate i holds what was coordinate perm(i).
void append_permutation(std::vector<GeneratorStep>& steps, int level, const std::vector<int>& perm) {
  std::vector<int> cur(static_cast<std::size_t>(level));
  std::iota(cur.begin(), cur.end(), 0);
  for (int i = 0; i < level; ++i) {
    auto it = std::find(cur.begin() + i, cur.end(), perm[static_cast<std::size_t>(i)]);
    int p = static_cast<int>(it - cur.begin());
    for (; p > i; --p) {
      steps.push_back({GeneratorStep::Kind::Swap, level, p - 1});
      std::swap(cur[static_cast<std::size_t>(p - 1)], cur[static_cast<std::size_t>(p)]);
    }
  }
}

std::vector<int> transposition(int level, int a, int b) {
  std::vector<int> p(static_cast<std::size_t>(level));
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
  return p;
}

}  // namespace

std::vector<GeneratorStep> generator_word(const FinSetMap& f) {
  const int m = f.source_size();
  const int n = f.target_size();
  auto [surj, inj] = canonical_factorization(f);
  const int r = surj.target_size();
  std::vector<GeneratorStep> steps;

  // f = pi o iota o u o rho.
  std::vector<int> pi(inj.values());
  {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int v : pi) used[static_cast<std::size_t>(v)] = true;
    for (int j = 0; j < n; ++j) {
      if (!used[static_cast<std::size_t>(j)]) pi.push_back(j);
    }
  }
  append_permutation(steps, n, pi);
  for (int level = n; level > r; --level) steps.push_back({GeneratorStep::Kind::ForgetLast, level, 0});

  std::vector<int> rho(static_cast<std::size_t>(m));
  std::vector<int> extra;  // u(r + j) = extra[j]
  {
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (int i = 0; i < m; ++i) {
      int v = surj(i);
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        rho[static_cast<std::size_t>(i)] = v;
      } else {
        rho[static_cast<std::size_t>(i)] = r + static_cast<int>(extra.size());
        extra.push_back(v);
      }
    }
  }
  for (std::size_t j = 0; j < extra.size(); ++j) {
    const int level = r + static_cast<int>(j);
    const int a = extra[j];
    if (a != level - 1) append_permutation(steps, level, transposition(level, a, level - 1));
    steps.push_back({GeneratorStep::Kind::DupLast, level, 0});
    if (a != level - 1) append_permutation(steps, level + 1, transposition(level + 1, a, level - 1));
  }
  append_permutation(steps, m, rho);
  return steps;
}

std::vector<FinSetMap> generator_maps(int max_dim) {
  std::vector<FinSetMap> out;
  for (int n = 1; n <= max_dim; ++n) {
    for (int i = 0; i + 1 < n; ++i) out.push_back(FinSetMap::adjacent_swap(n, i));
    if (n >= 2) out.push_back(FinSetMap::forget_last(n));
    if (n + 1 <= max_dim) out.push_back(FinSetMap::dup_last(n));
  }
  return out;
}

std::vector<FinSetMap> all_maps(int m, int n) {
  std::vector<FinSetMap> out;
  std::vector<int> v(static_cast<std::size_t>(m), 0);
  while (true) {
    out.emplace_back(n, v);
    int i = m - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n - 1) {
      v[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace typespace
