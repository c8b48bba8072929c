#include "typespace/builtins.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace typespace {

namespace {

std::string var(int i) { return "x" + std::to_string(i + 1); }

/// Relabels values by order of first occurrence.
std::vector<int> normalize_rgs(const std::vector<int>& v, std::vector<int>* relabel = nullptr) {
  std::map<int, int> seen;
  std::vector<int> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [it, fresh] = seen.emplace(v[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  if (relabel) {
    relabel->clear();
    for (auto [old, neu] : seen) {
      if (static_cast<std::size_t>(old) >= relabel->size()) relabel->resize(static_cast<std::size_t>(old) + 1, -1);
      (*relabel)[static_cast<std::size_t>(old)] = neu;
    }
  }
  return out;
}

std::vector<std::vector<int>> all_rgs(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int blocks) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur.push_back(b);
      self(self, std::max(blocks, b + 1));
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int block_count(const std::vector<int>& rgs) {
  return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
}

std::vector<int> pull_back(const FinSetMap& f, const Code& c) {
  std::vector<int> v(static_cast<std::size_t>(f.source_size()));
  for (int i = 0; i < f.source_size(); ++i) v[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(f(i))];
  return v;
}

void check_cap(const std::string& name, int n, std::size_t size, std::size_t cap) {
  if (size > cap) throw CapExceeded(name, n, size, cap);
}

std::string partition_label(const std::vector<int>& rgs) {
  const int k = block_count(rgs);
  std::string out;
  for (int b = 0; b < k; ++b) {
    if (b) out += "!=";
    bool first = true;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
      if (rgs[i] != b) continue;
      if (!first) out += "=";
      out += var(static_cast<int>(i));
      first = false;
    }
  }
  return out;
}

class EqualityOracle final : public TheoryOracle {
 public:
  std::string name() const override { return "equality"; }
  std::vector<Code> enumerate(int n, std::size_t cap) const override {
    auto out = all_rgs(n);
    check_cap(name(), n, out.size(), cap);
    return out;
  }
  Code act(const FinSetMap& f, const Code& c) const override { return normalize_rgs(pull_back(f, c)); }
  std::string label(int, const Code& c) const override { return partition_label(c); }
};

class DloOracle final : public TheoryOracle {
 public:
  std::string name() const override { return "dlo"; }
  std::vector<Code> enumerate(int n, std::size_t cap) const override {
    std::vector<Code> out;
    for (const auto& rgs : all_rgs(n)) {
      std::vector<int> perm(static_cast<std::size_t>(block_count(rgs)));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        Code c(rgs.size());
        for (std::size_t i = 0; i < rgs.size(); ++i) c[i] = perm[static_cast<std::size_t>(rgs[i])];
        out.push_back(std::move(c));
        check_cap(name(), n, out.size(), cap);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }
  Code act(const FinSetMap& f, const Code& c) const override {
    auto v = pull_back(f, c);
    auto ranks = v;
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    for (auto& x : v) x = static_cast<int>(std::lower_bound(ranks.begin(), ranks.end(), x) - ranks.begin());
    return v;
  }
  std::string label(int, const Code& c) const override {
    const int k = block_count(c);
    std::string out;
    for (int r = 0; r < k; ++r) {
      if (r) out += "<";
      bool first = true;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != r) continue;
        if (!first) out += "=";
        out += var(static_cast<int>(i));
        first = false;
      }
    }
    return out;
  }
};

/// Code: restricted growth string of length n, then the edge list
/// a0,b0,a1,b1,... over block indices with a < b, sorted.
class RandomGraphOracle final : public TheoryOracle {
 public:
  std::string name() const override { return "random_graph"; }
  std::vector<Code> enumerate(int n, std::size_t cap) const override {
    std::vector<Code> out;
    for (const auto& rgs : all_rgs(n)) {
      const int k = block_count(rgs);
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
      }
      if (pairs.size() >= 40) throw CapExceeded(name(), n, std::size_t{1} << 40, cap);
      const std::uint64_t masks = std::uint64_t{1} << pairs.size();
      check_cap(name(), n, out.size() + masks, cap);
      for (std::uint64_t m = 0; m < masks; ++m) {
        Code c = rgs;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          if (m >> p & 1U) {
            c.push_back(pairs[p].first);
            c.push_back(pairs[p].second);
          }
        }
        out.push_back(std::move(c));
      }
    }
    return out;
  }
  Code act(const FinSetMap& f, const Code& c) const override {
    const auto n = static_cast<std::size_t>(f.target_size());
    std::vector<int> relabel;
    Code out = normalize_rgs(pull_back(f, c), &relabel);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = n; e + 1 < c.size(); e += 2) {
      const auto a = static_cast<std::size_t>(c[e]);
      const auto b = static_cast<std::size_t>(c[e + 1]);
      if (a >= relabel.size() || b >= relabel.size() || relabel[a] < 0 || relabel[b] < 0) continue;
      edges.emplace_back(std::min(relabel[a], relabel[b]), std::max(relabel[a], relabel[b]));
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }
  std::string label(int n, const Code& c) const override {
    std::vector<int> rgs(c.begin(), c.begin() + n);
    std::vector<int> first(static_cast<std::size_t>(block_count(rgs)), -1);
    for (int i = n - 1; i >= 0; --i) first[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])] = i;
    std::string out = partition_label(rgs);
    for (std::size_t e = static_cast<std::size_t>(n); e + 1 < c.size(); e += 2) {
      out += " E(" + var(first[static_cast<std::size_t>(c[e])]) + "," + var(first[static_cast<std::size_t>(c[e + 1])]) + ")";
    }
    return out;
  }
};

/// Code: the sorted elements of the subspace K of F_2^n, bit i standing for
/// v_{i+1}; S in K means sum_{i in S} v_i = 0.
class VectF2Oracle final : public TheoryOracle {
 public:
  std::string name() const override { return "vect_f2"; }
  std::vector<Code> enumerate(int n, std::size_t cap) const override {
    if (n > 20) throw CapExceeded(name(), n, std::size_t{1} << 20, cap);
    const int full = 1 << n;
    std::set<Code> seen{Code{0}};
    std::vector<Code> frontier{Code{0}};
    while (!frontier.empty()) {
      std::vector<Code> next;
      for (const auto& K : frontier) {
        std::vector<bool> in(static_cast<std::size_t>(full), false);
        for (int x : K) in[static_cast<std::size_t>(x)] = true;
        for (int v = 1; v < full; ++v) {
          if (in[static_cast<std::size_t>(v)]) continue;
          Code span = K;
          for (int x : K) span.push_back(x ^ v);
          std::sort(span.begin(), span.end());
          if (seen.insert(span).second) {
            check_cap(name(), n, seen.size(), cap);
            next.push_back(std::move(span));
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }
  Code act(const FinSetMap& f, const Code& K) const override {
    Code out;
    for (int c = 0; c < (1 << f.source_size()); ++c) {
      int pushed = 0;
      for (int i = 0; i < f.source_size(); ++i) {
        if (c >> i & 1) pushed ^= 1 << f(i);
      }
      if (std::binary_search(K.begin(), K.end(), pushed)) out.push_back(c);
    }
    return out;
  }
  std::string label(int, const Code& K) const override {
    // Reduced echelon basis, pivot = lowest set bit.
    std::vector<int> basis;
    for (int v : K) {
      for (int b : basis) {
        const int pivot = b & -b;
        if (v & pivot) v ^= b;
      }
      if (!v) continue;
      const int pivot = v & -v;
      for (auto& b : basis) {
        if (b & pivot) b ^= v;
      }
      basis.push_back(v);
    }
    if (basis.empty()) return "indep";
    std::sort(basis.begin(), basis.end(), [](int a, int b) { return (a & -a) < (b & -b); });
    std::string out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j) out += ";";
      bool first = true;
      for (int i = 0; basis[j] >> i; ++i) {
        if (!(basis[j] >> i & 1)) continue;
        if (!first) out += "+";
        out += var(i);
        first = false;
      }
      out += "=0";
    }
    return out;
  }
};

class PointOracle final : public TheoryOracle {
 public:
  std::string name() const override { return "point"; }
  std::vector<Code> enumerate(int, std::size_t) const override { return {Code{}}; }
  Code act(const FinSetMap&, const Code&) const override { return {}; }
  std::string label(int, const Code&) const override { return "*"; }
};

class QuotientOracle final : public TheoryOracle {
 public:
  QuotientOracle(std::string name, std::vector<std::string> points, std::vector<Permutation> group, bool parens)
      : name_(std::move(name)), points_(std::move(points)), group_(std::move(group)), parens_(parens) {
    trivial_ = group_.size() == 1;
  }
  std::string name() const override { return name_; }
  std::vector<Code> enumerate(int n, std::size_t cap) const override {
    const auto d = points_.size();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
      total *= d;
      if (total > cap * group_.size()) throw CapExceeded(name_, n, total / group_.size(), cap);
    }
    std::vector<Code> out;
    Code t(static_cast<std::size_t>(n), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t rest = idx;
      for (int i = n - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = static_cast<int>(rest % d);
        rest /= d;
      }
      if (trivial_ || canonical_tuple(group_, t) == t) {
        out.push_back(t);
        check_cap(name_, n, out.size(), cap);
      }
    }
    return out;
  }
  Code act(const FinSetMap& f, const Code& c) const override {
    auto v = pull_back(f, c);
    return trivial_ ? v : canonical_tuple(group_, v);
  }
  std::string label(int, const Code& c) const override {
    std::string out = parens_ ? "(" : "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += points_[static_cast<std::size_t>(c[i])];
    }
    return out + (parens_ ? ")" : "]");
  }

 private:
  std::string name_;
  std::vector<std::string> points_;
  std::vector<Permutation> group_;
  bool parens_ = false;
  bool trivial_ = false;
};

TruncatedSymSS make_quotient(const std::vector<std::string>& points, const std::vector<Permutation>& G, int max_dim,
                             std::size_t cap, std::string name, bool parens) {
  if (points.empty()) throw std::invalid_argument("simplicial_quotient: empty point set");
  if (!is_group(G) || G.front().size() != static_cast<int>(points.size())) {
    throw std::invalid_argument("simplicial_quotient: permutations do not form a group on " +
                                std::to_string(points.size()) + " points");
  }
  std::vector<Permutation> sorted(G.begin(), G.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return TruncatedSymSS::from_oracle(
      std::make_shared<QuotientOracle>(std::move(name), points, std::move(sorted), parens), max_dim, cap);
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"equality", "dlo", "random_graph", "vect_f2", "point"};
  return names;
}

int default_max_dim(const std::string& name) {
  builtin_oracle(name);
  return name == "vect_f2" ? 5 : 6;
}

std::shared_ptr<const TheoryOracle> builtin_oracle(const std::string& name) {
  if (name == "equality") return std::make_shared<EqualityOracle>();
  if (name == "dlo") return std::make_shared<DloOracle>();
  if (name == "random_graph") return std::make_shared<RandomGraphOracle>();
  if (name == "vect_f2") return std::make_shared<VectF2Oracle>();
  if (name == "point") return std::make_shared<PointOracle>();
  throw std::invalid_argument("unknown builtin theory '" + name + "'");
}

TruncatedSymSS builtin(const std::string& name, int max_dim, std::size_t cap) {
  auto oracle = builtin_oracle(name);
  return TruncatedSymSS::from_oracle(std::move(oracle), max_dim <= 0 ? default_max_dim(name) : max_dim, cap);
}

std::vector<int> canonical_tuple(const std::vector<Permutation>& G, const std::vector<int>& tuple) {
  std::vector<int> best = tuple;
  std::vector<int> cur(tuple.size());
  for (const auto& g : G) {
    for (std::size_t i = 0; i < tuple.size(); ++i) cur[i] = g(tuple[i]);
    if (cur < best) best = cur;
  }
  return best;
}

TruncatedSymSS simplicial_quotient(const std::vector<std::string>& points, const std::vector<Permutation>& G,
                                   int max_dim, std::size_t cap, std::string name) {
  return make_quotient(points, G, max_dim, cap, name.empty() ? "quotient" : std::move(name), false);
}

TruncatedSymSS representable(const std::vector<std::string>& points, int max_dim, std::size_t cap,
                             std::string name) {
  return make_quotient(points, {Permutation::identity(static_cast<int>(points.size()))}, max_dim, cap,
                       name.empty() ? "rep" : std::move(name), true);
}

TruncatedSymSS classifying_space(const std::vector<Permutation>& G, int max_dim, std::size_t cap) {
  if (!is_group(G)) throw std::invalid_argument("classifying_space: not a group");
  std::vector<Permutation> elems(G.begin(), G.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto index = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(elems[i].is_identity() ? std::string("e") : "g" + std::to_string(i));
  }
  std::vector<Permutation> left;
  for (const auto& g : elems) {
    std::vector<int> img;
    for (const auto& h : elems) img.push_back(index(g * h));
    left.emplace_back(std::move(img));
  }
  return simplicial_quotient(names, left, max_dim, cap, "BG");
}

}  // namespace typespace
