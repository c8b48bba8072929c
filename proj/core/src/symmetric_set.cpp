#include "typespace/symmetric_set.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace typespace {

CapExceeded::CapExceeded(const std::string& functor, int level, std::size_t size, std::size_t cap)
    : std::runtime_error(functor + ": level " + std::to_string(level) + " has at least " +
                         std::to_string(size) + " elements, above the cap of " + std::to_string(cap)),
      level_(level),
      size_(size) {}

namespace {

class OracleBackend final : public FunctorBackend {
 public:
  OracleBackend(std::shared_ptr<const TheoryOracle> oracle, int max_dim, std::size_t cap)
      : oracle_(std::move(oracle)), max_dim_(max_dim), cap_(cap) {
    for (int n = 0; n < max_dim; ++n) levels_.push_back(std::make_unique<Level>());
  }

  std::string name() const override { return oracle_->name(); }
  int max_dim() const override { return max_dim_; }
  std::size_t level_size(int n) const override { return codes(n).size(); }

  ElementId act(const FinSetMap& f, ElementId t) const override {
    return lookup(f.source_size(), oracle_->act(f, codes(f.target_size())[t]));
  }

  std::vector<ElementId> induced_map(const FinSetMap& f) const override {
    const auto& src = codes(f.target_size());
    std::vector<ElementId> out(src.size());
    for (std::size_t t = 0; t < src.size(); ++t) out[t] = lookup(f.source_size(), oracle_->act(f, src[t]));
    return out;
  }

  std::string label(int n, ElementId t) const override { return oracle_->label(n, codes(n)[t]); }
  bool materialized() const override { return false; }
  const Code* code(int n, ElementId t) const override { return &codes(n)[t]; }
  std::optional<ElementId> find_code(int n, const Code& c) const override {
    const auto& lv = codes(n);
    auto it = std::lower_bound(lv.begin(), lv.end(), c);
    if (it == lv.end() || *it != c) return std::nullopt;
    return static_cast<ElementId>(it - lv.begin());
  }

 private:
  struct Level {
    std::once_flag once;
    std::vector<Code> codes;
  };

  const std::vector<Code>& codes(int n) const {
    Level& lv = *levels_[static_cast<std::size_t>(n - 1)];
    std::call_once(lv.once, [&] {
      auto c = oracle_->enumerate(n, cap_);
      if (c.size() > cap_) throw CapExceeded(oracle_->name(), n, c.size(), cap_);
      std::sort(c.begin(), c.end());
      if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
        throw std::logic_error(oracle_->name() + ": enumerator repeated an element at level " + std::to_string(n));
      }
      lv.codes = std::move(c);
    });
    return lv.codes;
  }

  ElementId lookup(int n, const Code& c) const {
    const auto& lv = codes(n);
    auto it = std::lower_bound(lv.begin(), lv.end(), c);
    if (it == lv.end() || *it != c) {
      throw std::logic_error(oracle_->name() + ": action produced a non-canonical code at level " +
                             std::to_string(n));
    }
    return static_cast<ElementId>(it - lv.begin());
  }

  std::shared_ptr<const TheoryOracle> oracle_;
  int max_dim_;
  std::size_t cap_;
  std::vector<std::unique_ptr<Level>> levels_;
};

class TableBackend final : public FunctorBackend {
 public:
  TableBackend(std::string name, std::vector<std::vector<std::string>> labels, GeneratorTables tables)
      : name_(std::move(name)), labels_(std::move(labels)), tables_(std::move(tables)) {
    const int D = static_cast<int>(labels_.size());
    auto size = [&](int n) { return labels_[static_cast<std::size_t>(n - 1)].size(); };
    auto require = [&](bool ok, const std::string& what) {
      if (!ok) throw std::invalid_argument(name_ + ": malformed generator table " + what);
    };
    require(D >= 1, "(no levels)");
    require(tables_.swap.size() == static_cast<std::size_t>(D), "swap");
    require(tables_.forget_last.size() == static_cast<std::size_t>(D), "forget_last");
    require(tables_.dup_last.size() == static_cast<std::size_t>(D), "dup_last");
    for (int n = 1; n <= D; ++n) {
      require(size(n) > 0, "(empty level " + std::to_string(n) + ")");
      const auto& sw = tables_.swap[static_cast<std::size_t>(n - 1)];
      require(sw.size() == static_cast<std::size_t>(n - 1), "swap at level " + std::to_string(n));
      for (const auto& t : sw) check_table(t, size(n), size(n), "swap", n);
      const auto& fl = tables_.forget_last[static_cast<std::size_t>(n - 1)];
      if (n >= 2) check_table(fl, size(n), size(n - 1), "forget_last", n);
      else require(fl.empty(), "forget_last at level 1");
      const auto& dl = tables_.dup_last[static_cast<std::size_t>(n - 1)];
      if (n < D) check_table(dl, size(n), size(n + 1), "dup_last", n);
      else require(dl.empty(), "dup_last at top level");
    }
  }

  std::string name() const override { return name_; }
  int max_dim() const override { return static_cast<int>(labels_.size()); }
  std::size_t level_size(int n) const override { return labels_[static_cast<std::size_t>(n - 1)].size(); }

  ElementId act(const FinSetMap& f, ElementId t) const override {
    for (const auto& s : generator_word(f)) t = table(s)[t];
    return t;
  }

  std::vector<ElementId> induced_map(const FinSetMap& f) const override {
    std::vector<ElementId> cur(level_size(f.target_size()));
    std::iota(cur.begin(), cur.end(), ElementId{0});
    for (const auto& s : generator_word(f)) {
      const auto& tab = table(s);
      for (auto& x : cur) x = tab[x];
    }
    return cur;
  }

  std::string label(int n, ElementId t) const override {
    return labels_[static_cast<std::size_t>(n - 1)][t];
  }
  bool materialized() const override { return true; }

 private:
  void check_table(const std::vector<ElementId>& t, std::size_t from, std::size_t to, const char* what,
                   int n) const {
    bool ok = t.size() == from && std::all_of(t.begin(), t.end(), [&](ElementId x) { return x < to; });
    if (!ok) {
      throw std::invalid_argument(name_ + ": malformed generator table " + what + " at level " +
                                  std::to_string(n));
    }
  }

  const std::vector<ElementId>& table(const GeneratorStep& s) const {
    const auto lv = static_cast<std::size_t>(s.level - 1);
    switch (s.kind) {
      case GeneratorStep::Kind::Swap:
        return tables_.swap[lv][static_cast<std::size_t>(s.index)];
      case GeneratorStep::Kind::ForgetLast:
        return tables_.forget_last[lv];
      case GeneratorStep::Kind::DupLast:
        return tables_.dup_last[lv];
    }
    throw std::logic_error("unknown generator");
  }

  std::string name_;
  std::vector<std::vector<std::string>> labels_;
  GeneratorTables tables_;
};

class ShiftBackend final : public FunctorBackend {
 public:
  ShiftBackend(TruncatedSymSS base, int s) : base_(std::move(base)), s_(s) {}

  std::string name() const override { return base_.name() + "[+" + std::to_string(s_) + "]"; }
  int max_dim() const override { return base_.max_dim() - s_; }
  std::size_t level_size(int n) const override { return base_.level_size(n + s_); }
  ElementId act(const FinSetMap& f, ElementId t) const override { return base_.act(shift(f, s_), t); }
  std::vector<ElementId> induced_map(const FinSetMap& f) const override {
    return base_.induced_map(shift(f, s_));
  }
  std::string label(int n, ElementId t) const override { return base_.label(n + s_, t); }
  bool materialized() const override { return base_.materialized(); }
  const Code* code(int n, ElementId t) const override { return base_.code(n + s_, t); }
  std::optional<ElementId> find_code(int n, const Code& c) const override { return base_.find_code(n + s_, c); }

 private:
  TruncatedSymSS base_;
  int s_;
};

}  // namespace

TruncatedSymSS::TruncatedSymSS(std::shared_ptr<const FunctorBackend> backend) : backend_(std::move(backend)) {
  if (!backend_) throw std::invalid_argument("TruncatedSymSS: null backend");
  if (backend_->max_dim() < 1) throw std::invalid_argument("TruncatedSymSS: max_dim must be positive");
}

TruncatedSymSS TruncatedSymSS::from_oracle(std::shared_ptr<const TheoryOracle> oracle, int max_dim,
                                           std::size_t cap) {
  if (max_dim < 1) throw std::invalid_argument("max_dim must be positive");
  return TruncatedSymSS(std::make_shared<OracleBackend>(std::move(oracle), max_dim, cap));
}

TruncatedSymSS TruncatedSymSS::from_tables(std::string name, std::vector<std::vector<std::string>> labels,
                                           GeneratorTables tables) {
  return TruncatedSymSS(std::make_shared<TableBackend>(std::move(name), std::move(labels), std::move(tables)));
}

void TruncatedSymSS::check_level(int n) const {
  if (n < 1 || n > max_dim()) {
    throw std::out_of_range(name() + ": level " + std::to_string(n) + " exceeds truncation " +
                            std::to_string(max_dim()));
  }
}

std::size_t TruncatedSymSS::level_size(int n) const {
  check_level(n);
  return backend_->level_size(n);
}

std::vector<std::size_t> TruncatedSymSS::level_sizes() const {
  std::vector<std::size_t> out;
  for (int n = 1; n <= max_dim(); ++n) out.push_back(level_size(n));
  return out;
}

ElementId TruncatedSymSS::act(const FinSetMap& f, ElementId t) const {
  check_level(f.source_size());
  check_level(f.target_size());
  if (t >= backend_->level_size(f.target_size())) throw std::out_of_range(name() + ": element id out of range");
  return backend_->act(f, t);
}

std::vector<ElementId> TruncatedSymSS::induced_map(const FinSetMap& f) const {
  check_level(f.source_size());
  check_level(f.target_size());
  return backend_->induced_map(f);
}

std::string TruncatedSymSS::label(int n, ElementId t) const {
  check_level(n);
  return backend_->label(n, t);
}

std::optional<ElementId> TruncatedSymSS::find(int n, std::string_view label) const {
  check_level(n);
  const auto size = backend_->level_size(n);
  for (ElementId t = 0; t < size; ++t) {
    if (backend_->label(n, t) == label) return t;
  }
  return std::nullopt;
}

std::optional<ElementId> TruncatedSymSS::find_code(int n, const Code& c) const {
  check_level(n);
  return backend_->find_code(n, c);
}

GeneratorTables generator_tables(const TruncatedSymSS& T) {
  const int D = T.max_dim();
  GeneratorTables g;
  g.swap.resize(static_cast<std::size_t>(D));
  g.forget_last.resize(static_cast<std::size_t>(D));
  g.dup_last.resize(static_cast<std::size_t>(D));
  for (int n = 1; n <= D; ++n) {
    const auto lv = static_cast<std::size_t>(n - 1);
    for (int i = 0; i + 1 < n; ++i) g.swap[lv].push_back(T.induced_map(FinSetMap::adjacent_swap(n, i)));
    if (n >= 2) g.forget_last[lv] = T.induced_map(FinSetMap::forget_last(n));
    if (n < D) g.dup_last[lv] = T.induced_map(FinSetMap::dup_last(n));
  }
  return g;
}

TruncatedSymSS materialize(const TruncatedSymSS& T, std::size_t cap) {
  if (T.materialized()) return T;
  std::vector<std::vector<std::string>> labels;
  for (int n = 1; n <= T.max_dim(); ++n) {
    const auto size = T.level_size(n);
    if (size > cap) throw CapExceeded(T.name(), n, size, cap);
    std::vector<std::string> lv;
    lv.reserve(size);
    for (ElementId t = 0; t < size; ++t) lv.push_back(T.label(n, t));
    labels.push_back(std::move(lv));
  }
  return TruncatedSymSS::from_tables(T.name(), std::move(labels), generator_tables(T));
}

TruncatedSymSS decalage(const TruncatedSymSS& T, int s) {
  if (s <= 0 || s >= T.max_dim()) {
    throw std::out_of_range("decalage: shift " + std::to_string(s) + " must lie in [1, " +
                            std::to_string(T.max_dim() - 1) + "]");
  }
  return TruncatedSymSS(std::make_shared<ShiftBackend>(T, s));
}

Report validate_functor(const TruncatedSymSS& T) {
  Report r;
  r.check = "validate_functor";
  const int D = T.max_dim();
  const auto gens = generator_maps(D);
  std::vector<std::vector<ElementId>> tables;
  tables.reserve(gens.size());
  for (const auto& g : gens) tables.push_back(T.induced_map(g));
  std::uint64_t checks = 0;

  for (int n = 1; n <= D && r.pass; ++n) {
    const auto id = T.induced_map(FinSetMap::identity(n));
    for (ElementId t = 0; t < id.size(); ++t, ++checks) {
      if (id[t] != t) {
        Witness w;
        w.condition = "identity";
        w.params["level"] = n;
        w.elements = {T.describe("t", n, t), T.describe("act(id)(t)", n, id[t])};
        w.maps = {FinSetMap::identity(n).to_string()};
        r.fail(std::move(w));
        break;
      }
    }
  }

  // act(h o g)(t) == act(g)(act(h)(t)) for g : a -> b, h : b -> c, t in level c.
  for (std::size_t hi = 0; hi < gens.size() && r.pass; ++hi) {
    const auto& h = gens[hi];
    for (std::size_t gi = 0; gi < gens.size() && r.pass; ++gi) {
      const auto& g = gens[gi];
      if (g.target_size() != h.source_size()) continue;
      const auto hg = compose(h, g);
      const auto direct = T.induced_map(hg);
      const auto& H = tables[hi];
      const auto& G = tables[gi];
      r.stats["pairs"]++;
      for (ElementId t = 0; t < direct.size(); ++t, ++checks) {
        if (direct[t] != G[H[t]]) {
          Witness w;
          w.condition = "composition";
          w.params["level"] = h.target_size();
          w.elements = {T.describe("t", h.target_size(), t),
                        T.describe("act(h o g)(t)", g.source_size(), direct[t]),
                        T.describe("act(g)(act(h)(t))", g.source_size(), G[H[t]])};
          w.maps = {h.to_string(), g.to_string()};
          r.fail(std::move(w));
          break;
        }
      }
    }
  }
  r.stats["checks"] = checks;
  r.stats["generators"] = gens.size();
  return r;
}

bool DefinableSet::contains(ElementId t) const {
  return std::binary_search(elements.begin(), elements.end(), t);
}

DefinableSet make_definable_set(const TruncatedSymSS& T, int level, std::vector<ElementId> elements) {
  const auto size = T.level_size(level);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.back() >= size) {
    throw std::out_of_range("definable set: element outside level " + std::to_string(level));
  }
  return {level, std::move(elements)};
}

DefinableSet complement(const TruncatedSymSS& T, const DefinableSet& s) {
  std::vector<ElementId> out;
  const auto size = T.level_size(s.level);
  for (ElementId t = 0; t < size; ++t) {
    if (!s.contains(t)) out.push_back(t);
  }
  return {s.level, std::move(out)};
}

DefinableSet image(const TruncatedSymSS& T, const FinSetMap& f, const DefinableSet& s) {
  if (f.target_size() != s.level) throw std::invalid_argument("image: map does not start at the set's level");
  const auto tab = T.induced_map(f);
  std::vector<ElementId> out;
  for (auto t : s.elements) out.push_back(tab[t]);
  return make_definable_set(T, f.source_size(), std::move(out));
}

DefinableSet preimage(const TruncatedSymSS& T, const FinSetMap& f, const DefinableSet& s) {
  if (f.source_size() != s.level) throw std::invalid_argument("preimage: map does not end at the set's level");
  const auto tab = T.induced_map(f);
  std::vector<ElementId> out;
  for (ElementId t = 0; t < tab.size(); ++t) {
    if (s.contains(tab[t])) out.push_back(t);
  }
  return {f.target_size(), std::move(out)};
}

}  // namespace typespace
