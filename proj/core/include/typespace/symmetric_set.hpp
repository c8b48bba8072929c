#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "typespace/finset_map.hpp"
#include "typespace/report.hpp"

namespace typespace {

inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Thrown when a level would exceed the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& functor, int level, std::size_t size, std::size_t cap);
  int level() const { return level_; }
  std::size_t size() const { return size_; }

 private:
  int level_;
  std::size_t size_;
};

/// Canonical encoding of a simplex. Each oracle fixes its own encoding; the
/// backend orders a level by lexicographic comparison of codes.
using Code = std::vector<int>;

/// Lazily evaluated description of a symmetric simplicial set.
class TheoryOracle {
 public:
  virtual ~TheoryOracle() = default;
  virtual std::string name() const = 0;
  /// Canonical codes of level n, each exactly once, in any order. Throws
  /// CapExceeded once more than `cap` codes would be produced.
  virtual std::vector<Code> enumerate(int n, std::size_t cap) const = 0;
  /// act(f) applied to a canonical code of level f.target_size().
  virtual Code act(const FinSetMap& f, const Code& code) const = 0;
  virtual std::string label(int n, const Code& code) const = 0;
};

/// Storage strategy behind a TruncatedSymSS.
class FunctorBackend {
 public:
  virtual ~FunctorBackend() = default;
  virtual std::string name() const = 0;
  virtual int max_dim() const = 0;
  virtual std::size_t level_size(int n) const = 0;
  virtual ElementId act(const FinSetMap& f, ElementId t) const = 0;
  virtual std::vector<ElementId> induced_map(const FinSetMap& f) const = 0;
  virtual std::string label(int n, ElementId t) const = 0;
  virtual bool materialized() const = 0;
  /// Canonical code of an element when the backend is oracle-driven.
  virtual const Code* code(int /*n*/, ElementId /*t*/) const { return nullptr; }
  virtual std::optional<ElementId> find_code(int /*n*/, const Code& /*c*/) const { return std::nullopt; }
};

/// Per-level tables of the generator actions (see generator_maps).
/// Index n-1 holds the tables for elements of level n.
struct GeneratorTables {
  std::vector<std::vector<std::vector<ElementId>>> swap;  // [n-1][i] : T_n -> T_n
  std::vector<std::vector<ElementId>> forget_last;         // [n-1] : T_n -> T_{n-1}, n >= 2
  std::vector<std::vector<ElementId>> dup_last;            // [n-1] : T_n -> T_{n+1}, n < D
};

/// A symmetric simplicial set truncated at dimension D: finite levels
/// T_1..T_D with the contravariant action of all maps between {1..m} and
/// {1..n}, m, n <= D. Immutable; copies share the backend.
class TruncatedSymSS {
 public:
  explicit TruncatedSymSS(std::shared_ptr<const FunctorBackend> backend);

  static TruncatedSymSS from_oracle(std::shared_ptr<const TheoryOracle> oracle, int max_dim,
                                    std::size_t cap = kDefaultSizeCap);
  /// Throws std::invalid_argument when table shapes disagree with the levels.
  static TruncatedSymSS from_tables(std::string name, std::vector<std::vector<std::string>> labels,
                                    GeneratorTables tables);

  std::string name() const { return backend_->name(); }
  int max_dim() const { return backend_->max_dim(); }
  std::size_t level_size(int n) const;
  std::vector<std::size_t> level_sizes() const;
  bool materialized() const { return backend_->materialized(); }

  /// act(f)(t) for t in level f.target_size().
  ElementId act(const FinSetMap& f, ElementId t) const;
  /// act(f) as a table over level f.target_size().
  std::vector<ElementId> induced_map(const FinSetMap& f) const;

  std::string label(int n, ElementId t) const;
  std::optional<ElementId> find(int n, std::string_view label) const;
  const Code* code(int n, ElementId t) const { return backend_->code(n, t); }
  /// Inverse of code(); nullopt for table-backed functors or unknown codes.
  std::optional<ElementId> find_code(int n, const Code& c) const;

  WitnessElement describe(std::string role, int n, ElementId t) const {
    return {std::move(role), n, t, label(n, t)};
  }

  const FunctorBackend& backend() const { return *backend_; }

 private:
  void check_level(int n) const;
  std::shared_ptr<const FunctorBackend> backend_;
};

/// Copies T into generator tables. Throws CapExceeded when a level exceeds cap.
TruncatedSymSS materialize(const TruncatedSymSS& T, std::size_t cap = kDefaultSizeCap);

/// Tables of the generator actions of T (the shape used by serialization).
GeneratorTables generator_tables(const TruncatedSymSS& T);

/// T o [+s]: level n is T_{n+s}; f acts as id_s + f, the first s coordinates
/// being fixed head coordinates. Requires 0 < s < T.max_dim().
TruncatedSymSS decalage(const TruncatedSymSS& T, int s);

/// Checks act(h o g) = act(g) o act(h) for every composable pair of generator
/// maps and act(id) = id, on every element up to max_dim.
Report validate_functor(const TruncatedSymSS& T);

/// The subset of a level, e.g. the extension of a formula.
struct DefinableSet {
  int level = 0;
  std::vector<ElementId> elements;  // sorted, unique

  bool contains(ElementId t) const;
};

DefinableSet make_definable_set(const TruncatedSymSS& T, int level, std::vector<ElementId> elements);
DefinableSet complement(const TruncatedSymSS& T, const DefinableSet& s);
/// Image of a set along act(f) (for f an inclusion this is the existential).
DefinableSet image(const TruncatedSymSS& T, const FinSetMap& f, const DefinableSet& s);
DefinableSet preimage(const TruncatedSymSS& T, const FinSetMap& f, const DefinableSet& s);

}  // namespace typespace
