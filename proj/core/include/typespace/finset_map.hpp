#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace typespace {

/// A function between standard finite sets {0..m-1} -> {0..n-1}.
///
/// Values are stored zero-based; `one_based` and `to_string` use the
/// one-based notation of the mathematical literature. A symmetric simplicial
/// set acts contravariantly: for f : m -> n, act(f) sends level n to level m
/// and coordinate i of the result is coordinate f(i) of the input.
class FinSetMap {
 public:
  FinSetMap() = default;

  /// Throws std::invalid_argument when an entry is outside {0..target-1} or
  /// a size is zero.
  FinSetMap(int target_size, std::vector<int> values);

  static FinSetMap one_based(int target_size, std::initializer_list<int> values);
  static FinSetMap one_based(int target_size, const std::vector<int>& values);

  static FinSetMap identity(int n);
  /// Increasing inclusion {0..m-1} -> {0..n-1}, i -> offset + i.
  static FinSetMap inclusion(int m, int n, int offset = 0);
  /// Transposition of coordinates i and i+1 on {0..n-1}.
  static FinSetMap adjacent_swap(int n, int i);
  /// {0..n-2} -> {0..n-1}; its action forgets the last coordinate.
  static FinSetMap forget_last(int n);
  /// {0..n} -> {0..n-1}, n -> n-1; its action duplicates the last coordinate.
  static FinSetMap dup_last(int n);
  /// {0..n-2} -> {0..n-1} skipping `skipped`.
  static FinSetMap skip(int n, int skipped);

  int source_size() const { return static_cast<int>(values_.size()); }
  int target_size() const { return target_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& values() const { return values_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return source_size() == target_ && is_injective(); }
  bool is_increasing() const;

  /// Inverse of a bijection; throws std::invalid_argument otherwise.
  FinSetMap inverse() const;

  std::string to_string() const;

  friend bool operator==(const FinSetMap&, const FinSetMap&) = default;
  friend auto operator<=>(const FinSetMap& a, const FinSetMap& b) {
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  int target_ = 0;
  std::vector<int> values_;
};

/// f o g, defined when g.target_size() == f.source_size().
FinSetMap compose(const FinSetMap& f, const FinSetMap& g);

/// id_s + f : {0..s+m-1} -> {0..s+n-1}, fixing the first s coordinates.
FinSetMap shift(const FinSetMap& f, int s);

/// Epi-mono factorization: f = injection o surjection, where the surjection
/// targets |image(f)| and the injection lists image(f) in increasing order.
struct Factorization {
  FinSetMap surjection;
  FinSetMap injection;
};
Factorization canonical_factorization(const FinSetMap& f);

/// One step of a generator word. Steps are applied to an element in order.
struct GeneratorStep {
  enum class Kind : std::uint8_t { Swap, ForgetLast, DupLast };
  Kind kind;
  int level;  // level of the element the step is applied to
  int index;  // swap position (Swap only)

  friend bool operator==(const GeneratorStep&, const GeneratorStep&) = default;
};

/// Expresses act(f) as a sequence of generator actions: adjacent swaps,
/// forgetting the last coordinate, duplicating the last coordinate. Applying
/// the steps in order to an element of level f.target_size() yields act(f).
std::vector<GeneratorStep> generator_word(const FinSetMap& f);

/// The generator maps used for validation up to level `max_dim`: adjacent
/// transpositions, one-point injections and one-point duplications.
std::vector<FinSetMap> generator_maps(int max_dim);

/// All maps {0..m-1} -> {0..n-1}, in lexicographic order of values.
std::vector<FinSetMap> all_maps(int m, int n);

}  // namespace typespace
