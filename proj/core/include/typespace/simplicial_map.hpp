#pragma once

#include <optional>
#include <string>
#include <vector>

#include "typespace/symmetric_set.hpp"

namespace typespace {

/// Level-0 data of a map whose source and target extend to the empty set, as
/// a decalage does (level 0 of T o [+s] is T_s). restrict[m-1] sends level m
/// to level 0.
struct Augmentation {
  std::size_t source_size = 1;
  std::size_t target_size = 1;
  std::vector<ElementId> component;                     // source level 0 -> target level 0
  std::vector<std::vector<ElementId>> source_restrict;  // [m-1] : X_m -> X_0
  std::vector<std::vector<ElementId>> target_restrict;  // [m-1] : Y_m -> Y_0
};

/// A levelwise map X -> Y between truncated functors. Components are stored
/// for levels 1..levels(), which must not exceed either truncation.
class SimplicialMapHandle {
 public:
  /// components[n-1][x] is the image of x in level n of the target.
  /// Throws std::invalid_argument on mismatched truncations or table shapes.
  SimplicialMapHandle(std::string name, TruncatedSymSS source, TruncatedSymSS target,
                      std::vector<std::vector<ElementId>> components);

  /// Attaches level-0 data; throws std::invalid_argument on shape errors.
  void set_augmentation(Augmentation a);
  const std::optional<Augmentation>& augmentation() const { return augmentation_; }

  const std::string& name() const { return name_; }
  const TruncatedSymSS& source() const { return source_; }
  const TruncatedSymSS& target() const { return target_; }
  int levels() const { return static_cast<int>(components_.size()); }
  const std::vector<ElementId>& component(int n) const { return components_.at(static_cast<std::size_t>(n - 1)); }
  ElementId operator()(int n, ElementId x) const { return component(n)[x]; }

 private:
  std::string name_;
  TruncatedSymSS source_;
  TruncatedSymSS target_;
  std::vector<std::vector<ElementId>> components_;
  std::optional<Augmentation> augmentation_;
};

/// Naturality: F o act_X(g) = act_Y(g) o F for every generator map g within
/// min(bound, F.levels()), and compatibility with the level-0 data if any.
/// bound <= 0 means all shared levels.
Report simplicial_map_validate(const SimplicialMapHandle& F, int bound = 0);

/// Validated and bijective at every level.
bool is_isomorphism(const SimplicialMapHandle& F);

SimplicialMapHandle identity_map(const TruncatedSymSS& T);

/// The projection T o [+s] -> T o [+(s-1)] forgetting head coordinate
/// `head` (0-based, head < s). For s == 1 the target is T itself. Carries the
/// augmentation T_s -> T_{s-1} (a point when s == 1).
SimplicialMapHandle head_projection(const TruncatedSymSS& T, int s, int head);

/// The s head projections of decalage(T, s), one per forgotten coordinate.
std::vector<SimplicialMapHandle> decalage_projections(const TruncatedSymSS& T, int s);

/// The sub-functor on the kept elements with its inclusion into T.
/// Throws std::invalid_argument when the kept elements are not closed under
/// the action or a level becomes empty.
SimplicialMapHandle subfunctor_inclusion(const TruncatedSymSS& T, const std::vector<std::vector<bool>>& keep,
                                         std::string name);

/// Removes an element of some level together with every simplex that
/// restricts to it along some map.
TruncatedSymSS puncture(const TruncatedSymSS& T, int level, ElementId element);

}  // namespace typespace
