#pragma once

#include <string>

#include "typespace/simplicial_map.hpp"
#include "typespace/symmetric_set.hpp"

namespace typespace {

/// Amalgamation. For k >= 0, m, n >= 1 with m+k+n <= bound, every p in level
/// m+k and q in level k+n agreeing on the shared k coordinates must be the
/// two restrictions of some r in level m+k+n. Coordinates of r are laid out as
/// [m block][k block][n block]; p is the first m+k, q the last k+n. k = 0
/// asks for the plain product. Reports the least failing (k, m, n, p, q).
/// Throws std::out_of_range when bound exceeds the truncation.
Report check_theory(const TruncatedSymSS& T, int bound, int workers = 1);

/// The same property as an identity of sets: for each p in level m+k, the
/// restrictions to the last k+n coordinates of the simplices over p equal all
/// q over the k-restriction of p. Also checked for k = 0, where it reads as
/// connectedness.
Report check_beck_chevalley(const TruncatedSymSS& T, int bound);

/// Lifting for F : X -> Y. For k >= 0, m >= 1, n >= 0 (k+n >= 1), m+k+n <=
/// bound, every y in Y_{m+k} and x in X_{k+n} with F(x|k) = y|k must come
/// from some r in X_{m+k+n}: r restricts to x on its last k+n coordinates and
/// F maps its first m+k coordinates to y. When F carries level-0 data the
/// case k = n = 0 is included, x ranging over level 0. Throws
/// std::invalid_argument when F fails naturality, std::out_of_range when
/// bound exceeds F.levels().
Report check_vibrant(const SimplicialMapHandle& F, int bound);

enum class ModelMode { Saturated, TarskiVaught };

/// saturated: check_vibrant. tarski_vaught: for k, n >= 1, each x in M_k and
/// t in T_{k+n} extending F(x) is F of an extension of x. Throws
/// std::invalid_argument when the source is not representable.
Report check_model(const SimplicialMapHandle& F, int bound, ModelMode mode);

/// Levels are powers of level 1 through the coordinate restrictions.
bool is_representable(const TruncatedSymSS& X);

ModelMode parse_model_mode(const std::string& s);

}  // namespace typespace
