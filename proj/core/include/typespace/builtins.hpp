#pragma once

#include <memory>
#include <string>
#include <vector>

#include "typespace/group.hpp"
#include "typespace/symmetric_set.hpp"

namespace typespace {

/// Names accepted by builtin().
const std::vector<std::string>& builtin_names();

/// Shipped truncation: 6, except vect_f2 at 5.
int default_max_dim(const std::string& name);

/// The oracle behind a builtin. Throws std::invalid_argument for unknown names.
std::shared_ptr<const TheoryOracle> builtin_oracle(const std::string& name);

/// Lazily enumerated type-space functor of a builtin theory:
///   equality      set partitions (restricted growth strings)
///   dlo           weak orders (dense rank vectors)
///   random_graph  partition plus a sorted edge list over its blocks
///   vect_f2       subspaces of F_2^n of relations sum_{i in S} v_i = 0
///   point         one element per level
/// max_dim <= 0 selects default_max_dim(name).
TruncatedSymSS builtin(const std::string& name, int max_dim = 0, std::size_t cap = kDefaultSizeCap);

/// Orbits of the diagonal action of G on points^n, represented by their
/// lexicographically least tuple. Throws std::invalid_argument when G is not
/// a group on points.size() letters.
TruncatedSymSS simplicial_quotient(const std::vector<std::string>& points, const std::vector<Permutation>& G,
                                   int max_dim, std::size_t cap = kDefaultSizeCap, std::string name = "");

/// All tuples over `points`: the quotient by the trivial group.
TruncatedSymSS representable(const std::vector<std::string>& points, int max_dim,
                             std::size_t cap = kDefaultSizeCap, std::string name = "");

/// BG: G acting on itself by left multiplication. Elements are named e, g1, g2, ...
/// in the sorted order of G.
TruncatedSymSS classifying_space(const std::vector<Permutation>& G, int max_dim,
                                 std::size_t cap = kDefaultSizeCap);

/// Lexicographically least element of the G-orbit of `tuple`.
std::vector<int> canonical_tuple(const std::vector<Permutation>& G, const std::vector<int>& tuple);

}  // namespace typespace
