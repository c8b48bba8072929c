#pragma once

#include <optional>
#include <vector>

#include "typespace/symmetric_set.hpp"

namespace typespace {

/// t in level 2dN whose (a_i, b_j) block restriction lies in phi iff i <= j.
/// Block a_i occupies coordinates (i-1)d .. id-1, block b_j follows all a blocks.
struct OrderWitness {
  int N = 0;
  int d = 0;
  ElementId t = 0;
  std::string label;
  std::vector<std::vector<int>> a_blocks;  // 0-based coordinates
  std::vector<std::vector<int>> b_blocks;
};

/// Searches level 2dN for the pattern phi(a_i, b_j) <=> i <= j, where phi is
/// a subset of level 2d. Throws std::invalid_argument when phi's level is odd
/// and std::out_of_range when 2dN exceeds the truncation.
std::optional<OrderWitness> order_property(const TruncatedSymSS& T, const DefinableSet& phi, int N);

/// t in level nL that is order-coherent (for j < L, every increasing choice of
/// j blocks restricts to the same element) yet changes under the transposition
/// of blocks `block` and `block`+1 (0-based), giving `permuted`.
struct IndiscernibleWitness {
  int n = 0;
  int L = 0;
  ElementId t = 0;
  std::string label;
  int block = 0;
  ElementId permuted = 0;
  std::string permuted_label;
};

/// The least element of level nL that is order-coherent but not invariant
/// under block permutations, if any.
std::optional<IndiscernibleWitness> indiscernible_gap(const TruncatedSymSS& T, int n, int L);

/// True when t in level nL is order-coherent in blocks of width n.
bool order_coherent(const TruncatedSymSS& T, int n, int L, ElementId t);

struct DividingResult {
  bool divides = false;
  /// The blocking sequence: an order-coherent s in level nL whose blocks are
  /// copies of p's y-part and whose first k blocks admit no common x.
  std::optional<ElementId> sequence;
  std::string sequence_label;
  std::uint64_t sequences_checked = 0;
};

/// p is an element of level m+n split as x-block (first m) and y-block (last
/// n). Throws std::invalid_argument when m or n is 0 or k is outside 1..L,
/// std::out_of_range when m+nL or m+nk exceeds the truncation.
DividingResult divides_at_level(const TruncatedSymSS& T, ElementId p, int m, int n, int L, int k);

Report to_report(const std::optional<OrderWitness>& w, const TruncatedSymSS& T, const DefinableSet& phi, int N);
Report to_report(const std::optional<IndiscernibleWitness>& w, int n, int L);
Report to_report(const DividingResult& r, const TruncatedSymSS& T, ElementId p, int m, int n, int L, int k);

}  // namespace typespace
