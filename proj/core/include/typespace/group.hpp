#pragma once

#include <string>
#include <vector>

namespace typespace {

/// A bijection of {0..n-1}, stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument when `image` is not a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// True when the list is nonempty, of uniform degree, and closed under
/// composition and inverses.
bool is_group(const std::vector<Permutation>& elements);

/// The group generated by `generators` on {0..degree-1}, sorted.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, int degree);

std::vector<Permutation> cyclic_group(int n);
std::vector<Permutation> symmetric_group(int n);

}  // namespace typespace
