#include "typespace/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace typespace {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("Permutation: not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) v[static_cast<std::size_t>(i)] = a(b(i));
  return Permutation(std::move(v));
}

bool is_group(const std::vector<Permutation>& elements) {
  if (elements.empty()) return false;
  const int n = elements.front().size();
  std::set<Permutation> set(elements.begin(), elements.end());
  for (const auto& g : set) {
    if (g.size() != n) return false;
  }
  if (!set.contains(Permutation::identity(n))) return false;
  for (const auto& a : set) {
    if (!set.contains(a.inverse())) return false;
    for (const auto& b : set) {
      if (!set.contains(a * b)) return false;
    }
  }
  return true;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators, int degree) {
  std::set<Permutation> group{Permutation::identity(degree)};
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier) {
      for (const auto& s : generators) {
        auto h = s * g;
        if (group.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<Permutation> cyclic_group(int n) {
  std::vector<int> rot(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = (i + 1) % n;
  return generate_group({Permutation(rot)}, n);
}

std::vector<Permutation> symmetric_group(int n) {
  std::vector<Permutation> out;
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace typespace
