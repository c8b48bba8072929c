#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace typespace {

using ElementId = std::uint32_t;

/// A simplex named inside a witness.
struct WitnessElement {
  std::string role;
  int level = 0;
  ElementId id = 0;
  std::string label;

  friend bool operator==(const WitnessElement&, const WitnessElement&) = default;
};

/// One counterexample: the violated condition, the integer parameters that
/// locate it (k, m, n, bound, ...) and the simplices involved.
struct Witness {
  std::string condition;
  std::map<std::string, int> params;
  std::vector<WitnessElement> elements;
  std::vector<std::string> maps;

  const WitnessElement* element(const std::string& role) const {
    for (const auto& e : elements) {
      if (e.role == role) return &e;
    }
    return nullptr;
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of a checker. A failing report always carries a witness.
struct Report {
  std::string check;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::map<std::string, std::uint64_t> stats;

  void fail(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
};

}  // namespace typespace
