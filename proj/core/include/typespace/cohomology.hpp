#pragma once

#include <optional>
#include <vector>

#include "typespace/simplicial_map.hpp"
#include "typespace/smith.hpp"
#include "typespace/symmetric_set.hpp"

namespace typespace {

/// Partition of T_{n+1} (n head coordinates, one tail coordinate) generated by
/// u ~ v whenever some t in T_{n+2} restricts to u and to v by dropping one of
/// its two tail coordinates.
struct CoherenceClasses {
  int n = 0;
  std::vector<int> class_of;                  // indexed by element of T_{n+1}
  std::vector<ElementId> representative;      // least element of each class

  std::size_t size() const { return representative.size(); }
};

CoherenceClasses coherence_classes(const TruncatedSymSS& T, int n);

/// Degree q = n-1 cochains are integer functions on coherence classes at
/// level n. coboundary[q] : degree q -> degree q+1 has one row per class at
/// level q+2 and one column per class at level q+1.
struct CochainComplex {
  std::string name;
  int truncation = 0;
  std::vector<CoherenceClasses> classes;  // classes[q] for degree q
  std::vector<IntMatrix> coboundary;      // coboundary[q] for q = 0..degrees()-2

  int degrees() const { return static_cast<int>(classes.size()); }
  std::size_t rank(int q) const { return classes[static_cast<std::size_t>(q)].size(); }
};

/// Cochain groups in degrees 0..K-1 and coboundaries between them. The i-th
/// coface (i = 0..n) forgets head coordinate i+1. With `base` the complex is
/// built over base->source() after validating the map. Throws
/// std::out_of_range when K+2 exceeds the truncation, std::logic_error if a
/// coface fails to respect coherence.
CochainComplex build_complex(const TruncatedSymSS& T, int K, const std::optional<SimplicialMapHandle>& base = {});

/// Every coboundary composite is the zero matrix.
bool coboundaries_compose_to_zero(const CochainComplex& c);

struct CohomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
  int truncation = 0;
};

/// H^q for q = 0..degrees()-2. Throws std::logic_error when the coboundaries
/// do not compose to zero.
std::vector<CohomologyGroup> cohomology(const CochainComplex& c);

}  // namespace typespace
