#pragma once

#include <cstdint>
#include <vector>

namespace sparsehs {

using VertexSet = std::vector<int>;  // sorted, duplicate-free vertex ids

/// An instance of the sparse hitting set problem: pick H ⊆ {0..n-1}
/// intersecting every member of family_f while keeping the largest
/// overlap with any member of family_b as small as possible.
///
/// Instances are canonical: each member is sorted and duplicate-free,
/// each family is sorted lexicographically with identical members
/// collapsed. Build through make_set_system to establish this.
struct SetSystemInstance {
  int n = 0;
  std::vector<VertexSet> family_f;
  std::vector<VertexSet> family_b;
};

/// A hitting set together with its largest overlap with any member of
/// family_b.
struct HittingSolution {
  VertexSet members;
  int sparseness = 0;
};

/// Canonicalizes and validates. Throws InputError on ids outside
/// [0, n) or an empty member of family_f (such an instance has no
/// hitting set at all). Empty members of family_b are permitted; they
/// never contribute overlap.
SetSystemInstance make_set_system(int n,
                                  std::vector<VertexSet> family_f,
                                  std::vector<VertexSet> family_b);

/// max over family_b of |h ∩ B|; 0 when family_b is empty.
/// h may arrive unsorted or with repeats; it is treated as a set.
/// Throws InputError on ids outside [0, n).
int sparseness_of(const SetSystemInstance& instance, const VertexSet& h);

/// True when h intersects every member of family_f.
/// Throws InputError on ids outside [0, n).
bool is_hitting_set(const SetSystemInstance& instance, const VertexSet& h);

namespace detail {
/// Sorts, dedupes, and bounds-checks a vertex-id list.
VertexSet canonical_vertex_set(const VertexSet& raw, int n, const char* what);
}  // namespace detail

}  // namespace sparsehs
