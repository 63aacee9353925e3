#pragma once

#include <utility>
#include <vector>

#include "sunada/cover.hpp"

namespace sunada {

class CurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnreducedPath : public CurveError {
 public:
  using CurveError::CurveError;
};
class NonPrimitivePath : public CurveError {
 public:
  using CurveError::CurveError;
};

/// Graph with a cyclic order of edge-ends (darts) at every vertex; this
/// determines a thickening to an oriented surface with boundary.
struct RibbonGraph {
  int num_vertices = 0;
  std::vector<int> vertex_of;   // per dart
  std::vector<int> partner;     // fixed-point-free involution pairing edge ends
  std::vector<int> sigma_next;  // counterclockwise next dart at the same vertex
  std::vector<int> sigma_pos;   // position of each dart within its vertex cycle
  std::vector<int> vertex_size; // darts per vertex

  int num_darts() const { return (int)vertex_of.size(); }
  int num_edges() const { return num_darts() / 2; }
  int euler_characteristic() const { return num_vertices - num_edges(); }

  /// Boundary walks of the thickened surface (cycles of sigma_next o partner).
  std::vector<std::vector<int>> faces() const;

  void finish();  // fills sigma_pos / vertex_size from sigma_next
};

/// One-vertex rose on `rank` loops. Dart 2i is the outgoing end of loop i,
/// dart 2i+1 the incoming end. The pants convention keeps each loop's ends
/// adjacent, as for disjointly embedded loops wedged at a point, with the
/// second loop's pair reversed: (a-out, a-in, b-in, b-out). The torus
/// convention (rank 2 only) interleaves: (a-out, b-out, a-in, b-in).
RibbonGraph rose(int rank, RibbonConvention conv);

/// Subgraph of a cover on the chosen generators, thickened with the same
/// vertex convention everywhere. Dart id = coset * 2m + 2*pos + (in ? 1 : 0)
/// where pos indexes into `gens`.
RibbonGraph cover_ribbon(const SchreierCover& cover, const std::vector<int>& gens);

struct SelfIntersectionResult {
  int count = 0;
  std::vector<std::pair<int, int>> crossing_witnesses;  // index pairs into the path

  bool simple() const { return count == 0; }
};

/// Minimal self-intersection number of the free homotopy class of the closed
/// dart path on the thickened surface. The path must be reduced and primitive.
SelfIntersectionResult self_intersection(const RibbonGraph& g,
                                         const std::vector<int>& darts);

/// Dart path of a cyclic word on the full-rank rose.
std::vector<int> rose_path(const CyclicWord& w);

/// Dart path of an elevation on the two-generator subgraph of its cover.
/// `gens` receives the generators used (for auditing); the word must involve
/// at most two.
std::vector<int> elevation_dart_path(const SchreierCover& cover, const Elevation& e,
                                     RibbonGraph& graph, std::vector<int>* gens = nullptr);

SelfIntersectionResult self_intersection_of_elevation(const SchreierCover& cover,
                                                      const Elevation& e);
bool is_simple_elevation(const SchreierCover& cover, const Elevation& e);
int count_simple_elevations(const SchreierCover& cover, const CyclicWord& w, int degree);

/// Sorted self-intersection counts of all degree-`degree` elevations of w.
std::vector<int> self_intersection_spectrum(const SchreierCover& cover,
                                            const CyclicWord& w, int degree);

}  // namespace sunada
