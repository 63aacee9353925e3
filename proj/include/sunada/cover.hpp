#pragma once

#include <string>
#include <vector>

#include "sunada/group.hpp"
#include "sunada/words.hpp"

namespace sunada {

class CoverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclic order of edge ends at the (single) base vertex. The pants order
/// puts each generator's outgoing end right before its incoming end, the
/// wedge pattern of disjointly embedded loops; the torus order interleaves
/// two generators as on a one-holed torus.
enum class RibbonConvention { pants, torus };

/// Finite cover of a one-vertex base, encoded as a generator-labeled
/// Schreier graph on the right cosets H\G.
struct SchreierCover {
  FiniteQuotient quotient;
  Subgroup subgroup;
  CosetSpace cosets;
  RibbonConvention ribbon = RibbonConvention::pants;
  // per generator x: coset -> coset under right multiplication by phi(x)
  std::vector<std::vector<int>> act;
  std::vector<std::vector<int>> act_inv;

  int index() const { return cosets.index(); }
  int rank() const { return quotient.alphabet.rank(); }
  /// Coset reached from c by reading the word left to right.
  int trace(int c, const Word& w) const;
};

struct Elevation {
  CyclicWord word;
  int start_coset = 0;  // least coset index on the fiber cycle
  int degree = 0;
  std::vector<int> fiber_cycle;  // start, start*phi(w), ...
};

SchreierCover build_cover(const FiniteQuotient& q, const Subgroup& h,
                          RibbonConvention ribbon = RibbonConvention::pants);

/// One elevation per cycle of phi(w) on the cosets, sorted by start coset.
std::vector<Elevation> elevations_of(const SchreierCover& cover, const CyclicWord& w);

/// Closed labeled edge path reading w^degree from the start coset: one
/// (coset, letter) passage per edge traversed.
struct CyclicEdgePath {
  std::vector<int> cosets;        // coset before each letter
  std::vector<LetterCode> letters;  // base letter read at each step

  int length() const { return (int)letters.size(); }
};

CyclicEdgePath elevation_path(const SchreierCover& cover, const Elevation& e);

int min_elevation_degree(const SchreierCover& cover, const CyclicWord& w);

bool is_regular(const SchreierCover& cover);
/// Deck transformation group G/H of a regular cover, tabulated.
FiniteGroup deck_group(const SchreierCover& cover);

bool is_connected(const SchreierCover& cover);
int cover_genus(const SchreierCover& cover, int base_genus);

struct IsospectralityReport {
  bool pass = false;
  std::vector<Elem> violations;  // elements with mismatched cycle types
};

IsospectralityReport combinatorial_isospectrality(const SchreierCover& a,
                                                  const SchreierCover& b);
IsospectralityReport combinatorial_isospectrality_serial(const SchreierCover& a,
                                                         const SchreierCover& b);

struct DotStyle {
  bool suppress_self_loops = false;
  bool merge_opposite_pairs = false;  // draw x-edge pairs c->d, d->c undirected
  std::vector<std::string> edge_styles;  // per generator; defaults cycle dotted/dashed/solid
};

std::string export_dot(const SchreierCover& cover, const DotStyle& style = {});

}  // namespace sunada
