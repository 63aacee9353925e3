#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunada {

/// Element of a tabulated finite group: an index into its parent's tables.
using Elem = int;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully tabulated finite group. Multiplication and inverses are total
/// lookup tables; every downstream computation is exact.
struct FiniteGroup {
  int order = 0;
  std::vector<int> mul_table;   // order x order, row-major
  std::vector<int> inv_table;   // order
  Elem identity = 0;
  std::vector<std::string> names;          // printable element names
  std::map<std::string, Elem> generators;  // distinguished named elements

  Elem mul(Elem a, Elem b) const { return mul_table[(size_t)a * order + b]; }
  Elem inv(Elem a) const { return inv_table[a]; }
  Elem conj(Elem g, Elem a) const { return mul(mul(g, a), inv(g)); }
  Elem pow(Elem a, long long n) const;
  int element_order(Elem a) const;
  const std::string& name(Elem a) const { return names[a]; }

  /// Checks associativity, identity and inverse laws on all elements.
  /// Exhaustive; intended for |G| <= 1000.
  void check_laws() const;
};

struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<Elem> members;  // sorted

  int order() const { return (int)members.size(); }
  bool contains(Elem g) const;
  bool is_normal() const;
};

struct ConjugacyClass {
  Elem representative;
  std::vector<Elem> members;  // sorted
};

/// Right cosets H\G with the right-multiplication action of every g in G
/// on coset indices. Coset of the identity is index 0.
struct CosetSpace {
  const FiniteGroup* group = nullptr;
  Subgroup subgroup;
  std::vector<int> coset_of;       // |G| -> coset index
  std::vector<Elem> rep;           // coset index -> representative
  std::vector<int> action;         // |G| x index, act(g, c) row-major

  int index() const { return (int)rep.size(); }
  int act(Elem g, int coset) const { return action[(size_t)g * index() + coset]; }
};

// -- constructors -----------------------------------------------------------

/// (Z/8Z)^x |x (Z/8Z) with law (a,b)(c,d) = (ac, b+ad), order 32.
/// Distinguished generators a1=(5,0), a2=(3,0), a3=(1,1).
FiniteGroup build_semidirect_z8();

/// Symmetric group on {1..n}, elements in lexicographic order of their
/// one-line notation (so the identity is index 0).
FiniteGroup build_symmetric(int n);

/// SL_n(F_q), q prime. Elements carry their matrix entries in names.
FiniteGroup build_sl(int n, int q);

/// Group given by an explicit multiplication table; laws are verified.
FiniteGroup build_from_table(const std::vector<std::vector<int>>& mul);

// -- element lookup helpers --------------------------------------------------

/// Permutation in cycle notation, e.g. "(1,2)(3,4)", "id".
Elem element_from_cycles(const FiniteGroup& sym, const std::string& cycles);
/// Semidirect element from a pair (a, b).
Elem element_from_pair(const FiniteGroup& g, int a, int b);
/// Matrix element from row lists (entries mod q).
Elem element_from_matrix(const FiniteGroup& sl, const std::vector<std::vector<int>>& rows);
/// Row lists of a matrix-group element.
std::vector<std::vector<int>> matrix_of(const FiniteGroup& sl, Elem g);

std::vector<int> cycle_type_of_perm(const FiniteGroup& sym, Elem g);

// -- subgroup machinery -------------------------------------------------------

Subgroup subgroup_from_generators(const FiniteGroup& g, const std::vector<Elem>& gens);
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// |A \cap C| == |B \cap C| for every conjugacy class C.
bool is_almost_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Some g with gAg^-1 = B, found by exhaustive search.
std::optional<Elem> conjugating_element(const FiniteGroup& g, const Subgroup& a,
                                        const Subgroup& b);

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h);

/// Sorted multiset of cycle lengths of right multiplication by g on cosets.
std::vector<int> cycle_type(const CosetSpace& space, Elem g);

/// All almost-conjugate, non-conjugate subgroup pairs with orders up to the
/// bound, deduplicated under simultaneous conjugation.
std::vector<std::pair<Subgroup, Subgroup>> gassmann_search(const FiniteGroup& g,
                                                           int max_subgroup_order);

}  // namespace sunada
