#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sunada/group.hpp"

namespace sunada {

class WordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letter code: 2*generator + (1 if inverted). The induced integer order
/// realizes a1 < a1^-1 < a2 < a2^-1 < ..., which canonical rotations use.
using LetterCode = int;

inline LetterCode make_letter(int gen, int sign) { return 2 * gen + (sign < 0 ? 1 : 0); }
inline int letter_gen(LetterCode c) { return c >> 1; }
inline int letter_sign(LetterCode c) { return (c & 1) ? -1 : +1; }
inline LetterCode letter_inverse(LetterCode c) { return c ^ 1; }

/// Named generators of a free (or surface) group.
struct Alphabet {
  std::vector<std::string> names;

  int rank() const { return (int)names.size(); }
  int index(const std::string& name) const;
  static Alphabet free2() { return Alphabet{{"a", "b"}}; }
  /// a1..ag then b1..bg.
  static Alphabet surface(int genus);
};

/// Freely reduced word.
struct Word {
  std::vector<LetterCode> letters;

  int length() const { return (int)letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
  bool operator<(const Word& o) const { return letters < o.letters; }
};

Word reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // reduced product
Word power(const Word& w, int n);
Word commutator(const Word& a, const Word& b);

/// Canonical form of a conjugacy class in the free group: the
/// lexicographically least rotation of the cyclic reduction.
struct CyclicWord {
  std::vector<LetterCode> letters;  // canonical rotation, cyclically reduced

  int length() const { return (int)letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const CyclicWord&) const = default;
  bool operator<(const CyclicWord& o) const {
    return letters.size() != o.letters.size() ? letters.size() < o.letters.size()
                                              : letters < o.letters;
  }
};

CyclicWord cyclic_reduce(const Word& w);
bool is_primitive(const CyclicWord& w);

Word parse_word(const std::string& text, const Alphabet& alphabet);
std::string print_word(const Word& w, const Alphabet& alphabet);

/// Standard presentation of a closed orientable surface group:
/// generators a1..ag, b1..bg, relator [a1,b1]...[ag,bg].
struct SurfacePresentation {
  int genus = 0;
  Alphabet alphabet;
  Word relator;

  static SurfacePresentation standard(int genus);
};

/// Homomorphism from a free/surface alphabet into a finite group, given by
/// one image per generator. For surface presentations the relator must die.
struct FiniteQuotient {
  Alphabet alphabet;
  const FiniteGroup* target = nullptr;
  std::vector<Elem> images;  // one per generator
  bool surjective = false;

  Elem evaluate(const Word& w) const;
};

class RelatorViolation : public WordError {
 public:
  using WordError::WordError;
};
class NotSurjective : public WordError {
 public:
  using WordError::WordError;
};

FiniteQuotient make_quotient(const SurfacePresentation& pres, const FiniteGroup& g,
                             const std::vector<Elem>& images, bool require_surjective = false);
/// Quotient of a free group (no relator check).
FiniteQuotient make_free_quotient(const Alphabet& alphabet, const FiniteGroup& g,
                                  const std::vector<Elem>& images);

}  // namespace sunada
