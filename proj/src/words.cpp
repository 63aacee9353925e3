#include "sunada/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace sunada {

int Alphabet::index(const std::string& name) const {
  for (int i = 0; i < (int)names.size(); ++i)
    if (names[i] == name) return i;
  throw WordError("unknown generator: " + name);
}

Alphabet Alphabet::surface(int genus) {
  Alphabet out;
  for (int i = 1; i <= genus; ++i) out.names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= genus; ++i) out.names.push_back("b" + std::to_string(i));
  return out;
}

Word reduce(const Word& w) {
  Word out;
  for (LetterCode c : w.letters) {
    if (!out.letters.empty() && out.letters.back() == letter_inverse(c))
      out.letters.pop_back();
    else
      out.letters.push_back(c);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(letter_inverse(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (LetterCode c : b.letters) {
    if (!out.letters.empty() && out.letters.back() == letter_inverse(c))
      out.letters.pop_back();
    else
      out.letters.push_back(c);
  }
  return out;
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w;
  int k = n < 0 ? -n : n;
  Word out;
  for (int i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

CyclicWord cyclic_reduce(const Word& w) {
  std::vector<LetterCode> v = reduce(w).letters;
  size_t lo = 0, hi = v.size();
  while (hi - lo >= 2 && v[lo] == letter_inverse(v[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<LetterCode> core(v.begin() + lo, v.begin() + hi);
  if (core.empty()) return {};
  // least rotation (Booth would be overkill at these lengths)
  std::vector<LetterCode> best = core;
  std::vector<LetterCode> rot = core;
  for (size_t i = 1; i < core.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return CyclicWord{best};
}

bool is_primitive(const CyclicWord& w) {
  // w is a proper power iff its letter sequence has a period d | n, d < n.
  int n = w.length();
  if (n == 0) return false;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i)
      if (w.letters[i] != w.letters[i - d]) periodic = false;
    if (periodic) return false;
  }
  return true;
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  Word out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string name = tok;
    int exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoi(e, &used);
        if (used != e.size()) throw WordError("bad exponent in token: " + tok);
      } catch (const std::invalid_argument&) {
        throw WordError("bad exponent in token: " + tok);
      } catch (const std::out_of_range&) {
        throw WordError("bad exponent in token: " + tok);
      }
    }
    int gen = alphabet.index(name);
    LetterCode c = make_letter(gen, exp);
    int k = exp < 0 ? -exp : exp;
    for (int i = 0; i < k; ++i) {
      if (!out.letters.empty() && out.letters.back() == letter_inverse(c))
        out.letters.pop_back();
      else
        out.letters.push_back(c);
    }
  }
  return out;
}

std::string print_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    int run = (int)(j - i);
    if (!out.empty()) out += ' ';
    out += alphabet.names[letter_gen(w.letters[i])];
    int exp = letter_sign(w.letters[i]) * run;
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

SurfacePresentation SurfacePresentation::standard(int genus) {
  if (genus < 1) throw WordError("surface presentation needs genus >= 1");
  SurfacePresentation p;
  p.genus = genus;
  p.alphabet = Alphabet::surface(genus);
  for (int i = 0; i < genus; ++i) {
    Word a{{make_letter(i, +1)}};
    Word b{{make_letter(genus + i, +1)}};
    p.relator = concat(p.relator, commutator(a, b));
  }
  return p;
}

Elem FiniteQuotient::evaluate(const Word& w) const {
  Elem out = target->identity;
  for (LetterCode c : w.letters) {
    Elem img = images[letter_gen(c)];
    if (letter_sign(c) < 0) img = target->inv(img);
    out = target->mul(out, img);
  }
  return out;
}

static bool generates(const FiniteGroup& g, const std::vector<Elem>& images) {
  return (int)subgroup_from_generators(g, images).order() == g.order;
}

FiniteQuotient make_quotient(const SurfacePresentation& pres, const FiniteGroup& g,
                             const std::vector<Elem>& images, bool require_surjective) {
  if ((int)images.size() != pres.alphabet.rank())
    throw WordError("need one image per generator");
  FiniteQuotient q{pres.alphabet, &g, images, false};
  if (q.evaluate(pres.relator) != g.identity)
    throw RelatorViolation("generator images do not kill the surface relator");
  q.surjective = generates(g, images);
  if (require_surjective && !q.surjective)
    throw NotSurjective("generator images do not generate the target group");
  return q;
}

FiniteQuotient make_free_quotient(const Alphabet& alphabet, const FiniteGroup& g,
                                  const std::vector<Elem>& images) {
  if ((int)images.size() != alphabet.rank())
    throw WordError("need one image per generator");
  FiniteQuotient q{alphabet, &g, images, false};
  q.surjective = generates(g, images);
  return q;
}

}  // namespace sunada
