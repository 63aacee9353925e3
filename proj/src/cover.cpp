#include "sunada/cover.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sunada {

int SchreierCover::trace(int c, const Word& w) const {
  for (LetterCode l : w.letters)
    c = letter_sign(l) > 0 ? act[letter_gen(l)][c] : act_inv[letter_gen(l)][c];
  return c;
}

SchreierCover build_cover(const FiniteQuotient& q, const Subgroup& h,
                          RibbonConvention ribbon) {
  if (h.parent != q.target) throw CoverError("subgroup is not in the quotient's target");
  SchreierCover cover;
  cover.quotient = q;
  cover.subgroup = h;
  cover.cosets = coset_space(*q.target, h);
  cover.ribbon = ribbon;
  int n = cover.cosets.index();
  int k = q.alphabet.rank();
  cover.act.assign(k, std::vector<int>(n));
  cover.act_inv.assign(k, std::vector<int>(n));
  for (int x = 0; x < k; ++x) {
    Elem img = q.images[x];
    for (int c = 0; c < n; ++c) {
      int d = cover.cosets.act(img, c);
      cover.act[x][c] = d;
      cover.act_inv[x][d] = c;
    }
  }
  return cover;
}

std::vector<Elevation> elevations_of(const SchreierCover& cover, const CyclicWord& w) {
  if (w.empty()) throw CoverError("elevations of the empty word are undefined");
  int n = cover.index();
  Word ww{w.letters};
  std::vector<int> step(n);
  for (int c = 0; c < n; ++c) step[c] = cover.trace(c, ww);

  std::vector<Elevation> out;
  std::vector<char> seen(n, 0);
  for (int c = 0; c < n; ++c) {
    if (seen[c]) continue;
    Elevation e;
    e.word = w;
    e.start_coset = c;
    int cur = c;
    do {
      seen[cur] = 1;
      e.fiber_cycle.push_back(cur);
      cur = step[cur];
    } while (cur != c);
    e.degree = (int)e.fiber_cycle.size();
    out.push_back(std::move(e));
  }
  return out;
}

CyclicEdgePath elevation_path(const SchreierCover& cover, const Elevation& e) {
  CyclicEdgePath path;
  int c = e.start_coset;
  for (int rep = 0; rep < e.degree; ++rep) {
    for (LetterCode l : e.word.letters) {
      path.cosets.push_back(c);
      path.letters.push_back(l);
      c = letter_sign(l) > 0 ? cover.act[letter_gen(l)][c] : cover.act_inv[letter_gen(l)][c];
    }
  }
  if (c != e.start_coset) throw CoverError("elevation path did not close");
  return path;
}

int min_elevation_degree(const SchreierCover& cover, const CyclicWord& w) {
  int best = 0;
  for (const Elevation& e : elevations_of(cover, w))
    if (best == 0 || e.degree < best) best = e.degree;
  return best;
}

bool is_regular(const SchreierCover& cover) { return cover.subgroup.is_normal(); }

FiniteGroup deck_group(const SchreierCover& cover) {
  if (!is_regular(cover)) throw CoverError("deck group requires a regular cover");
  const FiniteGroup& g = *cover.quotient.target;
  const CosetSpace& cs = cover.cosets;
  int n = cs.index();
  // for normal H the cosets form the group G/H under representative products
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mul[i][j] = cs.coset_of[g.mul(cs.rep[i], cs.rep[j])];
  FiniteGroup quo = build_from_table(mul);
  for (int i = 0; i < n; ++i) quo.names[i] = "H" + g.name(cs.rep[i]);
  return quo;
}

bool is_connected(const SchreierCover& cover) {
  int n = cover.index();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int x = 0; x < cover.rank(); ++x)
      for (int d : {cover.act[x][c], cover.act_inv[x][c]})
        if (!seen[d]) {
          seen[d] = 1;
          ++count;
          stack.push_back(d);
        }
  }
  return count == n;
}

int cover_genus(const SchreierCover& cover, int base_genus) {
  if (!is_connected(cover)) throw CoverError("genus of a disconnected cover is undefined");
  return 1 + cover.index() * (base_genus - 1);
}

static IsospectralityReport isospectrality_impl(const SchreierCover& a,
                                                const SchreierCover& b, bool parallel) {
  if (a.quotient.target != b.quotient.target ||
      a.quotient.images != b.quotient.images)
    throw CoverError("covers are not over the same quotient");
  const FiniteGroup& g = *a.quotient.target;
  IsospectralityReport rep;
  std::vector<char> bad(g.order, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (Elem e = 0; e < g.order; ++e)
    if (cycle_type(a.cosets, e) != cycle_type(b.cosets, e)) bad[e] = 1;
  (void)parallel;
  for (Elem e = 0; e < g.order; ++e)
    if (bad[e]) rep.violations.push_back(e);
  rep.pass = rep.violations.empty();
  return rep;
}

IsospectralityReport combinatorial_isospectrality(const SchreierCover& a,
                                                  const SchreierCover& b) {
  return isospectrality_impl(a, b, true);
}

IsospectralityReport combinatorial_isospectrality_serial(const SchreierCover& a,
                                                         const SchreierCover& b) {
  return isospectrality_impl(a, b, false);
}

std::string export_dot(const SchreierCover& cover, const DotStyle& style) {
  static const char* kDefault[] = {"dotted", "dashed", "solid"};
  auto style_of = [&](int x) -> std::string {
    if (x < (int)style.edge_styles.size()) return style.edge_styles[x];
    return kDefault[x % 3];
  };

  std::ostringstream os;
  os << "digraph cover {\n";
  int n = cover.index();
  for (int c = 0; c < n; ++c) os << "  v" << c << " [label=\"" << c << "\"];\n";
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < cover.rank(); ++x) {
      int d = cover.act[x][c];
      if (style.suppress_self_loops && d == c) continue;
      if (style.merge_opposite_pairs && cover.act[x][d] == c && d != c) {
        if (d < c) continue;  // drawn once, from the smaller endpoint
        os << "  v" << c << " -> v" << d << " [label=\"" << cover.quotient.alphabet.names[x]
           << "\", style=" << style_of(x) << ", dir=none];\n";
        continue;
      }
      os << "  v" << c << " -> v" << d << " [label=\"" << cover.quotient.alphabet.names[x]
         << "\", style=" << style_of(x) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace sunada
