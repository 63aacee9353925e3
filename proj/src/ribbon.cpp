#include "sunada/ribbon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sunada {

void RibbonGraph::finish() {
  int n = num_darts();
  sigma_pos.assign(n, -1);
  vertex_size.assign(num_vertices, 0);
  for (int d = 0; d < n; ++d) {
    if (sigma_pos[d] >= 0) continue;
    // walk the vertex cycle once
    int pos = 0;
    int cur = d;
    do {
      sigma_pos[cur] = pos++;
      cur = sigma_next[cur];
    } while (cur != d);
    vertex_size[vertex_of[d]] = pos;
  }
}

std::vector<std::vector<int>> RibbonGraph::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(num_darts(), 0);
  for (int d = 0; d < num_darts(); ++d) {
    if (seen[d]) continue;
    std::vector<int> walk;
    int cur = d;
    do {
      seen[cur] = 1;
      walk.push_back(cur);
      cur = sigma_next[partner[cur]];
    } while (cur != d);
    out.push_back(std::move(walk));
  }
  return out;
}

static std::vector<int> vertex_order(int rank, RibbonConvention conv) {
  if (conv == RibbonConvention::torus) {
    if (rank != 2) throw CurveError("torus convention needs exactly two generators");
    return {0, 2, 1, 3};
  }
  // Pants wedge: each loop's ends adjacent. The second and later loops carry
  // the opposite end orientation from the first; for two loops this puts the
  // boundary class at a b^-1 rather than a b, which is the configuration
  // that makes the diamond witnesses come out right.
  std::vector<int> order;
  order.reserve(2 * rank);
  order.push_back(0);
  order.push_back(1);
  for (int i = 1; i < rank; ++i) {
    order.push_back(2 * i + 1);
    order.push_back(2 * i);
  }
  return order;
}

RibbonGraph rose(int rank, RibbonConvention conv) {
  if (rank < 1) throw CurveError("rose needs at least one loop");
  RibbonGraph g;
  g.num_vertices = 1;
  g.vertex_of.assign(2 * rank, 0);
  g.partner.resize(2 * rank);
  for (int i = 0; i < rank; ++i) {
    g.partner[2 * i] = 2 * i + 1;
    g.partner[2 * i + 1] = 2 * i;
  }
  std::vector<int> order = vertex_order(rank, conv);
  g.sigma_next.resize(2 * rank);
  for (size_t i = 0; i < order.size(); ++i)
    g.sigma_next[order[i]] = order[(i + 1) % order.size()];
  g.finish();
  return g;
}

RibbonGraph cover_ribbon(const SchreierCover& cover, const std::vector<int>& gens) {
  int m = (int)gens.size();
  if (m < 1) throw CurveError("cover ribbon needs at least one generator");
  int n = cover.index();
  RibbonGraph g;
  g.num_vertices = n;
  g.vertex_of.resize((size_t)n * 2 * m);
  g.partner.resize((size_t)n * 2 * m);
  g.sigma_next.resize((size_t)n * 2 * m);
  std::vector<int> order = vertex_order(m, cover.ribbon);
  for (int c = 0; c < n; ++c) {
    int base = c * 2 * m;
    for (int i = 0; i < 2 * m; ++i) g.vertex_of[base + i] = c;
    for (size_t i = 0; i < order.size(); ++i)
      g.sigma_next[base + order[i]] = base + order[(i + 1) % order.size()];
    for (int i = 0; i < m; ++i) {
      // the out-end at c pairs with the in-end at the target coset
      int target = cover.act[gens[i]][c];
      g.partner[base + 2 * i] = target * 2 * m + 2 * i + 1;
      g.partner[target * 2 * m + 2 * i + 1] = base + 2 * i;
    }
  }
  g.finish();
  return g;
}

namespace {

// Ray of departure darts read along the closed path, forward or backward
// from a passage. Backward steps leave each vertex via the partner of the
// dart that arrived there.
struct Ray {
  const std::vector<int>* darts;
  const std::vector<int>* partner;
  int start;     // passage index
  bool forward;

  int at(int t) const {
    int L = (int)darts->size();
    if (forward) return (*darts)[(start + t) % L];
    int idx = ((start - 1 - t) % L + L) % L;
    return (*partner)[(*darts)[idx]];
  }
};

}  // namespace

SelfIntersectionResult self_intersection(const RibbonGraph& g,
                                         const std::vector<int>& darts) {
  int L = (int)darts.size();
  if (L == 0) throw CurveError("empty path");
  for (int d : darts)
    if (d < 0 || d >= g.num_darts()) throw CurveError("dart out of range");

  // well-formed closed walk: each dart departs from where the previous landed
  for (int i = 0; i < L; ++i) {
    int next = darts[(i + 1) % L];
    if (g.vertex_of[next] != g.vertex_of[g.partner[darts[i]]])
      throw CurveError("path is not a closed walk");
    if (next == g.partner[darts[i]] && L > 1)
      throw UnreducedPath("path immediately retraces an edge");
  }
  if (L == 1 && darts[0] == g.partner[darts[0]])
    throw CurveError("involution has a fixed point");

  // primitivity of the cyclic dart sequence
  for (int p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i < L && periodic; ++i)
      if (darts[i] != darts[(i + p) % L]) periodic = false;
    if (periodic) throw NonPrimitivePath("path is a proper power");
  }

  // orientation of three distinct darts at one vertex: true iff going
  // counterclockwise from r we meet p before q
  auto orient = [&](int r, int p, int q) {
    int size = g.vertex_size[g.vertex_of[r]];
    int rp = (g.sigma_pos[p] - g.sigma_pos[r] % size + size) % size;
    int rq = (g.sigma_pos[q] - g.sigma_pos[r] % size + size) % size;
    return rp < rq;
  };

  int guard = 4 * L + 8;
  // first step at which two rays from the same vertex part ways
  auto divergence = [&](const Ray& a, const Ray& b) {
    int t = 0;
    while (t < guard && a.at(t) == b.at(t)) ++t;
    if (t >= guard) throw CurveError("rays never diverge");
    return t;
  };
  // true iff ray a comes strictly before ray b counterclockwise within their
  // shared dart interval (rays must share their head dart)
  auto before = [&](const Ray& a, const Ray& b) {
    int t = divergence(a, b);
    // arrival dart at the divergence vertex points back along the corridor
    int back = g.partner[a.at(t - 1)];
    return orient(back, a.at(t), b.at(t));
  };

  // The lift of the path through a passage is a line in the universal cover,
  // a planar tree whose space of ends is cyclically ordered. Orientation of
  // a triple of ends (rays from one base vertex): counterclockwise iff,
  // starting from x, the boundary circle meets y before z.
  auto ornt = [&](const Ray& x, const Ray& y, const Ray& z) {
    int kxy = divergence(x, y), kxz = divergence(x, z), kyz = divergence(y, z);
    if (kxy == kxz && kxy == kyz)
      return orient(x.at(kxy), y.at(kxy), z.at(kxy)) ? +1 : -1;
    // a pair of ends that stays together longer forms a cluster; the triple's
    // orientation is decided by the internal order of that cluster
    if (kxy > kxz) return before(x, y) ? +1 : -1;
    if (kyz > kxy) return before(y, z) ? +1 : -1;
    return before(x, z) ? -1 : +1;  // cluster (x, z)
  };

  // Lines through two passages of a common vertex cross iff their endpoint
  // pairs alternate on the circle of ends.
  auto alternate = [&](int i, int j) {
    Ray fi{&darts, &g.partner, i, true}, bi{&darts, &g.partner, i, false};
    Ray fj{&darts, &g.partner, j, true}, bj{&darts, &g.partner, j, false};
    return ornt(fi, fj, bi) != ornt(fi, bj, bi);
  };

  // A pair of passages is only examined where their shared corridor begins
  // (walking backwards along the first strand); other vertex pairs along the
  // corridor see the same pair of lines.
  auto corridor_continues = [&](int i, int j) {
    int prev = darts[(i - 1 + L) % L];
    if (prev == darts[(j - 1 + L) % L]) return true;  // running parallel
    if (darts[j] == g.partner[prev]) return true;     // running anti-parallel
    return false;
  };
  auto back_normalize = [&](int i, int j) {
    for (int step = 0; step <= 2 * L + 2; ++step) {
      int prev = darts[(i - 1 + L) % L];
      if (prev == darts[(j - 1 + L) % L]) {
        i = (i - 1 + L) % L;
        j = (j - 1 + L) % L;
      } else if (darts[j] == g.partner[prev]) {
        i = (i - 1 + L) % L;
        j = (j + 1) % L;
      } else {
        return std::pair{i, j};
      }
    }
    throw CurveError("corridor normalization did not terminate");
  };

  std::vector<std::pair<int, int>> ordered;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      if (i == j || g.vertex_of[darts[i]] != g.vertex_of[darts[j]]) continue;
      if (corridor_continues(i, j)) continue;
      if (alternate(i, j)) ordered.push_back({i, j});
    }
  if (ordered.size() % 2 != 0) throw CurveError("crossing pairing failure");

  SelfIntersectionResult res;
  res.count = (int)(ordered.size() / 2);
  // each crossing appears once per strand role; pair the two roles up
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : ordered) {
    if (seen.count({i, j})) continue;
    seen.insert({i, j});
    seen.insert(back_normalize(j, i));
    res.crossing_witnesses.push_back({std::min(i, j), std::max(i, j)});
  }
  std::sort(res.crossing_witnesses.begin(), res.crossing_witnesses.end());
  return res;
}

std::vector<int> rose_path(const CyclicWord& w) {
  // on the full-rank rose the dart ids coincide with letter codes
  return w.letters;
}

std::vector<int> elevation_dart_path(const SchreierCover& cover, const Elevation& e,
                                     RibbonGraph& graph, std::vector<int>* gens_out) {
  std::set<int> used;
  for (LetterCode l : e.word.letters) used.insert(letter_gen(l));
  if (used.size() > 2)
    throw CurveError("word not supported in a two-generator subalphabet");
  std::vector<int> gens(used.begin(), used.end());
  if (gens_out) *gens_out = gens;
  graph = cover_ribbon(cover, gens);

  std::vector<int> local(cover.rank(), -1);
  for (int i = 0; i < (int)gens.size(); ++i) local[gens[i]] = i;
  int m = (int)gens.size();

  CyclicEdgePath p = elevation_path(cover, e);
  std::vector<int> darts;
  darts.reserve(p.length());
  for (int i = 0; i < p.length(); ++i) {
    LetterCode l = p.letters[i];
    int li = local[letter_gen(l)];
    int c = p.cosets[i];
    if (letter_sign(l) > 0) {
      darts.push_back(c * 2 * m + 2 * li);  // leave via the out-end at c
    } else {
      // leave via the in-end at c, which is the far end of the edge based at
      // the coset the step lands on
      darts.push_back(c * 2 * m + 2 * li + 1);
    }
  }
  return darts;
}

SelfIntersectionResult self_intersection_of_elevation(const SchreierCover& cover,
                                                      const Elevation& e) {
  RibbonGraph g;
  std::vector<int> darts = elevation_dart_path(cover, e, g);
  return self_intersection(g, darts);
}

bool is_simple_elevation(const SchreierCover& cover, const Elevation& e) {
  return self_intersection_of_elevation(cover, e).count == 0;
}

int count_simple_elevations(const SchreierCover& cover, const CyclicWord& w, int degree) {
  std::vector<Elevation> all = elevations_of(cover, w);
  int count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : count)
#endif
  for (int i = 0; i < (int)all.size(); ++i) {
    if (all[i].degree != degree) continue;
    if (is_simple_elevation(cover, all[i])) ++count;
  }
  return count;
}

std::vector<int> self_intersection_spectrum(const SchreierCover& cover,
                                            const CyclicWord& w, int degree) {
  std::vector<Elevation> all = elevations_of(cover, w);
  std::vector<int> counts;
  for (const Elevation& e : all)
    if (e.degree == degree) counts.push_back(-1);
  std::vector<const Elevation*> picked;
  for (const Elevation& e : all)
    if (e.degree == degree) picked.push_back(&e);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < (int)picked.size(); ++i)
    counts[i] = self_intersection_of_elevation(cover, *picked[i]).count;
  std::sort(counts.begin(), counts.end());
  return counts;
}

}  // namespace sunada
