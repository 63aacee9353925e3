#include "sunada/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sunada {

namespace {
constexpr double kEps = 1e-12;
constexpr double kWarn = 1e-9;
constexpr double kInf = HUGE_VAL;

bool finite(double x) { return std::isfinite(x); }

// boundary action of a Moebius map on R u {inf}
double apply(const MoebiusMap& m, double xi) {
  if (!finite(xi)) {
    if (std::abs(m.c) < kEps) return kInf;
    return m.a / m.c;
  }
  double den = m.c * xi + m.d;
  if (std::abs(den) < kEps) return kInf;
  return (m.a * xi + m.b) / den;
}

double angle_of(double xi) { return finite(xi) ? 2.0 * std::atan(xi) : M_PI; }

}  // namespace

MoebiusMap MoebiusMap::operator*(const MoebiusMap& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

void MoebiusMap::normalize() {
  double dt = det();
  if (std::abs(dt) < kEps) throw HyperbolicError("singular matrix");
  if (dt < 0) throw HyperbolicError("orientation-reversing matrix");
  double s = 1.0 / std::sqrt(dt);
  a *= s;
  b *= s;
  c *= s;
  d *= s;
}

Axis axis_of(const MoebiusMap& m) {
  if (!m.hyperbolic()) throw NonHyperbolic("axis of a non-hyperbolic map");
  double t = m.trace();
  double disc = std::sqrt(t * t - 4.0);
  if (std::abs(m.c) < kEps) {
    // fixes infinity; the finite fixed point solves (a - d) xi + b = 0
    if (std::abs(m.a - m.d) < kEps) throw HyperbolicError("degenerate axis");
    return {kInf, m.b / (m.d - m.a)};
  }
  return {(m.a - m.d + disc) / (2 * m.c), (m.a - m.d - disc) / (2 * m.c)};
}

bool same_axis(const Axis& a1, const Axis& a2) {
  auto close = [](double u, double v) {
    if (!finite(u) || !finite(v)) return !finite(u) && !finite(v);
    return std::abs(u - v) <= 1e-9 * std::max(1.0, std::max(std::abs(u), std::abs(v)));
  };
  return (close(a1.p, a2.p) && close(a1.q, a2.q)) ||
         (close(a1.p, a2.q) && close(a1.q, a2.p));
}

bool axes_cross(const Axis& a1, const Axis& a2, double* margin) {
  if (same_axis(a1, a2)) {
    if (margin) *margin = 0;
    return false;
  }
  double t1 = angle_of(a1.p), t2 = angle_of(a1.q);
  double u1 = angle_of(a2.p), u2 = angle_of(a2.q);
  if (margin) {
    double m = kInf;
    for (double x : {u1, u2})
      for (double y : {t1, t2}) {
        double d = std::abs(x - y);
        m = std::min(m, std::min(d, 2 * M_PI - d));
      }
    *margin = m;
  }
  // u in the arc from t1 to t2 (counterclockwise)?
  auto inside = [&](double u) {
    double span = t2 - t1;
    if (span < 0) span += 2 * M_PI;
    double off = u - t1;
    if (off < 0) off += 2 * M_PI;
    return off > 0 && off < span;
  };
  return inside(u1) != inside(u2);
}

PuncturedTorusRep PuncturedTorusRep::standard() {
  PuncturedTorusRep r;
  r.a = {1, 1, 1, 2};
  r.b = {1, -1, -1, 2};
  r.x = r.y = r.z = 3;
  r.discrete_certified = true;
  return r;
}

PuncturedTorusRep PuncturedTorusRep::from_traces(double x, double y, double z) {
  if (std::abs(z) < 2) throw HyperbolicError("need |tr(ab)| >= 2 for a real representation");
  double c = (-z - std::copysign(std::sqrt(z * z - 4), z)) / 2;
  PuncturedTorusRep r;
  r.a = {x, 1, -1, 0};
  r.b = {0, c, -1 / c, y};
  r.a.normalize();
  r.b.normalize();
  r.x = x;
  r.y = y;
  r.z = z;
  double comm = x * x + y * y + z * z - x * y * z - 2;
  r.discrete_certified = comm <= -2 + kWarn;
  return r;
}

MoebiusMap PuncturedTorusRep::evaluate(const Word& w) const {
  MoebiusMap m;
  for (LetterCode l : w.letters) {
    if (letter_gen(l) > 1) throw HyperbolicError("rank-2 representation");
    MoebiusMap g = letter_gen(l) == 0 ? a : b;
    if (letter_sign(l) < 0) g = g.inverse();
    m = m * g;
  }
  return m;
}

double length_of(const PuncturedTorusRep& rep, const Word& w) {
  double t = std::abs(rep.evaluate(w).trace());
  if (t <= 2.0) throw NonHyperbolic("trace magnitude <= 2");
  return 2.0 * std::acosh(t / 2.0);
}

namespace {

// (r, s) positions of a conjugate axis in the frame where the base axis is
// the vertical geodesic (0, inf)
struct FramedAxis {
  double r = 0, s = 0;
  bool valid = false;  // finite, nonzero endpoints on both sides
};

struct BaseFrame {
  double p_raw, q_raw;  // base axis endpoints, original chart
  double p, q;          // after the auxiliary chart making both finite
  MoebiusMap chart;

  FramedAxis locate(const MoebiusMap& h) const {
    double u = apply(chart, apply(h, p_raw));
    double v = apply(chart, apply(h, q_raw));
    auto T = [&](double xi) {
      if (!finite(xi)) return 1.0;
      double den = xi - q;
      if (std::abs(den) < kEps) return kInf;
      return (xi - p) / den;
    };
    FramedAxis f;
    f.r = T(u);
    f.s = T(v);
    f.valid = finite(f.r) && finite(f.s) && f.r != 0 && f.s != 0;
    return f;
  }
};

// Enumerates reduced words h of length <= radius, collecting loose crossing
// candidates; exact deduplication and accurate verification happen later.
struct BallWalker {
  const PuncturedTorusRep& rep;
  const std::function<bool(const Word&)>& membership;
  int radius;
  const BaseFrame& frame;
  std::vector<Word>& candidates;
  Word scratch;

  void test(const MoebiusMap& h) {
    if (membership && !membership(scratch)) return;
    FramedAxis f = frame.locate(h);
    if (!f.valid) return;
    if ((f.r < 0) == (f.s < 0)) return;  // same side: no crossing
    candidates.push_back(scratch);
  }

  void dfs(const MoebiusMap& h, int last) {
    if (!scratch.letters.empty()) test(h);
    if ((int)scratch.letters.size() >= radius) return;
    for (LetterCode l = 0; l < 4; ++l) {
      if (last >= 0 && l == (last ^ 1)) continue;
      MoebiusMap g = letter_gen(l) == 0 ? rep.a : rep.b;
      if (letter_sign(l) < 0) g = g.inverse();
      scratch.letters.push_back(l);
      dfs(h * g, l);
      scratch.letters.pop_back();
    }
  }
};

// Least representative of the double coset <w> h <w>: minimal length, then
// lexicographically least, over a box of power shifts wide enough to contain
// every minimum. Exact word arithmetic; immune to rounding.
Word canonical_double_coset(const Word& h, const Word& w) {
  int b = 2 * h.length() / std::max(1, w.length()) + 3;
  std::vector<Word> pw(2 * b + 1);
  for (int k = -b; k <= b; ++k) pw[k + b] = power(w, k);
  Word best = h;
  auto better = [](const Word& x, const Word& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.letters < y.letters;
  };
  for (int k = -b; k <= b; ++k) {
    Word left = concat(pw[k + b], h);
    for (int l = -b; l <= b; ++l) {
      Word cand = concat(left, pw[l + b]);
      if (better(cand, best)) best = cand;
    }
  }
  return best;
}

}  // namespace

OracleResult self_intersection_oracle(const PuncturedTorusRep& rep, const Word& w,
                                      const std::function<bool(const Word&)>& membership,
                                      int radius) {
  MoebiusMap m = rep.evaluate(w);
  if (!m.hyperbolic()) throw NonHyperbolic("base word is not hyperbolic");
  Axis ax = axis_of(m);

  BaseFrame frame;
  frame.p_raw = ax.p;
  frame.q_raw = ax.q;
  // auxiliary chart moving both endpoints into finite position
  if (!finite(ax.p) || !finite(ax.q)) {
    for (double r : {0.0, 1.0, -1.0, 2.0, -2.0, 0.5}) {
      MoebiusMap c{0, -1, 1, -r};
      double pp = apply(c, ax.p), qq = apply(c, ax.q);
      if (finite(pp) && finite(qq) && std::abs(pp - qq) > 1e-6) {
        frame.chart = c;
        break;
      }
    }
  }
  frame.p = apply(frame.chart, ax.p);
  frame.q = apply(frame.chart, ax.q);
  if (!finite(frame.p) || !finite(frame.q))
    throw HyperbolicError("could not chart the base axis");

  // walk subtrees of the ball in parallel, gathering loose candidates
  std::vector<std::pair<Word, MoebiusMap>> roots;
  for (LetterCode l = 0; l < 4; ++l) {
    MoebiusMap g = letter_gen(l) == 0 ? rep.a : rep.b;
    if (letter_sign(l) < 0) g = g.inverse();
    roots.push_back({Word{{l}}, g});
  }
  std::vector<std::vector<Word>> found(roots.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < (int)roots.size(); ++i) {
    BallWalker walker{rep, membership, radius, frame, found[i], roots[i].first};
    walker.dfs(roots[i].second, roots[i].first.letters[0]);
  }

  // exact double-coset deduplication, then accurate re-verification of each
  // class with its shortest conjugator (long conjugators put the crossing far
  // down the axis, where endpoint arithmetic cancels catastrophically)
  std::set<std::vector<LetterCode>> classes;
  for (auto& bucket : found)
    for (const Word& h : bucket) classes.insert(canonical_double_coset(h, w).letters);

  OracleResult res;
  int verified = 0;
  for (const auto& letters : classes) {
    Word h0{letters};
    if (h0.empty()) continue;  // the trivial class: the axis itself
    FramedAxis f = frame.locate(rep.evaluate(h0));
    if (!f.valid || (f.r < 0) == (f.s < 0)) continue;
    double sine = 2 * std::sqrt(-f.r * f.s) / std::abs(f.r - f.s);
    if (sine < 1e-9) continue;  // rounding artifact of a shared limit direction
    res.min_margin = std::min(res.min_margin, sine);
    ++verified;
  }
  if (res.min_margin < 1e-6) res.precision_warning = true;
  if (verified % 2 != 0) res.precision_warning = true;
  res.count = verified / 2;
  return res;
}

OracleResult elevation_self_intersection_oracle(const PuncturedTorusRep& rep,
                                                const SchreierCover& cover,
                                                const Elevation& e, int radius) {
  // remap the (at most two) generators of the word onto {a, b}
  std::vector<int> gens;
  for (LetterCode l : e.word.letters) {
    int g = letter_gen(l);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  if (gens.size() > 2) throw HyperbolicError("elevation word needs at most two generators");

  Word base;
  for (int rep_count = 0; rep_count < e.degree; ++rep_count)
    for (LetterCode l : e.word.letters) {
      int local = (int)(std::find(gens.begin(), gens.end(), letter_gen(l)) - gens.begin());
      base.letters.push_back(make_letter(local, letter_sign(l)));
    }

  int c0 = e.start_coset;
  auto membership = [&](const Word& h) {
    int c = c0;
    for (LetterCode l : h.letters) {
      int g = gens[letter_gen(l)];
      c = letter_sign(l) > 0 ? cover.act[g][c] : cover.act_inv[g][c];
    }
    return c == c0;
  };
  return self_intersection_oracle(rep, base, membership, radius);
}

double elevation_length_check(const PuncturedTorusRep& rep, const Elevation& e) {
  std::vector<int> gens;
  for (LetterCode l : e.word.letters) {
    int g = letter_gen(l);
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  if (gens.size() > 2) throw HyperbolicError("elevation word needs at most two generators");
  Word w1, wd;
  for (LetterCode l : e.word.letters)
    w1.letters.push_back(make_letter(
        (int)(std::find(gens.begin(), gens.end(), letter_gen(l)) - gens.begin()),
        letter_sign(l)));
  for (int i = 0; i < e.degree; ++i)
    wd.letters.insert(wd.letters.end(), w1.letters.begin(), w1.letters.end());
  return std::abs(length_of(rep, wd) - e.degree * length_of(rep, w1));
}

}  // namespace sunada
