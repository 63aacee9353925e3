#include "sunada/trace.hpp"

#include <algorithm>
#include <sstream>

namespace sunada {

namespace {

constexpr long long kCoefLimit = 1LL << 62;

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r) || r >= kCoefLimit || r <= -kCoefLimit)
    throw TraceError("coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r) || r >= kCoefLimit || r <= -kCoefLimit)
    throw TraceError("coefficient overflow");
  return r;
}

}  // namespace

TracePoly TracePoly::constant(long long c) {
  TracePoly p;
  if (c != 0) p.terms[{0, 0, 0}] = c;
  return p;
}

TracePoly TracePoly::variable(int which) {
  TracePoly p;
  Key k{which == 0, which == 1, which == 2};
  p.terms[k] = 1;
  return p;
}

TracePoly TracePoly::operator+(const TracePoly& o) const {
  TracePoly r = *this;
  for (auto& [k, c] : o.terms) {
    long long v = checked_add(r.terms.count(k) ? r.terms[k] : 0, c);
    if (v == 0)
      r.terms.erase(k);
    else
      r.terms[k] = v;
  }
  return r;
}

TracePoly TracePoly::operator-(const TracePoly& o) const {
  TracePoly neg;
  for (auto& [k, c] : o.terms) neg.terms[k] = -c;
  return *this + neg;
}

TracePoly TracePoly::operator*(const TracePoly& o) const {
  TracePoly r;
  for (auto& [k1, c1] : terms)
    for (auto& [k2, c2] : o.terms) {
      Key k{std::get<0>(k1) + std::get<0>(k2), std::get<1>(k1) + std::get<1>(k2),
            std::get<2>(k1) + std::get<2>(k2)};
      long long v = checked_add(r.terms.count(k) ? r.terms[k] : 0, checked_mul(c1, c2));
      if (v == 0)
        r.terms.erase(k);
      else
        r.terms[k] = v;
    }
  return r;
}

double TracePoly::evaluate(double x, double y, double z) const {
  double sum = 0;
  for (auto& [k, c] : terms) {
    double t = (double)c;
    for (int i = 0; i < std::get<0>(k); ++i) t *= x;
    for (int i = 0; i < std::get<1>(k); ++i) t *= y;
    for (int i = 0; i < std::get<2>(k); ++i) t *= z;
    sum += t;
  }
  return sum;
}

std::string TracePoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    long long c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    long long mag = c < 0 ? -c : c;
    auto [ex, ey, ez] = it->first;
    bool has_var = ex || ey || ez;
    if (mag != 1 || !has_var) os << mag;
    bool star = mag != 1 && has_var;
    const char* names[3] = {"x", "y", "z"};
    int exps[3] = {ex, ey, ez};
    for (int v = 0; v < 3; ++v) {
      if (!exps[v]) continue;
      if (star) os << "*";
      os << names[v];
      if (exps[v] > 1) os << "^" << exps[v];
      star = true;
    }
  }
  return os.str();
}

namespace {

using Letters = std::vector<LetterCode>;

// canonical memo key: the lesser of the cyclic forms of w and w^-1
CyclicWord canonical_class(const Word& w) {
  CyclicWord c1 = cyclic_reduce(w);
  CyclicWord c2 = cyclic_reduce(inverse(w));
  return c1 < c2 ? c1 : c2;
}

TracePoly compute(const Letters& cyc);

TracePoly trace_of_class(const Word& w) {
  thread_local std::map<std::vector<LetterCode>, TracePoly> memo;
  CyclicWord key = canonical_class(w);
  auto it = memo.find(key.letters);
  if (it != memo.end()) return it->second;
  TracePoly p = compute(key.letters);
  memo[key.letters] = p;
  return p;
}

TracePoly gen_var(LetterCode l) { return TracePoly::variable(letter_gen(l)); }

TracePoly compute(const Letters& cyc) {
  int n = (int)cyc.size();
  if (n == 0) return TracePoly::constant(2);
  if (n == 1) return gen_var(cyc[0]);

  // proper power: w = v^k
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < n && periodic; ++i)
      if (cyc[i] != cyc[i - d]) periodic = false;
    if (periodic) {
      Word v{Letters(cyc.begin(), cyc.begin() + d)};
      return power_trace(trace_of_class(v), n / d);
    }
  }

  if (n == 2) {
    // distinct generators (same-generator pairs are powers, handled above)
    int neg = (cyc[0] & 1) + (cyc[1] & 1);
    if (neg == 1) return gen_var(cyc[0]) * gen_var(cyc[1]) - TracePoly::variable(2);
    return TracePoly::variable(2);  // ab or its inverse class
  }

  // doubled letter: rotate to g g X, then tr(g^2 X) = tr(gX) tr(g) - tr(X)
  for (int i = 0; i < n; ++i) {
    if (cyc[i] != cyc[(i + 1) % n]) continue;
    Letters rot(cyc.begin() + i, cyc.end());
    rot.insert(rot.end(), cyc.begin(), cyc.begin() + i);
    Word gx{Letters(rot.begin(), rot.end() - 0)};
    gx.letters.erase(gx.letters.begin());                     // g X
    Word x_{Letters(gx.letters.begin() + 1, gx.letters.end())};  // X
    return trace_of_class(gx) * gen_var(rot[0]) - trace_of_class(x_);
  }

  // alternating word with an inverse letter: rotate it to the end, then
  // tr(X g^-1) = tr(X) tr(g) - tr(X g)
  for (int i = 0; i < n; ++i) {
    if (!(cyc[i] & 1)) continue;
    Letters rot(cyc.begin() + i + 1, cyc.end());
    rot.insert(rot.end(), cyc.begin(), cyc.begin() + i + 1);  // ends with cyc[i]
    Word x_{Letters(rot.begin(), rot.end() - 1)};
    Word xg = x_;
    xg.letters.push_back(rot.back() ^ 1);  // X g
    return trace_of_class(x_) * gen_var(rot.back()) - trace_of_class(xg);
  }

  // positive alternating words are powers of ab, already handled
  throw TraceError("unreachable trace case");
}

}  // namespace

TracePoly trace_polynomial(const Word& w) {
  for (LetterCode l : w.letters)
    if (letter_gen(l) > 1) throw TraceError("trace polynomials need a two-letter alphabet");
  return trace_of_class(w);
}

TracePoly power_trace(const TracePoly& p, int n) {
  if (n < 1) throw TraceError("power_trace needs n >= 1");
  if (n == 1) return p;
  TracePoly prev = p;
  TracePoly cur = p * p - TracePoly::constant(2);
  for (int i = 2; i < n; ++i) {
    TracePoly next = p * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::optional<CommensurabilityWitness> trace_commensurable(const Word& w1,
                                                           const Word& w2, int bound) {
  if (bound < 1) return std::nullopt;
  std::vector<TracePoly> sq1(bound), sq2(bound);
  TracePoly p1 = trace_polynomial(w1), p2 = trace_polynomial(w2);
  for (int m = 1; m <= bound; ++m) {
    TracePoly t = power_trace(p1, m);
    sq1[m - 1] = t * t;
    t = power_trace(p2, m);
    sq2[m - 1] = t * t;
  }
  for (int s = 2; s <= 2 * bound; ++s)
    for (int m = std::max(1, s - bound); m <= std::min(bound, s - 1); ++m) {
      int n = s - m;
      if (sq1[m - 1] == sq2[n - 1]) return CommensurabilityWitness{m, n};
    }
  return std::nullopt;
}

bool is_trace_twin_pair(const Word& w1, const Word& w2, int bound) {
  if (!trace_commensurable(w1, w2, bound)) return false;
  for (int m = 1; m <= bound; ++m) {
    CyclicWord c1 = cyclic_reduce(power(w1, m));
    for (int n = 1; n <= bound; ++n) {
      if (c1 == cyclic_reduce(power(w2, n))) return false;
      if (c1 == cyclic_reduce(power(w2, -n))) return false;
    }
  }
  return true;
}

TwinCertificate no_length_twins_certificate(const Word& w, int genus) {
  CyclicWord c = cyclic_reduce(w);
  if (c.empty()) return {false, "trivial curve class"};

  bool single = true;
  for (LetterCode l : c.letters) single = single && l == c.letters[0];
  if (single)
    return {true, "power of a standard generator: powers of simple curves have no "
                  "length twins"};

  // cyclic maximal runs of one letter each
  int n = c.length();
  std::vector<std::pair<LetterCode, int>> runs;
  int start = 0;
  while (start < n && c.letters[((start - 1) % n + n) % n] == c.letters[start]) ++start;
  // single==false guarantees a run boundary exists
  for (int seen = 0, i = start; seen < n;) {
    LetterCode l = c.letters[i % n];
    int len = 0;
    while (len < n - seen && c.letters[(i + len) % n] == l) ++len;
    runs.push_back({l, len});
    seen += len;
    i += len;
  }

  if (runs.size() == 2 && letter_gen(runs[0].first) != letter_gen(runs[1].first)) {
    int g1 = letter_gen(runs[0].first), g2 = letter_gen(runs[1].first);
    if (g1 < genus && g2 < genus) {
      if (genus >= 3)
        return {true, "two-generator form a_i^j a_k^l on distinct handle generators at "
                      "genus >= 3: no length twins"};
      if (genus == 2)
        return {false, "genus 2: the image under the hyperelliptic involution is a "
                       "length twin"};
      return {false, "needs genus >= 3"};
    }
    return {false, "generators outside the a-family are not certified"};
  }
  return {false, "word outside the certified families"};
}

}  // namespace sunada
