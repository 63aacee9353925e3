#include "sunada/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace sunada {

Elem FiniteGroup::pow(Elem a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  Elem r = identity;
  Elem base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != identity) {
    x = mul(x, a);
    ++k;
    if (k > order) throw GroupError("element order exceeds group order; bad table");
  }
  return k;
}

void FiniteGroup::check_laws() const {
  for (Elem a = 0; a < order; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a)
      throw GroupError("identity law violated");
    if (mul(a, inv(a)) != identity || mul(inv(a), a) != identity)
      throw GroupError("inverse law violated");
  }
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b)
      for (Elem c = 0; c < order; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw GroupError("associativity violated");
}

bool Subgroup::contains(Elem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::is_normal() const {
  for (Elem g = 0; g < parent->order; ++g)
    for (Elem h : members)
      if (!contains(parent->conj(g, h))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// constructors

static void finish_inverses(FiniteGroup& g) {
  g.inv_table.assign(g.order, -1);
  for (Elem a = 0; a < g.order; ++a)
    for (Elem b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.identity) {
        g.inv_table[a] = b;
        break;
      }
  for (Elem a = 0; a < g.order; ++a)
    if (g.inv_table[a] < 0) throw GroupError("element without inverse");
}

FiniteGroup build_semidirect_z8() {
  static const int units[4] = {1, 3, 5, 7};
  auto idx_of_unit = [](int a) {
    for (int i = 0; i < 4; ++i)
      if (units[i] == a) return i;
    throw GroupError("not a unit mod 8");
  };
  FiniteGroup g;
  g.order = 32;
  g.names.resize(32);
  for (int i = 0; i < 4; ++i)
    for (int b = 0; b < 8; ++b) {
      std::ostringstream os;
      os << "(" << units[i] << "," << b << ")";
      g.names[i * 8 + b] = os.str();
    }
  g.mul_table.resize(32 * 32);
  for (int i = 0; i < 4; ++i)
    for (int b = 0; b < 8; ++b)
      for (int j = 0; j < 4; ++j)
        for (int d = 0; d < 8; ++d) {
          int a = units[i], c = units[j];
          int ra = (a * c) % 8;
          int rb = (b + a * d) % 8;
          g.mul_table[(size_t)(i * 8 + b) * 32 + (j * 8 + d)] =
              idx_of_unit(ra) * 8 + rb;
        }
  g.identity = 0;  // (1,0)
  finish_inverses(g);
  g.generators["a1"] = element_from_pair(g, 5, 0);
  g.generators["a2"] = element_from_pair(g, 3, 0);
  g.generators["a3"] = element_from_pair(g, 1, 1);
  return g;
}

Elem element_from_pair(const FiniteGroup& g, int a, int b) {
  static const int units[4] = {1, 3, 5, 7};
  a = ((a % 8) + 8) % 8;
  b = ((b % 8) + 8) % 8;
  for (int i = 0; i < 4; ++i)
    if (units[i] == a) return i * 8 + b;
  throw GroupError("pair element: first entry must be a unit mod 8");
}

FiniteGroup build_symmetric(int n) {
  if (n < 1 || n > 7) throw GroupError("symmetric group size guard exceeded");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < (int)perms.size(); ++i) rank[perms[i]] = i;

  FiniteGroup g;
  g.order = (int)perms.size();
  g.mul_table.resize((size_t)g.order * g.order);
  g.names.resize(g.order);
  std::vector<int> r(n);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      for (int k = 0; k < n; ++k) r[k] = perms[i][perms[j][k]];
      g.mul_table[(size_t)i * g.order + j] = rank[r];
    }
    // one-line cycle notation name
    std::ostringstream os;
    std::vector<bool> seen(n, false);
    bool any = false;
    for (int s = 0; s < n; ++s) {
      if (seen[s] || perms[i][s] == s) continue;
      os << "(";
      int c = s;
      bool first = true;
      while (!seen[c]) {
        seen[c] = true;
        if (!first) os << ",";
        os << (c + 1);
        first = false;
        c = perms[i][c];
      }
      os << ")";
      any = true;
    }
    g.names[i] = any ? os.str() : "id";
  }
  g.identity = 0;
  finish_inverses(g);
  return g;
}

Elem element_from_cycles(const FiniteGroup& sym, const std::string& cycles) {
  // recover n from the group order
  int n = 1;
  long long f = 1;
  while (f < sym.order) f *= ++n;
  if (f != sym.order) throw GroupError("not a symmetric group");

  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  size_t i = 0;
  auto skip_ws = [&] { while (i < cycles.size() && isspace((unsigned char)cycles[i])) ++i; };
  skip_ws();
  if (cycles.compare(i, 2, "id") == 0) i += 2;
  while (true) {
    skip_ws();
    if (i >= cycles.size()) break;
    if (cycles[i] != '(') throw GroupError("cycle syntax: expected '('");
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      size_t j = i;
      while (j < cycles.size() && isdigit((unsigned char)cycles[j])) ++j;
      if (j == i) throw GroupError("cycle syntax: expected digit");
      int v = std::stoi(cycles.substr(i, j - i));
      if (v < 1 || v > n) throw GroupError("cycle entry out of range");
      cyc.push_back(v - 1);
      i = j;
      skip_ws();
      if (i < cycles.size() && (cycles[i] == ',' || cycles[i] == ' ')) { ++i; continue; }
      if (i < cycles.size() && cycles[i] == ')') { ++i; break; }
      if (i >= cycles.size()) throw GroupError("cycle syntax: unterminated cycle");
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  // rank in lexicographic order = find via factorial digits
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  long long rank = 0;
  long long fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;  // (n-1)!
  for (int k = 0; k < n; ++k) {
    auto it = std::find(avail.begin(), avail.end(), p[k]);
    rank += (it - avail.begin()) * fact;
    avail.erase(it);
    if (n - k - 1 > 0) fact /= (n - k - 1);
  }
  return (Elem)rank;
}

std::vector<int> cycle_type_of_perm(const FiniteGroup& sym, Elem g) {
  int n = 1;
  long long f = 1;
  while (f < sym.order) f *= ++n;
  // reconstruct one-line form by acting on points via transposition ranks is
  // overkill; decode from lexicographic rank instead
  std::vector<int> avail(n), p(n);
  std::iota(avail.begin(), avail.end(), 0);
  long long rank = g;
  long long fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;
  for (int k = 0; k < n; ++k) {
    long long d = rank / fact;
    rank %= fact;
    p[k] = avail[d];
    avail.erase(avail.begin() + d);
    if (n - k - 1 > 0) fact /= (n - k - 1);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0, c = s;
    while (!seen[c]) { seen[c] = true; c = p[c]; ++len; }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

FiniteGroup build_sl(int n, int q) {
  // prime fields only
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw GroupError("build_sl: q must be prime");
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= q;
  if (total > 2e7) throw GroupError("build_sl: size guard exceeded");

  auto det_mod = [&](const std::vector<int>& m) {
    // Gaussian elimination over F_q
    std::vector<int> a = m;
    long long det = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (a[r * n + col] % q != 0) { piv = r; break; }
      if (piv < 0) return 0;
      if (piv != col) {
        for (int k = 0; k < n; ++k) std::swap(a[piv * n + k], a[col * n + k]);
        det = (q - det % q) % q;
      }
      int pv = a[col * n + col] % q;
      det = det * pv % q;
      // inverse of pv mod q
      int inv = 1;
      for (int e = 0; e < q - 2; ++e) inv = inv * pv % q;
      for (int r = col + 1; r < n; ++r) {
        int factor = a[r * n + col] % q * inv % q;
        for (int k = col; k < n; ++k)
          a[r * n + k] = ((a[r * n + k] - factor * a[col * n + k]) % q + q) % q;
      }
    }
    return (int)det;
  };

  std::vector<std::vector<int>> mats;
  std::vector<int> m(n * n, 0);
  long long count = (long long)total;
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    for (int i = 0; i < n * n; ++i) { m[i] = c % q; c /= q; }
    if (det_mod(m) == 1) mats.push_back(m);
  }
  if ((long long)mats.size() > 5040) throw GroupError("build_sl: size guard exceeded");

  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < (int)mats.size(); ++i) rank[mats[i]] = i;

  FiniteGroup g;
  g.order = (int)mats.size();
  g.mul_table.resize((size_t)g.order * g.order);
  g.names.resize(g.order);
  std::vector<int> prod(n * n);
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      for (int r = 0; r < n; ++r)
        for (int cc = 0; cc < n; ++cc) {
          int s = 0;
          for (int k = 0; k < n; ++k) s += mats[i][r * n + k] * mats[j][k * n + cc];
          prod[r * n + cc] = s % q;
        }
      g.mul_table[(size_t)i * g.order + j] = rank[prod];
    }
    std::ostringstream os;
    os << "[";
    for (int r = 0; r < n; ++r) {
      os << "[";
      for (int cc = 0; cc < n; ++cc) os << mats[i][r * n + cc] << (cc + 1 < n ? "," : "");
      os << "]" << (r + 1 < n ? "," : "");
    }
    os << "]";
    g.names[i] = os.str();
  }
  // identity
  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  g.identity = rank[id];
  finish_inverses(g);
  return g;
}

Elem element_from_matrix(const FiniteGroup& sl, const std::vector<std::vector<int>>& rows) {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << "[";
    for (size_t c = 0; c < rows[r].size(); ++c)
      os << rows[r][c] << (c + 1 < rows[r].size() ? "," : "");
    os << "]" << (r + 1 < rows.size() ? "," : "");
  }
  os << "]";
  std::string key = os.str();
  for (Elem e = 0; e < sl.order; ++e)
    if (sl.names[e] == key) return e;
  throw GroupError("matrix not in group: " + key);
}

std::vector<std::vector<int>> matrix_of(const FiniteGroup& sl, Elem g) {
  const std::string& nm = sl.names[g];
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  int val = -1;
  for (size_t i = 1; i < nm.size(); ++i) {  // skip outer '['
    char ch = nm[i];
    if (ch >= '0' && ch <= '9') {
      val = (val < 0 ? 0 : val * 10) + (ch - '0');
    } else {
      if (val >= 0) cur.push_back(val), val = -1;
      if (ch == ']' && !cur.empty()) rows.push_back(cur), cur.clear();
    }
  }
  if (rows.empty()) throw GroupError("element has no matrix form: " + nm);
  return rows;
}

FiniteGroup build_from_table(const std::vector<std::vector<int>>& mul) {
  FiniteGroup g;
  g.order = (int)mul.size();
  g.mul_table.resize((size_t)g.order * g.order);
  for (int i = 0; i < g.order; ++i) {
    if ((int)mul[i].size() != g.order) throw GroupError("mul table not square");
    for (int j = 0; j < g.order; ++j) {
      if (mul[i][j] < 0 || mul[i][j] >= g.order) throw GroupError("mul entry out of range");
      g.mul_table[(size_t)i * g.order + j] = mul[i][j];
    }
  }
  // locate identity
  g.identity = -1;
  for (Elem e = 0; e < g.order; ++e) {
    bool ok = true;
    for (Elem a = 0; a < g.order && ok; ++a)
      ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) { g.identity = e; break; }
  }
  if (g.identity < 0) throw GroupError("table has no identity");
  finish_inverses(g);
  g.names.resize(g.order);
  for (Elem e = 0; e < g.order; ++e) g.names[e] = "g" + std::to_string(e);
  if (g.order <= 1000) g.check_laws();
  return g;
}

// ---------------------------------------------------------------------------
// subgroup machinery

Subgroup subgroup_from_generators(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> closure = {g.identity};
  std::vector<Elem> frontier = {g.identity};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        for (Elem y : {g.mul(x, s), g.mul(x, g.inv(s))})
          if (closure.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  Subgroup h;
  h.parent = &g;
  h.members.assign(closure.begin(), closure.end());
  return h;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  std::vector<ConjugacyClass> out;
  std::vector<bool> seen(g.order, false);
  for (Elem a = 0; a < g.order; ++a) {
    if (seen[a]) continue;
    ConjugacyClass cls;
    cls.representative = a;
    std::set<Elem> orbit;
    for (Elem x = 0; x < g.order; ++x) orbit.insert(g.conj(x, a));
    cls.members.assign(orbit.begin(), orbit.end());
    for (Elem m : cls.members) seen[m] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

bool is_almost_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  auto classes = conjugacy_classes(g);
  for (const auto& cls : classes) {
    int ca = 0, cb = 0;
    for (Elem m : cls.members) {
      if (a.contains(m)) ++ca;
      if (b.contains(m)) ++cb;
    }
    if (ca != cb) return false;
  }
  return true;
}

std::optional<Elem> conjugating_element(const FiniteGroup& g, const Subgroup& a,
                                        const Subgroup& b) {
  if (a.members.size() != b.members.size()) return std::nullopt;
  for (Elem x = 0; x < g.order; ++x) {
    bool ok = true;
    for (Elem m : a.members)
      if (!b.contains(g.conj(x, m))) { ok = false; break; }
    if (ok) return x;
  }
  return std::nullopt;
}

CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h) {
  CosetSpace s;
  s.group = &g;
  s.subgroup = h;
  s.coset_of.assign(g.order, -1);
  // coset 0 is H itself
  for (Elem m : h.members) s.coset_of[m] = 0;
  s.rep.push_back(g.identity);
  for (Elem x = 0; x < g.order; ++x) {
    if (s.coset_of[x] >= 0) continue;
    int c = (int)s.rep.size();
    s.rep.push_back(x);
    for (Elem m : h.members) s.coset_of[g.mul(m, x)] = c;
  }
  int idx = s.index();
  if (idx * h.order() != g.order) throw GroupError("coset partition failed");
  s.action.resize((size_t)g.order * idx);
  for (Elem x = 0; x < g.order; ++x)
    for (int c = 0; c < idx; ++c)
      s.action[(size_t)x * idx + c] = s.coset_of[g.mul(s.rep[c], x)];
  return s;
}

std::vector<int> cycle_type(const CosetSpace& space, Elem g) {
  int n = space.index();
  std::vector<bool> seen(n, false);
  std::vector<int> type;
  for (int c = 0; c < n; ++c) {
    if (seen[c]) continue;
    int len = 0, cur = c;
    while (!seen[cur]) { seen[cur] = true; cur = space.act(g, cur); ++len; }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::vector<std::pair<Subgroup, Subgroup>> gassmann_search(const FiniteGroup& g,
                                                           int max_subgroup_order) {
  if ((long long)g.order * g.order > 4e9) throw GroupError("gassmann_search: guard exceeded");
  // all subgroups of order <= bound, by incremental generator closure
  std::set<std::vector<Elem>> subs;
  std::vector<std::vector<Elem>> queue;
  std::vector<Elem> trivial = {g.identity};
  subs.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& s : queue) {
      for (Elem x = 0; x < g.order; ++x) {
        std::vector<Elem> gens = s;
        gens.push_back(x);
        Subgroup t = subgroup_from_generators(g, gens);
        if (t.order() > max_subgroup_order) continue;
        if (subs.insert(t.members).second) next.push_back(t.members);
      }
    }
    queue = std::move(next);
  }

  auto make = [&](const std::vector<Elem>& m) {
    Subgroup s;
    s.parent = &g;
    s.members = m;
    return s;
  };
  auto conj_members = [&](const std::vector<Elem>& m, Elem x) {
    std::vector<Elem> out;
    out.reserve(m.size());
    for (Elem e : m) out.push_back(g.conj(x, e));
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::vector<Elem>> list(subs.begin(), subs.end());
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> canon_seen;
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = i + 1; j < list.size(); ++j) {
      if (list[i].size() != list[j].size()) continue;
      Subgroup a = make(list[i]), b = make(list[j]);
      if (!is_almost_conjugate(g, a, b)) continue;
      if (conjugating_element(g, a, b)) continue;
      // canonical form of the unordered pair under simultaneous conjugation
      std::pair<std::vector<Elem>, std::vector<Elem>> best;
      bool first = true;
      for (Elem x = 0; x < g.order; ++x) {
        auto ca = conj_members(list[i], x);
        auto cb = conj_members(list[j], x);
        if (cb < ca) std::swap(ca, cb);
        auto cand = std::make_pair(std::move(ca), std::move(cb));
        if (first || cand < best) { best = std::move(cand); first = false; }
      }
      if (canon_seen.insert(best).second) out.emplace_back(std::move(a), std::move(b));
    }
  return out;
}

}  // namespace sunada
