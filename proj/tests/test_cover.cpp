#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "sunada/cover.hpp"

using namespace sunada;

namespace {

struct Diamond {
  FiniteGroup g;
  FiniteQuotient q;
  Subgroup a, b;
};

Diamond order32_diamond() {
  Diamond d;
  d.g = build_semidirect_z8();
  SurfacePresentation pres = SurfacePresentation::standard(3);
  Elem a1 = d.g.generators.at("a1"), a2 = d.g.generators.at("a2"),
       a3 = d.g.generators.at("a3");
  Elem id = d.g.identity;
  d.q = make_quotient(pres, d.g, {a1, a2, a3, id, id, id}, true);
  d.a = Subgroup{&d.g,
                 {element_from_pair(d.g, 1, 0), element_from_pair(d.g, 3, 0),
                  element_from_pair(d.g, 5, 0), element_from_pair(d.g, 7, 0)}};
  d.b = Subgroup{&d.g,
                 {element_from_pair(d.g, 1, 0), element_from_pair(d.g, 3, 4),
                  element_from_pair(d.g, 5, 4), element_from_pair(d.g, 7, 0)}};
  std::sort(d.a.members.begin(), d.a.members.end());
  std::sort(d.b.members.begin(), d.b.members.end());
  return d;
}

}  // namespace

TEST_CASE("cover construction over the order-32 diamond") {
  Diamond d = order32_diamond();
  SchreierCover ca = build_cover(d.q, d.a);
  CHECK(ca.index() == 8);
  CHECK(is_connected(ca));
  CHECK(cover_genus(ca, 3) == 17);

  // a3-edges form a single octagon
  CyclicWord a3 = cyclic_reduce(parse_word("a3", d.q.alphabet));
  auto el = elevations_of(ca, a3);
  REQUIRE(el.size() == 1);
  CHECK(el[0].degree == 8);

  // full cover over the trivial subgroup, and the base over H = G
  Subgroup trivial{&d.g, {d.g.identity}};
  SchreierCover cz = build_cover(d.q, trivial);
  CHECK(cz.index() == 32);
  CHECK(is_regular(cz));
  CHECK(deck_group(cz).order == 32);

  std::vector<Elem> all(d.g.order);
  for (Elem e = 0; e < d.g.order; ++e) all[e] = e;
  SchreierCover cbase = build_cover(d.q, Subgroup{&d.g, all});
  CHECK(cbase.index() == 1);
  CHECK(cover_genus(cbase, 3) == 3);
  CHECK(deck_group(cbase).order == 1);
}

TEST_CASE("elevations of the witness word split as in the diamond") {
  Diamond d = order32_diamond();
  SchreierCover ca = build_cover(d.q, d.a);
  SchreierCover cb = build_cover(d.q, d.b);
  CyclicWord w = cyclic_reduce(parse_word("a1^-2 a2", d.q.alphabet));

  auto degree1_starts = [](const std::vector<Elevation>& el) {
    std::vector<int> out;
    for (const Elevation& e : el)
      if (e.degree == 1) out.push_back(e.start_coset);
    return out;
  };

  auto ea = elevations_of(ca, w);
  auto eb = elevations_of(cb, w);

  // degrees partition the fiber
  int total = 0;
  for (auto& e : ea) total += e.degree;
  CHECK(total == 8);

  // along A: degree-1 at the cosets of the identity and of a3^4
  std::vector<int> sa = degree1_starts(ea);
  REQUIRE(sa.size() == 2);
  CHECK(sa[0] == ca.cosets.coset_of[d.g.identity]);
  CHECK(sa[1] == ca.cosets.coset_of[element_from_pair(d.g, 1, 4)]);

  // along B: degree-1 at B a3^2 and B a3^6
  std::vector<int> sb = degree1_starts(eb);
  REQUIRE(sb.size() == 2);
  std::set<int> want{cb.cosets.coset_of[element_from_pair(d.g, 1, 2)],
                     cb.cosets.coset_of[element_from_pair(d.g, 1, 6)]};
  CHECK(std::set<int>(sb.begin(), sb.end()) == want);

  // elevation degrees match cycle types of the word image
  Elem img = d.q.evaluate(Word{w.letters});
  std::vector<int> degs;
  for (auto& e : ea) degs.push_back(e.degree);
  std::sort(degs.begin(), degs.end());
  CHECK(degs == cycle_type(ca.cosets, img));
}

TEST_CASE("elevation paths read the word repeatedly") {
  Diamond d = order32_diamond();
  SchreierCover cb = build_cover(d.q, d.b);
  CyclicWord w = cyclic_reduce(parse_word("a1^-2 a2", d.q.alphabet));
  for (const Elevation& e : elevations_of(cb, w)) {
    CyclicEdgePath p = elevation_path(cb, e);
    CHECK(p.length() == e.degree * w.length());
    for (int i = 0; i < p.length(); ++i)
      CHECK(p.letters[i] == w.letters[i % w.length()]);
  }

  // the degree-1 elevation at B a3^2 visits B a3^6 along its a1-edges
  Elevation at2;
  for (const Elevation& e : elevations_of(cb, w))
    if (e.degree == 1 && e.start_coset == cb.cosets.coset_of[element_from_pair(d.g, 1, 2)])
      at2 = e;
  REQUIRE(at2.degree == 1);
  CyclicEdgePath p = elevation_path(cb, at2);
  std::set<int> visited(p.cosets.begin(), p.cosets.end());
  std::set<int> want{cb.cosets.coset_of[element_from_pair(d.g, 1, 2)],
                     cb.cosets.coset_of[element_from_pair(d.g, 1, 6)]};
  CHECK(visited == want);
}

TEST_CASE("minimal elevation degree and regularity") {
  Diamond d = order32_diamond();
  SchreierCover ca = build_cover(d.q, d.a);
  CyclicWord w = cyclic_reduce(parse_word("a1^-2 a2", d.q.alphabet));
  CHECK(min_elevation_degree(ca, w) == 1);
  CHECK(min_elevation_degree(ca, cyclic_reduce(parse_word("a3", d.q.alphabet))) == 8);

  // phi(w) in H gives a degree-1 elevation at the identity coset
  CHECK(d.a.contains(d.q.evaluate(Word{w.letters})));

  // <a3^2> is normal; all elevations of any word share one degree
  Subgroup h = subgroup_from_generators(d.g, {d.g.pow(d.g.generators.at("a3"), 2)});
  CHECK(h.order() == 4);
  SchreierCover ch = build_cover(d.q, h);
  CHECK(is_regular(ch));
  CHECK(deck_group(ch).order == 8);
  for (const char* text : {"a1", "a2", "a3", "a1 a2", "a1 a3", "a1^-2 a2", "a3^2 a1"}) {
    auto el = elevations_of(ch, cyclic_reduce(parse_word(text, d.q.alphabet)));
    std::set<int> degs;
    for (auto& e : el) degs.insert(e.degree);
    CHECK(degs.size() == 1);
  }

  // A itself is not normal in G
  CHECK(!is_regular(ca));
  CHECK_THROWS_AS(deck_group(ca), CoverError);
}

TEST_CASE("combinatorial isospectrality certificate") {
  Diamond d = order32_diamond();
  SchreierCover ca = build_cover(d.q, d.a);
  SchreierCover cb = build_cover(d.q, d.b);

  IsospectralityReport rep = combinatorial_isospectrality(ca, cb);
  CHECK(rep.pass);
  CHECK(rep.violations.empty());
  CHECK(combinatorial_isospectrality(ca, ca).pass);
  CHECK(combinatorial_isospectrality_serial(ca, cb).pass);

  // a non-almost-conjugate pair of order-4 subgroups of S4 fails with witnesses
  FiniteGroup s4 = build_symmetric(4);
  SurfacePresentation pres = SurfacePresentation::standard(2);
  Elem t = element_from_cycles(s4, "(1,2)");
  Elem c = element_from_cycles(s4, "(1,2,3,4)");
  FiniteQuotient q4 = make_quotient(pres, s4, {t, c, s4.identity, s4.identity}, true);
  Subgroup pa = subgroup_from_generators(
      s4, {element_from_cycles(s4, "(1,2)"), element_from_cycles(s4, "(3,4)")});
  Subgroup v4 = subgroup_from_generators(
      s4, {element_from_cycles(s4, "(1,2)(3,4)"), element_from_cycles(s4, "(1,3)(2,4)")});
  CHECK(pa.order() == 4);
  CHECK(v4.order() == 4);
  CHECK(!is_almost_conjugate(s4, pa, v4));
  IsospectralityReport bad =
      combinatorial_isospectrality(build_cover(q4, pa), build_cover(q4, v4));
  CHECK(!bad.pass);
  CHECK(!bad.violations.empty());
  // every reported witness genuinely separates the cycle types
  CosetSpace csa = coset_space(s4, pa), csb = coset_space(s4, v4);
  for (Elem e : bad.violations) CHECK(cycle_type(csa, e) != cycle_type(csb, e));

  CHECK_THROWS_AS(combinatorial_isospectrality(ca, build_cover(q4, pa)), CoverError);
}

TEST_CASE("dot export") {
  Diamond d = order32_diamond();
  SchreierCover ca = build_cover(d.q, d.a);
  std::string dot = export_dot(ca);
  CHECK(dot.find("digraph cover {") == 0);
  CHECK(dot.find("v7") != std::string::npos);
  CHECK(dot.find("style=solid") != std::string::npos);  // a3 edges
  CHECK(dot.find("style=dotted") != std::string::npos);
  CHECK(dot == export_dot(ca));  // byte-stable

  // the base rose: self-loops everywhere, suppressible
  std::vector<Elem> all(d.g.order);
  for (Elem e = 0; e < d.g.order; ++e) all[e] = e;
  SchreierCover base = build_cover(d.q, Subgroup{&d.g, all});
  std::string rose = export_dot(base);
  CHECK(rose.find("v0 -> v0") != std::string::npos);
  DotStyle quiet;
  quiet.suppress_self_loops = true;
  CHECK(export_dot(base, quiet).find("->") == std::string::npos);

  // merged opposite pairs collapse the a1 double edges
  DotStyle merged;
  merged.merge_opposite_pairs = true;
  std::string m = export_dot(ca, merged);
  CHECK(m.find("dir=none") != std::string::npos);
}
