#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "sunada/group.hpp"

using namespace sunada;

TEST_CASE("semidirect group of order 32") {
  FiniteGroup g = build_semidirect_z8();
  CHECK(g.order == 32);
  g.check_laws();

  Elem a1 = g.generators.at("a1");
  Elem a2 = g.generators.at("a2");
  Elem a3 = g.generators.at("a3");
  CHECK(a1 == element_from_pair(g, 5, 0));
  CHECK(a2 == element_from_pair(g, 3, 0));
  CHECK(a3 == element_from_pair(g, 1, 1));
  CHECK(g.element_order(a1) == 2);
  CHECK(g.element_order(a2) == 2);
  CHECK(g.element_order(a3) == 8);

  // (3,0)(1,1) = (3, 0+3*1) = (3,3)
  CHECK(g.mul(a2, a3) == element_from_pair(g, 3, 3));
  // (1,1)(3,0) = (3, 1)
  CHECK(g.mul(a3, a2) == element_from_pair(g, 3, 1));
}

TEST_CASE("almost-conjugate non-conjugate pair in the order-32 group") {
  FiniteGroup g = build_semidirect_z8();
  Subgroup a{&g,
             {element_from_pair(g, 1, 0), element_from_pair(g, 3, 0),
              element_from_pair(g, 5, 0), element_from_pair(g, 7, 0)}};
  Subgroup b{&g,
             {element_from_pair(g, 1, 0), element_from_pair(g, 3, 4),
              element_from_pair(g, 5, 4), element_from_pair(g, 7, 0)}};
  std::sort(a.members.begin(), a.members.end());
  std::sort(b.members.begin(), b.members.end());

  CHECK(is_almost_conjugate(g, a, b));
  CHECK(!conjugating_element(g, a, b).has_value());
  CHECK(conjugating_element(g, a, a).has_value());

  CosetSpace ca = coset_space(g, a);
  CHECK(ca.index() == 8);

  // cycle types of every group element match on the two coset spaces
  CosetSpace cb = coset_space(g, b);
  for (Elem e = 0; e < g.order; ++e) CHECK(cycle_type(ca, e) == cycle_type(cb, e));
}

TEST_CASE("symmetric group basics") {
  FiniteGroup s4 = build_symmetric(4);
  CHECK(s4.order == 24);
  s4.check_laws();
  CHECK(element_from_cycles(s4, "id") == s4.identity);
  Elem t = element_from_cycles(s4, "(1,2)");
  CHECK(s4.element_order(t) == 2);
  Elem c = element_from_cycles(s4, "(1,2,3,4)");
  CHECK(s4.element_order(c) == 4);
  CHECK(cycle_type_of_perm(s4, c) == std::vector<int>{4});
  CHECK(cycle_type_of_perm(s4, element_from_cycles(s4, "(1,2)(3,4)")) ==
        std::vector<int>{2, 2});

  // (1,2)(1,2,3,4): apply the 4-cycle first, then the transposition
  Elem p = s4.mul(t, c);
  CHECK(cycle_type_of_perm(s4, p) == std::vector<int>{1, 3});
}

TEST_CASE("S6 pair of almost-conjugate four-groups") {
  FiniteGroup s6 = build_symmetric(6);
  CHECK(s6.order == 720);

  Subgroup a = subgroup_from_generators(
      s6, {element_from_cycles(s6, "(1,2)(3,4)"), element_from_cycles(s6, "(1,3)(2,4)")});
  Subgroup b = subgroup_from_generators(
      s6, {element_from_cycles(s6, "(1,2)(3,4)"), element_from_cycles(s6, "(1,2)(5,6)")});
  CHECK(a.order() == 4);
  CHECK(b.order() == 4);
  CHECK(is_almost_conjugate(s6, a, b));
  CHECK(!conjugating_element(s6, a, b).has_value());
  CHECK(coset_space(s6, a).index() == 180);
}

TEST_CASE("SL3(F2)") {
  FiniteGroup g = build_sl(3, 2);
  CHECK(g.order == 168);

  Elem m1 = element_from_matrix(g, {{0, 1, 1}, {0, 1, 0}, {1, 0, 0}});
  Elem m2 = element_from_matrix(g, {{1, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  Elem b = g.mul(g.mul(m1, m2), g.mul(g.inv(m1), g.inv(m2)));
  CHECK(g.element_order(b) == 7);

  CHECK(matrix_of(g, m1) == std::vector<std::vector<int>>{{0, 1, 1}, {0, 1, 0}, {1, 0, 0}});

  // first-column and first-row stabilizers: transposed subgroups of index 7
  std::vector<Elem> amem, bmem;
  for (Elem e = 0; e < g.order; ++e) {
    auto m = matrix_of(g, e);
    if (m[1][0] == 0 && m[2][0] == 0) amem.push_back(e);
    if (m[0][1] == 0 && m[0][2] == 0) bmem.push_back(e);
  }
  Subgroup sa{&g, amem}, sb{&g, bmem};
  CHECK(sa.order() == 24);
  CHECK(sb.order() == 24);
  CHECK(is_almost_conjugate(g, sa, sb));
  CHECK(!conjugating_element(g, sa, sb).has_value());
  CHECK(coset_space(g, sa).index() == 7);

  // coset reps: powers of the commutator b hit all 7 cosets
  CosetSpace ca = coset_space(g, sa);
  std::set<int> hit;
  Elem p = g.identity;
  for (int k = 0; k < 7; ++k) {
    hit.insert(ca.coset_of[p]);
    p = g.mul(p, b);
  }
  CHECK(hit.size() == 7);
}

TEST_CASE("automatic search finds the order-32 pair") {
  FiniteGroup g = build_semidirect_z8();
  auto pairs = gassmann_search(g, 4);
  CHECK(!pairs.empty());
  bool found = false;
  for (auto& [a, b] : pairs)
    if (a.order() == 4 && b.order() == 4) found = true;
  CHECK(found);
  for (auto& [a, b] : pairs) {
    CHECK(is_almost_conjugate(g, a, b));
    CHECK(!conjugating_element(g, a, b).has_value());
  }
}

TEST_CASE("explicit table constructor checks laws") {
  // Z/3
  std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup g = build_from_table(z3);
  CHECK(g.order == 3);
  CHECK(g.element_order(1) == 3);

  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 0, 0}, {2, 0, 1}};
  CHECK_THROWS_AS(build_from_table(bad), GroupError);
}
