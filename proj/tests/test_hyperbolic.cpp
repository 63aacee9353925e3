#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "sunada/hyperbolic.hpp"
#include "sunada/ribbon.hpp"
#include "sunada/trace.hpp"

using namespace sunada;

namespace {

Alphabet al = Alphabet::free2();
Word W(const std::string& s) { return parse_word(s, al); }

int rose_count(const std::string& s) {
  RibbonGraph g = rose(2, RibbonConvention::torus);
  return self_intersection(g, rose_path(cyclic_reduce(W(s)))).count;
}

}  // namespace

TEST_CASE("standard representation basics") {
  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  CHECK(rep.discrete_certified);
  CHECK(rep.x == doctest::Approx(3));
  CHECK(rep.y == doctest::Approx(3));
  CHECK(rep.z == doctest::Approx(3));
  CHECK(rep.evaluate(W("a b a^-1 b^-1")).trace() == doctest::Approx(-2));

  CHECK(length_of(rep, W("a")) == doctest::Approx(2 * std::acosh(1.5)).epsilon(1e-12));
  CHECK_THROWS_AS(length_of(rep, W("a b a^-1 b^-1")), NonHyperbolic);
  CHECK_THROWS_AS(length_of(rep, Word{}), NonHyperbolic);
}

TEST_CASE("traces match the trace polynomials") {
  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  for (const char* s : {"a", "b", "a b", "a b^-1", "a^2 b", "a b a b^-1", "a^3 b^-2 a b",
                        "a^2 b^2 a^-1 b^-1"}) {
    double want = trace_polynomial(W(s)).evaluate(3, 3, 3);
    CHECK(rep.evaluate(W(s)).trace() == doctest::Approx(want).epsilon(1e-9));
  }

  PuncturedTorusRep other = PuncturedTorusRep::from_traces(3.5, 4.0, 5.25);
  CHECK(other.discrete_certified);
  CHECK(other.evaluate(W("a")).trace() == doctest::Approx(3.5).epsilon(1e-9));
  CHECK(other.evaluate(W("b")).trace() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(other.evaluate(W("a b")).trace() == doctest::Approx(5.25).epsilon(1e-9));
  for (const char* s : {"a^2 b", "a b a b^-1", "a^2 b^-1 a b"}) {
    double want = trace_polynomial(W(s)).evaluate(3.5, 4.0, 5.25);
    CHECK(other.evaluate(W(s)).trace() == doctest::Approx(want).epsilon(1e-9));
  }

  CHECK(!PuncturedTorusRep::from_traces(2.5, 2.5, 3).discrete_certified);
  CHECK_THROWS_AS(PuncturedTorusRep::from_traces(3, 3, 1), HyperbolicError);
}

TEST_CASE("length is a class function and multiplicative on powers") {
  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  for (const char* s : {"a", "a b", "a^2 b", "a b a b^-1"}) {
    Word w = W(s);
    double l = length_of(rep, w);
    CHECK(length_of(rep, inverse(w)) == doctest::Approx(l).epsilon(1e-9));
    Word conj = concat(concat(W("b a^-1"), w), inverse(W("b a^-1")));
    CHECK(length_of(rep, conj) == doctest::Approx(l).epsilon(1e-9));
    for (int n = 2; n <= 6; ++n)
      CHECK(length_of(rep, power(w, n)) == doctest::Approx(n * l).epsilon(1e-9));
  }
}

TEST_CASE("axes") {
  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  Axis axa = axis_of(rep.evaluate(W("a")));
  Axis axa2 = axis_of(rep.evaluate(W("a^2")));
  Axis axb = axis_of(rep.evaluate(W("b")));
  CHECK(same_axis(axa, axa2));
  CHECK(!axes_cross(axa, axa2));
  CHECK(!same_axis(axa, axb));
  CHECK(axes_cross(axa, axb));  // the loops meet once at the wedge point

  // a map fixing infinity still yields a usable axis
  MoebiusMap up{2, 1, 0, 0.5};
  Axis ax = axis_of(up);
  CHECK((!std::isfinite(ax.p) || !std::isfinite(ax.q)));
  double margin = 0;
  CHECK(axes_cross(ax, Axis{-10, 5}, &margin));
  CHECK(margin > 0);
}

TEST_CASE("oracle agrees with the combinatorial count on the rose") {
  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  for (const char* s : {"a", "b", "a b", "a b^-1", "a^2 b", "a^2 b^-1", "a^2 b^2",
                        "a b a b^-1", "a^2 b^-1 a b", "a^3 b", "a^2 b a b^-1"}) {
    OracleResult r = self_intersection_oracle(rep, W(s), nullptr, 10);
    INFO("word ", std::string(s));
    CHECK(r.count == rose_count(s));
    CHECK(!r.precision_warning);
  }
}

TEST_CASE("elevation oracle on the seven-coset cover") {
  FiniteGroup g = build_sl(3, 2);
  Elem a1 = element_from_matrix(g, {{0, 1, 1}, {0, 1, 0}, {1, 0, 0}});
  Elem a2 = element_from_matrix(g, {{1, 0, 0}, {0, 0, 1}, {0, 1, 1}});
  SurfacePresentation pres = SurfacePresentation::standard(3);
  Elem id = g.identity;
  FiniteQuotient q = make_quotient(pres, g, {a1, a2, id, id, id, id});

  std::vector<Elem> agens, bgens;
  for (Elem e = 0; e < g.order; ++e) {
    auto m = matrix_of(g, e);
    if (m[1][0] == 0 && m[2][0] == 0) agens.push_back(e);
    if (m[0][1] == 0 && m[0][2] == 0) bgens.push_back(e);
  }
  Subgroup A = subgroup_from_generators(g, agens);
  Subgroup B = subgroup_from_generators(g, bgens);

  CyclicWord w = cyclic_reduce(parse_word("a1^2 a2^2", pres.alphabet));
  PuncturedTorusRep rep = PuncturedTorusRep::standard();

  // the oracle's geometry is the punctured torus, so the matching
  // combinatorial count is the torus-convention thickening of the cover
  for (const Subgroup& h : {A, B}) {
    SchreierCover cover = build_cover(q, h, RibbonConvention::torus);
    for (const Elevation& e : elevations_of(cover, w)) {
      if (e.degree != 1) continue;
      CHECK(elevation_length_check(rep, e) <= 1e-9);
      OracleResult r = elevation_self_intersection_oracle(rep, cover, e, 10);
      INFO("subgroup order ", h.order(), " coset ", e.start_coset);
      CHECK(r.count == self_intersection_of_elevation(cover, e).count);
    }
  }
}
