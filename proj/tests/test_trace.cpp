#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "sunada/trace.hpp"

using namespace sunada;

namespace {

Alphabet al = Alphabet::free2();
Word W(const std::string& s) { return parse_word(s, al); }
TracePoly T(const std::string& s) { return trace_polynomial(W(s)); }

struct Mat {
  double a, b, c, d;
  Mat operator*(const Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double tr() const { return a + d; }
  Mat inv() const { return {d, -b, -c, a}; }  // det = 1
};

Mat random_sl2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  double a = 0, b, c;
  while (std::fabs(a) < 0.2) a = u(rng);
  b = u(rng);
  c = u(rng);
  return {a, b, c, (1.0 + b * c) / a};
}

double word_trace(const Word& w, const Mat& A, const Mat& B) {
  Mat m{1, 0, 0, 1};
  for (LetterCode l : w.letters) {
    Mat g = letter_gen(l) == 0 ? A : B;
    if (letter_sign(l) < 0) g = g.inv();
    m = m * g;
  }
  return m.tr();
}

}  // namespace

TEST_CASE("base trace polynomials") {
  CHECK(T("a").str() == "x");
  CHECK(T("b").str() == "y");
  CHECK(T("a b").str() == "z");
  CHECK(T("a^2").str() == "x^2 - 2");
  CHECK(T("a b^-1").str() == "x*y - z");
  CHECK(T("a b a^-1 b^-1").str() == "x^2 - x*y*z + y^2 + z^2 - 2");

  // the defining relation tr(a) tr(b) = tr(ab) + tr(ab^-1)
  CHECK(T("a") * T("b") == T("a b") + T("a b^-1"));

  CHECK_THROWS_AS(trace_polynomial(parse_word("b1", Alphabet::surface(2))), TraceError);
}

TEST_CASE("cyclic, inversion, and conjugation invariance") {
  CHECK(T("a b") == T("b a"));
  CHECK(T("a^2 b") == T("b a^2"));
  CHECK(T("a b^-1") == T("b a^-1"));  // inverse word
  CHECK(T("a^-1") == T("a"));
  CHECK(T("b a^2 b^-1") == T("a^2"));
  CHECK(T("a b a b^-1") == T("b^-1 a b a"));
}

TEST_CASE("power traces") {
  TracePoly x = T("a");
  CHECK(power_trace(x, 1) == x);
  CHECK(power_trace(x, 2).str() == "x^2 - 2");
  CHECK(power_trace(x, 3).str() == "x^3 - 3*x");
  CHECK(power_trace(x, 3) == T("a^3"));
  CHECK(power_trace(T("a b"), 4) == T("a b a b a b a b"));
  CHECK_THROWS_AS(power_trace(x, 0), TraceError);

  // exhaustive consistency for short words and small powers
  std::vector<std::string> words = {"a", "a b", "a b^-1", "a^2 b", "a b a b^-1", "a^2 b^-2"};
  for (auto& s : words)
    for (int n = 1; n <= 5; ++n) CHECK(power_trace(T(s), n) == trace_polynomial(power(W(s), n)));
}

TEST_CASE("numerical soundness on random representations") {
  std::mt19937_64 rng(12345);
  std::vector<Word> words;
  for (const char* s : {"a", "b", "a b", "a b^-1", "a^2 b", "a b a^-1 b^-1",
                        "a^3 b^-2 a b", "a^2 b^2 a^-1 b^-1", "a b a b^-1 a^-1 b"})
    words.push_back(W(s));
  for (int trial = 0; trial < 200; ++trial) {
    Mat A = random_sl2(rng), B = random_sl2(rng), AB = A * B;
    for (const Word& w : words) {
      double want = word_trace(w, A, B);
      double got = trace_polynomial(w).evaluate(A.tr(), B.tr(), AB.tr());
      CHECK(std::fabs(want - got) <= 1e-9 * std::max(1.0, std::fabs(want)));
    }
  }
}

TEST_CASE("trace commensurability and twins") {
  // tr(U^-1) = tr(U)
  auto w = W("a^2 b^-1 a b");
  auto inv_w = inverse(w);
  auto wit = trace_commensurable(w, inv_w, 4);
  REQUIRE(wit.has_value());
  CHECK(wit->m == 1);
  CHECK(wit->n == 1);
  CHECK(!is_trace_twin_pair(w, inv_w, 4));  // powers are conjugate (equal classes)

  CHECK(!trace_commensurable(W("a"), W("b"), 8).has_value());

  // the two classical trace-twin pairs
  auto p1 = std::pair{W("a^2 b^-1 a b"), W("a^2 b a b^-1")};
  auto p2 = std::pair{W("a b^2 a^2 b"), W("a b a^2 b^2")};
  for (auto& [u, v] : {p1, p2}) {
    auto c = trace_commensurable(u, v, 6);
    REQUIRE(c.has_value());
    CHECK(c->m == 1);
    CHECK(c->n == 1);
    CHECK(trace_polynomial(u) * trace_polynomial(u) ==
          trace_polynomial(v) * trace_polynomial(v));
    CHECK(is_trace_twin_pair(u, v, 6));
  }

  // conjugates are never twins
  Word conj = concat(concat(W("b"), w), W("b^-1"));
  CHECK(trace_commensurable(w, conj, 4).has_value());
  CHECK(!is_trace_twin_pair(w, conj, 4));
}

TEST_CASE("two-generator powers have no trace twins") {
  // a^j b^k is commensurable with a short word only when powers are conjugate
  std::vector<Word> short_words;
  std::vector<Word> stack{Word{}};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    if (!cur.empty()) short_words.push_back(cur);
    if (cur.length() >= 5) continue;
    for (int l = 0; l < 4; ++l) {
      if (!cur.letters.empty() && cur.letters.back() == (l ^ 1)) continue;
      Word next = cur;
      next.letters.push_back(l);
      stack.push_back(next);
    }
  }
  for (int j : {-2, -1, 1, 2})
    for (int k : {-2, -1, 1, 2}) {
      Word ajbk = concat(power(W("a"), j), power(W("b"), k));
      for (const Word& u : short_words) {
        if (cyclic_reduce(u).length() != u.length()) continue;  // cyclically reduced only
        if (trace_commensurable(ajbk, u, 4).has_value())
          CHECK(!is_trace_twin_pair(ajbk, u, 4));
      }
    }
}

TEST_CASE("no-length-twins certificates") {
  Alphabet surf = Alphabet::surface(3);
  CHECK(no_length_twins_certificate(parse_word("a1^-2 a2", surf), 3).granted);
  CHECK(no_length_twins_certificate(parse_word("a1^2 a2^2", surf), 3).granted);
  CHECK(no_length_twins_certificate(parse_word("a1^5", surf), 3).granted);
  CHECK(no_length_twins_certificate(parse_word("a1^5", surf), 2).granted);

  TwinCertificate hyper = no_length_twins_certificate(parse_word("a1^2 a2^2", surf), 2);
  CHECK(!hyper.granted);
  CHECK(hyper.reason.find("hyperelliptic") != std::string::npos);

  // b-family and three-generator words are outside the certified families
  CHECK(!no_length_twins_certificate(parse_word("a1 b1", surf), 3).granted);
  CHECK(!no_length_twins_certificate(parse_word("a1 a2 a3", surf), 3).granted);
  CHECK(!no_length_twins_certificate(parse_word("a1 a2 a1 a2^-1", surf), 3).granted);
  CHECK(!no_length_twins_certificate(Word{}, 3).granted);
}
