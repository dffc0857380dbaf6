// Concatenation Hopf structure: product, subset coproduct, counit, antipode.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dotchord/hopf_concat.hpp"

using namespace dotchord;

namespace {
Diagram d(const char* code) { return Diagram::parse(code); }
FormalSum one(const char* code) { return FormalSum(Diagram::parse(code)); }
}  // namespace

TEST_CASE("product is bilinear concatenation") {
  CHECK(mu(one("A.A"), one(".")) == one("A.A."));
  CHECK(mu(FormalSum::unit(), one("AA")) == one("AA"));
  const FormalSum s = one("..") - one("AA");
  CHECK(mu(s, one(".")) == one("...") - one("AA."));
  CHECK(mu(s, s) ==
        one("....") - one("..AA") - one("AA..") + one("AABB"));
  CHECK(mu(s, FormalSum()).is_zero());
}

TEST_CASE("coproduct sums over re-embedded pair subsets") {
  const TensorSum t = delta(d("AA"));
  CHECK(t.term_count() == 2);
  CHECK(t.coefficient(Diagram(), d("AA")) == 1);
  CHECK(t.coefficient(d("AA"), Diagram()) == 1);

  const TensorSum dots2 = delta(d(".."));
  CHECK(dots2.term_count() == 3);
  CHECK(dots2.coefficient(Diagram(), d("..")) == 1);
  CHECK(dots2.coefficient(d("."), d(".")) == 2);
  CHECK(dots2.coefficient(d(".."), Diagram()) == 1);

  // subsets forget the embedding: both sides are re-canonicalized
  const TensorSum mixed = delta(d("A.A"));
  CHECK(mixed.term_count() == 4);
  CHECK(mixed.coefficient(d("AA"), d(".")) == 1);
  CHECK(mixed.coefficient(d("."), d("AA")) == 1);
  CHECK(mixed.coefficient(Diagram(), d("A.A")) == 1);
  CHECK(mixed.coefficient(d("A.A"), Diagram()) == 1);

  CHECK(delta(Diagram()).coefficient(Diagram(), Diagram()) == 1);
}

TEST_CASE("coproduct of a sum is linear") {
  const FormalSum s = one(".") - one("AA");
  CHECK(delta(s) == delta(d(".")) - delta(d("AA")));
}

TEST_CASE("coproduct is cocommutative") {
  for (const char* code : {"", ".", "AA", "A.A", "ABAB", "A.A.", "ABBA"}) {
    CAPTURE(code);
    const TensorSum t = delta(d(code));
    CHECK(t.flip() == t);
  }
}

TEST_CASE("counit picks the empty component") {
  CHECK(counit(Diagram()) == 1);
  CHECK(counit(d(".")) == 0);
  CHECK(counit(d("ABAB")) == 0);
  CHECK(counit(Int(-7) * FormalSum::unit()) == -7);
  CHECK(counit(one("AA") - one("..")) == 0);
}

TEST_CASE("antipode base cases") {
  CHECK(antipode(Diagram()) == FormalSum::unit());
  CHECK(antipode(d(".")) == -one("."));
  CHECK(antipode(d("AA")) == -one("AA"));
  CHECK(antipode(d("..")) == one(".."));
  CHECK(antipode(d("A.A")) == -one("A.A") + one("AA.") + one(".AA"));
}

TEST_CASE("antipode of a chord over two dots") {
  // S(A.A.) worked out by hand from the recursion
  CHECK(antipode(d("A.A.")) == one(".A.A") - one(".AA.") - one("..AA"));
}

TEST_CASE("antipode axiom on both sides") {
  for (const char* code : {".", "AA", "A.A", "A.A.", "ABAB", "AB.BA."}) {
    CAPTURE(code);
    const Diagram x = d(code);
    const FormalSum left = delta(x).collapse(
        [](const Diagram& a, const Diagram& b) {
          return mu(antipode(a), FormalSum(b));
        });
    const FormalSum right = delta(x).collapse(
        [](const Diagram& a, const Diagram& b) {
          return mu(FormalSum(a), antipode(b));
        });
    // counit vanishes on every nonempty diagram, so both sides are zero
    CHECK(left.is_zero());
    CHECK(right.is_zero());
  }
}

TEST_CASE("antipode is an involution") {
  for (const char* code : {"", ".", "AA", "A.A.", "ABAB", "ABBA", "AB.BA"}) {
    CAPTURE(code);
    CHECK(antipode(antipode(d(code))) == FormalSum(d(code)));
  }
}

TEST_CASE("antipode reverses products") {
  const Diagram a = d("A.A"), b = d("AA.");
  CHECK(antipode(concat(a, b)) == mu(antipode(b), antipode(a)));
  CHECK(antipode(concat(b, a)) == mu(antipode(a), antipode(b)));
}

TEST_CASE("antipode extends linearly") {
  const FormalSum s = one(".") - one("A.A");
  CHECK(antipode(s) == antipode(d(".")) - antipode(d("A.A")));
}

TEST_CASE("coproduct respects the product") {
  // delta(a.b) = delta(a) delta(b) componentwise
  const Diagram a = d("A.A"), b = d("AA");
  const TensorSum left = delta(concat(a, b));
  const TensorSum da = delta(a), db = delta(b);
  TensorSum right;
  for (const auto& [ta, ca] : da.terms())
    for (const auto& [tb, cb] : db.terms())
      right.add_term(concat(ta.first, tb.first), concat(ta.second, tb.second),
                     ca * cb);
  CHECK(left == right);
}
