// The alternating quasiplanar expansion of dot diagrams, its closed form,
// the extension to quasiplanar diagrams, the product defect, and the basis
// decomposition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dotchord/hopf_concat.hpp"
#include "dotchord/wick.hpp"

using namespace dotchord;

namespace {
Diagram d(const char* code) { return Diagram::parse(code); }
FormalSum one(const char* code) { return FormalSum(Diagram::parse(code)); }
}  // namespace

TEST_CASE("catalog bounds and contents") {
  CqCatalog& cat = CqCatalog::instance();
  CHECK(cat.max_degree() >= 10);  // default 12 unless the environment lowers it
  CHECK(cat.at(0).empty());
  CHECK(cat.at(3).empty());
  REQUIRE(cat.at(1).size() == 1);
  CHECK(cat.at(1)[0].code() == ".");
  CHECK(cat.at(6).size() == 4);
  CHECK_THROWS_AS(cat.at(cat.max_degree() + 1), DomainError);
  CHECK(cat.sum(2) == one("AA"));
  CHECK(cat.sum(3).is_zero());
}

TEST_CASE("small wick elements") {
  CHECK(wick(0) == FormalSum::unit());
  CHECK(wick(1) == one("."));
  CHECK(wick(2) == one("..") - one("AA"));
  CHECK(wick(3) == one("...") - one(".AA") - one("AA."));
}

TEST_CASE("golden wick element of four dots") {
  FormalSum expected = one("....") - one("..AA") - one(".AA.") - one("AA..") +
                       one("AABB") - one("ABAB");
  CHECK(wick(4) == expected);
  CHECK(wick(4).text() == ".... - ..AA - .AA. - AA.. + AABB - ABAB");
}

TEST_CASE("closed form agrees with the recursion") {
  for (int n = 0; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(wick_closed(n) == wick(n));
  }
}

TEST_CASE("term counts") {
  const std::size_t expected[] = {1, 1, 2, 3, 6, 10, 22, 39, 102, 190, 640};
  for (int n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(wick(n).term_count() == expected[n]);
  }
}

TEST_CASE("every term splits into admissible blocks with the sign law") {
  for (int n = 1; n <= 8; ++n) {
    const FormalSum element = wick(n);
    for (const auto& [term, coeff] : element.terms()) {
      CAPTURE(n);
      CAPTURE(term.code());
      const std::vector<Diagram> blocks = concat_blocks(term);
      int deep = 0;  // blocks of degree > 1
      for (const Diagram& b : blocks) {
        CHECK(!b.empty());
        CHECK(is_connected(b));
        CHECK(is_quasiplanar(b));
        if (b.degree() > 1) ++deep;
      }
      const int k = static_cast<int>(blocks.size());
      const Int sign = (deep % 2 == 0) ? 1 : -1;
      CHECK(coeff == sign);
      CHECK(coeff == Int(((n + k) % 2 == 0) ? 1 : -1));
    }
  }
}

TEST_CASE("linear extension kills chord-bearing diagrams") {
  CHECK(wick_of(Diagram()) == FormalSum::unit());
  CHECK(wick_of(d("...")) == wick(3));
  CHECK(wick_of(d("AA")).is_zero());
  CHECK(wick_of(d("A.A")).is_zero());
  const FormalSum s = one("..") + one("AA") - one("ABAB");
  CHECK(wick_of(s) == wick(2));
}

TEST_CASE("wick is a projection") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(wick_of(wick(n)) == wick(n));
  }
}

TEST_CASE("extension to quasiplanar diagrams") {
  // chords stay fixed, the expansion happens on the dots
  CHECK(wick_prime(d("ABAB")) == one("ABAB"));
  CHECK(wick_prime(Diagram()) == FormalSum::unit());
  CHECK(wick_prime(d("...")) == wick(3));
  CHECK(wick_prime(d(".AA.")) == one(".AA.") - one("ABBA"));
  CHECK_THROWS_AS(wick_prime(d("A.A")), DomainError);
  CHECK_THROWS_AS(wick_prime(d("AB.AB")), DomainError);
}

TEST_CASE("golden extension with two dots inside and one chord") {
  const FormalSum expected = one("...AA.") - one("..ABBA") - one(".AABB.") -
                             one("AA.BB.") + one("AABCCB") - one("ABACCB");
  CHECK(wick_prime(d("...AA.")) == expected);
}

TEST_CASE("product defect expansion") {
  CHECK(wick_product_expansion(1, 1) == one("AA"));
  CHECK(wick_product_expansion(2, 2) == one(".AA.") + one("ABAB"));
  CHECK(wick_product_expansion(2, 3) ==
        one(".AA..") - one(".AABB") + one(".ABAB") + one("ABAB."));
  // the defect formula is only stated for two nonempty factors
  CHECK_THROWS_AS(wick_product_expansion(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(wick_product_expansion(3, 0), std::invalid_argument);
}

TEST_CASE("product identity") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(mu(wick(n), wick(m)) ==
            wick(n + m) + wick_product_expansion(n, m));
    }
}

TEST_CASE("atom ordering and text") {
  const WickAtom bare{false, d("ABAB")};
  const WickAtom wrapped{true, d(".AA.")};
  CHECK(bare.text() == "ABAB");
  CHECK(wrapped.text() == "W(.AA.)");
  CHECK(wrapped < bare);  // wick atoms sort first
  CHECK(WickAtom{true, d(".")} < WickAtom{true, d(".AA.")});
  CHECK(bare == WickAtom{false, d("ABAB")});
  CHECK(!(bare == wrapped));
}

TEST_CASE("basis decomposition of chord-only and dot-only diagrams") {
  const auto chord = wick_basis_decompose(d("ABAB"));
  REQUIRE(chord.size() == 1);
  CHECK(chord.begin()->first == WickAtom{false, d("ABAB")});
  CHECK(chord.begin()->second == 1);

  const auto dot = wick_basis_decompose(d("."));
  REQUIRE(dot.size() == 1);
  CHECK(dot.begin()->first == WickAtom{true, d(".")});

  const auto empty = wick_basis_decompose(Diagram());
  REQUIRE(empty.size() == 1);
  CHECK(empty.begin()->first == WickAtom{false, Diagram()});
  CHECK_THROWS_AS(wick_basis_decompose(d("A.A")), DomainError);
}

TEST_CASE("golden decomposition") {
  const auto dec = wick_basis_decompose(d("...AA."));
  CHECK(decomposition_text(dec) ==
        "W(...AA.) + W(..ABBA) + W(.AABB.) + W(AA.BB.) + AABCCB + ABACCB + "
        "ABBCCA");
  CHECK(decomposition_text(wick_basis_decompose(d(".AA."))) ==
        "W(.AA.) + ABBA");
  CHECK(decomposition_text(wick_basis_decompose(Diagram())) == "1");
  CHECK(decomposition_text({}) == "0");
}

TEST_CASE("decomposition json") {
  const nlohmann::ordered_json j =
      decomposition_json(wick_basis_decompose(d(".AA.")));
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["coeff"] == "1");
  CHECK(j["terms"][0]["kind"] == "wick");
  CHECK(j["terms"][0]["diagram"] == ".AA.");
  CHECK(j["terms"][1]["kind"] == "diagram");
  CHECK(j["terms"][1]["diagram"] == "ABBA");
}

TEST_CASE("reexpansion inverts the decomposition") {
  for (const char* code :
       {"", ".", "..", ".AA.", "ABAB", "...AA.", ".AA.BB.", "ABAB..",
        "ABBA", ".ABBA."}) {
    CAPTURE(code);
    CHECK(reexpand(wick_basis_decompose(d(code))) == one(code));
  }
}
