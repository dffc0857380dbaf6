// Exhaustive small-degree verification of the algebraic identities the
// library claims: Hopf axioms for both structures, idempotence of the wick
// projection, the convolution identity, the product defect formula, and the
// per-term sign law.
#ifndef DOTCHORD_IDENTITIES_HPP
#define DOTCHORD_IDENTITIES_HPP

#include <string>
#include <vector>

namespace dotchord {

struct VerifyResult {
  std::string identity;
  int max_degree = 0;
  long checks = 0;                  // individual equalities tested
  std::vector<std::string> notes;   // e.g. witnesses that are expected to exist
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// Concatenation Hopf structure on all diagrams: coassociativity, counit,
// cocommutativity, antipode axiom, involutivity and antihomomorphy of the
// antipode, multiplicativity of the coproduct.
VerifyResult verify_hopf_concat(int max_degree);

// Shuffle/deconcatenation structure on regular quasiplanar diagrams, plus
// the expected non-cocommutativity witness.
VerifyResult verify_hopf_shuffle(int max_degree);

// wick_of . wick_of = wick_of on dot diagrams; zero on chord-bearing ones.
VerifyResult verify_projection(int max_degree);

// wick(n) equals the convolution of the identity with the alternating
// connected-chord-block map under deconcatenation/shuffle.
VerifyResult verify_convolution(int max_degree);

// wick(n) . wick(m) = wick(n+m) + the no-split composition expansion.
VerifyResult verify_product(int max_degree);

// Closed form agrees with the recursion, every wick term splits into
// nontrivial connected quasiplanar blocks, and its coefficient is
// (-1)^(blocks of degree > 1) = (-1)^(n + block count).
VerifyResult verify_signs(int max_degree);

struct IdentitySpec {
  std::string name;
  int default_max_degree;
  VerifyResult (*run)(int max_degree);
};

const std::vector<IdentitySpec>& identity_registry();

}  // namespace dotchord

#endif
