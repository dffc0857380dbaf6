// Second Hopf structure: diagrams that factor uniquely into nontrivial
// connected concatenation blocks form a free word algebra on those blocks.
// The product shuffles the two block sequences, the coproduct splits the
// sequence, and the antipode reverses it with sign (-1)^length.  Convolution
// of linear maps against this splitting recovers the wick elements.
#ifndef DOTCHORD_HOPF_SHUFFLE_HPP
#define DOTCHORD_HOPF_SHUFFLE_HPP

#include <functional>
#include <vector>

#include "dotchord/diagram.hpp"
#include "dotchord/formal_sum.hpp"

namespace dotchord {

// Minimal concatenation blocks when every block is connected (the unique
// factorization into nontrivial connected diagrams); DomainError otherwise.
std::vector<Diagram> factor_sequence(const Diagram& d);
bool has_factor_sequence(const Diagram& d);

// Sum over all interleavings of the two block sequences.
FormalSum shuffle(const Diagram& a, const Diagram& b);
FormalSum shuffle(const FormalSum& a, const FormalSum& b);

// Sum of prefix (x) suffix over the n+1 cuts of the block sequence.
TensorSum deconcat(const Diagram& d);
TensorSum deconcat(const FormalSum& s);

// (-1)^n times the reversed block sequence.
FormalSum shuffle_antipode(const Diagram& d);
FormalSum shuffle_antipode(const FormalSum& s);

// Alternating sum over factorizations of the n-dot diagram into connected
// chord-only blocks, (-1)^K per K-block term; zero on chord-bearing
// diagrams and for odd n.
FormalSum h_map(const Diagram& d);

using LinearMap = std::function<FormalSum(const Diagram&)>;

// (f * g)(d) = shuffle-multiply f and g applied to the two halves of every
// deconcatenation split, summed.
FormalSum convolve(const LinearMap& f, const LinearMap& g, const Diagram& d);

struct ConvolutionStep {
  int split = 0;  // number of leading blocks kept on the left
  Diagram left, right;
  FormalSum contribution;
};

// Same value as convolve, one record per split in order.
std::vector<ConvolutionStep> convolve_trace(const LinearMap& f, const LinearMap& g,
                                            const Diagram& d);

}  // namespace dotchord

#endif
