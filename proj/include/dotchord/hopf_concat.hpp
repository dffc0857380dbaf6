// Hopf algebra structure on all dotted diagrams: concatenation product,
// subset coproduct (sum over re-embedded pair subsets tensored with their
// complements), counit onto the empty diagram, and the inductively defined
// antipode.  The coproduct is cocommutative, so the antipode is an involution
// and an antihomomorphism.
#ifndef DOTCHORD_HOPF_CONCAT_HPP
#define DOTCHORD_HOPF_CONCAT_HPP

#include "dotchord/diagram.hpp"
#include "dotchord/formal_sum.hpp"

namespace dotchord {

// Bilinear concatenation product.
FormalSum mu(const FormalSum& a, const FormalSum& b);

// Subset coproduct of a single diagram (2^pairs terms before collection).
TensorSum delta(const Diagram& d);
TensorSum delta(const FormalSum& s);

// Coefficient of the empty diagram.
Int counit(const Diagram& d);
Int counit(const FormalSum& s);

// Antipode, computed by the recursion forced by mu . (S (x) id) . delta =
// unit . counit, memoized per canonical code.
FormalSum antipode(const Diagram& d);
FormalSum antipode(const FormalSum& s);

}  // namespace dotchord

#endif
