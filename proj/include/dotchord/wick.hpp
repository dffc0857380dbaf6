// The map sending the n-dot diagram to its alternating sum over
// concatenations of nontrivial connected quasiplanar blocks, its linear
// extension (zero on chord-bearing diagrams), the further extension to all
// quasiplanar diagrams by re-embedding on dot positions, and the resulting
// basis decomposition of quasiplanar diagrams.
#ifndef DOTCHORD_WICK_HPP
#define DOTCHORD_WICK_HPP

#include <map>
#include <vector>

#include "dotchord/diagram.hpp"
#include "dotchord/formal_sum.hpp"

namespace dotchord {

// Degree-indexed catalog of nontrivial connected quasiplanar diagrams.
// Enumeration cost grows like (2k-1)!!, so degrees are capped; the cap can
// be raised with the DOTCHORD_MAX_DEGREE environment variable (default 12).
class CqCatalog {
 public:
  static CqCatalog& instance();
  int max_degree() const { return max_degree_; }
  // Throws DomainError above the cap.
  const std::vector<Diagram>& at(int m);
  FormalSum sum(int m);  // the catalog entries of degree m as a formal sum

 private:
  CqCatalog();
  int max_degree_;
  std::map<int, std::vector<Diagram>> cache_;
};

// Image of the n-dot diagram, by the recursion
//   wick(n) = sum_{m=1..n} (-1)^(m+1) * cq_sum(m) . wick(n-m),  wick(0) = 1.
FormalSum wick(int n);

// Same element by the closed form: over all compositions of n into block
// sizes with nonempty catalog entries, (-1)^(n+K) times every product of K
// catalog diagrams.  Equals wick(n); kept separate as a cross-check.
FormalSum wick_closed(int n);

// Linear extension: zero on chord-bearing diagrams, wick(n) on n dots.
FormalSum wick_of(const Diagram& d);
FormalSum wick_of(const FormalSum& s);

// Extension to quasiplanar diagrams: re-embeds wick(dot count) onto the dot
// positions while keeping all chords.  Throws DomainError when d has a dot
// strictly under a chord.
FormalSum wick_prime(const Diagram& d);

// Defect of multiplicativity: wick(n) . wick(m) - wick(n+m), given by the
// compositions of n+m having no prefix sum equal to n, with sign
// (-1)^(n+m+K+1).
FormalSum wick_product_expansion(int n, int m);

// Basis element marker: either the image wick_prime(diagram) of a dotted
// quasiplanar diagram ("W(code)") or a bare chord-only diagram.
struct WickAtom {
  bool wick = false;
  Diagram diagram;

  std::string text() const;
  bool operator==(const WickAtom& o) const {
    return wick == o.wick && diagram == o.diagram;
  }
  bool operator<(const WickAtom& o) const {  // wick atoms sort first
    if (wick != o.wick) return wick;
    return diagram < o.diagram;
  }
};

// Expresses a quasiplanar diagram over the basis of wick images of dotted
// quasiplanar diagrams and bare chord-only diagrams.  Throws DomainError on
// non-quasiplanar input.
std::map<WickAtom, Int> wick_basis_decompose(const Diagram& d);

// Substitutes every atom back (wick atoms via wick_prime); inverse check
// for wick_basis_decompose.
FormalSum reexpand(const std::map<WickAtom, Int>& decomposition);

std::string decomposition_text(const std::map<WickAtom, Int>& decomposition);
nlohmann::ordered_json decomposition_json(const std::map<WickAtom, Int>& d);

}  // namespace dotchord

#endif
