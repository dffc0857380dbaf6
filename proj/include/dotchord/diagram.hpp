// Dotted chord diagrams on a directed arc.
//
// A diagram of degree m places pairs on m arc positions: a pair of equal
// positions is a dot, a pair of distinct positions a chord.  The canonical
// text code writes '.' for a dot and one uppercase letter (or "[k]" beyond
// 26 chords) twice for each chord, letters assigned in order of first
// appearance: "A.A." is a chord over positions 1,3 with dots at 2 and 4.
#ifndef DOTCHORD_DIAGRAM_HPP
#define DOTCHORD_DIAGRAM_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dotchord {

// Malformed diagram code or other unreadable input (CLI exit 2).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's domain (CLI exit 3).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class Diagram {
 public:
  // The empty diagram (unit of concatenation).
  Diagram() = default;

  // Reads a code string.  Non-dot tokens may be arbitrary uppercase letters
  // or bracketed indices, but each must occur exactly twice; the result is
  // renamed to canonical form.  Throws ParseError.
  static Diagram parse(std::string_view code);

  // Builds a diagram from a 0-based involution: pairing[i] == i marks a dot,
  // pairing[i] == j a chord between i and j.  Throws std::invalid_argument.
  static Diagram from_pairing(std::vector<int> pairing);

  // A diagram with n dots and no chords.
  static Diagram dots(int n);

  const std::string& code() const { return code_; }
  int degree() const { return static_cast<int>(pairing_.size()); }
  bool empty() const { return pairing_.empty(); }
  const std::vector<int>& pairing() const { return pairing_; }

  // Pairs in label order (by first position); a dot has first == second.
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }
  int chord_count() const { return chords_; }
  int dot_count() const { return pair_count() - chords_; }
  bool has_chord() const { return chords_ > 0; }

  // Positions of the dots, in arc order.
  std::vector<int> dot_positions() const;

  // Sub-diagram induced by the pairs selected in `pair_mask` (bit i = pair i
  // in label order), re-embedded on its own arc.
  Diagram subdiagram(std::uint64_t pair_mask) const;

  friend Diagram concat(const Diagram& a, const Diagram& b);

  bool operator==(const Diagram& o) const { return code_ == o.code_; }
  // Graded-lexicographic order on canonical codes.
  std::strong_ordering operator<=>(const Diagram& o) const {
    if (auto c = degree() <=> o.degree(); c != 0) return c;
    return code_ <=> o.code_;
  }

 private:
  void rebuild();  // derives pairs_, chords_, code_ from pairing_

  std::vector<int> pairing_;
  std::vector<std::pair<int, int>> pairs_;
  int chords_ = 0;
  std::string code_;
};

// Arc concatenation of two diagrams.
Diagram concat(const Diagram& a, const Diagram& b);

// No two chords are nested: non-crossing chords occupy disjoint intervals.
bool is_regular(const Diagram& d);

// No dot lies strictly under a chord.
bool is_quasiplanar(const Diagram& d);

// The labelled intersection graph is connected (true for the empty diagram).
bool is_connected(const Diagram& d);

// Labelled intersection graph: one vertex per pair in label order, white for
// chords and black for dots; white-white edges are chord crossings,
// black-white edges mark a dot strictly under a chord.
struct IntersectionGraph {
  enum class Color { white, black };
  std::vector<Color> colors;
  std::vector<std::vector<int>> adjacency;  // symmetric 0/1, zero diagonal

  int size() const { return static_cast<int>(colors.size()); }
  std::vector<std::pair<int, int>> edges() const;  // (s,t) with s<t, sorted
  bool connected() const;
};

IntersectionGraph intersection_graph(const Diagram& d);

// Graphviz export: white vertices hollow, black vertices filled.
void write_dot(std::ostream& out, const IntersectionGraph& g);

// Finest split of d into concatenation blocks (cut wherever no pair
// straddles the boundary).  Defined for every diagram; the empty diagram
// yields no blocks.
std::vector<Diagram> concat_blocks(const Diagram& d);

// Unique factorization of a regular diagram into nontrivial connected
// diagrams under concatenation.  Throws DomainError when d is not regular.
std::vector<Diagram> concat_factorize(const Diagram& d);

// One entry per arc position: chord endpoints carry +k_i / -k_i (chords
// numbered by first endpoint), dots carry a fresh symbol u_j.
struct MomentumEntry {
  bool is_free = false;  // true for a dot's integration symbol
  int index = 0;         // 1-based chord or dot number
  int sign = 1;          // -1 at a chord's second endpoint
};

std::vector<MomentumEntry> momentum_signature(const Diagram& d);
std::string momentum_entry_text(const MomentumEntry& e);  // "k1", "-k1", "u1"

enum class DiagramFilter { all, regular, quasiplanar, connected, cq };

// All diagrams of degree m (all involutions of m points), canonical codes in
// lexicographic order.  `cq` keeps the nontrivial connected quasiplanar ones.
std::vector<Diagram> enumerate_diagrams(int m,
                                        DiagramFilter filter = DiagramFilter::all);

// ASCII arc picture used by the CLI's --pretty flag.
std::string ascii_art(const Diagram& d);

}  // namespace dotchord

#endif
