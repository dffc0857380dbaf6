// Weight-system side: antisymmetric twist matrices, the framing condition
// (a chord crossing nothing and covering no dot kills the diagram), and the
// 4T obstruction report.  The 4T templates place two chords on six ordered
// slots; one endpoint of the "moving" chord hops across an endpoint of the
// "stationary" chord, giving plus/minus diagrams on each side of the
// relation.  Extra "spectator" chords may be inserted into the seven gaps
// between slots, identically in all four diagrams.  The report compares the
// twist data of left and right sides under the structural correspondence
// (moving to moving, stationary to stationary, spectators to themselves) and
// records whether sign flips of individual chord momenta would repair any
// mismatch.
#ifndef DOTCHORD_WEIGHTS_HPP
#define DOTCHORD_WEIGHTS_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dotchord/diagram.hpp"

namespace dotchord {

// Antisymmetric pair-by-pair matrix: +1 above the diagonal where the
// intersection graph has an edge, mirrored with -1 below.
struct TwistMatrix {
  std::vector<std::vector<int>> entries;
  int size() const { return static_cast<int>(entries.size()); }
  bool zero_row(int i) const;
};

TwistMatrix twist_matrix(const Diagram& d);

// Chord pair indices that cross no chord and cover no dot, found by direct
// endpoint scanning (independent of the twist matrix).
std::vector<int> isolated_chords(const Diagram& d);

// True when some chord's twist-matrix row vanishes: the framing condition
// then forces the diagram's weight to zero.
bool framing_killed(const Diagram& d);

struct FourTContext {
  // spectator chords as (gap, gap) pairs, gaps 0..6 between/around the six
  // template slots; both endpoints in the same gap give an isolated chord
  std::vector<std::pair<int, int>> spectators;
  int rhs = 2;  // compare the first difference against the 2nd or 3rd
};

// One concrete diagram of a 4T side plus the role of each of its pairs.
struct RoleDiagram {
  Diagram diagram;
  int moving_pair = -1;
  int stationary_pair = -1;
  std::vector<int> spectator_pairs;  // spectator i -> pair index

  std::string role_of(int pair_index) const;
  std::string label_of_role(const std::string& role) const;  // chord letter
};

struct FourTSides {
  RoleDiagram left_plus, left_minus, right_plus, right_minus;
  int marked_gap_left = 1;   // gap crossed by the hop; spectators must avoid it
  int marked_gap_right = 3;  // 3 for rhs=2, 5 for rhs=3
};

// Builds the four diagrams.  Throws DomainError when a spectator endpoint
// sits in a marked gap or a gap index is out of range.
FourTSides four_t_sides(const FourTContext& ctx);

// Twist matrices compared entry-by-entry under the role correspondence.
struct TransportComparison {
  bool strict = false;
  bool fixed_by_flips = false;          // repaired by negating some chords
  std::vector<std::string> flip_roles;  // minimal repairing flip set
  std::string mismatch;                 // first differing entry, empty if strict
  bool left_killed = false;             // framing kills the left diagram
  bool right_killed = false;
};

// Existence of ANY chord bijection plus sign flips matching the matrices,
// reported alongside the structural comparison.
struct SearchComparison {
  bool found = false;
  std::string description;
};

// Moving the leftmost chord's first endpoint to the far right end preserves
// all crossings and negates that chord's twist row and column.
struct LemmaMoveRecord {
  Diagram before, after;
  std::string moved_label_before, moved_label_after;
  bool crossings_preserved = false;
  bool needs_flip = false;  // the moved chord crosses at least one chord
  bool matches_after_flip = false;
};

LemmaMoveRecord lemma_move(const Diagram& d);  // chord-only, at least 1 chord

struct ObstructionReport {
  FourTContext context;
  FourTSides sides;
  TransportComparison plus_pair, minus_pair;
  SearchComparison plus_search, minus_search;
  LemmaMoveRecord lemma;  // applied to the left minus diagram
  bool match = false;     // strict (or framing-trivial) on both pairs
  bool trivial = false;   // a pair matched only because framing killed it
  std::string verdict;    // "MATCH", "MATCH-TRIVIAL" or "NO-MATCH"
  std::string witness;    // sign-flip witness when the minus pair disagrees

  std::string text() const;
  nlohmann::ordered_json to_json() const;
};

ObstructionReport four_t_obstruction(const FourTContext& ctx);

}  // namespace dotchord

#endif
