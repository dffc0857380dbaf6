#include "dotchord/weights.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace dotchord {

namespace {

std::string chord_letter(int pair_index) {
  if (pair_index < 26) return std::string(1, static_cast<char>('A' + pair_index));
  return "[" + std::to_string(pair_index + 1) + "]";
}

}  // namespace

bool TwistMatrix::zero_row(int i) const {
  for (int v : entries[i])
    if (v != 0) return false;
  return true;
}

TwistMatrix twist_matrix(const Diagram& d) {
  const IntersectionGraph g = intersection_graph(d);
  TwistMatrix t;
  t.entries.assign(g.size(), std::vector<int>(g.size(), 0));
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.adjacency[i][j]) {
        t.entries[i][j] = 1;
        t.entries[j][i] = -1;
      }
  return t;
}

std::vector<int> isolated_chords(const Diagram& d) {
  std::vector<int> out;
  const auto& ps = d.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto [a, b] = ps[i];
    if (a == b) continue;
    bool isolated = true;
    for (std::size_t j = 0; j < ps.size() && isolated; ++j) {
      if (j == i) continue;
      const auto [c, e] = ps[j];
      if (c == e) {
        if (a < c && c < b) isolated = false;  // covered dot
      } else {
        const bool c_in = a < c && c < b, e_in = a < e && e < b;
        if (c_in != e_in) isolated = false;  // crossing chord
      }
    }
    if (isolated) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool framing_killed(const Diagram& d) {
  const TwistMatrix t = twist_matrix(d);
  const auto& ps = d.pairs();
  for (int i = 0; i < t.size(); ++i)
    if (ps[i].first != ps[i].second && t.zero_row(i)) return true;
  return false;
}

namespace {

struct SlotChords {
  std::pair<int, int> moving, stationary;  // slot numbers 1..6
};

// the six template diagrams: three hops, each giving a plus and a minus
SlotChords template_diagram(bool left_side, int rhs, bool plus) {
  if (left_side) return plus ? SlotChords{{1, 6}, {2, 4}} : SlotChords{{2, 6}, {1, 4}};
  if (rhs == 2) return plus ? SlotChords{{1, 3}, {4, 6}} : SlotChords{{1, 4}, {3, 6}};
  return plus ? SlotChords{{1, 6}, {3, 5}} : SlotChords{{1, 5}, {3, 6}};
}

int find_pair_index(const Diagram& d, int a, int b) {
  const auto& ps = d.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i].first == std::min(a, b) && ps[i].second == std::max(a, b))
      return static_cast<int>(i);
  throw std::logic_error("pair not found in built diagram");
}

RoleDiagram build_role_diagram(const SlotChords& chords,
                               const std::vector<std::pair<int, int>>& spectators) {
  struct Event {
    std::array<int, 3> key;
    int endpoint;  // 0,1 moving; 2,3 stationary; 4+2s,5+2s spectator s
  };
  std::vector<Event> events;
  events.push_back({{2 * chords.moving.first, -1, 0}, 0});
  events.push_back({{2 * chords.moving.second, -1, 0}, 1});
  events.push_back({{2 * chords.stationary.first, -1, 0}, 2});
  events.push_back({{2 * chords.stationary.second, -1, 0}, 3});
  for (std::size_t s = 0; s < spectators.size(); ++s) {
    const auto [a, b] = spectators[s];
    events.push_back({{2 * a + 1, static_cast<int>(s), 0}, 4 + 2 * static_cast<int>(s)});
    events.push_back({{2 * b + 1, static_cast<int>(s), 1}, 5 + 2 * static_cast<int>(s)});
  }
  std::sort(events.begin(), events.end(),
            [](const Event& x, const Event& y) { return x.key < y.key; });
  std::vector<int> position(events.size());
  for (std::size_t i = 0; i < events.size(); ++i)
    position[events[i].endpoint] = static_cast<int>(i);
  std::vector<int> pairing(events.size());
  auto link = [&](int e1, int e2) {
    pairing[position[e1]] = position[e2];
    pairing[position[e2]] = position[e1];
  };
  link(0, 1);
  link(2, 3);
  for (std::size_t s = 0; s < spectators.size(); ++s)
    link(4 + 2 * static_cast<int>(s), 5 + 2 * static_cast<int>(s));
  RoleDiagram out;
  out.diagram = Diagram::from_pairing(std::move(pairing));
  out.moving_pair = find_pair_index(out.diagram, position[0], position[1]);
  out.stationary_pair = find_pair_index(out.diagram, position[2], position[3]);
  for (std::size_t s = 0; s < spectators.size(); ++s)
    out.spectator_pairs.push_back(
        find_pair_index(out.diagram, position[4 + 2 * s], position[5 + 2 * s]));
  return out;
}

std::vector<int> role_pairs(const RoleDiagram& r) {
  std::vector<int> out{r.moving_pair, r.stationary_pair};
  out.insert(out.end(), r.spectator_pairs.begin(), r.spectator_pairs.end());
  return out;
}

std::string role_name(int role) {
  if (role == 0) return "moving";
  if (role == 1) return "stationary";
  return "spectator" + std::to_string(role - 1);
}

TransportComparison compare_transport(const RoleDiagram& left,
                                      const RoleDiagram& right) {
  TransportComparison cmp;
  const std::vector<int> pl = role_pairs(left), pr = role_pairs(right);
  const TwistMatrix ml = twist_matrix(left.diagram), mr = twist_matrix(right.diagram);
  const int n = static_cast<int>(pl.size());
  cmp.strict = true;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int vl = ml.entries[pl[r]][pl[c]], vr = mr.entries[pr[r]][pr[c]];
      if (vl != vr) {
        if (cmp.strict) {
          std::ostringstream ms;
          ms << "(" << role_name(r) << "," << role_name(c) << "): "
             << (vl > 0 ? "+" : "") << vl << " vs " << (vr > 0 ? "+" : "") << vr;
          cmp.mismatch = ms.str();
        }
        cmp.strict = false;
      }
    }
  if (!cmp.strict) {
    // smallest set of chord sign flips that repairs the transport
    for (int target = 1; target <= n && !cmp.fixed_by_flips; ++target) {
      for (int subset = 1; subset < (1 << n); ++subset) {
        if (__builtin_popcount(subset) != target) continue;
        bool ok = true;
        for (int r = 0; r < n && ok; ++r)
          for (int c = 0; c < n && ok; ++c) {
            const int sr = (subset >> r & 1) ? -1 : 1, sc = (subset >> c & 1) ? -1 : 1;
            if (ml.entries[pl[r]][pl[c]] != sr * sc * mr.entries[pr[r]][pr[c]])
              ok = false;
          }
        if (ok) {
          cmp.fixed_by_flips = true;
          for (int r = 0; r < n; ++r)
            if (subset >> r & 1) cmp.flip_roles.push_back(role_name(r));
          break;
        }
      }
    }
  }
  cmp.left_killed = framing_killed(left.diagram);
  cmp.right_killed = framing_killed(right.diagram);
  return cmp;
}

SearchComparison charitable_search(const Diagram& left, const Diagram& right) {
  SearchComparison out;
  const int n = left.pair_count();
  if (n != right.pair_count()) {
    out.description = "pair counts differ";
    return out;
  }
  const TwistMatrix ml = twist_matrix(left), mr = twist_matrix(right);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int subset = 0; subset < (1 << n); ++subset) {
      bool ok = true;
      for (int r = 0; r < n && ok; ++r)
        for (int c = 0; c < n && ok; ++c) {
          const int sr = (subset >> r & 1) ? -1 : 1, sc = (subset >> c & 1) ? -1 : 1;
          if (ml.entries[r][c] != sr * sc * mr.entries[perm[r]][perm[c]]) ok = false;
        }
      if (ok) {
        out.found = true;
        std::ostringstream ds;
        bool identity = true;
        for (int i = 0; i < n; ++i) identity = identity && perm[i] == i;
        if (identity)
          ds << "identity pairing";
        else {
          ds << "pairing ";
          for (int i = 0; i < n; ++i)
            ds << (i ? "," : "") << chord_letter(i) << "->" << chord_letter(perm[i]);
        }
        if (subset == 0)
          ds << ", no flips";
        else {
          ds << ", flips ";
          bool first = true;
          for (int i = 0; i < n; ++i)
            if (subset >> i & 1) {
              ds << (first ? "" : ",") << chord_letter(i);
              first = false;
            }
        }
        out.description = ds.str();
        return out;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.description = "no bijection with sign flips matches";
  return out;
}

std::string roles_bracket(const RoleDiagram& r) {
  std::ostringstream out;
  out << "[moving=" << chord_letter(r.moving_pair)
      << " stationary=" << chord_letter(r.stationary_pair);
  if (!r.spectator_pairs.empty()) {
    out << " spectators=";
    for (std::size_t i = 0; i < r.spectator_pairs.size(); ++i)
      out << (i ? "," : "") << chord_letter(r.spectator_pairs[i]);
  }
  out << "]";
  return out.str();
}

std::string comparison_line(const TransportComparison& c) {
  std::ostringstream out;
  if (c.strict)
    out << "strict transport match";
  else {
    out << "transport mismatch at " << c.mismatch;
    if (c.fixed_by_flips) {
      out << "; fixed by flipping ";
      for (std::size_t i = 0; i < c.flip_roles.size(); ++i)
        out << (i ? "," : "") << c.flip_roles[i];
    } else {
      out << "; no sign flips repair it";
    }
  }
  if (c.left_killed) out << "; framing kills left";
  if (c.right_killed) out << "; framing kills right";
  return out.str();
}

nlohmann::ordered_json comparison_json(const TransportComparison& c) {
  return {{"strict", c.strict},
          {"fixed_by_flips", c.fixed_by_flips},
          {"flip_roles", c.flip_roles},
          {"mismatch", c.mismatch},
          {"left_killed", c.left_killed},
          {"right_killed", c.right_killed}};
}

nlohmann::ordered_json role_diagram_json(const RoleDiagram& r) {
  nlohmann::ordered_json spect = nlohmann::ordered_json::array();
  for (int p : r.spectator_pairs) spect.push_back(chord_letter(p));
  return {{"code", r.diagram.code()},
          {"moving", chord_letter(r.moving_pair)},
          {"stationary", chord_letter(r.stationary_pair)},
          {"spectators", std::move(spect)}};
}

}  // namespace

std::string RoleDiagram::role_of(int pair_index) const {
  if (pair_index == moving_pair) return "moving";
  if (pair_index == stationary_pair) return "stationary";
  for (std::size_t i = 0; i < spectator_pairs.size(); ++i)
    if (spectator_pairs[i] == static_cast<int>(pair_index))
      return "spectator" + std::to_string(i + 1);
  return "unknown";
}

std::string RoleDiagram::label_of_role(const std::string& role) const {
  if (role == "moving") return chord_letter(moving_pair);
  if (role == "stationary") return chord_letter(stationary_pair);
  if (role.rfind("spectator", 0) == 0) {
    const std::size_t i = std::stoul(role.substr(9)) - 1;
    if (i < spectator_pairs.size()) return chord_letter(spectator_pairs[i]);
  }
  return "?";
}

FourTSides four_t_sides(const FourTContext& ctx) {
  if (ctx.rhs != 2 && ctx.rhs != 3)
    throw std::invalid_argument("rhs must be 2 or 3");
  FourTSides sides;
  sides.marked_gap_left = 1;
  sides.marked_gap_right = ctx.rhs == 2 ? 3 : 5;
  std::vector<std::pair<int, int>> spect;
  for (const auto& [a, b] : ctx.spectators) {
    if (a < 0 || a > 6 || b < 0 || b > 6)
      throw DomainError("spectator gap out of range 0..6");
    const auto pair = std::minmax(a, b);
    for (int g : {pair.first, pair.second})
      if (g == sides.marked_gap_left || g == sides.marked_gap_right)
        throw DomainError("spectator endpoint in marked gap " + std::to_string(g) +
                          " (gaps " + std::to_string(sides.marked_gap_left) + " and " +
                          std::to_string(sides.marked_gap_right) +
                          " are crossed by the moving endpoint)");
    spect.emplace_back(pair.first, pair.second);
  }
  sides.left_plus = build_role_diagram(template_diagram(true, ctx.rhs, true), spect);
  sides.left_minus = build_role_diagram(template_diagram(true, ctx.rhs, false), spect);
  sides.right_plus = build_role_diagram(template_diagram(false, ctx.rhs, true), spect);
  sides.right_minus = build_role_diagram(template_diagram(false, ctx.rhs, false), spect);
  return sides;
}

LemmaMoveRecord lemma_move(const Diagram& d) {
  if (d.dot_count() != 0 || d.chord_count() == 0)
    throw DomainError("lemma move needs a nonempty chord-only diagram");
  LemmaMoveRecord rec;
  rec.before = d;
  const int n = d.degree();
  const auto [x, y] = d.pairs()[0];  // leftmost chord
  auto shift = [x = x](int p) { return p > x ? p - 1 : p; };
  std::vector<int> pairing(n);
  for (const auto& [a, b] : d.pairs()) {
    if (a == x) continue;
    pairing[shift(a)] = shift(b);
    pairing[shift(b)] = shift(a);
  }
  pairing[n - 1] = shift(y);
  pairing[shift(y)] = n - 1;
  rec.after = Diagram::from_pairing(std::move(pairing));
  // pair correspondence before -> after
  std::vector<int> to_after(d.pair_count());
  to_after[0] = find_pair_index(rec.after, shift(y), n - 1);
  for (int i = 1; i < d.pair_count(); ++i)
    to_after[i] =
        find_pair_index(rec.after, shift(d.pairs()[i].first), shift(d.pairs()[i].second));
  rec.moved_label_before = chord_letter(0);
  rec.moved_label_after = chord_letter(to_after[0]);
  const IntersectionGraph gb = intersection_graph(d), ga = intersection_graph(rec.after);
  rec.crossings_preserved = true;
  for (int i = 0; i < d.pair_count(); ++i)
    for (int j = 0; j < d.pair_count(); ++j)
      if (gb.adjacency[i][j] != ga.adjacency[to_after[i]][to_after[j]])
        rec.crossings_preserved = false;
  int moved_crossings = 0;
  for (int j = 0; j < d.pair_count(); ++j) moved_crossings += gb.adjacency[0][j];
  rec.needs_flip = moved_crossings > 0;
  const TwistMatrix tb = twist_matrix(d), ta = twist_matrix(rec.after);
  rec.matches_after_flip = true;
  for (int i = 0; i < d.pair_count(); ++i)
    for (int j = 0; j < d.pair_count(); ++j) {
      const int sign = (i == 0) == (j == 0) ? 1 : -1;  // negate moved row+col
      if (tb.entries[i][j] != sign * ta.entries[to_after[i]][to_after[j]])
        rec.matches_after_flip = false;
    }
  return rec;
}

ObstructionReport four_t_obstruction(const FourTContext& ctx) {
  ObstructionReport rep;
  rep.context = ctx;
  rep.sides = four_t_sides(ctx);
  rep.plus_pair = compare_transport(rep.sides.left_plus, rep.sides.right_plus);
  rep.minus_pair = compare_transport(rep.sides.left_minus, rep.sides.right_minus);
  rep.plus_search =
      charitable_search(rep.sides.left_plus.diagram, rep.sides.right_plus.diagram);
  rep.minus_search =
      charitable_search(rep.sides.left_minus.diagram, rep.sides.right_minus.diagram);
  rep.lemma = lemma_move(rep.sides.left_minus.diagram);
  const bool plus_ok =
      rep.plus_pair.strict || (rep.plus_pair.left_killed && rep.plus_pair.right_killed);
  const bool minus_ok = rep.minus_pair.strict ||
                        (rep.minus_pair.left_killed && rep.minus_pair.right_killed);
  rep.match = plus_ok && minus_ok;
  rep.trivial = rep.match && !(rep.plus_pair.strict && rep.minus_pair.strict);
  rep.verdict = rep.match ? (rep.trivial ? "MATCH-TRIVIAL" : "MATCH") : "NO-MATCH";
  if (!rep.minus_pair.strict && rep.minus_pair.fixed_by_flips) {
    std::ostringstream ws;
    ws << "minus pair transport disagrees at " << rep.minus_pair.mismatch
       << "; repaired by flipping the momentum sign of ";
    for (std::size_t i = 0; i < rep.minus_pair.flip_roles.size(); ++i)
      ws << (i ? "," : "") << rep.minus_pair.flip_roles[i];
    rep.witness = ws.str();
  }
  return rep;
}

std::string ObstructionReport::text() const {
  std::ostringstream out;
  out << "4T obstruction report (rhs=" << (context.rhs == 2 ? "second" : "third")
      << ")\n";
  out << "spectators:";
  if (sides.left_plus.spectator_pairs.empty()) {
    out << " none\n";
  } else {
    for (std::size_t i = 0; i < context.spectators.size(); ++i)
      out << (i ? "," : "") << " (" << context.spectators[i].first << "-"
          << context.spectators[i].second << ")";
    out << "\n";
  }
  out << "  left  plus : " << sides.left_plus.diagram.code() << "  "
      << roles_bracket(sides.left_plus) << "\n";
  out << "  left  minus: " << sides.left_minus.diagram.code() << "  "
      << roles_bracket(sides.left_minus) << "\n";
  out << "  right plus : " << sides.right_plus.diagram.code() << "  "
      << roles_bracket(sides.right_plus) << "\n";
  out << "  right minus: " << sides.right_minus.diagram.code() << "  "
      << roles_bracket(sides.right_minus) << "\n";
  out << "plus pair : " << comparison_line(plus_pair) << "\n";
  out << "minus pair: " << comparison_line(minus_pair) << "\n";
  out << "plus search : "
      << (plus_search.found ? "match found: " : "no match: ") << plus_search.description
      << "\n";
  out << "minus search: "
      << (minus_search.found ? "match found: " : "no match: ")
      << minus_search.description << "\n";
  out << "lemma move (left minus): " << lemma.before.code() << " -> "
      << lemma.after.code() << ", moved " << lemma.moved_label_before << " -> "
      << lemma.moved_label_after << ", crossings "
      << (lemma.crossings_preserved ? "preserved" : "NOT preserved") << ", "
      << (lemma.needs_flip ? "sign flip required" : "no sign flip needed")
      << (lemma.matches_after_flip ? "" : ", FLIP DOES NOT REPAIR") << "\n";
  if (!witness.empty()) out << "witness: " << witness << "\n";
  out << "verdict: " << verdict << "\n";
  return out.str();
}

nlohmann::ordered_json ObstructionReport::to_json() const {
  nlohmann::ordered_json spect = nlohmann::ordered_json::array();
  for (const auto& [a, b] : context.spectators) spect.push_back({a, b});
  return {{"context",
           {{"spectators", std::move(spect)},
            {"rhs", context.rhs == 2 ? "second" : "third"}}},
          {"diagrams",
           {{"left_plus", role_diagram_json(sides.left_plus)},
            {"left_minus", role_diagram_json(sides.left_minus)},
            {"right_plus", role_diagram_json(sides.right_plus)},
            {"right_minus", role_diagram_json(sides.right_minus)}}},
          {"plus_pair", comparison_json(plus_pair)},
          {"minus_pair", comparison_json(minus_pair)},
          {"plus_search",
           {{"found", plus_search.found}, {"description", plus_search.description}}},
          {"minus_search",
           {{"found", minus_search.found}, {"description", minus_search.description}}},
          {"lemma_move",
           {{"before", lemma.before.code()},
            {"after", lemma.after.code()},
            {"moved_before", lemma.moved_label_before},
            {"moved_after", lemma.moved_label_after},
            {"crossings_preserved", lemma.crossings_preserved},
            {"needs_flip", lemma.needs_flip},
            {"matches_after_flip", lemma.matches_after_flip}}},
          {"match", match},
          {"trivial", trivial},
          {"verdict", verdict},
          {"witness", witness}};
}

}  // namespace dotchord
