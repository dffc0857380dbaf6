#include "dotchord/diagram.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace dotchord {

namespace {

std::string label_token(int chord_index) {  // 0-based chord number
  if (chord_index < 26) return std::string(1, static_cast<char>('A' + chord_index));
  return "[" + std::to_string(chord_index + 1) + "]";
}

}  // namespace

void Diagram::rebuild() {
  pairs_.clear();
  chords_ = 0;
  const int n = degree();
  std::vector<int> label(n, -1);
  for (int i = 0; i < n; ++i) {
    if (label[i] >= 0) continue;
    const int j = pairing_[i];
    label[i] = static_cast<int>(pairs_.size());
    if (j != i) label[j] = label[i];
    pairs_.emplace_back(i, j);
    if (j != i) ++chords_;
  }
  code_.clear();
  std::vector<int> chord_number(pairs_.size(), -1);
  int next_chord = 0;
  for (std::size_t p = 0; p < pairs_.size(); ++p)
    if (pairs_[p].first != pairs_[p].second) chord_number[p] = next_chord++;
  for (int i = 0; i < n; ++i) {
    if (pairing_[i] == i)
      code_.push_back('.');
    else
      code_ += label_token(chord_number[label[i]]);
  }
}

Diagram Diagram::parse(std::string_view code) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < code.size();) {
    const char c = code[i];
    if (c == '.') {
      tokens.emplace_back(".");
      ++i;
    } else if (c >= 'A' && c <= 'Z') {
      tokens.emplace_back(1, c);
      ++i;
    } else if (c == '[') {
      const auto close = code.find(']', i);
      if (close == std::string_view::npos)
        throw ParseError("unterminated '[' in diagram code");
      const std::string_view num = code.substr(i + 1, close - i - 1);
      if (num.empty() || num.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("bad chord index '[" + std::string(num) + "]'");
      tokens.emplace_back(code.substr(i, close - i + 1));
      i = close + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c +
                       "' in diagram code (expected '.', 'A'-'Z' or '[k]')");
    }
  }
  std::map<std::string, std::vector<int>> where;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i] != ".") where[tokens[i]].push_back(static_cast<int>(i));
  std::vector<int> pairing(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) pairing[i] = static_cast<int>(i);
  for (const auto& [tok, pos] : where) {
    if (pos.size() != 2)
      throw ParseError("chord label '" + tok + "' occurs " +
                       std::to_string(pos.size()) + " times (must be exactly 2)");
    pairing[pos[0]] = pos[1];
    pairing[pos[1]] = pos[0];
  }
  return from_pairing(std::move(pairing));
}

Diagram Diagram::from_pairing(std::vector<int> pairing) {
  const int n = static_cast<int>(pairing.size());
  for (int i = 0; i < n; ++i) {
    if (pairing[i] < 0 || pairing[i] >= n)
      throw std::invalid_argument("pairing entry out of range");
    if (pairing[pairing[i]] != i)
      throw std::invalid_argument("pairing is not an involution");
  }
  Diagram d;
  d.pairing_ = std::move(pairing);
  d.rebuild();
  return d;
}

Diagram Diagram::dots(int n) {
  std::vector<int> pairing(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) pairing[i] = i;
  return from_pairing(std::move(pairing));
}

std::vector<int> Diagram::dot_positions() const {
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i)
    if (pairing_[i] == i) out.push_back(i);
  return out;
}

Diagram Diagram::subdiagram(std::uint64_t pair_mask) const {
  std::vector<int> keep;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (!(pair_mask >> p & 1u)) continue;
    keep.push_back(pairs_[p].first);
    if (pairs_[p].second != pairs_[p].first) keep.push_back(pairs_[p].second);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<int> index(degree(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<int> pairing(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) pairing[i] = index[pairing_[keep[i]]];
  return from_pairing(std::move(pairing));
}

Diagram concat(const Diagram& a, const Diagram& b) {
  std::vector<int> pairing = a.pairing_;
  pairing.reserve(pairing.size() + b.pairing_.size());
  const int shift = a.degree();
  for (int x : b.pairing_) pairing.push_back(x + shift);
  return Diagram::from_pairing(std::move(pairing));
}

bool is_regular(const Diagram& d) {
  const auto& ps = d.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].first == ps[i].second) continue;
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[j].first == ps[j].second) continue;
      // label order gives ps[i].first < ps[j].first; nesting means j inside i
      if (ps[i].first < ps[j].first && ps[j].second < ps[i].second) return false;
    }
  }
  return true;
}

bool is_quasiplanar(const Diagram& d) {
  for (const auto& [a, b] : d.pairs()) {
    if (a == b) continue;
    for (int p : d.dot_positions())
      if (a < p && p < b) return false;
  }
  return true;
}

IntersectionGraph intersection_graph(const Diagram& d) {
  IntersectionGraph g;
  const auto& ps = d.pairs();
  const int n = static_cast<int>(ps.size());
  g.colors.resize(n);
  g.adjacency.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    g.colors[i] = ps[i].first == ps[i].second ? IntersectionGraph::Color::black
                                              : IntersectionGraph::Color::white;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto [a1, a2] = ps[i];
      const auto [b1, b2] = ps[j];  // a1 < b1 by label order
      bool edge = false;
      if (a1 != a2 && b1 != b2)
        edge = a1 < b1 && b1 < a2 && a2 < b2;  // crossing chords
      else if (a1 != a2 && b1 == b2)
        edge = a1 < b1 && b1 < a2;  // dot j strictly under chord i
      // (a dot's label position can never precede a chord spanning it)
      if (edge) g.adjacency[i][j] = g.adjacency[j][i] = 1;
    }
  }
  return g;
}

std::vector<std::pair<int, int>> IntersectionGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacency[i][j]) out.emplace_back(i, j);
  return out;
}

bool IntersectionGraph::connected() const {
  const int n = size();
  if (n <= 1) return true;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (adjacency[v][w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

bool is_connected(const Diagram& d) { return intersection_graph(d).connected(); }

void write_dot(std::ostream& out, const IntersectionGraph& g) {
  out << "graph intersection {\n";
  out << "  node [shape=circle];\n";
  for (int i = 0; i < g.size(); ++i) {
    out << "  " << i + 1;
    if (g.colors[i] == IntersectionGraph::Color::white)
      out << " [style=filled, fillcolor=white];\n";
    else
      out << " [style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (const auto& [i, j] : g.edges()) out << "  " << i + 1 << " -- " << j + 1 << ";\n";
  out << "}\n";
}

std::vector<Diagram> concat_blocks(const Diagram& d) {
  std::vector<Diagram> blocks;
  const auto& pairing = d.pairing();
  int start = 0, running_max = -1;
  for (int i = 0; i < d.degree(); ++i) {
    running_max = std::max(running_max, pairing[i]);
    if (running_max == i) {  // no pair straddles the boundary after i
      std::vector<int> block(pairing.begin() + start, pairing.begin() + i + 1);
      for (int& x : block) x -= start;
      blocks.push_back(Diagram::from_pairing(std::move(block)));
      start = i + 1;
    }
  }
  return blocks;
}

std::vector<Diagram> concat_factorize(const Diagram& d) {
  if (!is_regular(d))
    throw DomainError("concatenation factorization needs a regular diagram: " +
                      (d.code().empty() ? std::string("(empty)") : d.code()));
  return concat_blocks(d);
}

std::vector<MomentumEntry> momentum_signature(const Diagram& d) {
  std::vector<MomentumEntry> out(d.degree());
  int next_chord = 0, next_free = 0;
  for (const auto& [a, b] : d.pairs()) {
    if (a == b) {
      out[a] = MomentumEntry{true, ++next_free, 1};
    } else {
      ++next_chord;
      out[a] = MomentumEntry{false, next_chord, 1};
      out[b] = MomentumEntry{false, next_chord, -1};
    }
  }
  return out;
}

std::string momentum_entry_text(const MomentumEntry& e) {
  std::string s = e.sign < 0 ? "-" : "";
  s += e.is_free ? 'u' : 'k';
  s += std::to_string(e.index);
  return s;
}

namespace {

void enumerate_involutions(std::vector<int>& pairing, std::vector<bool>& used,
                           int n, std::vector<Diagram>& out) {
  int first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    out.push_back(Diagram::from_pairing(pairing));
    return;
  }
  used[first] = true;
  pairing[first] = first;  // dot
  enumerate_involutions(pairing, used, n, out);
  for (int j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = true;
    pairing[first] = j;
    pairing[j] = first;
    enumerate_involutions(pairing, used, n, out);
    used[j] = false;
  }
  pairing[first] = first;
  used[first] = false;
}

bool is_cq(const Diagram& d) {
  return d.degree() > 0 && is_quasiplanar(d) && is_connected(d);
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int m, DiagramFilter filter) {
  if (m < 0) throw std::invalid_argument("negative degree");
  std::vector<Diagram> all;
  std::vector<int> pairing(m);
  std::vector<bool> used(m, false);
  enumerate_involutions(pairing, used, m, all);
  std::vector<Diagram> out;
  for (const Diagram& d : all) {
    bool keep = true;
    switch (filter) {
      case DiagramFilter::all: keep = true; break;
      case DiagramFilter::regular: keep = is_regular(d); break;
      case DiagramFilter::quasiplanar: keep = is_quasiplanar(d); break;
      case DiagramFilter::connected: keep = is_connected(d); break;
      case DiagramFilter::cq: keep = is_cq(d); break;
    }
    if (keep) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ascii_art(const Diagram& d) {
  const int n = d.degree();
  if (n == 0) return "(empty)\n";
  const int width = 2 * n - 1;
  const auto& ps = d.pairs();
  // chords sorted by span length so inner arcs sit below outer ones
  std::vector<int> chord_pairs;
  for (std::size_t p = 0; p < ps.size(); ++p)
    if (ps[p].first != ps[p].second) chord_pairs.push_back(static_cast<int>(p));
  std::sort(chord_pairs.begin(), chord_pairs.end(), [&](int x, int y) {
    const int lx = ps[x].second - ps[x].first, ly = ps[y].second - ps[y].first;
    if (lx != ly) return lx < ly;
    return ps[x].first < ps[y].first;
  });
  std::vector<int> height(ps.size(), 0);
  int max_h = 0;
  for (int p : chord_pairs) {
    int h = 1;
    for (int q : chord_pairs) {
      if (q == p || height[q] == 0) continue;
      const bool overlap =
          ps[p].first <= ps[q].second && ps[q].first <= ps[p].second;
      if (overlap) h = std::max(h, height[q] + 1);
    }
    height[p] = h;
    max_h = std::max(max_h, h);
  }
  std::vector<std::string> grid(max_h, std::string(width, ' '));
  for (int p : chord_pairs) {
    const int row = max_h - height[p];
    const int ca = 2 * ps[p].first, cb = 2 * ps[p].second;
    for (int c = ca; c <= cb; ++c)
      grid[row][c] = (c == ca || c == cb) ? '+' : (grid[row][c] == '|' ? '+' : '-');
    for (int r = row + 1; r < max_h; ++r)
      for (int c : {ca, cb})
        grid[r][c] = grid[r][c] == '-' ? '+' : (grid[r][c] == ' ' ? '|' : grid[r][c]);
  }
  std::string base(width, ' ');
  std::size_t ci = 0;
  for (int i = 0; i < n; ++i) {
    // one code token per position; bracketed tokens are shown as '#'
    if (d.code()[ci] == '[') {
      base[2 * i] = '#';
      ci = d.code().find(']', ci) + 1;
    } else {
      base[2 * i] = d.code()[ci];
      ++ci;
    }
  }
  std::ostringstream out;
  for (const auto& row : grid) out << row << '\n';
  out << base << '\n';
  return out.str();
}

}  // namespace dotchord
