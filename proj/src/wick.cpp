#include "dotchord/wick.hpp"

#include <cstdlib>
#include <string>

#include "dotchord/hopf_concat.hpp"

namespace dotchord {

CqCatalog::CqCatalog() : max_degree_(12) {
  if (const char* env = std::getenv("DOTCHORD_MAX_DEGREE")) {
    try {
      const int v = std::stoi(env);
      if (v >= 0) max_degree_ = v;
    } catch (const std::exception&) {
      // ignore unreadable values, keep the default
    }
  }
}

CqCatalog& CqCatalog::instance() {
  static CqCatalog catalog;
  return catalog;
}

const std::vector<Diagram>& CqCatalog::at(int m) {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m > max_degree_)
    throw DomainError("degree " + std::to_string(m) + " exceeds the catalog bound " +
                      std::to_string(max_degree_) + " (set DOTCHORD_MAX_DEGREE)");
  auto it = cache_.find(m);
  if (it == cache_.end())
    it = cache_.emplace(m, enumerate_diagrams(m, DiagramFilter::cq)).first;
  return it->second;
}

FormalSum CqCatalog::sum(int m) {
  FormalSum out;
  for (const Diagram& d : at(m)) out.add_term(d, 1);
  return out;
}

FormalSum wick(int n) {
  static std::map<int, FormalSum> memo{{0, FormalSum::unit()}};
  if (const auto it = memo.find(n); it != memo.end()) return it->second;
  if (n < 0) throw std::invalid_argument("negative degree");
  FormalSum out;
  for (int m = 1; m <= n; ++m) {
    FormalSum block = CqCatalog::instance().sum(m);
    if (block.is_zero()) continue;
    FormalSum part = mu(block, wick(n - m));
    if (m % 2 == 0) part *= -1;  // (-1)^(m+1)
    out += part;
  }
  memo.emplace(n, out);
  return out;
}

namespace {

// sum over compositions of n of (-1)^K times all K-fold catalog products
FormalSum signed_block_sum(int n) {
  static std::map<int, FormalSum> memo{{0, FormalSum::unit()}};
  if (const auto it = memo.find(n); it != memo.end()) return it->second;
  FormalSum out;
  for (int m = 1; m <= n; ++m) {
    FormalSum block = CqCatalog::instance().sum(m);
    if (block.is_zero()) continue;
    out -= mu(block, signed_block_sum(n - m));
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace

FormalSum wick_closed(int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  FormalSum out = signed_block_sum(n);
  if (n % 2) out *= -1;  // overall (-1)^n
  return out;
}

FormalSum wick_of(const Diagram& d) {
  if (d.has_chord()) return FormalSum::zero();
  return wick(d.degree());
}

FormalSum wick_of(const FormalSum& s) {
  return s.apply([](const Diagram& d) { return wick_of(d); });
}

FormalSum wick_prime(const Diagram& d) {
  if (!is_quasiplanar(d))
    throw DomainError("wick_prime needs a quasiplanar diagram: " + d.code());
  const std::vector<int> dots = d.dot_positions();
  const int k = static_cast<int>(dots.size());
  FormalSum out;
  const FormalSum base = wick(k);
  for (const auto& [t, c] : base.terms()) {
    std::vector<int> pairing = d.pairing();
    for (int i = 0; i < k; ++i) pairing[dots[i]] = dots[t.pairing()[i]];
    out.add_term(Diagram::from_pairing(std::move(pairing)), c);
  }
  return out;
}

FormalSum wick_product_expansion(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("degrees must be positive");
  const int total = n + m;
  // suffix[t]: compositions of total - t (as continuations of a prefix
  // summing to t) avoiding an intermediate prefix sum of exactly n, with
  // (-1)^K folded in.
  std::map<int, FormalSum> suffix{{total, FormalSum::unit()}};
  for (int t = total - 1; t >= 0; --t) {
    FormalSum acc;
    for (int s = 1; t + s <= total; ++s) {
      if (t + s == n) continue;  // prefix would split at n
      FormalSum block = CqCatalog::instance().sum(s);
      if (block.is_zero()) continue;
      acc -= mu(block, suffix.at(t + s));
    }
    suffix.emplace(t, acc);
  }
  FormalSum out = suffix.at(0);
  if (total % 2 == 0) out *= -1;  // (-1)^(total+1)
  return out;
}

std::string WickAtom::text() const {
  const std::string body = diagram.code().empty() ? "1" : diagram.code();
  return wick ? "W(" + body + ")" : body;
}

std::map<WickAtom, Int> wick_basis_decompose(const Diagram& d) {
  static std::map<std::string, std::map<WickAtom, Int>> memo;
  if (const auto it = memo.find(d.code()); it != memo.end()) return it->second;
  if (!is_quasiplanar(d))
    throw DomainError("basis decomposition needs a quasiplanar diagram: " + d.code());
  std::map<WickAtom, Int> out;
  if (d.dot_count() == 0) {
    out.emplace(WickAtom{false, d}, 1);
  } else {
    out.emplace(WickAtom{true, d}, 1);
    const FormalSum prime = wick_prime(d);
    for (const auto& [e, c] : prime.terms()) {
      if (e == d) continue;  // the diagram's own term defines the leading atom
      for (const auto& [atom, k] : wick_basis_decompose(e)) {
        auto [it, inserted] = out.emplace(atom, -c * k);
        if (!inserted) {
          it->second += -c * k;
          if (it->second == 0) out.erase(it);
        }
      }
    }
  }
  memo.emplace(d.code(), out);
  return out;
}

FormalSum reexpand(const std::map<WickAtom, Int>& decomposition) {
  FormalSum out;
  for (const auto& [atom, c] : decomposition) {
    FormalSum part = atom.wick ? wick_prime(atom.diagram) : FormalSum(atom.diagram);
    part *= c;
    out += part;
  }
  return out;
}

std::string decomposition_text(const std::map<WickAtom, Int>& decomposition) {
  if (decomposition.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [atom, c] : decomposition) {
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const Int mag = abs(c);
    if (mag != 1) out += mag.str() + "*";
    out += atom.text();
  }
  return out;
}

nlohmann::ordered_json decomposition_json(const std::map<WickAtom, Int>& d) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [atom, c] : d)
    terms.push_back({{"coeff", c.str()},
                     {"kind", atom.wick ? "wick" : "diagram"},
                     {"diagram", atom.diagram.code()}});
  return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

}  // namespace dotchord
