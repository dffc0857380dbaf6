#include "dotchord/hopf_concat.hpp"

#include <map>

namespace dotchord {

FormalSum mu(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) out.add_term(concat(da, db), ca * cb);
  return out;
}

TensorSum delta(const Diagram& d) {
  const int p = d.pair_count();
  if (p > 62) throw DomainError("coproduct limited to 62 pairs");
  TensorSum out;
  const std::uint64_t full = (std::uint64_t{1} << p) - 1;
  for (std::uint64_t mask = 0;; ++mask) {
    out.add_term(d.subdiagram(mask), d.subdiagram(full & ~mask), 1);
    if (mask == full) break;
  }
  return out;
}

TensorSum delta(const FormalSum& s) {
  TensorSum out;
  for (const auto& [d, c] : s.terms()) {
    TensorSum t = delta(d);
    t *= c;
    out += t;
  }
  return out;
}

Int counit(const Diagram& d) { return d.empty() ? 1 : 0; }

Int counit(const FormalSum& s) { return s.coefficient(Diagram()); }

FormalSum antipode(const Diagram& d) {
  static std::map<std::string, FormalSum> memo;
  if (const auto it = memo.find(d.code()); it != memo.end()) return it->second;
  FormalSum result;
  if (d.empty()) {
    result = FormalSum::unit();
  } else {
    // 0 = sum over subsets S of mu(antipode(d_S), d_complement); solve for
    // the full subset's contribution antipode(d).
    result -= FormalSum(d);  // S empty: antipode(1) * d
    const int p = d.pair_count();
    const std::uint64_t full = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      FormalSum part = antipode(d.subdiagram(mask));
      result -= mu(part, FormalSum(d.subdiagram(full & ~mask)));
    }
  }
  memo.emplace(d.code(), result);
  return result;
}

FormalSum antipode(const FormalSum& s) {
  return s.apply([](const Diagram& d) { return antipode(d); });
}

}  // namespace dotchord
