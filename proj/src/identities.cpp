#include "dotchord/identities.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "dotchord/diagram.hpp"
#include "dotchord/formal_sum.hpp"
#include "dotchord/hopf_concat.hpp"
#include "dotchord/hopf_shuffle.hpp"
#include "dotchord/wick.hpp"

namespace dotchord {

namespace {

using Triple = std::map<std::tuple<Diagram, Diagram, Diagram>, Int>;

void fail(VerifyResult& r, const std::string& what) { r.failures.push_back(what); }

std::vector<Diagram> diagrams_up_to(int max_degree, DiagramFilter filter) {
  std::vector<Diagram> out;
  for (int m = 0; m <= max_degree; ++m)
    for (const Diagram& d : enumerate_diagrams(m, filter)) out.push_back(d);
  return out;
}

std::vector<Diagram> regular_quasiplanar_up_to(int max_degree) {
  std::vector<Diagram> out;
  for (int m = 0; m <= max_degree; ++m)
    for (const Diagram& d : enumerate_diagrams(m, DiagramFilter::regular))
      if (is_quasiplanar(d)) out.push_back(d);
  return out;
}

// (coproduct (x) id) and (id (x) coproduct) applied to a tensor sum
Triple expand_left(const TensorSum& t, const std::function<TensorSum(const Diagram&)>& cop) {
  Triple out;
  for (const auto& [pair, c] : t.terms()) {
    const TensorSum expanded = cop(pair.first);
    for (const auto& [inner, k] : expanded.terms()) {
      const auto key = std::make_tuple(inner.first, inner.second, pair.second);
      out[key] += c * k;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

Triple expand_right(const TensorSum& t, const std::function<TensorSum(const Diagram&)>& cop) {
  Triple out;
  for (const auto& [pair, c] : t.terms()) {
    const TensorSum expanded = cop(pair.second);
    for (const auto& [inner, k] : expanded.terms()) {
      const auto key = std::make_tuple(pair.first, inner.first, inner.second);
      out[key] += c * k;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

// componentwise product of tensor sums under a bilinear diagram product
TensorSum tensor_product(const TensorSum& a, const TensorSum& b,
                         const std::function<FormalSum(const Diagram&, const Diagram&)>& prod) {
  TensorSum out;
  for (const auto& [ta, ca] : a.terms())
    for (const auto& [tb, cb] : b.terms()) {
      const FormalSum lefts = prod(ta.first, tb.first);
      const FormalSum rights = prod(ta.second, tb.second);
      for (const auto& [dl, cl] : lefts.terms())
        for (const auto& [dr, cr] : rights.terms())
          out.add_term(dl, dr, ca * cb * cl * cr);
    }
  return out;
}

}  // namespace

VerifyResult verify_hopf_concat(int max_degree) {
  VerifyResult r;
  r.identity = "hopf-concat";
  r.max_degree = max_degree;
  const auto cop = [](const Diagram& d) { return delta(d); };
  const auto concat_prod = [](const Diagram& a, const Diagram& b) {
    return FormalSum(concat(a, b));
  };
  const std::vector<Diagram> all = diagrams_up_to(max_degree, DiagramFilter::all);
  for (const Diagram& d : all) {
    const TensorSum dd = delta(d);
    if (expand_left(dd, cop) != expand_right(dd, cop))
      fail(r, "coassociativity fails on " + d.code());
    ++r.checks;
    FormalSum left_counit, right_counit;
    for (const auto& [t, c] : dd.terms()) {
      left_counit.add_term(t.second, c * counit(t.first));
      right_counit.add_term(t.first, c * counit(t.second));
    }
    if (left_counit != FormalSum(d) || right_counit != FormalSum(d))
      fail(r, "counit axiom fails on " + d.code());
    ++r.checks;
    if (dd.flip() != dd) fail(r, "cocommutativity fails on " + d.code());
    ++r.checks;
    const FormalSum expected = counit(d) * FormalSum::unit();
    const FormalSum s_left = dd.map_left([](const Diagram& x) { return antipode(x); })
                                 .collapse(concat_prod);
    const FormalSum s_right = dd.map_right([](const Diagram& x) { return antipode(x); })
                                  .collapse(concat_prod);
    if (s_left != expected || s_right != expected)
      fail(r, "antipode axiom fails on " + d.code());
    ++r.checks;
    if (antipode(antipode(d)) != FormalSum(d))
      fail(r, "antipode involutivity fails on " + d.code());
    ++r.checks;
  }
  for (const Diagram& a : all)
    for (const Diagram& b : all) {
      if (a.degree() + b.degree() > max_degree) continue;
      const Diagram ab = concat(a, b);
      if (delta(ab) != tensor_product(delta(a), delta(b), concat_prod))
        fail(r, "coproduct multiplicativity fails on " + a.code() + " | " + b.code());
      ++r.checks;
      if (counit(ab) != counit(a) * counit(b))
        fail(r, "counit multiplicativity fails on " + a.code() + " | " + b.code());
      ++r.checks;
      if (antipode(ab) != mu(antipode(b), antipode(a)))
        fail(r, "antipode antihomomorphy fails on " + a.code() + " | " + b.code());
      ++r.checks;
    }
  return r;
}

VerifyResult verify_hopf_shuffle(int max_degree) {
  VerifyResult r;
  r.identity = "hopf-shuffle";
  r.max_degree = max_degree;
  const auto cop = [](const Diagram& d) { return deconcat(d); };
  const auto shuffle_prod = [](const Diagram& a, const Diagram& b) {
    return shuffle(a, b);
  };
  const std::vector<Diagram> domain = regular_quasiplanar_up_to(max_degree);
  bool noncocommutative_seen = false;
  Diagram witness;
  for (const Diagram& d : domain) {
    const TensorSum dd = deconcat(d);
    if (expand_left(dd, cop) != expand_right(dd, cop))
      fail(r, "deconcat coassociativity fails on " + d.code());
    ++r.checks;
    FormalSum left_counit, right_counit;
    for (const auto& [t, c] : dd.terms()) {
      left_counit.add_term(t.second, c * counit(t.first));
      right_counit.add_term(t.first, c * counit(t.second));
    }
    if (left_counit != FormalSum(d) || right_counit != FormalSum(d))
      fail(r, "deconcat counit axiom fails on " + d.code());
    ++r.checks;
    if (!noncocommutative_seen && dd.flip() != dd) {
      noncocommutative_seen = true;
      witness = d;
    }
    const FormalSum expected = counit(d) * FormalSum::unit();
    const FormalSum s_left =
        dd.map_left([](const Diagram& x) { return shuffle_antipode(x); })
            .collapse(shuffle_prod);
    const FormalSum s_right =
        dd.map_right([](const Diagram& x) { return shuffle_antipode(x); })
            .collapse(shuffle_prod);
    if (s_left != expected || s_right != expected)
      fail(r, "shuffle antipode axiom fails on " + d.code());
    ++r.checks;
    if (shuffle_antipode(shuffle_antipode(d)) != FormalSum(d))
      fail(r, "shuffle antipode involutivity fails on " + d.code());
    ++r.checks;
  }
  for (const Diagram& a : domain)
    for (const Diagram& b : domain) {
      if (a.degree() + b.degree() > max_degree) continue;
      const FormalSum ab = shuffle(a, b);
      if (ab != shuffle(b, a))
        fail(r, "shuffle commutativity fails on " + a.code() + " | " + b.code());
      ++r.checks;
      if (deconcat(ab) != tensor_product(deconcat(a), deconcat(b), shuffle_prod))
        fail(r, "deconcat multiplicativity fails on " + a.code() + " | " + b.code());
      ++r.checks;
      if (shuffle_antipode(ab) != shuffle(shuffle_antipode(a), shuffle_antipode(b)))
        fail(r, "shuffle antipode homomorphy fails on " + a.code() + " | " + b.code());
      ++r.checks;
    }
  for (const Diagram& a : domain)
    for (const Diagram& b : domain)
      for (const Diagram& c : domain) {
        if (a.degree() + b.degree() + c.degree() > max_degree) continue;
        if (a.degree() == 0 || b.degree() == 0 || c.degree() == 0) continue;
        if (shuffle(shuffle(a, b), FormalSum(c)) != shuffle(FormalSum(a), shuffle(b, c)))
          fail(r, "shuffle associativity fails on " + a.code() + " | " + b.code() +
                      " | " + c.code());
        ++r.checks;
      }
  if (max_degree >= 3) {
    if (noncocommutative_seen)
      r.notes.push_back("non-cocommutativity witness: " + witness.code());
    else
      fail(r, "expected a non-cocommutative deconcatenation witness, found none");
    ++r.checks;
  }
  return r;
}

VerifyResult verify_projection(int max_degree) {
  VerifyResult r;
  r.identity = "projection";
  r.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    const FormalSum w = wick(n);
    if (wick_of(w) != w)
      fail(r, "projection idempotence fails on " + std::to_string(n) + " dots");
    ++r.checks;
  }
  for (const Diagram& d : diagrams_up_to(std::min(max_degree, 8), DiagramFilter::all)) {
    if (!d.has_chord()) continue;
    if (!wick_of(d).is_zero()) fail(r, "wick does not kill " + d.code());
    ++r.checks;
  }
  return r;
}

VerifyResult verify_convolution(int max_degree) {
  VerifyResult r;
  r.identity = "convolution";
  r.max_degree = max_degree;
  const LinearMap identity = [](const Diagram& d) { return FormalSum(d); };
  const LinearMap h = [](const Diagram& d) { return h_map(d); };
  for (int n = 0; n <= max_degree; ++n) {
    const Diagram dots = Diagram::dots(n);
    if (convolve(identity, h, dots) != wick(n))
      fail(r, "convolution identity fails on " + std::to_string(n) + " dots");
    ++r.checks;
  }
  return r;
}

VerifyResult verify_product(int max_degree) {
  VerifyResult r;
  r.identity = "product";
  r.max_degree = max_degree;
  for (int n = 1; n < max_degree; ++n)
    for (int m = 1; n + m <= max_degree; ++m) {
      const FormalSum lhs = mu(wick(n), wick(m));
      const FormalSum rhs = wick(n + m) + wick_product_expansion(n, m);
      if (lhs != rhs)
        fail(r, "product formula fails on (" + std::to_string(n) + "," +
                    std::to_string(m) + ")");
      ++r.checks;
    }
  return r;
}

VerifyResult verify_signs(int max_degree) {
  VerifyResult r;
  r.identity = "signs";
  r.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) {
    const FormalSum w = wick(n);
    if (wick_closed(n) != w)
      fail(r, "closed form disagrees with recursion at " + std::to_string(n) + " dots");
    ++r.checks;
    for (const auto& [d, c] : w.terms()) {
      const std::vector<Diagram> blocks = concat_blocks(d);
      int nontrivial_blocks = 0;
      bool blocks_ok = true;
      for (const Diagram& b : blocks) {
        if (b.degree() == 0 || !is_connected(b) || !is_quasiplanar(b)) blocks_ok = false;
        if (b.degree() > 1) {
          ++nontrivial_blocks;
          if (b.dot_count() != 0 || b.degree() % 2 != 0) blocks_ok = false;
        }
      }
      if (!blocks_ok) fail(r, "term " + d.code() + " has a non-catalog block");
      ++r.checks;
      const Int expected = nontrivial_blocks % 2 ? -1 : 1;
      const Int by_count = (n + static_cast<int>(blocks.size())) % 2 ? -1 : 1;
      if (c != expected || c != by_count)
        fail(r, "sign law fails on term " + d.code() + " of wick(" +
                    std::to_string(n) + ")");
      ++r.checks;
    }
  }
  return r;
}

const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> registry{
      {"hopf-concat", 6, verify_hopf_concat},
      {"hopf-shuffle", 6, verify_hopf_shuffle},
      {"projection", 10, verify_projection},
      {"convolution", 8, verify_convolution},
      {"product", 8, verify_product},
      {"signs", 10, verify_signs},
  };
  return registry;
}

}  // namespace dotchord
