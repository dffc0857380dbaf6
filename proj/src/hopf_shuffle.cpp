#include "dotchord/hopf_shuffle.hpp"

#include <map>

#include "dotchord/hopf_concat.hpp"
#include "dotchord/wick.hpp"

namespace dotchord {

std::vector<Diagram> factor_sequence(const Diagram& d) {
  std::vector<Diagram> blocks = concat_blocks(d);
  for (const Diagram& b : blocks)
    if (!is_connected(b))
      throw DomainError("no unique factorization into connected diagrams: block " +
                        b.code() + " of " + d.code() + " is disconnected");
  return blocks;
}

bool has_factor_sequence(const Diagram& d) {
  for (const Diagram& b : concat_blocks(d))
    if (!is_connected(b)) return false;
  return true;
}

namespace {

void interleave(const std::vector<Diagram>& a, const std::vector<Diagram>& b,
                std::size_t i, std::size_t j, const Diagram& prefix, FormalSum& out) {
  if (i == a.size() && j == b.size()) {
    out.add_term(prefix, 1);
    return;
  }
  if (i < a.size()) interleave(a, b, i + 1, j, concat(prefix, a[i]), out);
  if (j < b.size()) interleave(a, b, i, j + 1, concat(prefix, b[j]), out);
}

Diagram concat_range(const std::vector<Diagram>& blocks, std::size_t from,
                     std::size_t to) {
  Diagram out;
  for (std::size_t i = from; i < to; ++i) out = concat(out, blocks[i]);
  return out;
}

}  // namespace

FormalSum shuffle(const Diagram& a, const Diagram& b) {
  const std::vector<Diagram> fa = factor_sequence(a), fb = factor_sequence(b);
  FormalSum out;
  interleave(fa, fb, 0, 0, Diagram(), out);
  return out;
}

FormalSum shuffle(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [da, ca] : a.terms())
    for (const auto& [db, cb] : b.terms()) {
      FormalSum part = shuffle(da, db);
      part *= ca * cb;
      out += part;
    }
  return out;
}

TensorSum deconcat(const Diagram& d) {
  const std::vector<Diagram> blocks = factor_sequence(d);
  TensorSum out;
  for (std::size_t k = 0; k <= blocks.size(); ++k)
    out.add_term(concat_range(blocks, 0, k), concat_range(blocks, k, blocks.size()), 1);
  return out;
}

TensorSum deconcat(const FormalSum& s) {
  TensorSum out;
  for (const auto& [d, c] : s.terms()) {
    TensorSum t = deconcat(d);
    t *= c;
    out += t;
  }
  return out;
}

FormalSum shuffle_antipode(const Diagram& d) {
  const std::vector<Diagram> blocks = factor_sequence(d);
  Diagram reversed;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    reversed = concat(reversed, *it);
  FormalSum out(reversed);
  if (blocks.size() % 2) out *= -1;
  return out;
}

FormalSum shuffle_antipode(const FormalSum& s) {
  return s.apply([](const Diagram& d) { return shuffle_antipode(d); });
}

namespace {

// alternating sum over factorizations into connected chord-only blocks
FormalSum h_value(int n) {
  static std::map<int, FormalSum> memo{{0, FormalSum::unit()}};
  if (const auto it = memo.find(n); it != memo.end()) return it->second;
  FormalSum out;
  for (int m = 2; m <= n; m += 2) {  // connected chord-only blocks are even
    FormalSum block = CqCatalog::instance().sum(m);
    if (block.is_zero()) continue;
    out -= mu(block, h_value(n - m));
  }
  memo.emplace(n, out);
  return out;
}

}  // namespace

FormalSum h_map(const Diagram& d) {
  if (d.has_chord()) return FormalSum::zero();
  return h_value(d.degree());
}

FormalSum convolve(const LinearMap& f, const LinearMap& g, const Diagram& d) {
  FormalSum out;
  for (const ConvolutionStep& step : convolve_trace(f, g, d)) out += step.contribution;
  return out;
}

std::vector<ConvolutionStep> convolve_trace(const LinearMap& f, const LinearMap& g,
                                            const Diagram& d) {
  const std::vector<Diagram> blocks = factor_sequence(d);
  std::vector<ConvolutionStep> steps;
  for (std::size_t k = 0; k <= blocks.size(); ++k) {
    ConvolutionStep step;
    step.split = static_cast<int>(k);
    step.left = concat_range(blocks, 0, k);
    step.right = concat_range(blocks, k, blocks.size());
    step.contribution = shuffle(f(step.left), g(step.right));
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace dotchord
