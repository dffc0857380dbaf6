// Exact integer linear combinations of diagrams and of diagram tensors.
#ifndef DOTCHORD_FORMAL_SUM_HPP
#define DOTCHORD_FORMAL_SUM_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "dotchord/diagram.hpp"

namespace dotchord {

using Int = boost::multiprecision::cpp_int;

// Z-linear combination of diagrams, stored sparsely with exact coefficients.
class FormalSum {
 public:
  FormalSum() = default;
  explicit FormalSum(const Diagram& d) { terms_[d] = 1; }
  FormalSum(const Diagram& d, Int c) { add_term(d, std::move(c)); }

  static FormalSum zero() { return {}; }
  static FormalSum unit() { return FormalSum(Diagram()); }  // empty diagram

  void add_term(const Diagram& d, Int c);
  Int coefficient(const Diagram& d) const;

  const std::map<Diagram, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  FormalSum& operator*=(const Int& k);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(const Int& k, FormalSum s) { return s *= k; }
  FormalSum operator-() const;
  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

  // Extends a map defined on diagrams by linearity.
  FormalSum apply(const std::function<FormalSum(const Diagram&)>& f) const;

  // "....  - ..AA + 2*AABB" style; empty diagram prints as "1", zero as "0".
  std::string text() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::map<Diagram, Int> terms_;
};

// Z-linear combination of two-sided diagram tensors.
class TensorSum {
 public:
  TensorSum() = default;

  void add_term(const Diagram& left, const Diagram& right, Int c);
  Int coefficient(const Diagram& left, const Diagram& right) const;

  const std::map<std::pair<Diagram, Diagram>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  TensorSum& operator*=(const Int& k);
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend TensorSum operator*(const Int& k, TensorSum s) { return s *= k; }
  bool operator==(const TensorSum& o) const { return terms_ == o.terms_; }

  TensorSum flip() const;  // swaps the two sides of every term

  TensorSum map_left(const std::function<FormalSum(const Diagram&)>& f) const;
  TensorSum map_right(const std::function<FormalSum(const Diagram&)>& f) const;
  // Collapses each elementary tensor with a bilinear rule.
  FormalSum collapse(
      const std::function<FormalSum(const Diagram&, const Diagram&)>& f) const;

  std::string text() const;  // "A (x) B" per elementary tensor
  nlohmann::ordered_json to_json() const;

 private:
  std::map<std::pair<Diagram, Diagram>, Int> terms_;
};

}  // namespace dotchord

#endif
