#include "dotchord/formal_sum.hpp"

#include <sstream>

namespace dotchord {

namespace {

std::string term_text(const Int& magnitude, const std::string& code) {
  std::string body = code.empty() ? "1" : code;
  if (magnitude == 1) return body;
  if (code.empty()) return magnitude.str();
  return magnitude.str() + "*" + body;
}

}  // namespace

void FormalSum::add_term(const Diagram& d, Int c) {
  if (c == 0) return;
  const auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int FormalSum::coefficient(const Diagram& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? Int(0) : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

FormalSum& FormalSum::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= k;
  return *this;
}

FormalSum FormalSum::operator-() const {
  FormalSum out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

FormalSum FormalSum::apply(const std::function<FormalSum(const Diagram&)>& f) const {
  FormalSum out;
  for (const auto& [d, c] : terms_) {
    FormalSum image = f(d);
    image *= c;
    out += image;
  }
  return out;
}

std::string FormalSum::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << term_text(abs(c), d.code());
  }
  return out.str();
}

nlohmann::ordered_json FormalSum::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [d, c] : terms_)
    terms.push_back({{"coeff", c.str()}, {"diagram", d.code()}});
  return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

void TensorSum::add_term(const Diagram& left, const Diagram& right, Int c) {
  if (c == 0) return;
  auto key = std::make_pair(left, right);
  const auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), std::move(c));
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int TensorSum::coefficient(const Diagram& left, const Diagram& right) const {
  const auto it = terms_.find(std::make_pair(left, right));
  return it == terms_.end() ? Int(0) : it->second;
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  for (const auto& [t, c] : o.terms_) add_term(t.first, t.second, c);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  for (const auto& [t, c] : o.terms_) add_term(t.first, t.second, -c);
  return *this;
}

TensorSum& TensorSum::operator*=(const Int& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= k;
  return *this;
}

TensorSum TensorSum::flip() const {
  TensorSum out;
  for (const auto& [t, c] : terms_) out.add_term(t.second, t.first, c);
  return out;
}

TensorSum TensorSum::map_left(const std::function<FormalSum(const Diagram&)>& f) const {
  TensorSum out;
  for (const auto& [t, c] : terms_) {
    const FormalSum image = f(t.first);
    for (const auto& [d, k] : image.terms()) out.add_term(d, t.second, k * c);
  }
  return out;
}

TensorSum TensorSum::map_right(const std::function<FormalSum(const Diagram&)>& f) const {
  TensorSum out;
  for (const auto& [t, c] : terms_) {
    const FormalSum image = f(t.second);
    for (const auto& [d, k] : image.terms()) out.add_term(t.first, d, k * c);
  }
  return out;
}

FormalSum TensorSum::collapse(
    const std::function<FormalSum(const Diagram&, const Diagram&)>& f) const {
  FormalSum out;
  for (const auto& [t, c] : terms_) {
    FormalSum image = f(t.first, t.second);
    image *= c;
    out += image;
  }
  return out;
}

std::string TensorSum::text() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const std::string left = t.first.code().empty() ? "1" : t.first.code();
    const std::string right = t.second.code().empty() ? "1" : t.second.code();
    const Int mag = abs(c);
    if (mag != 1) out << mag.str() << "*";
    out << left << " (x) " << right;
  }
  return out.str();
}

nlohmann::ordered_json TensorSum::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [t, c] : terms_)
    terms.push_back(
        {{"coeff", c.str()}, {"left", t.first.code()}, {"right", t.second.code()}});
  return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

}  // namespace dotchord
