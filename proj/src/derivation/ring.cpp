#include "homog/derivation/derivation.hpp"

namespace homog {

FreeRingElement FreeRingElement::word(const Word& w, std::int64_t coefficient) {
  FreeRingElement e;
  e.add(w, coefficient);
  return e;
}

std::int64_t FreeRingElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void FreeRingElement::add(const Word& w, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.emplace(w, coefficient);
  if (!fresh) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeRingElement& FreeRingElement::operator+=(const FreeRingElement& other) {
  for (const auto& [w, k] : other.terms_) add(w, k);
  return *this;
}

FreeRingElement& FreeRingElement::operator-=(const FreeRingElement& other) {
  for (const auto& [w, k] : other.terms_) add(w, -k);
  return *this;
}

FreeRingElement FreeRingElement::operator-() const {
  FreeRingElement out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, -k);
  return out;
}

FreeRingElement FreeRingElement::multiplied(const Word& left, const Word& right) const {
  FreeRingElement out;
  for (const auto& [w, k] : terms_) out.add(concat(left, w, right), k);
  return out;
}

std::string FreeRingElement::format(const Alphabet& alphabet) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, k] : terms_) {
    std::int64_t mag = k < 0 ? -k : k;
    if (first) {
      if (k < 0) out += "-";
    } else {
      out += k < 0 ? " - " : " + ";
    }
    std::string body = w.empty() ? "" : alphabet.format(w);
    if (mag != 1) {
      out += std::to_string(mag) + (body.empty() ? "" : "·" + body);
    } else {
      out += body.empty() ? "1" : body;
    }
    first = false;
  }
  return out;
}

FreeRingElement ab_minus_bb(Letter a, Letter b) {
  FreeRingElement e;
  e.add({a, b}, 1);
  e.add({b, b}, -1);
  return e;
}

}  // namespace homog
