#include "homog/derivation/derivation.hpp"
#include "homog/error.hpp"

namespace homog {

Word Edge::source() const { return concat(w1, sign > 0 ? plus : minus, w2); }
Word Edge::target() const { return concat(w1, sign > 0 ? minus : plus, w2); }

Edge Edge::inverse() const {
  Edge e = *this;
  e.sign = -sign;
  return e;
}

DerivationPath::DerivationPath(Edge e) : anchor_(e.source()) { edges_.push_back(std::move(e)); }

Word DerivationPath::source() const { return edges_.empty() ? anchor_ : edges_.front().source(); }
Word DerivationPath::target() const { return edges_.empty() ? anchor_ : edges_.back().target(); }

void DerivationPath::push_back(Edge e) {
  if (e.source() != target()) throw Error("edge does not start where the path ends");
  edges_.push_back(std::move(e));
}

DerivationPath compose(const DerivationPath& p, const DerivationPath& q) {
  if (p.target() != q.source()) throw Error("paths do not compose: endpoint mismatch");
  DerivationPath out = p;
  for (const auto& e : q.edges()) out.push_back(e);
  return out;
}

DerivationPath inverse(const DerivationPath& p) {
  DerivationPath out(p.target());
  for (auto it = p.edges().rbegin(); it != p.edges().rend(); ++it) out.push_back(it->inverse());
  return out;
}

DerivationPath act(const Word& x, const DerivationPath& p, const Word& y) {
  DerivationPath out(concat(x, p.source(), y));
  for (auto e : p.edges()) {
    e.w1 = concat(x, e.w1);
    e.w2 = concat(e.w2, y);
    out.push_back(std::move(e));
  }
  return out;
}

bool is_parallel(const DerivationPath& p, const DerivationPath& q) {
  return p.source() == q.source() && p.target() == q.target();
}

std::string format_path(const Alphabet& alphabet, const DerivationPath& p) {
  std::string out;
  for (const auto& e : p.edges()) {
    out += alphabet.format(e.w1) + " | " + alphabet.format(e.plus) + " -> " + alphabet.format(e.minus) + " | " +
           (e.sign > 0 ? "+1" : "-1") + " | " + alphabet.format(e.w2) + "\n";
  }
  return out;
}

FreeRingElement phi_eval_monoid(const DerivationPath& p, const Oracle& oracle) {
  FreeRingElement out;
  for (const auto& e : p.edges()) out.add(oracle.representative(e.w1), e.sign);
  return out;
}

}  // namespace homog
