#include <algorithm>

#include "homog/derivation/derivation.hpp"
#include "homog/error.hpp"
#include "homog/rewrite/rules.hpp"

namespace homog {

CircuitBuilder::CircuitBuilder(const Presentation& p) : alphabet_(p.alphabet) {
  auto letter = [&](const char* name) {
    auto l = p.alphabet.find(name);
    if (!l) throw Error(std::string("presentation has no letter '") + name + "'");
    return *l;
  };
  a_ = letter("a");
  b_ = letter("b");
  c_ = letter("c");
  rules_["K_a"] = {{a_, c_}, {c_, a_}};
  rules_["K_b"] = {{b_, c_}, {c_, b_}};
  rules_["C"] = {{c_, a_, b_}, {c_, b_, b_}};
  auto instances = instantiate_schemes(p, 3);
  for (const auto& [name, rule] : rules_) {
    bool found = std::any_of(instances.begin(), instances.end(),
                             [&](const RuleInstance& r) { return r.lhs == rule.first && r.rhs == rule.second; });
    if (!found) throw Error("presentation lacks rule " + name);
  }
}

Edge CircuitBuilder::edge(const Word& x, const std::string& rule, int sign, const Word& y) const {
  auto it = rules_.find(rule);
  if (it == rules_.end()) throw Error("unknown rule " + rule);
  return Edge{x, it->second.first, it->second.second, sign, y, rule};
}

DerivationPath CircuitBuilder::c_path(const Word& u) const {
  if (std::find(u.begin(), u.end(), c_) != u.end()) throw Error("C_u needs u over {a, b}");
  if (u.empty()) return DerivationPath(edge({}, "C", 1, {}));
  Letter x = u.front();
  Word rest(u.begin() + 1, u.end());
  std::string k = x == a_ ? "K_a" : "K_b";
  DerivationPath p(edge({}, k, -1, concat(rest, {a_, b_})));
  p = compose(p, act({x}, c_path(rest), {}));
  p.push_back(edge({}, k, 1, concat(rest, {b_, b_})));
  return p;
}

DerivationPath CircuitBuilder::ct1(Letter x, const Word& u) const {
  if (x != a_ && x != b_) throw Error("CT1 needs x in {a, b}");
  std::string k = x == a_ ? "K_a" : "K_b";
  DerivationPath right = act({x}, c_path(u), {});
  right.push_back(edge({}, k, 1, concat(u, {b_, b_})));
  DerivationPath left(edge({}, k, 1, concat(u, {a_, b_})));
  left = compose(left, c_path(concat({x}, u)));
  return compose(right, inverse(left));
}

DerivationPath CircuitBuilder::ct2(const Word& u) const {
  Word cu = concat({c_}, u);
  DerivationPath right(edge(concat(cu, {a_}), "K_b", 1, {}));
  right.push_back(edge(cu, "K_a", 1, {b_}));
  right.push_back(edge(cu, "C", 1, {}));
  DerivationPath left = act({}, c_path(u), {c_});
  left.push_back(edge(concat(cu, {b_}), "K_b", 1, {}));
  left.push_back(edge(cu, "K_b", 1, {b_}));
  return compose(right, inverse(left));
}

DerivationPath CircuitBuilder::ct3(const Word& u, const Word& v) const {
  Word ab{a_, b_}, bb{b_, b_};
  DerivationPath right = compose(c_path(concat(u, ab, v)), act({}, c_path(u), concat(v, bb)));
  DerivationPath left = compose(act({}, c_path(u), concat(v, ab)), c_path(concat(u, bb, v)));
  return compose(right, inverse(left));
}

FreeRingElement CircuitBuilder::phi_eval(const DerivationPath& p) const {
  auto check = [&](const Word& w) {
    if (std::count(w.begin(), w.end(), c_) != 1) {
      throw Error("Φ is defined on the one-c component; vertex " + alphabet_.format(w) + " differs");
    }
  };
  check(p.source());
  FreeRingElement out;
  for (const auto& e : p.edges()) {
    check(e.target());
    out.add(e.w1, e.sign);
  }
  return out;
}

}  // namespace homog
