#include "homog/rewrite/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "homog/error.hpp"

namespace homog {

TermOrder::TermOrder(Kind kind, std::vector<Letter> precedence, std::vector<std::size_t> weights)
    : kind_(kind), precedence_(std::move(precedence)), weights_(std::move(weights)) {
  rank_.assign(precedence_.size(), precedence_.size());
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    Letter l = precedence_[i];
    if (l >= rank_.size() || rank_[l] != precedence_.size()) {
      throw Error("term order precedence must list every letter exactly once");
    }
    rank_[l] = i;
  }
  if (kind_ == Kind::WeightedLex) {
    if (weights_.size() != precedence_.size()) throw Error("weighted order needs one weight per letter");
    if (std::find(weights_.begin(), weights_.end(), 0) != weights_.end()) {
      throw Error("weights must be positive");
    }
  }
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    std::string part(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    auto b = part.find_first_not_of(" \t");
    auto e = part.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? std::string() : part.substr(b, e - b + 1));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Letter> parse_precedence(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> ascending;
  if (!text.empty()) {
    bool has_gt = text.find('>') != std::string_view::npos;
    bool has_lt = text.find('<') != std::string_view::npos;
    if (has_gt && has_lt) throw Error("precedence mixes '<' and '>'");
    for (const auto& name : split(text, has_gt ? '>' : '<')) ascending.push_back(alphabet.at(name));
    if (has_gt) std::reverse(ascending.begin(), ascending.end());
  }
  std::vector<bool> seen(alphabet.size(), false);
  for (Letter l : ascending) {
    if (seen[l]) throw Error("letter '" + alphabet.name(l) + "' repeated in precedence");
    seen[l] = true;
  }
  for (Letter l = 0; l < alphabet.size(); ++l) {
    if (!seen[l]) ascending.push_back(l);
  }
  return ascending;
}

}  // namespace

TermOrder TermOrder::parse(std::string_view spec, const Alphabet& alphabet) {
  auto colon = spec.find(':');
  std::string kind(spec.substr(0, colon));
  std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (kind == "shortlex") return TermOrder(Kind::Shortlex, parse_precedence(rest, alphabet));
  if (kind == "rtl") return TermOrder(Kind::RightToLeft, parse_precedence(rest, alphabet));
  if (kind == "wlex") {
    auto colon2 = rest.find(':');
    std::vector<std::size_t> weights(alphabet.size(), 1);
    for (const auto& item : split(rest.substr(0, colon2), ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("expected letter=weight in '" + item + "'");
      weights[alphabet.at(item.substr(0, eq))] = std::stoul(item.substr(eq + 1));
    }
    auto prec = colon2 == std::string_view::npos ? std::string_view{} : rest.substr(colon2 + 1);
    return TermOrder(Kind::WeightedLex, parse_precedence(prec, alphabet), std::move(weights));
  }
  throw Error("unknown order kind '" + kind + "' (expected shortlex, rtl or wlex)");
}

bool TermOrder::less(const Word& u, const Word& v) const {
  if (kind_ == Kind::WeightedLex) {
    std::size_t wu = 0, wv = 0;
    for (Letter l : u) wu += weights_.at(l);
    for (Letter l : v) wv += weights_.at(l);
    if (wu != wv) return wu < wv;
  }
  if (u.size() != v.size()) return u.size() < v.size();
  if (kind_ == Kind::RightToLeft) {
    for (std::size_t i = u.size(); i-- > 0;) {
      if (u[i] != v[i]) return rank_[u[i]] < rank_[v[i]];
    }
    return false;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return rank_[u[i]] < rank_[v[i]];
  }
  return false;
}

std::string TermOrder::describe(const Alphabet& alphabet) const {
  std::string out;
  switch (kind_) {
    case Kind::Shortlex: out = "shortlex:"; break;
    case Kind::RightToLeft: out = "rtl:"; break;
    case Kind::WeightedLex: {
      out = "wlex:";
      for (Letter l = 0; l < weights_.size(); ++l) {
        if (l) out += ',';
        out += alphabet.name(l) + "=" + std::to_string(weights_[l]);
      }
      out += ':';
      break;
    }
  }
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    if (i) out += '<';
    out += alphabet.name(precedence_[i]);
  }
  return out;
}

bool check_termination(const RuleSet& rules, const TermOrder& order) {
  return std::all_of(rules.begin(), rules.end(),
                     [&](const RuleInstance& r) { return order.greater(r.lhs, r.rhs); });
}

std::optional<TermOrder> find_termination_order(const RuleSet& rules, const Alphabet& alphabet,
                                                std::size_t max_letters) {
  std::vector<Letter> base;
  for (Letter l = 0; l < alphabet.size(); ++l) base.push_back(l);
  for (auto kind : {TermOrder::Kind::Shortlex, TermOrder::Kind::RightToLeft}) {
    if (alphabet.size() > max_letters) {
      for (auto prec : {base, std::vector<Letter>(base.rbegin(), base.rend())}) {
        TermOrder order(kind, prec);
        if (check_termination(rules, order)) return order;
      }
      continue;
    }
    auto prec = base;
    do {
      TermOrder order(kind, prec);
      if (check_termination(rules, order)) return order;
    } while (std::next_permutation(prec.begin(), prec.end()));
  }
  return std::nullopt;
}

}  // namespace homog
