#include "homog/automata/relation_expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "homog/error.hpp"

namespace homog {

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class RelationParser {
 public:
  RelationParser(std::string_view text, const Alphabet& alphabet, const PatternEnv& env)
      : text_(text), alphabet_(alphabet), env_(env) {}

  Transducer parse() {
    auto t = parse_union();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return trim(t);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("relation '" + std::string(text_) + "': " + msg);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Transducer epsilon() const {
    Transducer t(alphabet_.names(), alphabet_.names());
    t.set_start(t.add_state(true));
    return t;
  }

  Transducer parse_union() {
    Transducer t = parse_seq();
    while (eat('|')) t = unite(t, parse_seq());
    return t;
  }
  Transducer parse_seq() {
    std::optional<Transducer> t;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || !(name_char(text_[pos_]) || text_[pos_] == '(' || text_[pos_] == '[')) break;
      Transducer next = parse_postfix();
      t = t ? concatenate(*t, next) : std::move(next);
    }
    if (!t) fail("expected a relation");
    return *t;
  }
  Transducer parse_postfix() {
    Transducer t = parse_atom();
    while (true) {
      if (eat('*')) {
        t = star(t);
      } else if (eat('+')) {
        t = concatenate(t, star(t));
      } else if (eat('?')) {
        t = unite(t, epsilon());
      } else {
        return t;
      }
    }
  }
  Transducer parse_atom() {
    if (eat('(')) {
      auto t = parse_union();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    std::size_t save = pos_;
    if (name() == "id" && eat('(')) {
      std::size_t start = pos_;
      int depth = 1;
      while (pos_ < text_.size() && depth > 0) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')') --depth;
        ++pos_;
      }
      if (depth != 0) fail("unbalanced id(...)");
      auto inner = text_.substr(start, pos_ - start - 1);
      return identity_transducer(compile_pattern(inner, alphabet_, env_));
    }
    pos_ = save;
    auto in = parse_side();
    if (!eat(':')) fail("expected ':' in pair");
    auto out = parse_side();
    Transducer t(alphabet_.names(), alphabet_.names());
    State s = t.add_state(false);
    State f = t.add_state(true);
    for (auto x : in) {
      for (auto y : out) t.add_arc(s, f, x, y);
    }
    t.set_start(s);
    return t;
  }
  std::vector<std::optional<Letter>> parse_side() {
    std::vector<std::optional<Letter>> out;
    if (eat('[')) {
      while (!peek(']')) {
        auto n = name();
        if (n.empty()) fail("expected a letter inside [...]");
        out.emplace_back(letter(n));
      }
      eat(']');
      return out;
    }
    auto n = name();
    if (n.empty()) fail("expected a letter, eps, any or [...]");
    if (n == "eps") return {std::nullopt};
    if (n == "any") {
      for (Letter l = 0; l < alphabet_.size(); ++l) out.emplace_back(l);
      return out;
    }
    out.emplace_back(letter(n));
    return out;
  }
  Letter letter(const std::string& n) const {
    auto l = alphabet_.find(n);
    if (!l) fail("unknown letter '" + n + "'");
    return *l;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  const PatternEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

Transducer parse_relation(std::string_view text, const Alphabet& alphabet, const PatternEnv& env) {
  return RelationParser(text, alphabet, env).parse();
}

}  // namespace homog
