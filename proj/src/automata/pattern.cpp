#include "homog/automata/pattern.hpp"

#include <cctype>

#include "homog/error.hpp"

namespace homog {

namespace pat {

namespace {
PatternPtr make(Pattern::Kind kind, std::vector<PatternPtr> children = {}) {
  auto p = std::make_shared<Pattern>();
  p->kind = kind;
  p->children = std::move(children);
  return p;
}
}  // namespace

PatternPtr empty() { return make(Pattern::Kind::Empty); }
PatternPtr eps() { return make(Pattern::Kind::Epsilon); }
PatternPtr letter(Letter l) { return any_of({l}); }
PatternPtr any_of(std::vector<Letter> letters) {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::Symbols;
  p->symbols = std::move(letters);
  return p;
}
PatternPtr word(const Word& w) {
  std::vector<PatternPtr> parts;
  for (Letter l : w) parts.push_back(letter(l));
  return concat(std::move(parts));
}
PatternPtr concat(std::vector<PatternPtr> parts) {
  if (parts.empty()) return eps();
  if (parts.size() == 1) return parts.front();
  return make(Pattern::Kind::Concat, std::move(parts));
}
PatternPtr alt(std::vector<PatternPtr> parts) {
  if (parts.empty()) return empty();
  if (parts.size() == 1) return parts.front();
  return make(Pattern::Kind::Union, std::move(parts));
}
PatternPtr intersect(PatternPtr a, PatternPtr b) { return make(Pattern::Kind::Intersect, {std::move(a), std::move(b)}); }
PatternPtr minus(PatternPtr a, PatternPtr b) { return make(Pattern::Kind::Difference, {std::move(a), std::move(b)}); }
PatternPtr star(PatternPtr p) { return make(Pattern::Kind::Star, {std::move(p)}); }
PatternPtr plus(PatternPtr p) { return make(Pattern::Kind::Plus, {std::move(p)}); }
PatternPtr opt(PatternPtr p) { return make(Pattern::Kind::Optional, {std::move(p)}); }
PatternPtr complement(PatternPtr p) { return make(Pattern::Kind::Complement, {std::move(p)}); }
PatternPtr fixed(Dfa dfa) {
  auto p = std::make_shared<Pattern>();
  p->kind = Pattern::Kind::Fixed;
  p->fixed = std::make_shared<const Dfa>(std::move(dfa));
  return p;
}

}  // namespace pat

namespace {

bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class PatternParser {
 public:
  PatternParser(std::string_view text, const Alphabet& alphabet, const PatternEnv& env)
      : text_(text), alphabet_(alphabet), env_(env) {}

  PatternPtr parse() {
    auto p = parse_union();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
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
    throw ParseError("pattern '" + std::string(text_) + "': " + msg);
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return name_char(c) || c == '(' || c == '[' || c == '~' || c == '@';
  }

  PatternPtr parse_union() {
    std::vector<PatternPtr> parts{parse_inter()};
    while (eat('|')) parts.push_back(parse_inter());
    return pat::alt(std::move(parts));
  }
  PatternPtr parse_inter() {
    auto left = parse_concat();
    while (true) {
      if (eat('&')) {
        left = pat::intersect(left, parse_concat());
      } else if (eat('-')) {
        left = pat::minus(left, parse_concat());
      } else {
        return left;
      }
    }
  }
  PatternPtr parse_concat() {
    std::vector<PatternPtr> parts;
    while (at_atom_start()) parts.push_back(parse_unary());
    if (parts.empty()) fail("expected an expression");
    return pat::concat(std::move(parts));
  }
  PatternPtr parse_unary() {
    if (eat('~')) return pat::complement(parse_unary());
    auto p = parse_atom();
    while (true) {
      if (eat('*')) {
        p = pat::star(p);
      } else if (eat('+')) {
        p = pat::plus(p);
      } else if (eat('?')) {
        p = pat::opt(p);
      } else {
        return p;
      }
    }
  }
  PatternPtr parse_atom() {
    if (eat('(')) {
      auto p = parse_union();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (eat('[')) {
      std::vector<Letter> letters;
      while (!peek(']')) {
        auto n = name();
        if (n.empty()) fail("expected a letter inside [...]");
        append_letters(n, letters);
      }
      eat(']');
      return pat::any_of(std::move(letters));
    }
    if (eat('@')) {
      auto n = name();
      auto it = env_.find(n);
      if (it == env_.end()) fail("unknown language @" + n);
      return pat::fixed(it->second);
    }
    auto n = name();
    if (n.empty()) fail("expected an expression");
    if (n == "eps") return pat::eps();
    if (n == "empty") return pat::empty();
    if (n == "any") {
      std::vector<Letter> all;
      for (Letter l = 0; l < alphabet_.size(); ++l) all.push_back(l);
      return pat::any_of(std::move(all));
    }
    if (auto l = alphabet_.find(n)) return pat::letter(*l);
    std::vector<Letter> letters;
    append_letters(n, letters);
    std::vector<PatternPtr> parts;
    for (Letter l : letters) parts.push_back(pat::letter(l));
    // A postfix operator after an unspaced run applies to the last letter only.
    if (peek('*') || peek('+') || peek('?')) fail("operator after unspaced run '" + n + "' is ambiguous");
    return pat::concat(std::move(parts));
  }
  void append_letters(const std::string& n, std::vector<Letter>& out) {
    if (auto l = alphabet_.find(n)) {
      out.push_back(*l);
      return;
    }
    if (!alphabet_.single_char()) fail("unknown letter '" + n + "'");
    for (char c : n) {
      auto l = alphabet_.find(std::string_view(&c, 1));
      if (!l) fail("unknown letter '" + std::string(1, c) + "'");
      out.push_back(*l);
    }
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  const PatternEnv& env_;
  std::size_t pos_ = 0;
};

}  // namespace

PatternPtr parse_pattern(std::string_view text, const Alphabet& alphabet, const PatternEnv& env) {
  return PatternParser(text, alphabet, env).parse();
}

Dfa compile(const Pattern& p, const std::vector<std::string>& symbols) {
  using K = Pattern::Kind;
  switch (p.kind) {
    case K::Empty: return Dfa::empty_language(symbols);
    case K::Epsilon: return word_dfa(symbols, {});
    case K::Symbols: {
      Dfa d(symbols);
      State s0 = d.add_state(false);
      State s1 = d.add_state(true);
      State sink = d.add_state(false);
      for (Letter x = 0; x < symbols.size(); ++x) {
        d.set_transition(s0, x, sink);
        d.set_transition(s1, x, sink);
        d.set_transition(sink, x, sink);
      }
      for (Letter l : p.symbols) {
        if (l >= symbols.size()) throw Error("pattern letter outside alphabet");
        d.set_transition(s0, l, s1);
      }
      d.set_start(s0);
      return minimize(d);
    }
    case K::Concat: {
      Dfa acc = compile(*p.children.front(), symbols);
      for (std::size_t i = 1; i < p.children.size(); ++i) acc = concatenate(acc, compile(*p.children[i], symbols));
      return acc;
    }
    case K::Union: {
      Dfa acc = compile(*p.children.front(), symbols);
      for (std::size_t i = 1; i < p.children.size(); ++i) acc = unite(acc, compile(*p.children[i], symbols));
      return acc;
    }
    case K::Intersect: return intersect(compile(*p.children[0], symbols), compile(*p.children[1], symbols));
    case K::Difference: return difference(compile(*p.children[0], symbols), compile(*p.children[1], symbols));
    case K::Star: return star(compile(*p.children[0], symbols));
    case K::Plus: {
      Dfa c = compile(*p.children[0], symbols);
      return concatenate(c, star(c));
    }
    case K::Optional: return unite(compile(*p.children[0], symbols), word_dfa(symbols, {}));
    case K::Complement: return minimize(complement(compile(*p.children[0], symbols)));
    case K::Fixed: {
      if (p.fixed->symbols() != symbols) return embed_symbols(*p.fixed, symbols);
      return minimize(*p.fixed);
    }
  }
  throw Error("unreachable pattern kind");
}

Dfa compile_pattern(std::string_view text, const Alphabet& alphabet, const PatternEnv& env) {
  return compile(*parse_pattern(text, alphabet, env), alphabet.names());
}

}  // namespace homog
