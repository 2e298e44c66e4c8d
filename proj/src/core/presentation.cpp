#include "homog/core/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "homog/error.hpp"

namespace homog {

RuleScheme RuleScheme::plain(const Word& lhs, const Word& rhs) {
  RuleScheme s;
  for (Letter l : lhs) s.lhs.emplace_back(LetterAtom{l});
  for (Letter l : rhs) s.rhs.emplace_back(LetterAtom{l});
  return s;
}

namespace {

Word expand_constant(const std::vector<Atom>& side) {
  Word w;
  for (const auto& atom : side) {
    if (auto* la = std::get_if<LetterAtom>(&atom)) {
      w.push_back(la->letter);
    } else if (auto* pa = std::get_if<PowerAtom>(&atom); pa && pa->exponent.is_constant()) {
      w.insert(w.end(), pa->exponent.constant, pa->letter);
    } else {
      throw Error("rule scheme has variables; instantiate it first");
    }
  }
  return w;
}

std::set<std::string> variables_of(const std::vector<Atom>& side) {
  std::set<std::string> out;
  for (const auto& atom : side) {
    if (auto* pa = std::get_if<PowerAtom>(&atom)) {
      out.insert(pa->exponent.vars.begin(), pa->exponent.vars.end());
    } else if (auto* wa = std::get_if<WordVarAtom>(&atom)) {
      out.insert(wa->name);
    }
  }
  return out;
}

}  // namespace

Word RuleScheme::plain_lhs() const { return expand_constant(lhs); }
Word RuleScheme::plain_rhs() const { return expand_constant(rhs); }

const WordVariable* RuleScheme::find_word_var(std::string_view name) const {
  for (const auto& v : word_vars) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

void RuleScheme::validate() const {
  std::set<std::string> declared;
  for (const auto& v : nat_vars) {
    if (!declared.insert(v).second) throw Error("variable '" + v + "' declared twice");
  }
  for (const auto& v : word_vars) {
    if (!declared.insert(v.name).second) throw Error("variable '" + v.name + "' declared twice");
  }
  auto in_lhs = variables_of(lhs);
  for (const auto& v : variables_of(rhs)) {
    if (!in_lhs.count(v)) throw Error("variable '" + v + "' used in rhs but not lhs");
  }
  for (const auto& v : in_lhs) {
    if (!declared.count(v)) throw Error("undeclared variable '" + v + "'");
  }
  for (const auto& v : declared) {
    if (!in_lhs.count(v)) throw Error("variable '" + v + "' declared but not used in lhs");
  }
  std::set<std::string> seen;
  for (const auto& atom : lhs) {
    if (auto* wa = std::get_if<WordVarAtom>(&atom)) {
      if (!seen.insert(wa->name).second) {
        throw Error("word variable '" + wa->name + "' occurs more than once in lhs");
      }
    }
  }
  auto check_kinds = [&](const std::vector<Atom>& side) {
    for (const auto& atom : side) {
      if (auto* pa = std::get_if<PowerAtom>(&atom)) {
        for (const auto& v : pa->exponent.vars) {
          if (find_word_var(v)) throw Error("word variable '" + v + "' used as an exponent");
        }
      } else if (auto* wa = std::get_if<WordVarAtom>(&atom)) {
        if (!find_word_var(wa->name)) throw Error("'" + wa->name + "' is not a word variable");
      }
    }
  };
  check_kinds(lhs);
  check_kinds(rhs);
}

bool Presentation::all_plain() const {
  return std::all_of(schemes.begin(), schemes.end(), [](const RuleScheme& s) { return s.is_plain(); });
}

std::vector<std::pair<Word, Word>> Presentation::plain_rules() const {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(schemes.size());
  for (const auto& s : schemes) out.emplace_back(s.plain_lhs(), s.plain_rhs());
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

bool is_number(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// Splits a rule side into atom tokens; whitespace inside `^( ... )` is kept.
std::vector<std::string> atom_tokens(std::string_view side, std::size_t line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : side) {
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')'", line);
    }
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", line);
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Exponent parse_exponent(std::string_view text, const std::set<std::string>& nat_vars, std::size_t line) {
  std::string body(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("malformed exponent '" + body + "'", line);
    body = body.substr(1, body.size() - 2);
  }
  Exponent e;
  std::size_t start = 0;
  while (true) {
    auto plus = body.find('+', start);
    auto term = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (is_number(term)) {
      e.constant += std::stoul(term);
    } else if (is_identifier(term)) {
      if (!nat_vars.count(term)) throw ParseError("undeclared exponent variable '" + term + "'", line);
      e.vars.push_back(term);
    } else {
      throw ParseError("malformed exponent '" + std::string(text) + "'", line);
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return e;
}

std::vector<Atom> parse_side(std::string_view side, const Alphabet& alphabet,
                             const std::set<std::string>& nat_vars,
                             const std::vector<WordVariable>& word_vars, std::size_t line) {
  std::vector<Atom> atoms;
  for (const auto& tok : atom_tokens(side, line)) {
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      auto base = tok.substr(0, caret);
      auto l = alphabet.find(base);
      if (!l) throw ParseError("unknown letter '" + base + "'", line);
      atoms.emplace_back(PowerAtom{*l, parse_exponent(tok.substr(caret + 1), nat_vars, line)});
      continue;
    }
    bool is_word_var = std::any_of(word_vars.begin(), word_vars.end(),
                                   [&](const WordVariable& v) { return v.name == tok; });
    if (is_word_var) {
      atoms.emplace_back(WordVarAtom{tok});
    } else if (auto l = alphabet.find(tok)) {
      atoms.emplace_back(LetterAtom{*l});
    } else if (nat_vars.count(tok)) {
      throw ParseError("exponent variable '" + tok + "' used outside an exponent", line);
    } else if (alphabet.single_char() && tok.size() > 1) {
      // unspaced run such as `cbab`
      for (char ch : tok) {
        auto run_letter = alphabet.find(std::string(1, ch));
        if (!run_letter) throw ParseError("unknown letter '" + std::string(1, ch) + "'", line);
        atoms.emplace_back(LetterAtom{*run_letter});
      }
    } else {
      throw ParseError("unknown letter '" + tok + "'", line);
    }
  }
  return atoms;
}

void parse_where(std::string_view clause, const Alphabet& alphabet, RuleScheme& scheme, std::size_t line) {
  std::string text(clause);
  std::replace(text.begin(), text.end(), ';', ',');
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    // Commas inside word(...) are not separators.
    auto paren = text.find('(', start);
    if (paren != std::string::npos && comma != std::string::npos && paren < comma) {
      auto close = text.find(')', paren);
      comma = close == std::string::npos ? std::string::npos : text.find(',', close);
    }
    auto decl = trim(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!decl.empty()) {
      auto colon = decl.find(':');
      if (colon == std::string::npos) throw ParseError("variable declaration without ':' in '" + decl + "'", line);
      auto names = split_ws(decl.substr(0, colon));
      auto kind = trim(decl.substr(colon + 1));
      if (names.empty()) throw ParseError("declaration without variable names", line);
      for (const auto& n : names) {
        if (!is_identifier(n)) throw ParseError("bad variable name '" + n + "'", line);
        if (alphabet.contains(n)) throw ParseError("variable '" + n + "' clashes with a letter", line);
      }
      if (kind == "nat") {
        scheme.nat_vars.insert(scheme.nat_vars.end(), names.begin(), names.end());
      } else if (kind.rfind("word", 0) == 0) {
        auto open = kind.find('(');
        auto close = kind.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open) {
          throw ParseError("expected word(<letters>) in '" + kind + "'", line);
        }
        std::vector<Letter> letters;
        for (const auto& ln : split_ws(kind.substr(open + 1, close - open - 1))) {
          auto l = alphabet.find(ln);
          if (!l) throw ParseError("unknown letter '" + ln + "'", line);
          letters.push_back(*l);
        }
        for (const auto& n : names) scheme.word_vars.push_back({n, letters});
      } else {
        throw ParseError("unknown variable kind '" + kind + "'", line);
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
}

RuleScheme parse_rule_body(std::string_view body, const Alphabet& alphabet, bool allow_vars, std::size_t line) {
  std::string text(body);
  RuleScheme scheme;
  std::string where;
  if (allow_vars) {
    // `where` must be a whole token.
    std::istringstream in(text);
    std::string tok;
    std::size_t pos = std::string::npos;
    std::size_t offset = 0;
    while (in >> tok) {
      offset = static_cast<std::size_t>(in.tellg() == -1 ? text.size() : static_cast<std::size_t>(in.tellg()));
      if (tok == "where") {
        pos = offset - tok.size();
        break;
      }
    }
    if (pos != std::string::npos) {
      where = text.substr(pos + 5);
      text = text.substr(0, pos);
    }
    parse_where(where, alphabet, scheme, line);
  }
  auto arrow = text.find("->");
  if (arrow == std::string::npos) throw ParseError("expected '->'", line);
  if (text.find("->", arrow + 2) != std::string::npos) throw ParseError("more than one '->'", line);
  std::set<std::string> nat(scheme.nat_vars.begin(), scheme.nat_vars.end());
  scheme.lhs = parse_side(text.substr(0, arrow), alphabet, nat, scheme.word_vars, line);
  scheme.rhs = parse_side(text.substr(arrow + 2), alphabet, nat, scheme.word_vars, line);
  if (scheme.lhs.empty()) throw ParseError("empty left-hand side", line);
  try {
    scheme.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
  return scheme;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    auto line = trim(hash == std::string::npos ? std::string_view(raw) : std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<directive>:'", line_no);
    auto directive = trim(line.substr(0, colon));
    auto body = line.substr(colon + 1);
    if (directive == "letters") {
      for (auto& name : split_ws(body)) {
        if (p.alphabet.contains(name)) throw ParseError("duplicate letter '" + name + "'", line_no);
        if (!is_valid_letter_name(name)) throw ParseError("invalid letter name '" + name + "'", line_no);
        p.alphabet.add(name);
      }
    } else if (directive == "rule") {
      p.schemes.push_back(parse_rule_body(body, p.alphabet, false, line_no));
    } else if (directive == "scheme") {
      p.schemes.push_back(parse_rule_body(body, p.alphabet, true, line_no));
    } else {
      throw ParseError("unknown directive '" + directive + "'", line_no);
    }
  }
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_presentation(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string format_exponent(const Exponent& e) {
  if (e.vars.empty()) return std::to_string(e.constant);
  if (e.vars.size() == 1 && e.constant == 0) return e.vars.front();
  std::string out = "(";
  for (std::size_t i = 0; i < e.vars.size(); ++i) {
    if (i) out += '+';
    out += e.vars[i];
  }
  if (e.constant) out += "+" + std::to_string(e.constant);
  return out + ")";
}

std::string format_side(const Alphabet& alphabet, const std::vector<Atom>& side) {
  std::string out;
  for (const auto& atom : side) {
    if (!out.empty()) out += ' ';
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, LetterAtom>) {
            out += alphabet.name(a.letter);
          } else if constexpr (std::is_same_v<T, PowerAtom>) {
            out += alphabet.name(a.letter) + "^" + format_exponent(a.exponent);
          } else {
            out += a.name;
          }
        },
        atom);
  }
  return out;
}

}  // namespace

std::string format_scheme(const Alphabet& alphabet, const RuleScheme& s) {
  std::string out = format_side(alphabet, s.lhs) + " -> " + format_side(alphabet, s.rhs);
  if (s.is_plain()) return out;
  std::vector<std::string> decls;
  if (!s.nat_vars.empty()) {
    std::string d;
    for (const auto& v : s.nat_vars) d += v + " ";
    decls.push_back(d + ": nat");
  }
  for (const auto& v : s.word_vars) {
    std::string d = v.name + " : word(";
    for (std::size_t i = 0; i < v.letters.size(); ++i) {
      if (i) d += ' ';
      d += alphabet.name(v.letters[i]);
    }
    decls.push_back(d + ")");
  }
  out += "  where ";
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i) out += ", ";
    out += decls[i];
  }
  return out;
}

std::string serialize(const Presentation& p) {
  std::string out = "letters:";
  for (const auto& n : p.alphabet.names()) out += " " + n;
  out += '\n';
  for (const auto& s : p.schemes) {
    out += (s.is_plain() ? "rule: " : "scheme: ") + format_scheme(p.alphabet, s) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// Constant plus symbolic coefficients; used for |side| and |side|_x.
struct LinearForm {
  std::size_t constant = 0;
  std::map<std::string, std::size_t> coefficients;
  bool operator==(const LinearForm&) const = default;
};

LinearForm length_form(const RuleScheme& s, const std::vector<Atom>& side) {
  LinearForm f;
  for (const auto& atom : side) {
    if (std::holds_alternative<LetterAtom>(atom)) {
      ++f.constant;
    } else if (auto* pa = std::get_if<PowerAtom>(&atom)) {
      f.constant += pa->exponent.constant;
      for (const auto& v : pa->exponent.vars) ++f.coefficients[v];
    } else {
      (void)s;
      ++f.coefficients[std::get<WordVarAtom>(atom).name];
    }
  }
  return f;
}

LinearForm letter_form(const RuleScheme& s, const std::vector<Atom>& side, Letter x) {
  LinearForm f;
  for (const auto& atom : side) {
    if (auto* la = std::get_if<LetterAtom>(&atom)) {
      if (la->letter == x) ++f.constant;
    } else if (auto* pa = std::get_if<PowerAtom>(&atom)) {
      if (pa->letter != x) continue;
      f.constant += pa->exponent.constant;
      for (const auto& v : pa->exponent.vars) ++f.coefficients[v];
    } else {
      const auto& name = std::get<WordVarAtom>(atom).name;
      const auto* var = s.find_word_var(name);
      if (var && std::find(var->letters.begin(), var->letters.end(), x) != var->letters.end()) {
        ++f.coefficients[name + "#" + std::to_string(x)];
      }
    }
  }
  return f;
}

}  // namespace

Classification classify(const Presentation& p) {
  Classification c;
  c.homogeneous = true;
  c.multihomogeneous = true;
  std::optional<std::size_t> n;
  bool nary_possible = !p.schemes.empty();
  for (const auto& s : p.schemes) {
    auto l = length_form(s, s.lhs);
    auto r = length_form(s, s.rhs);
    if (!(l == r)) c.homogeneous = false;
    for (Letter x = 0; x < p.alphabet.size(); ++x) {
      if (!(letter_form(s, s.lhs, x) == letter_form(s, s.rhs, x))) c.multihomogeneous = false;
    }
    if (!l.coefficients.empty() || !r.coefficients.empty() || l.constant != r.constant) {
      nary_possible = false;
    } else if (!n) {
      n = l.constant;
    } else if (*n != l.constant) {
      nary_possible = false;
    }
  }
  if (nary_possible) c.nary = n;
  return c;
}

std::string describe(const Classification& c) {
  std::string out = c.homogeneous ? "homogeneous" : "non-homogeneous";
  if (c.multihomogeneous) out += ", multihomogeneous";
  if (c.nary) out += ", " + std::to_string(*c.nary) + "-ary";
  return out;
}

Presentation reverse_presentation(const Presentation& p) {
  Presentation out = p;
  for (auto& s : out.schemes) {
    std::reverse(s.lhs.begin(), s.lhs.end());
    std::reverse(s.rhs.begin(), s.rhs.end());
  }
  return out;
}

}  // namespace homog
