#include <sstream>

#include "homog/automata/io.hpp"
#include "homog/automata/pattern.hpp"
#include "homog/automata/relation_expr.hpp"
#include "homog/autostruct/structure.hpp"
#include "homog/error.hpp"

namespace homog {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

MultiplierSuite parse_suite(std::string_view text, const std::filesystem::path& base_dir) {
  MultiplierSuite suite;
  bool have_presentation = false;
  bool have_acceptor = false;
  PatternEnv env;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  auto need_presentation = [&](std::size_t line) {
    if (!have_presentation) throw ParseError("presentation: must come first", line);
  };
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.rfind("let ", 0) == 0) {
      need_presentation(n);
      auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'let NAME = pattern'", n);
      auto name = trim(line.substr(4, eq - 4));
      try {
        env[name] = compile_pattern(line.substr(eq + 1), suite.presentation.alphabet, env);
      } catch (const Error& e) {
        throw ParseError(e.what(), n);
      }
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<directive>:'", n);
    auto key = trim(line.substr(0, colon));
    auto body = trim(line.substr(colon + 1));
    if (key == "presentation") {
      suite.presentation = load_presentation(base_dir / body);
      have_presentation = true;
    } else if (key == "acceptor") {
      need_presentation(n);
      try {
        suite.acceptor = compile_pattern(body, suite.presentation.alphabet, env);
      } catch (const Error& e) {
        throw ParseError(e.what(), n);
      }
      have_acceptor = true;
    } else if (key == "sides") {
      if (body == "both") {
        suite.both_sides = true;
      } else if (body == "right") {
        suite.both_sides = false;
      } else {
        throw ParseError("sides: expects 'right' or 'both'", n);
      }
    } else if (key.rfind("right ", 0) == 0 || key.rfind("left ", 0) == 0) {
      need_presentation(n);
      bool right = key[0] == 'r';
      auto letter_name = trim(key.substr(right ? 6 : 5));
      Multiplier m;
      if (letter_name != "eps") {
        auto l = suite.presentation.alphabet.find(letter_name);
        if (!l) throw ParseError("unknown letter '" + letter_name + "'", n);
        m = *l;
      }
      Transducer t;
      try {
        if (body.rfind("file ", 0) == 0) {
          t = read_transducer(read_text_file(base_dir / trim(body.substr(5))));
          if (t.in_symbols() != suite.presentation.alphabet.names() ||
              t.out_symbols() != suite.presentation.alphabet.names()) {
            throw Error("transducer alphabet differs from presentation");
          }
        } else {
          t = parse_relation(body, suite.presentation.alphabet, env);
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what(), n);
      }
      auto& target = right ? suite.right : suite.left;
      if (target.count(m)) throw ParseError("multiplier declared twice", n);
      target.emplace(m, std::move(t));
    } else {
      throw ParseError("unknown directive '" + key + "'", n);
    }
  }
  if (!have_presentation || !have_acceptor) throw ParseError("suite needs presentation: and acceptor:");
  std::vector<Multiplier> needed{std::nullopt};
  for (Letter l = 0; l < suite.presentation.alphabet.size(); ++l) needed.push_back(l);
  for (const auto& m : needed) {
    auto name = m ? suite.presentation.alphabet.name(*m) : std::string("eps");
    if (!suite.right.count(m)) throw ParseError("missing right multiplier for " + name);
    if (suite.both_sides && !suite.left.count(m)) {
      // Left multiplication by ε is right multiplication by ε.
      if (!m) {
        suite.left.emplace(m, suite.right.at(m));
      } else {
        throw ParseError("missing left multiplier for " + name);
      }
    }
  }
  return suite;
}

MultiplierSuite load_suite(const std::filesystem::path& path) {
  try {
    return parse_suite(read_text_file(path), path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace homog
