#include "homog/automata/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>

#include "homog/error.hpp"

namespace homog {

namespace {

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;
  std::string key;
  std::string body;
};

std::vector<Line> directive_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError("expected '<key>:'", n);
    auto key = raw.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
              key.end());
    out.push_back({n, key, raw.substr(colon + 1)});
  }
  return out;
}

std::size_t to_index(const std::string& s, std::size_t line) {
  try {
    std::size_t pos = 0;
    auto v = std::stoul(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + s + "'", line);
  }
}

Letter symbol_index(const std::vector<std::string>& symbols, const std::string& name, std::size_t line) {
  auto it = std::find(symbols.begin(), symbols.end(), name);
  if (it == symbols.end()) throw ParseError("unknown symbol '" + name + "'", line);
  return static_cast<Letter>(it - symbols.begin());
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += " " + s;
  return out;
}

}  // namespace

std::string write_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "alphabet:" << join(dfa.symbols()) << "\n";
  out << "states: " << dfa.num_states() << "\n";
  out << "start: " << dfa.start() << "\n";
  out << "accept:";
  for (State s = 0; s < dfa.num_states(); ++s) {
    if (dfa.accepting(s)) out << " " << s;
  }
  out << "\n";
  for (State s = 0; s < dfa.num_states(); ++s) {
    for (Letter x = 0; x < dfa.num_symbols(); ++x) {
      out << "trans: " << s << " " << dfa.symbols()[x] << " " << dfa.next(s, x) << "\n";
    }
  }
  return out.str();
}

Dfa read_dfa(std::string_view text) {
  std::optional<std::vector<std::string>> symbols;
  std::optional<std::size_t> states;
  std::size_t start = 0;
  std::vector<std::size_t> accept;
  std::vector<std::tuple<std::size_t, std::string, std::size_t, std::size_t>> trans;
  for (const auto& l : directive_lines(text)) {
    auto t = tokens(l.body);
    if (l.key == "alphabet") {
      symbols = t;
    } else if (l.key == "states") {
      if (t.size() != 1) throw ParseError("states: expects one number", l.number);
      states = to_index(t[0], l.number);
    } else if (l.key == "start") {
      if (t.size() != 1) throw ParseError("start: expects one state", l.number);
      start = to_index(t[0], l.number);
    } else if (l.key == "accept") {
      for (const auto& s : t) accept.push_back(to_index(s, l.number));
    } else if (l.key == "trans") {
      if (t.size() != 3) throw ParseError("trans: expects <from> <symbol> <to>", l.number);
      trans.emplace_back(to_index(t[0], l.number), t[1], to_index(t[2], l.number), l.number);
    } else {
      throw ParseError("unknown key '" + l.key + "'", l.number);
    }
  }
  if (!symbols || !states) throw ParseError("automaton needs alphabet: and states:");
  Dfa dfa(*symbols);
  for (std::size_t s = 0; s < *states; ++s) dfa.add_state(false);
  State sink = dfa.add_state(false);
  for (State s = 0; s <= sink; ++s) {
    for (Letter x = 0; x < dfa.num_symbols(); ++x) dfa.set_transition(s, x, sink);
  }
  auto check = [&](std::size_t s, std::size_t line) {
    if (s >= *states) throw ParseError("state " + std::to_string(s) + " out of range", line);
    return static_cast<State>(s);
  };
  dfa.set_start(check(start, 0));
  for (auto s : accept) dfa.set_accepting(check(s, 0));
  for (const auto& [from, sym, to, line] : trans) {
    dfa.set_transition(check(from, line), symbol_index(*symbols, sym, line), check(to, line));
  }
  return dfa;
}

std::string write_transducer(const Transducer& t) {
  std::ostringstream out;
  out << "input:" << join(t.in_symbols()) << "\n";
  out << "output:" << join(t.out_symbols()) << "\n";
  out << "states: " << t.num_states() << "\n";
  out << "start: " << t.start() << "\n";
  out << "accept:";
  for (State s = 0; s < t.num_states(); ++s) {
    if (t.accepting(s)) out << " " << s;
  }
  out << "\n";
  for (const auto& a : t.arcs()) {
    out << "trans: " << a.from << " " << a.to << " " << (a.in ? t.in_symbols()[*a.in] : "eps") << " / "
        << (a.out ? t.out_symbols()[*a.out] : "eps") << "\n";
  }
  return out.str();
}

Transducer read_transducer(std::string_view text) {
  std::optional<std::vector<std::string>> in_syms, out_syms;
  std::optional<std::size_t> states;
  std::size_t start = 0;
  std::vector<std::size_t> accept;
  std::vector<std::pair<std::size_t, std::string>> arcs;
  for (const auto& l : directive_lines(text)) {
    auto t = tokens(l.body);
    if (l.key == "alphabet") {
      in_syms = t;
      out_syms = t;
    } else if (l.key == "input") {
      in_syms = t;
    } else if (l.key == "output") {
      out_syms = t;
    } else if (l.key == "states") {
      if (t.size() != 1) throw ParseError("states: expects one number", l.number);
      states = to_index(t[0], l.number);
    } else if (l.key == "start") {
      if (t.size() != 1) throw ParseError("start: expects one state", l.number);
      start = to_index(t[0], l.number);
    } else if (l.key == "accept") {
      for (const auto& s : t) accept.push_back(to_index(s, l.number));
    } else if (l.key == "trans") {
      arcs.emplace_back(l.number, l.body);
    } else {
      throw ParseError("unknown key '" + l.key + "'", l.number);
    }
  }
  if (!in_syms || !out_syms || !states) throw ParseError("transducer needs its alphabets and states:");
  Transducer t(*in_syms, *out_syms);
  for (std::size_t s = 0; s < *states; ++s) t.add_state(false);
  auto check = [&](std::size_t s, std::size_t line) {
    if (s >= *states) throw ParseError("state " + std::to_string(s) + " out of range", line);
    return static_cast<State>(s);
  };
  t.set_start(check(start, 0));
  for (auto s : accept) t.set_accepting(check(s, 0));
  for (const auto& [line, body] : arcs) {
    auto slash = body.find('/');
    if (slash == std::string::npos) throw ParseError("trans: expects <from> <to> <in> / <out>", line);
    auto left = tokens(body.substr(0, slash));
    auto right = tokens(body.substr(slash + 1));
    if (left.size() < 2) throw ParseError("trans: expects <from> <to> <in> / <out>", line);
    State from = check(to_index(left[0], line), line);
    State to = check(to_index(left[1], line), line);
    Word in, out;
    for (std::size_t i = 2; i < left.size(); ++i) {
      if (left[i] != "eps") in.push_back(symbol_index(*in_syms, left[i], line));
    }
    for (const auto& s : right) {
      if (s != "eps") out.push_back(symbol_index(*out_syms, s, line));
    }
    t.add_label(from, to, in, out);
  }
  return t;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace homog
