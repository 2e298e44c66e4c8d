#include "homog/core/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

#include "homog/error.hpp"

namespace homog {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a over the 16-bit letters.
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word concat(const Word& u, const Word& v, const Word& w) {
  Word out;
  out.reserve(u.size() + v.size() + w.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word power(Letter letter, std::size_t n) { return Word(n, letter); }

bool occurs_at(const Word& w, std::size_t pos, const Word& factor) {
  if (pos + factor.size() > w.size()) return false;
  return std::equal(factor.begin(), factor.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::optional<std::size_t> find_factor(const Word& w, const Word& factor, std::size_t from) {
  if (factor.size() > w.size()) return std::nullopt;
  for (std::size_t i = from; i + factor.size() <= w.size(); ++i) {
    if (occurs_at(w, i, factor)) return i;
  }
  return std::nullopt;
}

bool contains_factor(const Word& w, const Word& factor) {
  return find_factor(w, factor).has_value();
}

Word splice(const Word& w, std::size_t pos, std::size_t length, const Word& replacement) {
  Word out;
  out.reserve(w.size() - length + replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + length), w.end());
  return out;
}

namespace {

constexpr std::array<std::string_view, 4> kReserved = {"eps", "empty", "any", "id"};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

bool is_valid_letter_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::all_of(name.begin(), name.end(), is_name_char)) return false;
  return std::find(kReserved.begin(), kReserved.end(), name) == kReserved.end();
}

Alphabet::Alphabet(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

Letter Alphabet::add(std::string name) {
  if (!is_valid_letter_name(name)) throw Error("invalid letter name '" + name + "'");
  if (index_.count(name)) throw Error("duplicate letter '" + name + "'");
  if (names_.size() >= 0xffff) throw LimitExceeded("alphabet too large");
  auto l = static_cast<Letter>(names_.size());
  index_.emplace(name, l);
  names_.push_back(std::move(name));
  return l;
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw Error("unknown letter '" + std::string(name) + "'");
}

bool Alphabet::single_char() const noexcept {
  return std::all_of(names_.begin(), names_.end(), [](const std::string& n) { return n.size() == 1; });
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  bool spaced = !single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (spaced && i) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word Alphabet::parse_word(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) return {};
  if (tokens.size() == 1 && (tokens[0] == "ε" || tokens[0] == "eps")) return {};
  Word w;
  for (const auto& t : tokens) {
    if (auto l = find(t)) {
      w.push_back(*l);
    } else if (single_char() && t.size() > 1) {
      for (char c : t) w.push_back(at(std::string_view(&c, 1)));
    } else {
      throw Error("unknown letter '" + t + "'");
    }
  }
  return w;
}

ContentVector content_vector(const Word& w, std::size_t alphabet_size) {
  ContentVector cv;
  cv.counts.assign(alphabet_size, 0);
  for (Letter l : w) {
    if (l >= alphabet_size) throw Error("letter outside alphabet");
    ++cv.counts[l];
  }
  cv.length = w.size();
  return cv;
}

void for_each_word(std::size_t alphabet_size, std::size_t length,
                   const std::function<void(const Word&)>& f) {
  if (alphabet_size == 0) {
    if (length == 0) f(Word{});
    return;
  }
  Word w(length, 0);
  while (true) {
    f(w);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++w[i] < alphabet_size) break;
      w[i] = 0;
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    for_each_word(alphabet_size, n, [&](const Word& w) { out.push_back(w); });
  }
  return out;
}

std::vector<Word> words_up_to(const std::vector<Letter>& letters, std::size_t max_length) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= max_length; ++n) {
    for_each_word(letters.size(), n, [&](const Word& idx) {
      Word w;
      w.reserve(idx.size());
      for (Letter i : idx) w.push_back(letters[i]);
      out.push_back(std::move(w));
    });
  }
  return out;
}

}  // namespace homog
