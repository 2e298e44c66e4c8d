#include "homog/construct/construct.hpp"
#include "homog/error.hpp"

namespace homog {

namespace {

RuleScheme shift(RuleScheme s, Letter offset) {
  auto move = [&](std::vector<Atom>& side) {
    for (auto& atom : side) {
      if (auto* la = std::get_if<LetterAtom>(&atom)) la->letter += offset;
      if (auto* pa = std::get_if<PowerAtom>(&atom)) pa->letter += offset;
    }
  };
  move(s.lhs);
  move(s.rhs);
  for (auto& v : s.word_vars) {
    for (auto& l : v.letters) l += offset;
  }
  return s;
}

}  // namespace

FreeProduct free_product(const Presentation& p1, const Presentation& p2) {
  FreeProduct out;
  out.presentation.alphabet = p1.alphabet;
  for (const auto& name : p2.alphabet.names()) {
    std::string fresh = name;
    while (out.presentation.alphabet.contains(fresh)) fresh += "'";
    if (fresh != name) out.renamed.emplace_back(name, fresh);
    out.presentation.alphabet.add(fresh);
  }
  out.presentation.schemes = p1.schemes;
  auto offset = static_cast<Letter>(p1.alphabet.size());
  for (const auto& s : p2.schemes) out.presentation.schemes.push_back(shift(s, offset));
  return out;
}

Presentation rename_letters(const Presentation& p, const std::vector<std::pair<std::string, std::string>>& renames) {
  std::vector<std::string> names = p.alphabet.names();
  for (auto& n : names) {
    for (const auto& [from, to] : renames) {
      if (n == from) {
        n = to;
        break;
      }
    }
  }
  return Presentation{Alphabet(std::move(names)), p.schemes};
}

Series series_inverse(const Series& g, std::size_t degree) {
  if (g.empty() || g[0] != 1) throw Error("series inversion needs constant term 1");
  Series inv(degree + 1, 0);
  inv[0] = 1;
  for (std::size_t n = 1; n <= degree; ++n) {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= n && i < g.size(); ++i) s += g[i] * inv[n - i];
    inv[n] = -s;
  }
  return inv;
}

Series free_product_growth(const Series& g1, const Series& g2, std::size_t degree) {
  Series a = series_inverse(g1, degree);
  Series b = series_inverse(g2, degree);
  Series sum(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) sum[i] = a[i] + b[i];
  sum[0] -= 1;
  return series_inverse(sum, degree);
}

}  // namespace homog
