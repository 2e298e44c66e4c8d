#include <algorithm>
#include <set>

#include "homog/construct/construct.hpp"
#include "homog/error.hpp"

namespace homog {

Presentation nary_extension(const Presentation& p, std::size_t n) {
  if (!p.all_plain()) throw Error("n-ary extension needs plain rules");
  if (!classify(p).homogeneous) throw Error("n-ary extension needs a homogeneous presentation");
  auto rules = p.plain_rules();
  for (const auto& [l, r] : rules) {
    if (l.size() > n) throw Error("n = " + std::to_string(n) + " is shorter than a rule side");
  }
  Presentation out;
  out.alphabet = p.alphabet;
  std::set<std::pair<Word, Word>> seen;
  for (const auto& [l, r] : rules) {
    std::size_t pad = n - l.size();
    for (std::size_t left = 0; left <= pad; ++left) {
      for_each_word(p.alphabet.size(), left, [&](const Word& u) {
        for_each_word(p.alphabet.size(), pad - left, [&](const Word& v) {
          Word lhs = concat(u, l, v);
          Word rhs = concat(u, r, v);
          if (seen.emplace(lhs, rhs).second) out.add_rule(lhs, rhs);
        });
      });
    }
  }
  return out;
}

std::vector<CongruenceMismatch> compare_congruences(const Oracle& a, const Oracle& b, std::size_t lo,
                                                   std::size_t hi) {
  if (!(a.alphabet() == b.alphabet())) throw Error("oracles have different alphabets");
  std::vector<CongruenceMismatch> out;
  for (std::size_t len = lo; len <= hi; ++len) {
    for (const auto& ca : a.classes_of_length(len)) {
      auto cb = b.class_of(ca->representative());
      if (cb->members != ca->members) out.push_back({ca->representative(), ca->size(), cb->size()});
    }
  }
  return out;
}

}  // namespace homog
