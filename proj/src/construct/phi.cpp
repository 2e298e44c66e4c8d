#include <algorithm>
#include <map>
#include <set>

#include "homog/construct/construct.hpp"
#include "homog/error.hpp"

namespace homog {

PhiMap PhiMap::standard(std::size_t n) {
  std::vector<Word> images;
  for (std::size_t i = 1; i <= n; ++i) {
    Word w{0, 0};
    w.insert(w.end(), i, 1);
    w.push_back(0);
    w.insert(w.end(), n + 1 - i, 1);
    images.push_back(std::move(w));
  }
  return PhiMap(std::move(images));
}

PhiMap::PhiMap(std::vector<Word> images) : images_(std::move(images)) {
  for (const auto& w : images_) {
    for (Letter l : w) {
      if (l > 1) throw Error("φ images must be words over {x, y}");
    }
  }
}

Word PhiMap::apply(const Word& w) const {
  Word out;
  for (Letter l : w) {
    const auto& img = image(l);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

bool PhiMap::is_code() const {
  std::set<Word> code(images_.begin(), images_.end());
  if (code.size() != images_.size() || code.count(Word{})) return false;
  // Dangling suffixes: x^{-1} y for x a proper prefix of y.
  auto quotients = [](const std::set<Word>& xs, const std::set<Word>& ys, std::set<Word>& out) {
    for (const auto& x : xs) {
      for (const auto& y : ys) {
        if (x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin())) out.emplace(y.begin() + x.size(), y.end());
      }
    }
  };
  std::set<Word> current;
  for (const auto& x : code) {
    for (const auto& y : code) {
      if (x != y && x.size() < y.size() && std::equal(x.begin(), x.end(), y.begin())) {
        current.emplace(y.begin() + x.size(), y.end());
      }
    }
  }
  std::set<Word> seen;
  while (!current.empty()) {
    if (current.count(Word{})) return false;
    std::set<Word> fresh;
    for (const auto& s : current) {
      if (seen.insert(s).second) fresh.insert(s);
    }
    if (fresh.empty()) break;
    std::set<Word> next;
    quotients(code, fresh, next);
    quotients(fresh, code, next);
    current = std::move(next);
  }
  return true;
}

PhiPresentation phi_presentation(const Presentation& p) {
  return phi_presentation(p, PhiMap::standard(p.alphabet.size()));
}

PhiPresentation phi_presentation(const Presentation& p, const PhiMap& map) {
  if (!p.all_plain()) throw Error("φ image is only defined here for plain rules");
  if (map.size() != p.alphabet.size()) throw Error("φ map size differs from the alphabet");
  PhiPresentation out{map, {}};
  out.presentation.alphabet = PhiMap::target_alphabet();
  for (const auto& [l, r] : p.plain_rules()) out.presentation.add_rule(map.apply(l), map.apply(r));
  return out;
}

Word CodeDecomposition::recombine(const PhiMap& phi) const {
  Word out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    out.insert(out.end(), gaps[i].begin(), gaps[i].end());
    if (i < blocks.size()) {
      Word img = phi.apply(blocks[i]);
      out.insert(out.end(), img.begin(), img.end());
    }
  }
  return out;
}

CodeDecomposition code_decompose(const Word& w, const PhiMap& phi) {
  auto image_at = [&](std::size_t pos) -> std::optional<Letter> {
    for (Letter l = 0; l < phi.size(); ++l) {
      if (!phi.image(l).empty() && occurs_at(w, pos, phi.image(l))) return l;
    }
    return std::nullopt;
  };
  CodeDecomposition d;
  Word gap;
  std::size_t i = 0;
  while (i < w.size()) {
    auto l = image_at(i);
    if (!l) {
      gap.push_back(w[i++]);
      continue;
    }
    Word block;
    while (l) {
      block.push_back(*l);
      i += phi.image(*l).size();
      l = i < w.size() ? image_at(i) : std::nullopt;
    }
    d.gaps.push_back(std::move(gap));
    gap.clear();
    d.blocks.push_back(std::move(block));
  }
  d.gaps.push_back(std::move(gap));
  return d;
}

EmbeddingReport verify_embedding(const Presentation& p, std::size_t maxlen) {
  return verify_embedding(p, PhiMap::standard(p.alphabet.size()), maxlen);
}

EmbeddingReport verify_embedding(const Presentation& p, const PhiMap& map, std::size_t maxlen) {
  Oracle source(p);
  auto target_p = phi_presentation(p, map);
  Oracle target(target_p.presentation);
  const auto& ta = target.alphabet();
  EmbeddingReport report;
  std::map<Word, Word> owner;
  for (std::size_t n = 0; n <= maxlen; ++n) {
    for (const auto& cls : source.classes_of_length(n)) {
      ++report.classes_checked;
      std::vector<Word> images;
      for (const auto& m : cls->members) {
        Word img = map.apply(m);
        auto [it, fresh] = owner.emplace(img, cls->representative());
        if (!fresh && it->second != cls->representative()) {
          report.violations.push_back("injectivity: " + p.alphabet.format(it->second) + " and " +
                                      p.alphabet.format(cls->representative()) + " share image " + ta.format(img));
        }
        images.push_back(std::move(img));
      }
      std::sort(images.begin(), images.end(), shortlex_less);
      images.erase(std::unique(images.begin(), images.end()), images.end());
      auto tc = target.class_of(images.front());
      if (tc->members != images) {
        report.violations.push_back("class of " + p.alphabet.format(cls->representative()) + ": " +
                                    std::to_string(cls->size()) + " words map into a target class of " +
                                    std::to_string(tc->size()));
      }
    }
  }
  return report;
}

}  // namespace homog
