#pragma once

#include <cstddef>
#include <deque>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "homog/core/presentation.hpp"

namespace testing_support {

inline std::filesystem::path data(const std::string& name) { return std::filesystem::path(HOMOG_DATA_DIR) / name; }

inline homog::Presentation load(const std::string& name) { return homog::load_presentation(data(name)); }

/// Congruence class by naive search over explicit rule pairs, applying each
/// pair in both directions at every position. Used as a second route next to
/// the library's Oracle.
inline std::set<homog::Word> naive_class(const std::vector<std::pair<homog::Word, homog::Word>>& rules,
                                         const homog::Word& w) {
  std::set<homog::Word> seen{w};
  std::deque<homog::Word> queue{w};
  while (!queue.empty()) {
    homog::Word cur = queue.front();
    queue.pop_front();
    for (const auto& [l, r] : rules) {
      for (int dir = 0; dir < 2; ++dir) {
        const homog::Word& from = dir ? r : l;
        const homog::Word& to = dir ? l : r;
        if (from.size() > cur.size()) continue;
        for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), cur.begin() + static_cast<std::ptrdiff_t>(i))) continue;
          homog::Word next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i + from.size()), cur.end());
          if (seen.insert(next).second) queue.push_back(next);
        }
      }
    }
  }
  return seen;
}

/// Every word of exactly length n over k letters.
inline std::vector<homog::Word> all_words(std::size_t k, std::size_t n) {
  std::vector<homog::Word> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<homog::Word> next;
    for (const auto& w : out)
      for (std::size_t l = 0; l < k; ++l) {
        auto x = w;
        x.push_back(static_cast<homog::Letter>(l));
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace testing_support
