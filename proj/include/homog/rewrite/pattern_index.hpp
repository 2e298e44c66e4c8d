#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "homog/core/word.hpp"

namespace homog {

/// Trie over a fixed list of non-empty patterns, for scanning all patterns that
/// start at a given position of a word.
class PatternIndex {
 public:
  PatternIndex() : children_(1), ids_(1) {}

  void add(const Word& pattern, std::uint32_t id) {
    std::size_t node = 0;
    for (Letter l : pattern) {
      auto it = children_[node].find(l);
      if (it == children_[node].end()) {
        children_.emplace_back();
        ids_.emplace_back();
        it = children_[node].emplace(l, static_cast<std::uint32_t>(children_.size() - 1)).first;
      }
      node = it->second;
    }
    ids_[node].push_back(id);
  }

  /// Calls f(id, length) for every pattern occurring at `pos`, shortest first,
  /// ids in insertion order for equal patterns.
  template <typename F>
  void for_each_at(const Word& w, std::size_t pos, F&& f) const {
    std::size_t node = 0;
    for (std::size_t i = pos; i < w.size(); ++i) {
      auto it = children_[node].find(w[i]);
      if (it == children_[node].end()) return;
      node = it->second;
      for (auto id : ids_[node]) f(id, i + 1 - pos);
    }
  }

 private:
  std::vector<std::map<Letter, std::uint32_t>> children_;
  std::vector<std::vector<std::uint32_t>> ids_;
};

}  // namespace homog
