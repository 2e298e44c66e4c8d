#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "homog/derivation/derivation.hpp"
#include "homog/error.hpp"

namespace homog {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

// Row-reduces in place; returns the rank of the first `cols` columns.
std::size_t row_reduce(Matrix& m, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    Rational inv = 1 / m[rank][col];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MembershipResult module_membership(const FreeRingElement& target, Letter a, Letter b, std::size_t bound_v,
                                   std::size_t degree) {
  for (const auto& [w, k] : target.terms()) {
    if (w.size() != degree) throw Error("target is not homogeneous of the given degree");
  }
  MembershipResult result;
  if (target.is_zero()) {
    result.feasible = true;
    return result;
  }
  std::vector<FreeRingElement> gens;
  if (degree >= 2) {
    FreeRingElement core = ab_minus_bb(a, b);
    std::vector<Letter> ab{a, b};
    for (std::size_t j = 0; j <= bound_v && j <= degree - 2; ++j) {
      std::vector<Word> betas, vs;
      for (auto& w : words_up_to(ab, degree - 2 - j)) {
        if (w.size() == degree - 2 - j) betas.push_back(std::move(w));
      }
      for (auto& w : words_up_to(ab, j)) {
        if (w.size() == j) vs.push_back(std::move(w));
      }
      for (const auto& beta : betas) {
        for (const auto& v : vs) gens.push_back(core.multiplied(beta, v));
      }
    }
  }
  std::map<Word, std::size_t, ShortlexLess> row_of;
  auto index = [&](const FreeRingElement& e) {
    for (const auto& [w, k] : e.terms()) row_of.emplace(w, 0);
  };
  for (const auto& g : gens) index(g);
  index(target);
  std::size_t r = 0;
  for (auto& [w, i] : row_of) i = r++;

  Matrix m(row_of.size(), std::vector<Rational>(gens.size() + 1));
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (const auto& [w, k] : gens[j].terms()) m[row_of.at(w)][j] = k;
  }
  for (const auto& [w, k] : target.terms()) m[row_of.at(w)][gens.size()] = k;

  result.generators = gens.size();
  result.basis_words = row_of.size();
  Matrix aug = m;
  result.rank = row_reduce(m, gens.size());
  std::size_t rank_aug = row_reduce(aug, gens.size() + 1);
  result.feasible = rank_aug == result.rank;
  return result;
}

}  // namespace homog
