#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "homog/core/presentation.hpp"
#include "homog/oracle/oracle.hpp"

namespace homog {

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

/// Element of the integral free monoid ring: finite Word -> coefficient map with
/// no zero entries.
class FreeRingElement {
 public:
  FreeRingElement() = default;
  static FreeRingElement word(const Word& w, std::int64_t coefficient = 1);

  const std::map<Word, std::int64_t, ShortlexLess>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(const Word& w) const;
  void add(const Word& w, std::int64_t coefficient);

  FreeRingElement& operator+=(const FreeRingElement& other);
  FreeRingElement& operator-=(const FreeRingElement& other);
  FreeRingElement operator-() const;
  friend FreeRingElement operator+(FreeRingElement a, const FreeRingElement& b) { return a += b; }
  friend FreeRingElement operator-(FreeRingElement a, const FreeRingElement& b) { return a -= b; }
  /// left·x·right, distributing over the terms.
  FreeRingElement multiplied(const Word& left, const Word& right) const;

  bool operator==(const FreeRingElement&) const = default;

  /// `aabb - abbb`, `0` for zero; terms in shortlex order.
  std::string format(const Alphabet& alphabet) const;

 private:
  std::map<Word, std::int64_t, ShortlexLess> terms_;
};

/// Edge (w1, r, sign, w2) of the derivation graph: applies r = (plus, minus)
/// forwards (sign +1, from w1·plus·w2) or backwards (sign -1, from w1·minus·w2).
struct Edge {
  Word w1;
  Word plus;
  Word minus;
  int sign = 1;
  Word w2;
  std::string rule;

  Word source() const;
  Word target() const;
  Edge inverse() const;
  bool operator==(const Edge&) const = default;
};

/// Sequence of edges with matching endpoints. An empty path sits at `anchor`.
class DerivationPath {
 public:
  DerivationPath() = default;
  explicit DerivationPath(Word anchor) : anchor_(std::move(anchor)) {}
  explicit DerivationPath(Edge e);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  Word source() const;
  Word target() const;
  bool is_closed() const { return source() == target(); }

  /// Throws Error when the edge does not start at target().
  void push_back(Edge e);

  bool operator==(const DerivationPath&) const = default;

 private:
  Word anchor_;
  std::vector<Edge> edges_;
};

/// P then Q; throws Error unless target(P) = source(Q).
DerivationPath compose(const DerivationPath& p, const DerivationPath& q);
DerivationPath inverse(const DerivationPath& p);
/// x·P·y: every edge gets x prepended to w1 and y appended to w2.
DerivationPath act(const Word& x, const DerivationPath& p, const Word& y);
bool is_parallel(const DerivationPath& p, const DerivationPath& q);

/// `w1 | r+ -> r- | sign | w2`, one edge per line.
std::string format_path(const Alphabet& alphabet, const DerivationPath& p);

/// Paths and circuits for the presentation ac -> ca (K_a), bc -> cb (K_b),
/// cab -> cbb (C) over letters a, b, c.
class CircuitBuilder {
 public:
  /// Throws Error unless `p` has letters a, b, c and the three rules.
  explicit CircuitBuilder(const Presentation& p);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  Letter a() const noexcept { return a_; }
  Letter b() const noexcept { return b_; }
  Letter c() const noexcept { return c_; }

  /// Single edge x·R·y with R one of "K_a", "K_b", "C".
  Edge edge(const Word& x, const std::string& rule, int sign, const Word& y) const;

  /// Path from c u a b to c u b b commuting c through u and back; 2|u| + 1 edges.
  DerivationPath c_path(const Word& u) const;

  /// Closed at x c u a b.
  DerivationPath ct1(Letter x, const Word& u) const;
  /// Closed at c u a b c; vertices carry two c's.
  DerivationPath ct2(const Word& u) const;
  /// Closed at c u a b v a b.
  DerivationPath ct3(const Word& u, const Word& v) const;

  /// Sum of sign·w1 over the edges. Throws Error if a vertex does not contain
  /// exactly one c.
  FreeRingElement phi_eval(const DerivationPath& p) const;

 private:
  Alphabet alphabet_;
  Letter a_ = 0, b_ = 0, c_ = 0;
  std::map<std::string, std::pair<Word, Word>> rules_;
};

/// Variant of Φ valued in ZM: contexts are replaced by their oracle
/// representatives, so it applies to any component.
FreeRingElement phi_eval_monoid(const DerivationPath& p, const Oracle& oracle);

/// (ab - bb) as a ring element.
FreeRingElement ab_minus_bb(Letter a, Letter b);

struct MembershipResult {
  bool feasible = false;
  std::size_t generators = 0;
  std::size_t basis_words = 0;
  std::size_t rank = 0;
};

/// Is `target` (homogeneous of length `degree`) a rational combination of the
/// β(ab - bb)v with |β| + |v| = degree - 2, |v| <= bound_v, β, v over {a, b}?
/// Exact Gaussian elimination over the words of length `degree`.
MembershipResult module_membership(const FreeRingElement& target, Letter a, Letter b, std::size_t bound_v,
                                   std::size_t degree);

}  // namespace homog
