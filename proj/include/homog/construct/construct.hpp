#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homog/core/presentation.hpp"
#include "homog/oracle/oracle.hpp"

namespace homog {

struct FreeProduct {
  Presentation presentation;
  /// (old name, new name) for letters of the second operand that clashed.
  std::vector<std::pair<std::string, std::string>> renamed;
};

/// Disjoint union of alphabets and schemes. Clashing letters of `p2` get `'`
/// appended until unique.
FreeProduct free_product(const Presentation& p1, const Presentation& p2);

/// Same presentation with letters renamed by (old, new) pairs.
Presentation rename_letters(const Presentation& p, const std::vector<std::pair<std::string, std::string>>& renames);

/// All rules u l v -> u r v with |u l v| = n, for each plain rule l -> r of a
/// homogeneous presentation. Duplicates are dropped, first occurrence kept.
Presentation nary_extension(const Presentation& p, std::size_t n);

struct CongruenceMismatch {
  Word word;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

/// Words of length lo..hi whose classes differ between the two oracles (same
/// alphabet required). Empty means the congruences agree on that range.
std::vector<CongruenceMismatch> compare_congruences(const Oracle& a, const Oracle& b, std::size_t lo,
                                                   std::size_t hi);

/// Homomorphism from A = {a_1..a_n} into {x, y}* (x = letter 0, y = letter 1).
class PhiMap {
 public:
  /// a_i -> x x y^i x y^(n+1-i).
  static PhiMap standard(std::size_t n);
  explicit PhiMap(std::vector<Word> images);

  std::size_t size() const noexcept { return images_.size(); }
  const Word& image(Letter l) const { return images_.at(l); }
  const std::vector<Word>& images() const noexcept { return images_; }
  Word apply(const Word& w) const;

  /// Sardinas-Patterson test: the images freely generate their star.
  bool is_code() const;

  static Alphabet target_alphabet() { return Alphabet({"x", "y"}); }

 private:
  std::vector<Word> images_;
};

struct PhiPresentation {
  PhiMap map;
  Presentation presentation;
};

/// Rφ over {x, y} for a presentation with plain rules; throws otherwise.
PhiPresentation phi_presentation(const Presentation& p);
PhiPresentation phi_presentation(const Presentation& p, const PhiMap& map);

/// w = z_0 u_1 z_1 ... u_m z_m with every u_i a maximal nonempty run of images.
/// `blocks[i]` holds u_i as a word over A.
struct CodeDecomposition {
  std::vector<Word> gaps;
  std::vector<Word> blocks;

  Word recombine(const PhiMap& phi) const;
};

/// Scans left to right for an image starting at the current position (for the
/// standard map an x x anchor) and extends greedily. Unique for prefix codes.
CodeDecomposition code_decompose(const Word& w, const PhiMap& phi);

struct EmbeddingReport {
  std::size_t classes_checked = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// For every class C of P with words of length <= maxlen: the Rφ class of
/// (rep C)φ is exactly Cφ, and no image word comes from two classes.
EmbeddingReport verify_embedding(const Presentation& p, std::size_t maxlen);
EmbeddingReport verify_embedding(const Presentation& p, const PhiMap& map, std::size_t maxlen);

struct CombinedPresentation {
  Presentation presentation;  // alphabet x, y, then B
  std::size_t q_rules = 0;    // schemes [0, q_rules) are Q, the rest are E
  PhiMap map;
};

/// ⟨x, y, B | Q, aφ -> a (a in A)⟩ where A is given by letter names of B in the
/// order a_1..a_n. Throws if A is not contained in B or B uses x or y.
CombinedPresentation combined_presentation(const Presentation& q, const std::vector<std::string>& a_letters);

struct QuasiCommutationReport {
  std::size_t words_checked = 0;
  std::size_t peaks_checked = 0;
  std::vector<Word> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks w ->Q w' ->E w'' implies w ->E w̄ ->*(Q∪E) w'' for all w of length <= maxlen.
QuasiCommutationReport check_quasi_commutation(const CombinedPresentation& c, std::size_t maxlen);

using Series = std::vector<std::int64_t>;

/// Truncated power series solution of 1/G = 1/G1 + 1/G2 - 1 (constant terms 1).
Series free_product_growth(const Series& g1, const Series& g2, std::size_t degree);
Series series_inverse(const Series& g, std::size_t degree);

}  // namespace homog
