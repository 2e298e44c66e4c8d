#pragma once

#include <cstddef>

#include "homog/core/presentation.hpp"
#include "homog/oracle/oracle.hpp"

namespace homog {

/// Pumping argument against left-multiplier regularity for the 9-rule system on
/// {a, b, c}. The base pair c a^n b^(n+1), c b^n a^n b is equal in the monoid;
/// pumping k letters twice gives c a^(n+2k) b^(n+1) and c b^(n+2k) a^n b, whose
/// normal forms must be (ca)^(n/2+k) (cb)^(n/2+1) and (ca)^(n/2) (cb)^(n/2+k+1).
struct PumpingWitness {
  std::size_t n = 0;
  std::size_t k = 0;
  Word base_left, base_right;
  Word pumped_left, pumped_right;
  Word nf_base_left, nf_base_right;
  Word nf_pumped_left, nf_pumped_right;
  Word expected_base, expected_pumped_left, expected_pumped_right;
  bool oracle_checked = false;
  bool oracle_base_equal = false;

  bool base_equal() const { return nf_base_left == nf_base_right; }
  bool pumped_differ() const { return nf_pumped_left != nf_pumped_right; }
  bool formulas_match() const {
    return nf_base_left == expected_base && nf_base_right == expected_base &&
           nf_pumped_left == expected_pumped_left && nf_pumped_right == expected_pumped_right;
  }
  bool verified() const {
    return base_equal() && pumped_differ() && formulas_match() &&
           (!oracle_checked || oracle_base_equal);
  }
};

/// `p` must have letters a, b, c and plain rules; n must be even. When `oracle`
/// is given the base pair is also connected by oracle search. (The pumped pair
/// is separated by normal forms only; refuting equality by search would mean
/// enumerating a class of millions of words.)
PumpingWitness pumping_witness(const Presentation& p, std::size_t n, std::size_t k, const Oracle* oracle = nullptr);

}  // namespace homog
