#include "homog/autostruct/witness.hpp"

#include "homog/error.hpp"
#include "homog/rewrite/reduce.hpp"

namespace homog {

namespace {

Word repeat(const Word& w, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word join(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

PumpingWitness pumping_witness(const Presentation& p, std::size_t n, std::size_t k, const Oracle* oracle) {
  if (n % 2 != 0) throw Error("pumping witness needs an even n");
  auto letter = [&](const char* name) {
    auto l = p.alphabet.find(name);
    if (!l) throw Error(std::string("presentation has no letter '") + name + "'");
    return *l;
  };
  Letter a = letter("a"), b = letter("b"), c = letter("c");
  Word ca{c, a}, cb{c, b};

  PumpingWitness w;
  w.n = n;
  w.k = k;
  w.base_left = join({{c}, power(a, n), power(b, n + 1)});
  w.base_right = join({{c}, power(b, n), power(a, n), {b}});
  w.pumped_left = join({{c}, power(a, n + 2 * k), power(b, n + 1)});
  w.pumped_right = join({{c}, power(b, n + 2 * k), power(a, n), {b}});
  w.expected_base = join({repeat(ca, n / 2), repeat(cb, n / 2 + 1)});
  w.expected_pumped_left = join({repeat(ca, n / 2 + k), repeat(cb, n / 2 + 1)});
  w.expected_pumped_right = join({repeat(ca, n / 2), repeat(cb, n / 2 + k + 1)});

  Rewriter rw(rules_from_pairs(p.plain_rules()), p.alphabet);
  w.nf_base_left = rw.normalize(w.base_left);
  w.nf_base_right = rw.normalize(w.base_right);
  w.nf_pumped_left = rw.normalize(w.pumped_left);
  w.nf_pumped_right = rw.normalize(w.pumped_right);

  if (oracle) {
    w.oracle_checked = true;
    w.oracle_base_equal = oracle->are_equal(w.base_left, w.base_right);
  }
  return w;
}

}  // namespace homog
