#pragma once

#include <random>

#include "freeidem/biorder.hpp"
#include "freeidem/generators.hpp"
#include "freeidem/green_ig.hpp"
#include "freeidem/rees.hpp"
#include "freeidem/structure.hpp"
#include "freeidem/subgroup.hpp"

namespace fixtures {

  using namespace freeidem;

  inline BiorderedSet tn(std::size_t n) {
    return BiorderedSet::validate_and_build(transformation_biorder(n));
  }
  inline BiorderedSet ptn(std::size_t n) {
    return BiorderedSet::validate_and_build(partial_transformation_biorder(n));
  }
  inline BiorderedSet band(std::size_t m, std::size_t n) {
    return BiorderedSet::validate_and_build(rectangular_band(m, n));
  }
  inline BiorderedSet pair() {
    return BiorderedSet::validate_and_build(free_pair());
  }
  inline BiorderedSet chain(std::size_t n) {
    return BiorderedSet::validate_and_build(semilattice_chain(n));
  }

  // Equality of two triples as elements of the Rees matrix semigroup.
  inline bool same_triple(Structure const& s, ReesTriple const& a, ReesTriple const& b) {
    if (a.dclass != b.dclass || a.i != b.i || a.lambda != b.lambda) {
      return false;
    }
    auto const& g = s.backend(a.dclass);
    if (g.kind() == BackendKind::Unknown) {
      return a.g.reduced() == b.g.reduced();
    }
    return g.reduce(a.g).index == g.reduce(b.g).index && g.reduce(a.g).word == g.reduce(b.g).word;
  }

  inline bool regular(Structure const& s, Word const& w) {
    return regularity_and_seeds(s.biorder(), s.green(), w).has_value();
  }

  // A word with regular value: a random word if it happens to be regular,
  // otherwise a rewrite of one of its letters.
  inline Word regular_word(Structure const& s, std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<Element> letter(0, static_cast<Element>(s.biorder().size() - 1));
    for (int attempt = 0; attempt < 20; ++attempt) {
      Word w(len(rng));
      for (auto& x : w) {
        x = letter(rng);
      }
      if (regular(s, w)) {
        return w;
      }
    }
    Word one{letter(rng)};
    return random_rewrite(s.biorder(), one, len(rng) * 2, rng());
  }

}  // namespace fixtures
