#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "freeidem/biorder.hpp"
#include "freeidem/green_ig.hpp"
#include "freeidem/group_word.hpp"

namespace freeidem {

  class Structure;

  //! The partial maps induced by one letter on the rows (σ, acting on the
  //! left) and columns (τ, acting on the right) of a D-class.
  struct PartialAction {
    std::vector<std::size_t> tau;    // per column, kNone if undefined
    std::vector<std::size_t> sigma;  // per row, kNone if undefined
    std::vector<std::size_t> tau_fixed;
    std::vector<std::size_t> sigma_fixed;

    [[nodiscard]] bool empty() const noexcept {
      return tau_fixed.empty() && sigma_fixed.empty();
    }
  };

  PartialAction sigma_tau(BiorderedSet const& b,
                          GreenData const&    g,
                          DClassGrid const&   grid,
                          Element             e);

  //! A regular element written as (i, g, λ) in the Rees matrix coordinates
  //! of its D-class; g is a word over the generators f_{iλ} of the class.
  struct ReesTriple {
    ClassId     dclass = 0;
    std::size_t i      = 0;
    GroupWord   g;
    std::size_t lambda = 0;

    friend bool operator==(ReesTriple const&, ReesTriple const&) = default;
  };

  //! Right (r·ē) or left (ē·r) action of a letter; nothing when the product
  //! leaves the D-class.
  std::optional<ReesTriple> act(Structure const& s, ReesTriple const& t, Element e, Side side);

  //! Inverse actions used by interchange moves: every triple t' with
  //! act(t', e, side) == t. The group part is determined by t; the free
  //! index ranges over the preimages under σ or τ.
  std::vector<ReesTriple>
  act_preimages(Structure const& s, ReesTriple const& t, Element e, Side side);

  //! Coordinates of the value of a word with regular value, computed from
  //! the leftmost seed. Throws `NotRegular`.
  ReesTriple coordinatize(Structure const& s, std::span<Element const> w);

  //! Coordinates computed from the seed at `position`. Throws `NotRegular`
  //! when that letter is not a seed.
  ReesTriple coordinatize_at(Structure const&         s,
                             std::span<Element const> w,
                             std::size_t              position);

  //! A word over the idempotents of the D-class of w̄ with the same value.
  Word idempotent_normal_form(Structure const& s, std::span<Element const> w);

  //! Product of two triples of one class if it stays in that class.
  std::optional<ReesTriple> multiply_in_class(Structure const&  s,
                                              ReesTriple const& t1,
                                              ReesTriple const& t2);

  //! The triple of the idempotent at cell (i, λ).
  ReesTriple idempotent_triple(Structure const& s, ClassId c, std::size_t i, std::size_t lambda);

}  // namespace freeidem
