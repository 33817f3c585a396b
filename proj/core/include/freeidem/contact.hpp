#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "freeidem/biorder.hpp"
#include "freeidem/group_word.hpp"
#include "freeidem/rees.hpp"

namespace freeidem {

  class Structure;

  //! A transition ((λ,i), e, (μ,j)) with its label: a word over the
  //! generators of the first class and one over those of the second.
  struct ContactTransition {
    std::size_t from   = 0;
    std::size_t to     = 0;
    Element     letter = 0;
    GroupWord   first;
    GroupWord   second;
  };

  //! Contact automaton of an ordered pair of D-classes. State (λ, i) has
  //! index λ·|I₂| + i. Second label coordinates compose in reverse order
  //! along a path.
  struct ContactAutomaton {
    ClassId                        first  = 0;
    ClassId                        second = 0;
    std::size_t                    num_cols = 0;  // |Λ₁|
    std::size_t                    num_rows = 0;  // |I₂|
    std::vector<ContactTransition> transitions;

    [[nodiscard]] std::size_t num_states() const noexcept {
      return num_cols * num_rows;
    }
    [[nodiscard]] std::size_t state(std::size_t lambda, std::size_t i) const {
      return lambda * num_rows + i;
    }
    [[nodiscard]] std::pair<std::size_t, std::size_t> decode(std::size_t q) const {
      return {q / num_rows, q % num_rows};
    }
  };

  ContactAutomaton build_contact(Structure const& s, ClassId d1, ClassId d2);

  //! The automaton with an initial and a final state; its accepted paths
  //! carry the elements of ρ(λ,i; μ,j) as labels.
  struct RhoSubset {
    ClassId                        first  = 0;
    ClassId                        second = 0;
    std::size_t                    num_states = 0;
    std::size_t                    initial    = 0;
    std::size_t                    final      = 0;
    std::vector<ContactTransition> transitions;
  };

  RhoSubset rho_subset(ContactAutomaton const&             a,
                       std::pair<std::size_t, std::size_t> from,
                       std::pair<std::size_t, std::size_t> to);

  //! Which of the two forms of an interchange move to perform on adjacent
  //! factors (r, s):
  //!   First:  r = r'·ē and s' = ē·s  (r is replaced by a preimage r')
  //!   Second: r' = r·ē and s = ē·s'  (s is replaced by a preimage s')
  enum class Orientation { First, Second };

  //! Performs one interchange move. `preimage` selects among the candidate
  //! preimages (see act_preimages); by default the one keeping the index.
  std::optional<std::pair<ReesTriple, ReesTriple>>
  interchange_move(Structure const&           s,
                   ReesTriple const&          t1,
                   ReesTriple const&          t2,
                   Element                    e,
                   Orientation                orientation,
                   std::optional<std::size_t> preimage = std::nullopt);

}  // namespace freeidem
