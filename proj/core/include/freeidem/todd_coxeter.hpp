#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "freeidem/group_word.hpp"

namespace freeidem {

  inline constexpr std::size_t kDefaultCosetBound = 1'000'000;

  //! Complete coset table of the trivial subgroup: `action[c][2g]` is c·g
  //! and `action[c][2g + 1]` is c·g⁻¹. Coset 0 is the identity.
  struct CosetTable {
    std::size_t                             num_gens = 0;
    std::vector<std::vector<std::uint32_t>> action;

    [[nodiscard]] std::size_t size() const noexcept {
      return action.size();
    }
    [[nodiscard]] std::uint32_t apply(std::uint32_t c, GroupWord const& w) const;
  };

  //! HLT coset enumeration over the trivial subgroup of
  //! ⟨num_gens | relators⟩. Throws `BoundExceeded` once more than `bound`
  //! cosets have been defined.
  CosetTable todd_coxeter(std::size_t                   num_gens,
                          std::vector<GroupWord> const& relators,
                          std::size_t                   bound = kDefaultCosetBound);

}  // namespace freeidem
