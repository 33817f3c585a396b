#pragma once

#include <span>
#include <utility>

#include "freeidem/structure.hpp"

namespace freeidem {

  //! Minimal r-factorisation with every factor replaced by its idempotent
  //! normal form.
  Word reduced_form(Structure const& s, std::span<Element const> w);

  struct TildeWitnesses {
    Element e_r = 0;  // w̄ R̃ ē_r
    Element e_l = 0;  // w̄ L̃ ē_l
  };

  TildeWitnesses tilde_witnesses(Structure const& s, std::span<Element const> w);

  bool tilde_r_equivalent(Structure const& s, std::span<Element const> w1, std::span<Element const> w2);
  bool tilde_l_equivalent(Structure const& s, std::span<Element const> w1, std::span<Element const> w2);

}  // namespace freeidem
