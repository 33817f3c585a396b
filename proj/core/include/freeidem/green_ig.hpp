#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freeidem/biorder.hpp"

namespace freeidem {

  enum class Side { Left, Right };

  //! One-letter right extension: if h̄f̄ R h̄ returns an idempotent L-related
  //! to h̄f̄, otherwise nothing.
  std::optional<Element> step_right(BiorderedSet const& b,
                                    GreenData const&    g,
                                    Element             h,
                                    Element             f);

  //! Dual of step_right: if f̄h̄ L h̄ returns an idempotent R-related to f̄h̄.
  std::optional<Element> step_left(BiorderedSet const& b,
                                   GreenData const&    g,
                                   Element             h,
                                   Element             f);

  //! Folds the one-letter steps over `v`. For Side::Left the letters are
  //! consumed from the end of `v` towards its start, so that the result
  //! tracks the R-class of v̄ē.
  std::optional<Element> extend(BiorderedSet const&      b,
                                GreenData const&         g,
                                Element                  e,
                                std::span<Element const> v,
                                Side                     side);

  struct SeedInfo {
    std::size_t position = 0;  // 0-based
    Element     seed     = 0;
    //! Idempotent R-related to the value of the word.
    Element r_witness = 0;
    //! Idempotent L-related to the value of the word.
    Element l_witness = 0;
  };

  struct Regularity {
    SeedInfo                 leftmost;
    std::vector<std::size_t> seeds;  // 0-based positions
  };

  std::optional<Regularity> regularity_and_seeds(BiorderedSet const&      b,
                                                 GreenData const&         g,
                                                 std::span<Element const> w);

  //! Seed data at a given position, or nothing if that letter is no seed.
  std::optional<SeedInfo> seed_at(BiorderedSet const&      b,
                                  GreenData const&         g,
                                  std::span<Element const> w,
                                  std::size_t              position);

  struct Factor {
    std::size_t begin = 0;  // half-open span [begin, end)
    std::size_t end   = 0;
    ClassId     dclass = 0;
    SeedInfo    seed;
  };

  struct Fingerprint {
    std::vector<Factor> factors;

    [[nodiscard]] std::vector<ClassId> classes() const;
    [[nodiscard]] std::vector<std::size_t> starts() const;
  };

  //! Greedy longest-regular-prefix factorisation; it is minimal.
  Fingerprint minimal_r_factorisation(BiorderedSet const&      b,
                                      GreenData const&         g,
                                      std::span<Element const> w);

  std::vector<ClassId> d_fingerprint(BiorderedSet const&      b,
                                     GreenData const&         g,
                                     std::span<Element const> w);

  //! Every minimal r-factorisation of `w`, as lists of factor start
  //! positions. Exponential; meant for cross-checking on short words.
  std::vector<std::vector<std::size_t>>
  all_minimal_r_factorisations(BiorderedSet const&      b,
                               GreenData const&         g,
                               std::span<Element const> w);

  //! Applies `steps` random moves from the defining relations (contract a
  //! basic pair, or expand a letter into a basic pair). The result has the
  //! same value in IG(E).
  Word random_rewrite(BiorderedSet const&      b,
                      std::span<Element const> w,
                      std::size_t              steps,
                      std::uint64_t            seed);

}  // namespace freeidem
