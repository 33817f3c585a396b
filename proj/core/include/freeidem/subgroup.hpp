#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "freeidem/biorder.hpp"
#include "freeidem/group_word.hpp"
#include "freeidem/todd_coxeter.hpp"

namespace freeidem {

  struct SingularSquare {
    std::size_t i = 0, j = 0;            // rows
    std::size_t lambda = 0, mu = 0;      // columns
    Element     witness = 0;
    char        kind    = 'a';           // 'a' or 'b'

    friend bool operator==(SingularSquare const&, SingularSquare const&) = default;
  };

  //! Exhaustive search for singular squares of a D-class.
  std::vector<SingularSquare> singular_squares(BiorderedSet const& b,
                                               DClassGrid const&   grid);

  //! Name of the generator f_{iλ} for 0-based cell coordinates.
  std::string generator_name(std::size_t i, std::size_t lambda);

  //! Presentation of the maximal subgroup of a D-class. Generator k
  //! corresponds to the k-th idempotent cell of the grid (row-major).
  struct Presentation {
    std::size_t              num_generators = 0;
    std::vector<std::string> names;
    //! Generators equal to 1: edges of a spanning tree of the incidence
    //! graph.
    std::vector<std::size_t>    tree;
    std::vector<bool>           in_tree;
    std::vector<SingularSquare> squares;
    //! One relator f_{iλ}⁻¹ f_{iμ} f_{jμ}⁻¹ f_{jλ} per distinct quadruple.
    std::vector<GroupWord> square_relators;

    //! All relators including the tree generators.
    [[nodiscard]] std::vector<GroupWord> relators() const;
    [[nodiscard]] std::string to_string() const;
  };

  Presentation presentation(BiorderedSet const& b, DClassGrid const& grid);

  //! An element of a maximal subgroup: a reduced word over the free basis,
  //! or an index into a finite group's element list.
  struct GroupElement {
    GroupWord     word;
    std::uint32_t index = 0;

    friend bool operator==(GroupElement const&, GroupElement const&) = default;
    friend auto operator<=>(GroupElement const&, GroupElement const&) = default;
  };

  struct FiniteGroup {
    std::size_t                             order = 0;
    std::vector<std::vector<std::uint32_t>> table;     // table[a][b] = ab
    std::vector<std::uint32_t>              inverses;
    //! Image of every generator f_{iλ} of the presentation.
    std::vector<std::uint32_t> generator_images;
    //! A shortest word over the presentation generators for each element.
    std::vector<GroupWord> spellings;
  };

  enum class BackendKind { Free, Finite, Unknown };

  std::string_view to_string(BackendKind k) noexcept;

  //! Computational model of a maximal subgroup.
  class GroupBackend {
   public:
    static GroupBackend free(Presentation const& p);
    static GroupBackend finite(FiniteGroup g, std::vector<std::string> names);
    static GroupBackend unknown(std::string reason, std::vector<std::string> names);

    [[nodiscard]] BackendKind kind() const noexcept {
      return kind_;
    }
    [[nodiscard]] bool is_free() const noexcept {
      return kind_ == BackendKind::Free;
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return kind_ == BackendKind::Finite;
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return (kind_ == BackendKind::Free && basis_.empty())
             || (kind_ == BackendKind::Finite && group_.order == 1);
    }

    //! Free basis as generator indices (Free only).
    [[nodiscard]] std::vector<std::size_t> const& basis() const noexcept {
      return basis_;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return basis_.size();
    }
    [[nodiscard]] FiniteGroup const& group() const noexcept {
      return group_;
    }
    [[nodiscard]] std::string const& reason() const noexcept {
      return reason_;
    }
    [[nodiscard]] std::vector<std::string> const& generator_names() const noexcept {
      return names_;
    }
    //! Names of the free basis letters.
    [[nodiscard]] std::vector<std::string> basis_names() const;

    //! Canonical form of a word over the generators f_{iλ}. Throws
    //! `UnknownBackend` for an Unknown backend.
    [[nodiscard]] GroupElement reduce(GroupWord const& w) const;

    [[nodiscard]] GroupElement identity() const {
      return {};
    }
    [[nodiscard]] GroupElement multiply(GroupElement const& a,
                                        GroupElement const& b) const;
    [[nodiscard]] GroupElement inverse(GroupElement const& a) const;
    //! All elements (Finite only).
    [[nodiscard]] std::vector<GroupElement> elements() const;

    [[nodiscard]] std::string format(GroupElement const& a) const;

   private:
    BackendKind              kind_ = BackendKind::Unknown;
    std::vector<std::string> names_;
    std::vector<std::size_t> basis_;
    //! Generator index to basis position, kNone for tree generators.
    std::vector<std::size_t> to_basis_;
    FiniteGroup              group_;
    std::string              reason_;
  };

  //! Free when there are no singular squares, otherwise finite if coset
  //! enumeration closes within `coset_bound`, otherwise Unknown.
  GroupBackend classify(BiorderedSet const& b,
                        DClassGrid const&   grid,
                        std::size_t         coset_bound = kDefaultCosetBound);

  GroupBackend classify(Presentation const& p, std::size_t coset_bound = kDefaultCosetBound);

  //! Same as `backend.reduce(w)`.
  GroupElement group_reduce(GroupBackend const& backend, GroupWord const& w);

}  // namespace freeidem
