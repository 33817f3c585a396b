#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "freeidem/contact.hpp"
#include "freeidem/group_word.hpp"
#include "freeidem/subgroup.hpp"

namespace freeidem {

  //! Label of an ε-edge.
  inline constexpr GroupLetter kEpsilon = 0;

  struct NfaEdge {
    std::size_t from  = 0;
    std::size_t to    = 0;
    GroupLetter label = kEpsilon;

    friend bool operator==(NfaEdge const&, NfaEdge const&) = default;
    friend auto operator<=>(NfaEdge const&, NfaEdge const&) = default;
  };

  //! Finite automaton over the symmetric alphabet of a free group; it
  //! represents the rational subset of values of its accepted words.
  struct GroupNfa {
    std::size_t           num_states = 0;
    std::vector<NfaEdge>  edges;
    std::set<std::size_t> initial;
    std::set<std::size_t> final;
    //! Identifies the group the letters refer to; kNone matches anything.
    std::size_t group = kNone;
    bool        saturated = false;

    std::size_t add_state() {
      return num_states++;
    }
    void add_edge(std::size_t from, std::size_t to, GroupLetter label) {
      edges.push_back({from, to, label});
      saturated = false;
    }
    //! A chain of fresh states spelling `w` from `from` to `to`.
    void add_word(std::size_t from, std::size_t to, GroupWord const& w);

    static GroupNfa singleton(GroupWord const& w, std::size_t group = kNone);
  };

  //! Adds ε-edges p → q whenever p -x-> r -ε*-> s -x⁻¹-> q, to a fixpoint.
  GroupNfa benois_saturate(GroupNfa const& n);

  //! Whether the subset contains the element represented by `w`.
  bool rat_member(GroupNfa const& n, GroupWord const& w);

  bool rat_intersect_nonempty(GroupNfa const& a, GroupNfa const& b);

  //! A reduced word in both subsets, if any. Throws `BackendMismatch`.
  std::optional<GroupWord> rat_intersection_witness(GroupNfa const& a, GroupNfa const& b);

  //! {x⁻¹ : x ∈ n}.
  GroupNfa rat_inverse(GroupNfa const& n);
  //! {l·x·r : x ∈ n}.
  GroupNfa rat_multiply(GroupWord const& l, GroupNfa const& n, GroupWord const& r);
  GroupNfa rat_union(GroupNfa const& a, GroupNfa const& b);

  //! Result of slicing a rational subset of G₁ × G₂^∂ at a fixed value of
  //! one coordinate: an explicit set if the other group can be enumerated,
  //! an automaton over the free basis otherwise.
  struct Slice {
    bool                   is_explicit = true;
    std::set<GroupElement> elements;
    GroupNfa               nfa;
  };

  //! {y : (x, y) ∈ ρ}. The first group must be enumerable (finite or
  //! trivial), otherwise `InfiniteFixedSide`.
  Slice slice_first(RhoSubset const&    rho,
                    GroupBackend const& g1,
                    GroupBackend const& g2,
                    GroupElement const& x);

  //! {x : (x, y) ∈ ρ}. The second group must be enumerable.
  Slice slice_second(RhoSubset const&    rho,
                     GroupBackend const& g1,
                     GroupBackend const& g2,
                     GroupElement const& y);

  //! ρ as an explicit set of pairs when both groups are enumerable.
  std::set<std::pair<GroupElement, GroupElement>>
  explicit_pairs(RhoSubset const& rho, GroupBackend const& g1, GroupBackend const& g2);

  //! Whether a backend's elements can be listed (finite, or trivial).
  bool enumerable(GroupBackend const& g);
  std::vector<GroupElement> all_elements(GroupBackend const& g);

}  // namespace freeidem
