#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "freeidem/contact.hpp"
#include "freeidem/subgroup.hpp"

namespace freeidem {

  //! Descriptor of one maximal subgroup in an exported instance.
  struct CspGroup {
    ClassId                  dclass  = 0;
    BackendKind              kind    = BackendKind::Unknown;
    bool                     maximal = false;
    std::vector<std::string> generators;
    std::vector<std::size_t> tree;
    std::vector<GroupWord>   relators;  // square relators
    std::size_t              rank  = 0;  // free rank (Free)
    std::size_t              order = 0;  // group order (Finite)

    friend bool operator==(CspGroup const&, CspGroup const&) = default;
  };

  //! An instance of the group constraint problem: find x_t ∈ G_t with
  //!   (a₁⁻¹b₁, x₂) ∈ ρ₁, (a_r⁻¹x_r⁻¹b_r, x_{r+1}) ∈ ρ_r,
  //!   (a_{m-1}⁻¹x_{m-1}⁻¹b_{m-1}, b_m a_m⁻¹) ∈ ρ_{m-1}.
  //! All indices are 0-based.
  struct CspInstance {
    static constexpr int kSchemaVersion = 1;

    std::vector<ClassId>     fingerprint;
    std::vector<CspGroup>    groups;
    std::vector<RhoSubset>   constraints;
    std::vector<GroupWord>   a;
    std::vector<GroupWord>   b;
    std::size_t              i1 = 0, j1 = 0, lambda_m = 0, mu_m = 0;
    std::vector<std::string> letters;  // element names of E
  };

  nlohmann::json to_json(CspInstance const& c);
  //! Throws `MalformedInput` on schema violations.
  CspInstance csp_from_json(nlohmann::json const& j);

  nlohmann::json word_to_json(GroupWord const& w);
  GroupWord      word_from_json(nlohmann::json const& j);

}  // namespace freeidem
