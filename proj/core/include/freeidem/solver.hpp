#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "freeidem/csp.hpp"
#include "freeidem/structure.hpp"

namespace freeidem {

  enum class Verdict { Equal, NotEqual, Unsupported };
  enum class Reason { None, Fingerprint, Endpoints, Group, Csp };

  std::string_view to_string(Verdict v) noexcept;
  std::string_view to_string(Reason r) noexcept;

  struct Decision {
    Verdict verdict = Verdict::Unsupported;
    Reason  reason  = Reason::None;
    //! Fingerprints, coordinates and solver trace (0-based indices).
    nlohmann::json certificate;
    //! Present when the verdict is Unsupported past the coordinate stage.
    std::optional<CspInstance> csp;
  };

  //! Word problem of IG(E): is ū = v̄?
  Decision decide(Structure const& s, std::span<Element const> u, std::span<Element const> v);

  struct SolveResult {
    bool           satisfiable = false;
    nlohmann::json trace;
  };

  //! Decides an instance whose groups are all finite, trivial, or free.
  //! Adjacent free groups must have contact sets made of trivially labelled
  //! transitions only, otherwise `UnsupportedRegime`.
  SolveResult solve_p(std::vector<GroupBackend const*> const& groups,
                      std::vector<RhoSubset> const&           rho,
                      std::vector<GroupWord> const&           a,
                      std::vector<GroupWord> const&           b);

  //! The group constraint instance for u, v when both words share a
  //! fingerprint and endpoints; nothing otherwise.
  std::optional<CspInstance>
  export_csp(Structure const& s, std::span<Element const> u, std::span<Element const> v);

  //! Drops occurrences of the identity element (if any).
  Word elide_identity(BiorderedSet const& b, std::span<Element const> w);

}  // namespace freeidem
