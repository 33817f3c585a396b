#include "freeidem/contact.hpp"

#include <set>
#include <tuple>

#include "freeidem/error.hpp"
#include "freeidem/structure.hpp"

namespace freeidem {

  ContactAutomaton build_contact(Structure const& s, ClassId d1, ClassId d2) {
    auto const&      g1 = s.grid(d1);
    auto const&      g2 = s.grid(d2);
    ContactAutomaton a;
    a.first    = d1;
    a.second   = d2;
    a.num_cols = g1.num_cols();
    a.num_rows = g2.num_rows();

    for (Element e = 0; e < s.biorder().size(); ++e) {
      auto const& a1 = s.action(d1, e);
      auto const& a2 = s.action(d2, e);
      if (a1.sigma_fixed.empty() || a2.tau_fixed.empty()) {
        continue;
      }
      std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> found;
      for (std::size_t mu = 0; mu < a1.tau.size(); ++mu) {
        auto const lam = a1.tau[mu];
        if (lam == kNone) {
          continue;
        }
        for (std::size_t i = 0; i < a2.sigma.size(); ++i) {
          auto const j = a2.sigma[i];
          if (j == kNone) {
            continue;
          }
          // λ = μτ and σi = j, and the reverse transition.
          found.emplace(lam, i, mu, j);
          found.emplace(mu, j, lam, i);
        }
      }
      for (auto const& [lam, i, mu, j] : found) {
        std::optional<std::size_t> i0, l0;
        for (auto r : a1.sigma_fixed) {
          if (g1.has_cell(r, lam) && g1.has_cell(r, mu)) {
            i0 = r;
            break;
          }
        }
        for (auto c : a2.tau_fixed) {
          if (g2.has_cell(i, c) && g2.has_cell(j, c)) {
            l0 = c;
            break;
          }
        }
        if (!i0 || !l0) {
          fail(ErrorCode::Internal, "contact transition without fixed points carrying cells");
        }
        ContactTransition t;
        t.from   = a.state(lam, i);
        t.to     = a.state(mu, j);
        t.letter = e;
        t.first  = s.f(d1, *i0, lam).inverse() * s.f(d1, *i0, mu);
        t.second = s.f(d2, j, *l0) * s.f(d2, i, *l0).inverse();
        a.transitions.push_back(std::move(t));
      }
    }
    return a;
  }

  RhoSubset rho_subset(ContactAutomaton const&             a,
                       std::pair<std::size_t, std::size_t> from,
                       std::pair<std::size_t, std::size_t> to) {
    if (from.first >= a.num_cols || to.first >= a.num_cols || from.second >= a.num_rows
        || to.second >= a.num_rows) {
      fail(ErrorCode::MalformedInput, "contact state out of range");
    }
    RhoSubset r;
    r.first       = a.first;
    r.second      = a.second;
    r.num_states  = a.num_states();
    r.initial     = a.state(from.first, from.second);
    r.final       = a.state(to.first, to.second);
    r.transitions = a.transitions;
    return r;
  }

  std::optional<std::pair<ReesTriple, ReesTriple>>
  interchange_move(Structure const&           s,
                   ReesTriple const&          t1,
                   ReesTriple const&          t2,
                   Element                    e,
                   Orientation                orientation,
                   std::optional<std::size_t> preimage) {
    auto pick = [&preimage](std::vector<ReesTriple> const& c, auto&& keeps) -> std::optional<ReesTriple> {
      if (preimage) {
        if (*preimage < c.size()) {
          return c[*preimage];
        }
        return std::nullopt;
      }
      for (auto const& t : c) {
        if (keeps(t)) {
          return t;
        }
      }
      return std::nullopt;
    };
    if (orientation == Orientation::First) {
      auto const pre = pick(act_preimages(s, t1, e, Side::Right),
                            [&t1](ReesTriple const& t) { return t.lambda == t1.lambda; });
      auto const next = act(s, t2, e, Side::Left);
      if (!pre || !next) {
        return std::nullopt;
      }
      return std::pair{*pre, *next};
    }
    auto const next = act(s, t1, e, Side::Right);
    auto const pre  = pick(act_preimages(s, t2, e, Side::Left),
                          [&t2](ReesTriple const& t) { return t.i == t2.i; });
    if (!pre || !next) {
      return std::nullopt;
    }
    return std::pair{*next, *pre};
  }

}  // namespace freeidem
