#include "freeidem/rees.hpp"

#include <algorithm>

#include "freeidem/error.hpp"
#include "freeidem/structure.hpp"

namespace freeidem {

  namespace {
    Element least_in_column(DClassGrid const& grid, std::size_t lambda) {
      Element best = kNoElement;
      for (std::size_t i = 0; i < grid.num_rows(); ++i) {
        if (auto e = grid.idempotent_at(i, lambda)) {
          best = std::min(best, *e);
        }
      }
      return best;
    }

    Element least_in_row(DClassGrid const& grid, std::size_t i) {
      Element best = kNoElement;
      for (std::size_t l = 0; l < grid.num_cols(); ++l) {
        if (auto e = grid.idempotent_at(i, l)) {
          best = std::min(best, *e);
        }
      }
      return best;
    }

    // Least fixed row of σ_e with idempotents in columns λ and λ'.
    std::size_t fixed_row(DClassGrid const&    grid,
                          PartialAction const& a,
                          std::size_t          lambda,
                          std::size_t          lambda2) {
      for (auto i0 : a.sigma_fixed) {
        if (grid.has_cell(i0, lambda) && grid.has_cell(i0, lambda2)) {
          return i0;
        }
      }
      fail(ErrorCode::Internal, "no fixed row of the action carries the required cells");
    }

    // Least fixed column of τ_e with idempotents in rows i and i'.
    std::size_t fixed_col(DClassGrid const&    grid,
                          PartialAction const& a,
                          std::size_t          i,
                          std::size_t          i2) {
      for (auto l0 : a.tau_fixed) {
        if (grid.has_cell(i, l0) && grid.has_cell(i2, l0)) {
          return l0;
        }
      }
      fail(ErrorCode::Internal, "no fixed column of the action carries the required cells");
    }

    ReesTriple act_or_fail(Structure const& s, ReesTriple const& t, Element e, Side side) {
      auto r = act(s, t, e, side);
      if (!r) {
        fail(ErrorCode::Internal, "seed extension left the D-class");
      }
      return std::move(*r);
    }
  }  // namespace

  PartialAction sigma_tau(BiorderedSet const& b,
                          GreenData const&    g,
                          DClassGrid const&   grid,
                          Element             e) {
    PartialAction a;
    a.tau.assign(grid.num_cols(), kNone);
    a.sigma.assign(grid.num_rows(), kNone);
    for (std::size_t l = 0; l < grid.num_cols(); ++l) {
      auto const h = least_in_column(grid, l);
      if (auto t = step_right(b, g, h, e)) {
        if (!grid.contains(*t)) {
          fail(ErrorCode::Internal, "tracker outside the D-class");
        }
        a.tau[l] = grid.col_of(*t);
      }
    }
    for (std::size_t i = 0; i < grid.num_rows(); ++i) {
      auto const h = least_in_row(grid, i);
      if (auto t = step_left(b, g, h, e)) {
        if (!grid.contains(*t)) {
          fail(ErrorCode::Internal, "tracker outside the D-class");
        }
        a.sigma[i] = grid.row_of(*t);
      }
    }
    for (std::size_t l = 0; l < a.tau.size(); ++l) {
      if (a.tau[l] == l) {
        a.tau_fixed.push_back(l);
      }
    }
    for (std::size_t i = 0; i < a.sigma.size(); ++i) {
      if (a.sigma[i] == i) {
        a.sigma_fixed.push_back(i);
      }
    }
    return a;
  }

  std::optional<ReesTriple> act(Structure const& s, ReesTriple const& t, Element e, Side side) {
    auto const& grid = s.grid(t.dclass);
    auto const& a    = s.action(t.dclass, e);
    ReesTriple  out  = t;
    if (side == Side::Right) {
      auto const l2 = a.tau.at(t.lambda);
      if (l2 == kNone) {
        return std::nullopt;
      }
      auto const i0 = fixed_row(grid, a, t.lambda, l2);
      out.g *= s.f(t.dclass, i0, t.lambda).inverse() * s.f(t.dclass, i0, l2);
      out.lambda = l2;
    } else {
      auto const i2 = a.sigma.at(t.i);
      if (i2 == kNone) {
        return std::nullopt;
      }
      auto const l0 = fixed_col(grid, a, t.i, i2);
      out.g = s.f(t.dclass, i2, l0) * s.f(t.dclass, t.i, l0).inverse() * t.g;
      out.i = i2;
    }
    return out;
  }

  std::vector<ReesTriple>
  act_preimages(Structure const& s, ReesTriple const& t, Element e, Side side) {
    auto const&             grid = s.grid(t.dclass);
    auto const&             a    = s.action(t.dclass, e);
    std::vector<ReesTriple> out;
    if (side == Side::Right) {
      if (a.tau.at(t.lambda) != t.lambda) {
        return out;
      }
      for (std::size_t l = 0; l < a.tau.size(); ++l) {
        if (a.tau[l] != t.lambda) {
          continue;
        }
        auto const i0 = fixed_row(grid, a, l, t.lambda);
        ReesTriple p  = t;
        p.g *= s.f(t.dclass, i0, t.lambda).inverse() * s.f(t.dclass, i0, l);
        p.lambda = l;
        out.push_back(std::move(p));
      }
    } else {
      if (a.sigma.at(t.i) != t.i) {
        return out;
      }
      for (std::size_t i = 0; i < a.sigma.size(); ++i) {
        if (a.sigma[i] != t.i) {
          continue;
        }
        auto const l0 = fixed_col(grid, a, i, t.i);
        ReesTriple p  = t;
        p.g = s.f(t.dclass, i, l0) * s.f(t.dclass, t.i, l0).inverse() * t.g;
        p.i = i;
        out.push_back(std::move(p));
      }
    }
    return out;
  }

  ReesTriple idempotent_triple(Structure const& s, ClassId c, std::size_t i, std::size_t lambda) {
    return {c, i, s.f(c, i, lambda), lambda};
  }

  ReesTriple coordinatize_at(Structure const&         s,
                             std::span<Element const> w,
                             std::size_t              position) {
    auto const seed = seed_at(s.biorder(), s.green(), w, position);
    if (!seed) {
      fail(ErrorCode::NotRegular,
           "letter " + std::to_string(position + 1) + " is not a seed");
    }
    auto const  e    = w[position];
    auto const  c    = s.green().d_class[e];
    auto const& grid = s.grid(c);
    auto        t    = idempotent_triple(s, c, grid.row_of(e), grid.col_of(e));
    for (std::size_t q = position + 1; q < w.size(); ++q) {
      t = act_or_fail(s, t, w[q], Side::Right);
    }
    for (std::size_t q = position; q-- > 0;) {
      t = act_or_fail(s, t, w[q], Side::Left);
    }
    return t;
  }

  ReesTriple coordinatize(Structure const& s, std::span<Element const> w) {
    auto const r = regularity_and_seeds(s.biorder(), s.green(), w);
    if (!r) {
      fail(ErrorCode::NotRegular, "the word " + s.biorder().format(w) + " has no seed");
    }
    return coordinatize_at(s, w, r->leftmost.position);
  }

  Word idempotent_normal_form(Structure const& s, std::span<Element const> w) {
    auto const r = regularity_and_seeds(s.biorder(), s.green(), w);
    if (!r) {
      fail(ErrorCode::NotRegular, "the word " + s.biorder().format(w) + " has no seed");
    }
    auto const  p    = r->leftmost.position;
    auto const  e    = w[p];
    auto const  c    = s.green().d_class[e];
    auto const& grid = s.grid(c);
    auto const  cell = [&grid](std::size_t i, std::size_t l) { return *grid.idempotent_at(i, l); };

    Word        right;
    std::size_t lambda = grid.col_of(e);
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      auto const& a  = s.action(c, w[q]);
      auto const  l2 = a.tau.at(lambda);
      if (l2 == kNone) {
        fail(ErrorCode::Internal, "seed extension left the D-class");
      }
      right.push_back(cell(fixed_row(grid, a, lambda, l2), l2));
      lambda = l2;
    }
    Word        left;
    std::size_t i = grid.row_of(e);
    for (std::size_t q = p; q-- > 0;) {
      auto const& a  = s.action(c, w[q]);
      auto const  i2 = a.sigma.at(i);
      if (i2 == kNone) {
        fail(ErrorCode::Internal, "seed extension left the D-class");
      }
      left.push_back(cell(i2, fixed_col(grid, a, i, i2)));
      i = i2;
    }
    Word out(left.rbegin(), left.rend());
    out.push_back(e);
    out.insert(out.end(), right.begin(), right.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::optional<ReesTriple> multiply_in_class(Structure const&  s,
                                              ReesTriple const& t1,
                                              ReesTriple const& t2) {
    if (t1.dclass != t2.dclass) {
      fail(ErrorCode::ClassMismatch, "triples belong to different D-classes");
    }
    if (!s.grid(t1.dclass).has_cell(t2.i, t1.lambda)) {
      return std::nullopt;
    }
    return ReesTriple{t1.dclass, t1.i,
                      t1.g * s.f(t1.dclass, t2.i, t1.lambda).inverse() * t2.g,
                      t2.lambda};
  }

}  // namespace freeidem
