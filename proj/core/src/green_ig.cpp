#include "freeidem/green_ig.hpp"

#include <algorithm>
#include <random>

#include "freeidem/error.hpp"

namespace freeidem {

  std::optional<Element> step_right(BiorderedSet const& b,
                                    GreenData const&    g,
                                    Element             h,
                                    Element             f) {
    // h̄f̄ R h̄ iff some x L h satisfies fx = x; then h̄f̄ L (x*f)‾.
    for (auto x : g.l_members[g.l_class[h]]) {
      if (b.le_r(x, f)) {
        return b.mul(x, f);
      }
    }
    return std::nullopt;
  }

  std::optional<Element> step_left(BiorderedSet const& b,
                                   GreenData const&    g,
                                   Element             h,
                                   Element             f) {
    for (auto x : g.r_members[g.r_class[h]]) {
      if (b.le_l(x, f)) {
        return b.mul(f, x);
      }
    }
    return std::nullopt;
  }

  std::optional<Element> extend(BiorderedSet const&      b,
                                GreenData const&         g,
                                Element                  e,
                                std::span<Element const> v,
                                Side                     side) {
    for (auto x : v) {
      if (x >= b.size()) {
        fail(ErrorCode::UnknownLetter, std::to_string(x));
      }
    }
    std::optional<Element> t = e;
    if (side == Side::Right) {
      for (auto it = v.begin(); it != v.end() && t; ++it) {
        t = step_right(b, g, *t, *it);
      }
    } else {
      for (auto it = v.rbegin(); it != v.rend() && t; ++it) {
        t = step_left(b, g, *t, *it);
      }
    }
    return t;
  }

  namespace {
    // For each position p: the farthest letter the seed candidate w[p] can
    // be extended to on either side, and the trackers along the way.
    struct Reach {
      std::vector<std::size_t> left;   // least a with w[a..p] extendable
      std::vector<std::size_t> right;  // greatest c with w[p..c] extendable
    };

    Reach reach(BiorderedSet const& b, GreenData const& g, std::span<Element const> w) {
      auto const n = w.size();
      Reach      r{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
      for (std::size_t p = 0; p < n; ++p) {
        Element     t = w[p];
        std::size_t c = p;
        while (c + 1 < n) {
          auto nt = step_right(b, g, t, w[c + 1]);
          if (!nt) {
            break;
          }
          t = *nt;
          ++c;
        }
        r.right[p] = c;
        t          = w[p];
        std::size_t a = p;
        while (a > 0) {
          auto nt = step_left(b, g, t, w[a - 1]);
          if (!nt) {
            break;
          }
          t = *nt;
          --a;
        }
        r.left[p] = a;
      }
      return r;
    }

    SeedInfo seed_info(BiorderedSet const&      b,
                       GreenData const&         g,
                       std::span<Element const> factor,
                       std::size_t              p) {
      SeedInfo s;
      s.position = p;
      s.seed     = factor[p];
      s.r_witness = *extend(b, g, factor[p], factor.subspan(0, p), Side::Left);
      s.l_witness = *extend(b, g, factor[p], factor.subspan(p + 1), Side::Right);
      return s;
    }

    void check_letters(BiorderedSet const& b, std::span<Element const> w) {
      for (auto x : w) {
        if (x >= b.size()) {
          fail(ErrorCode::UnknownLetter, std::to_string(x));
        }
      }
    }
  }  // namespace

  std::optional<Regularity> regularity_and_seeds(BiorderedSet const&      b,
                                                 GreenData const&         g,
                                                 std::span<Element const> w) {
    check_letters(b, w);
    if (w.empty()) {
      return std::nullopt;
    }
    auto const r = reach(b, g, w);
    Regularity out;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (r.left[p] == 0 && r.right[p] == w.size() - 1) {
        out.seeds.push_back(p);
      }
    }
    if (out.seeds.empty()) {
      return std::nullopt;
    }
    out.leftmost = seed_info(b, g, w, out.seeds.front());
    return out;
  }

  std::optional<SeedInfo> seed_at(BiorderedSet const&      b,
                                  GreenData const&         g,
                                  std::span<Element const> w,
                                  std::size_t              position) {
    check_letters(b, w);
    if (position >= w.size()) {
      return std::nullopt;
    }
    auto const l = extend(b, g, w[position], w.subspan(0, position), Side::Left);
    auto const r = extend(b, g, w[position], w.subspan(position + 1), Side::Right);
    if (!l || !r) {
      return std::nullopt;
    }
    return SeedInfo{position, w[position], *l, *r};
  }

  std::vector<ClassId> Fingerprint::classes() const {
    std::vector<ClassId> out;
    for (auto const& f : factors) {
      out.push_back(f.dclass);
    }
    return out;
  }

  std::vector<std::size_t> Fingerprint::starts() const {
    std::vector<std::size_t> out;
    for (auto const& f : factors) {
      out.push_back(f.begin);
    }
    return out;
  }

  Fingerprint minimal_r_factorisation(BiorderedSet const&      b,
                                      GreenData const&         g,
                                      std::span<Element const> w) {
    check_letters(b, w);
    auto const  r = reach(b, g, w);
    Fingerprint fp;
    std::size_t a = 0;
    while (a < w.size()) {
      // [a, c] is regular iff some p in it reaches a on the left and c on
      // the right; take the largest such c (p = a always qualifies).
      std::size_t best = a, seed = a;
      for (std::size_t p = a; p < w.size(); ++p) {
        if (r.left[p] <= a && r.right[p] > best) {
          best = r.right[p];
        }
      }
      for (std::size_t p = a; p <= best; ++p) {
        if (r.left[p] <= a && r.right[p] >= best) {
          seed = p;
          break;
        }
      }
      Factor f;
      f.begin  = a;
      f.end    = best + 1;
      f.seed   = seed_info(b, g, w.subspan(a, f.end - a), seed - a);
      f.dclass = g.d_class[f.seed.seed];
      fp.factors.push_back(f);
      a = best + 1;
    }
    return fp;
  }

  std::vector<ClassId> d_fingerprint(BiorderedSet const&      b,
                                     GreenData const&         g,
                                     std::span<Element const> w) {
    return minimal_r_factorisation(b, g, w).classes();
  }

  std::vector<std::vector<std::size_t>>
  all_minimal_r_factorisations(BiorderedSet const&      b,
                               GreenData const&         g,
                               std::span<Element const> w) {
    check_letters(b, w);
    auto const n = w.size();
    // regular[a][c]: w[a..c) has a regular value.
    std::vector<std::vector<bool>> regular(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = a + 1; c <= n; ++c) {
        regular[a][c] = regularity_and_seeds(b, g, w.subspan(a, c - a)).has_value();
      }
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    auto minimal = [&](std::vector<std::size_t> const& starts) {
      std::vector<std::size_t> cut = starts;
      cut.push_back(n);
      for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
        for (std::size_t j = i + 2; j < cut.size(); ++j) {
          if (regular[cut[i]][cut[j]]) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, std::size_t a) -> void {
      if (a == n) {
        if (minimal(cur)) {
          out.push_back(cur);
        }
        return;
      }
      for (std::size_t c = a + 1; c <= n; ++c) {
        if (regular[a][c]) {
          cur.push_back(a);
          self(self, c);
          cur.pop_back();
        }
      }
    };
    if (n > 0) {
      rec(rec, 0);
    }
    return out;
  }

  Word random_rewrite(BiorderedSet const&      b,
                      std::span<Element const> w,
                      std::size_t              steps,
                      std::uint64_t            seed) {
    check_letters(b, w);
    std::mt19937_64 rng(seed);
    Word            cur(w.begin(), w.end());
    std::vector<std::size_t>                          contractions;
    std::vector<std::pair<std::size_t, std::size_t>> expansions;
    auto pick = [&rng](std::size_t n) {
      return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    };
    for (std::size_t s = 0; s < steps; ++s) {
      contractions.clear();
      expansions.clear();
      for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
        if (b.defined(cur[p], cur[p + 1])) {
          contractions.push_back(p);
        }
      }
      for (std::size_t p = 0; p < cur.size(); ++p) {
        auto const& ex = b.factorisations_of(cur[p]);
        for (std::size_t k = 0; k < ex.size(); ++k) {
          expansions.emplace_back(p, k);
        }
      }
      // Even odds between contracting and expanding.
      bool const contract =
          !contractions.empty() && (expansions.empty() || pick(2) == 0);
      if (contract) {
        auto const p = contractions[pick(contractions.size())];
        cur[p]       = b.mul(cur[p], cur[p + 1]);
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      } else if (!expansions.empty()) {
        auto const [p, k] = expansions[pick(expansions.size())];
        auto const [e, f] = b.factorisations_of(cur[p])[k];
        cur[p]            = e;
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(p) + 1, f);
      } else {
        break;
      }
    }
    return cur;
  }

}  // namespace freeidem
