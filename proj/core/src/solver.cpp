#include "freeidem/solver.hpp"

#include <map>
#include <set>

#include "freeidem/error.hpp"
#include "freeidem/green_ig.hpp"
#include "freeidem/ratgroup.hpp"

namespace freeidem {

  using nlohmann::json;

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::Equal:
        return "equal";
      case Verdict::NotEqual:
        return "not-equal";
      case Verdict::Unsupported:
        return "unsupported";
    }
    return "unsupported";
  }

  std::string_view to_string(Reason r) noexcept {
    switch (r) {
      case Reason::None:
        return "none";
      case Reason::Fingerprint:
        return "fingerprint";
      case Reason::Endpoints:
        return "endpoints";
      case Reason::Group:
        return "group";
      case Reason::Csp:
        return "csp";
    }
    return "none";
  }

  namespace {
    struct VarSet {
      bool                                 is_explicit = true;
      std::set<GroupElement>               elems;
      GroupNfa                             nfa;
      std::map<GroupElement, GroupElement> pred;
    };

    // For two free groups the contact set must be {(1,1)} or empty; returns
    // which, after checking that every useful transition is trivially
    // labelled.
    bool trivial_contact(RhoSubset const& r, GroupBackend const& g1, GroupBackend const& g2) {
      std::vector<std::vector<std::size_t>> out(r.num_states), in(r.num_states);
      for (std::size_t k = 0; k < r.transitions.size(); ++k) {
        out[r.transitions[k].from].push_back(k);
        in[r.transitions[k].to].push_back(k);
      }
      auto sweep = [&r](std::size_t start, auto const& adj, bool forward) {
        std::vector<bool>        seen(r.num_states, false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
          auto const q = stack.back();
          stack.pop_back();
          for (auto k : adj[q]) {
            auto const n = forward ? r.transitions[k].to : r.transitions[k].from;
            if (!seen[n]) {
              seen[n] = true;
              stack.push_back(n);
            }
          }
        }
        return seen;
      };
      auto const fwd = sweep(r.initial, out, true);
      auto const bwd = sweep(r.final, in, false);
      for (auto const& t : r.transitions) {
        if (fwd[t.from] && bwd[t.to]
            && (g1.reduce(t.first) != g1.identity() || g2.reduce(t.second) != g2.identity())) {
          fail(ErrorCode::UnsupportedRegime,
               "contact set between two free groups carries a nontrivial label");
        }
      }
      return fwd[r.final];
    }

    std::vector<std::string> raw_names(DClassGrid const& grid) {
      std::vector<std::string> out;
      for (std::size_t k = 0; k < grid.num_cells(); ++k) {
        auto const [i, l] = grid.cell(k);
        out.push_back(generator_name(i, l));
      }
      return out;
    }

    json side_json(Structure const&              s,
                   std::span<Element const>      w,
                   Fingerprint const&            fp,
                   std::vector<ReesTriple> const& coords) {
      json factors = json::array();
      for (std::size_t k = 0; k < fp.factors.size(); ++k) {
        auto const& f = fp.factors[k];
        json        x = {{"begin", f.begin},
                         {"end", f.end},
                         {"seed", f.begin + f.seed.position},
                         {"class", f.dclass}};
        if (k < coords.size()) {
          auto const& t = coords[k];
          x["i"]        = t.i;
          x["lambda"]   = t.lambda;
          x["g"]        = t.g.to_string(raw_names(s.grid(t.dclass)));
        }
        factors.push_back(std::move(x));
      }
      std::vector<std::string> letters;
      for (auto e : w) {
        letters.push_back(s.biorder().name(e));
      }
      return {{"word", letters}, {"fingerprint", fp.classes()}, {"factors", factors}};
    }

    std::vector<ReesTriple> coordinates(Structure const& s, std::span<Element const> w, Fingerprint const& fp) {
      std::vector<ReesTriple> out;
      for (auto const& f : fp.factors) {
        out.push_back(coordinatize_at(s, w.subspan(f.begin, f.end - f.begin), f.seed.position));
      }
      return out;
    }

    CspInstance make_instance(Structure const&               s,
                              std::vector<ClassId> const&    classes,
                              std::vector<ReesTriple> const& tu,
                              std::vector<ReesTriple> const& tv) {
      CspInstance c;
      c.fingerprint = classes;
      c.letters     = s.biorder().names();
      auto const m  = classes.size();
      for (auto d : classes) {
        auto const& p  = s.presentation(d);
        auto const& be = s.backend(d);
        CspGroup    g;
        g.dclass     = d;
        g.kind       = be.kind();
        g.maximal    = s.maximal(d);
        g.generators = p.names;
        g.tree       = p.tree;
        g.relators   = p.square_relators;
        g.rank       = be.is_free() ? be.rank() : 0;
        g.order      = be.is_finite() ? be.group().order : 0;
        c.groups.push_back(std::move(g));
      }
      for (std::size_t k = 0; k + 1 < m; ++k) {
        c.constraints.push_back(rho_subset(s.contact(classes[k], classes[k + 1]),
                                           {tu[k].lambda, tu[k + 1].i},
                                           {tv[k].lambda, tv[k + 1].i}));
      }
      for (std::size_t k = 0; k < m; ++k) {
        c.a.push_back(tu[k].g);
        c.b.push_back(tv[k].g);
      }
      c.i1       = tu.front().i;
      c.j1       = tv.front().i;
      c.lambda_m = tu.back().lambda;
      c.mu_m     = tv.back().lambda;
      return c;
    }

    // Why an instance falls outside the decidable regime, or empty.
    std::string regime_problem(Structure const& s, std::vector<ClassId> const& classes) {
      for (auto d : classes) {
        auto const& be = s.backend(d);
        if (be.kind() == BackendKind::Unknown) {
          return "maximal subgroup of class " + std::to_string(d) + " not identified: " + be.reason();
        }
        if (classes.size() > 1 && be.is_free() && be.rank() > 0 && !s.maximal(d)) {
          return "class " + std::to_string(d) + " is not maximal but has a free subgroup";
        }
      }
      return {};
    }
  }  // namespace

  Word elide_identity(BiorderedSet const& b, std::span<Element const> w) {
    Word out;
    auto one = b.identity();
    for (auto e : w) {
      if (!one || e != *one) {
        out.push_back(e);
      }
    }
    return out;
  }

  SolveResult solve_p(std::vector<GroupBackend const*> const& groups,
                      std::vector<RhoSubset> const&           rho,
                      std::vector<GroupWord> const&           a,
                      std::vector<GroupWord> const&           b) {
    auto const m = groups.size();
    if (m == 0 || rho.size() + 1 != m || a.size() != m || b.size() != m) {
      fail(ErrorCode::MalformedInput, "inconsistent problem sizes");
    }
    for (auto const* g : groups) {
      if (g->kind() == BackendKind::Unknown) {
        fail(ErrorCode::UnsupportedRegime, "unknown group");
      }
    }
    std::vector<VarSet> sets(1);
    sets[0].elems.insert(groups[0]->identity());
    json trace = json::array();
    auto describe = [&](std::size_t k) {
      auto const& v = sets[k];
      json        x = {{"variable", k}, {"group", std::string(to_string(groups[k]->kind()))}};
      if (v.is_explicit) {
        json vals = json::array();
        for (auto const& e : v.elems) {
          vals.push_back(groups[k]->format(e));
        }
        x["values"] = vals;
      } else {
        x["values"] = "rational";
      }
      return x;
    };
    trace.push_back(describe(0));

    bool dead = false;
    for (std::size_t k = 0; k + 1 < m && !dead; ++k) {
      auto const& gk = *groups[k];
      auto const& gn = *groups[k + 1];
      auto const  ak = gk.reduce(a[k]);
      auto const  bk = gk.reduce(b[k]);
      auto const& cur = sets[k];
      VarSet      next;
      if (enumerable(gk)) {
        for (auto const& x : cur.elems) {
          auto const c  = gk.multiply(gk.multiply(gk.inverse(ak), gk.inverse(x)), bk);
          auto const sl = slice_first(rho[k], gk, gn, c);
          if (sl.is_explicit) {
            for (auto const& y : sl.elements) {
              if (next.elems.insert(y).second) {
                next.pred.emplace(y, x);
              }
            }
          } else {
            next.is_explicit = false;
            next.nfa         = rat_union(next.nfa, sl.nfa);
          }
        }
      } else {
        // c ranges over a⁻¹ S⁻¹ b.
        GroupNfa c;
        if (cur.is_explicit) {
          for (auto const& x : cur.elems) {
            c = rat_union(c, GroupNfa::singleton(
                                 gk.multiply(gk.multiply(gk.inverse(ak), gk.inverse(x)), bk).word));
          }
        } else {
          c = rat_multiply(ak.word.inverse(), rat_inverse(cur.nfa), bk.word);
        }
        auto const x_of = [&](GroupWord const& cw) {
          return gk.multiply(gk.multiply(bk, gk.inverse(GroupElement{cw, 0})), gk.inverse(ak));
        };
        if (enumerable(gn)) {
          for (auto const& y : all_elements(gn)) {
            auto const sl = slice_second(rho[k], gk, gn, y);
            if (auto wit = rat_intersection_witness(c, sl.nfa)) {
              next.elems.insert(y);
              next.pred.emplace(y, x_of(*wit));
            }
          }
        } else if (trivial_contact(rho[k], gk, gn) && rat_member(c, GroupWord())) {
          next.elems.insert(gn.identity());
          next.pred.emplace(gn.identity(), x_of(GroupWord()));
        }
      }
      sets.push_back(std::move(next));
      trace.push_back(describe(k + 1));
      dead = sets.back().is_explicit && sets.back().elems.empty();
    }

    SolveResult out;
    if (!dead) {
      auto const& gl     = *groups[m - 1];
      auto const  target = gl.multiply(gl.reduce(b[m - 1]), gl.inverse(gl.reduce(a[m - 1])));
      auto const& last   = sets[m - 1];
      out.satisfiable = last.is_explicit ? last.elems.contains(target)
                                         : rat_member(last.nfa, target.word);
      if (out.satisfiable) {
        json         assignment = json::array();
        GroupElement x          = target;
        for (std::size_t k = m - 1; k-- > 0;) {
          auto const& v  = sets[k + 1];
          auto        it = v.pred.find(x);
          if (!v.is_explicit || it == v.pred.end()) {
            break;
          }
          x = it->second;
          if (k > 0) {
            assignment.push_back({{"variable", k}, {"value", groups[k]->format(x)}});
          }
        }
        out.trace["assignment"] = assignment;
      }
    }
    out.trace["sets"] = trace;
    return out;
  }

  Decision decide(Structure const& s, std::span<Element const> u0, std::span<Element const> v0) {
    auto const& b = s.biorder();
    for (auto e : u0) {
      if (e >= b.size()) {
        fail(ErrorCode::UnknownLetter, std::to_string(e));
      }
    }
    for (auto e : v0) {
      if (e >= b.size()) {
        fail(ErrorCode::UnknownLetter, std::to_string(e));
      }
    }
    auto const u = elide_identity(b, u0);
    auto const v = elide_identity(b, v0);
    Decision   d;
    if (u.empty() || v.empty()) {
      d.verdict = u.empty() && v.empty() ? Verdict::Equal : Verdict::NotEqual;
      d.reason  = d.verdict == Verdict::Equal ? Reason::None : Reason::Fingerprint;
      d.certificate = {{"verdict", std::string(to_string(d.verdict))},
                       {"reason", std::string(to_string(d.reason))},
                       {"note", "identity letters elided"}};
      return d;
    }
    auto const fu = minimal_r_factorisation(b, s.green(), u);
    auto const fv = minimal_r_factorisation(b, s.green(), v);
    auto       finish = [&](Verdict verdict, Reason reason) {
      d.verdict                = verdict;
      d.reason                 = reason;
      d.certificate["verdict"] = std::string(to_string(verdict));
      d.certificate["reason"]  = std::string(to_string(reason));
      return d;
    };
    auto const classes = fu.classes();
    if (classes != fv.classes()) {
      d.certificate = {{"u", side_json(s, u, fu, {})}, {"v", side_json(s, v, fv, {})}};
      return finish(Verdict::NotEqual, Reason::Fingerprint);
    }
    auto const tu = coordinates(s, u, fu);
    auto const tv = coordinates(s, v, fv);
    d.certificate = {{"u", side_json(s, u, fu, tu)}, {"v", side_json(s, v, fv, tv)}};
    if (tu.front().i != tv.front().i || tu.back().lambda != tv.back().lambda) {
      return finish(Verdict::NotEqual, Reason::Endpoints);
    }
    auto const m = classes.size();
    if (auto problem = regime_problem(s, classes); !problem.empty()) {
      d.csp                   = make_instance(s, classes, tu, tv);
      d.certificate["detail"] = problem;
      return finish(Verdict::Unsupported, Reason::None);
    }
    if (m == 1) {
      auto const& be = s.backend(classes[0]);
      auto const  gu = be.reduce(tu[0].g), gv = be.reduce(tv[0].g);
      d.certificate["group"] = {{"u", be.format(gu)}, {"v", be.format(gv)}};
      return gu == gv ? finish(Verdict::Equal, Reason::None)
                      : finish(Verdict::NotEqual, Reason::Group);
    }
    auto                             inst = make_instance(s, classes, tu, tv);
    std::vector<GroupBackend const*> groups;
    for (auto c : classes) {
      groups.push_back(&s.backend(c));
    }
    try {
      auto const r         = solve_p(groups, inst.constraints, inst.a, inst.b);
      d.certificate["csp"] = r.trace;
      return r.satisfiable ? finish(Verdict::Equal, Reason::None)
                           : finish(Verdict::NotEqual, Reason::Csp);
    } catch (Error const& e) {
      if (e.code() != ErrorCode::UnsupportedRegime) {
        throw;
      }
      d.certificate["detail"] = e.what();
      d.csp                   = std::move(inst);
      return finish(Verdict::Unsupported, Reason::None);
    }
  }

  std::optional<CspInstance>
  export_csp(Structure const& s, std::span<Element const> u0, std::span<Element const> v0) {
    auto const& b = s.biorder();
    auto const  u = elide_identity(b, u0);
    auto const  v = elide_identity(b, v0);
    if (u.empty() || v.empty()) {
      return std::nullopt;
    }
    auto const fu = minimal_r_factorisation(b, s.green(), u);
    auto const fv = minimal_r_factorisation(b, s.green(), v);
    if (fu.classes() != fv.classes()) {
      return std::nullopt;
    }
    auto const tu = coordinates(s, u, fu);
    auto const tv = coordinates(s, v, fv);
    if (tu.front().i != tv.front().i || tu.back().lambda != tv.back().lambda) {
      return std::nullopt;
    }
    return make_instance(s, fu.classes(), tu, tv);
  }

}  // namespace freeidem
