#include "freeidem/ratgroup.hpp"

#include <deque>
#include <map>
#include <tuple>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    std::vector<std::vector<std::size_t>> epsilon_closure(GroupNfa const& n) {
      std::vector<std::vector<std::size_t>> eps(n.num_states);
      for (auto const& e : n.edges) {
        if (e.label == kEpsilon) {
          eps[e.from].push_back(e.to);
        }
      }
      std::vector<std::vector<std::size_t>> out(n.num_states);
      std::vector<std::size_t>              mark(n.num_states, kNone);
      for (std::size_t s = 0; s < n.num_states; ++s) {
        std::vector<std::size_t> stack{s};
        mark[s] = s;
        while (!stack.empty()) {
          auto const q = stack.back();
          stack.pop_back();
          out[s].push_back(q);
          for (auto r : eps[q]) {
            if (mark[r] != s) {
              mark[r] = s;
              stack.push_back(r);
            }
          }
        }
      }
      return out;
    }

    GroupNfa const& saturated(GroupNfa const& n, GroupNfa& storage) {
      if (n.saturated) {
        return n;
      }
      storage = benois_saturate(n);
      return storage;
    }

    void check_same_group(GroupNfa const& a, GroupNfa const& b) {
      if (a.group != kNone && b.group != kNone && a.group != b.group) {
        fail(ErrorCode::BackendMismatch, "rational subsets of different groups");
      }
    }

    // Product-automaton exploration for slices into a free group. `fixed`
    // holds the enumerable group, `word_of` gives the free-side label.
    template <typename Step>
    GroupNfa product_slice(RhoSubset const&                 rho,
                           std::vector<GroupElement> const& fixed_elems,
                           std::size_t                      start_elem,
                           std::size_t                      target_elem,
                           bool                             reverse,
                           Step&&                           step) {
      auto const k = fixed_elems.size();
      GroupNfa   out;
      out.num_states = rho.num_states * k;
      auto id        = [k](std::size_t q, std::size_t x) { return q * k + x; };
      for (std::size_t q = 0; q < rho.num_states; ++q) {
        for (std::size_t x = 0; x < k; ++x) {
          for (auto const& t : rho.transitions) {
            if (t.from != q) {
              continue;
            }
            auto const [x2, word] = step(t, x);
            if (reverse) {
              out.add_word(id(t.to, x2), id(q, x), word);
            } else {
              out.add_word(id(q, x), id(t.to, x2), word);
            }
          }
        }
      }
      if (reverse) {
        out.initial.insert(id(rho.final, target_elem));
        out.final.insert(id(rho.initial, start_elem));
      } else {
        out.initial.insert(id(rho.initial, start_elem));
        out.final.insert(id(rho.final, target_elem));
      }
      return out;
    }

    std::size_t index_of(std::vector<GroupElement> const& elems, GroupElement const& x) {
      for (std::size_t k = 0; k < elems.size(); ++k) {
        if (elems[k] == x) {
          return k;
        }
      }
      fail(ErrorCode::Internal, "element not found in enumerated group");
    }
  }  // namespace

  void GroupNfa::add_word(std::size_t from, std::size_t to, GroupWord const& w) {
    auto const& l = w.letters();
    if (l.empty()) {
      add_edge(from, to, kEpsilon);
      return;
    }
    auto cur = from;
    for (std::size_t k = 0; k < l.size(); ++k) {
      auto const next = k + 1 == l.size() ? to : add_state();
      add_edge(cur, next, l[k]);
      cur = next;
    }
  }

  GroupNfa GroupNfa::singleton(GroupWord const& w, std::size_t group) {
    GroupNfa n;
    n.group   = group;
    auto const a = n.add_state(), z = n.add_state();
    n.initial.insert(a);
    n.final.insert(z);
    n.add_word(a, z, w);
    return n;
  }

  GroupNfa benois_saturate(GroupNfa const& n) {
    GroupNfa                                         out = n;
    std::set<std::pair<std::size_t, std::size_t>>   eps;
    for (auto const& e : out.edges) {
      if (e.label == kEpsilon) {
        eps.emplace(e.from, e.to);
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      auto const closure = epsilon_closure(out);
      std::vector<std::vector<NfaEdge const*>> by_source(out.num_states);
      for (auto const& e : out.edges) {
        if (e.label != kEpsilon) {
          by_source[e.from].push_back(&e);
        }
      }
      std::vector<std::pair<std::size_t, std::size_t>> added;
      for (auto const& e : out.edges) {
        if (e.label == kEpsilon) {
          continue;
        }
        for (auto s : closure[e.to]) {
          for (auto const* f : by_source[s]) {
            if (f->label == -e.label && eps.emplace(e.from, f->to).second) {
              added.emplace_back(e.from, f->to);
            }
          }
        }
      }
      for (auto const& [p, q] : added) {
        out.edges.push_back({p, q, kEpsilon});
        changed = true;
      }
    }
    out.saturated = true;
    return out;
  }

  bool rat_member(GroupNfa const& n, GroupWord const& w) {
    GroupNfa    storage;
    auto const& s       = saturated(n, storage);
    auto const  closure = epsilon_closure(s);
    auto const  target  = w.reduced();
    std::vector<bool> cur(s.num_states, false);
    for (auto q : s.initial) {
      for (auto r : closure[q]) {
        cur[r] = true;
      }
    }
    for (auto l : target.letters()) {
      std::vector<bool> next(s.num_states, false);
      for (auto const& e : s.edges) {
        if (e.label == l && cur[e.from]) {
          for (auto r : closure[e.to]) {
            next[r] = true;
          }
        }
      }
      cur = std::move(next);
    }
    for (auto q : s.final) {
      if (cur[q]) {
        return true;
      }
    }
    return false;
  }

  std::optional<GroupWord> rat_intersection_witness(GroupNfa const& a, GroupNfa const& b) {
    check_same_group(a, b);
    GroupNfa    sa, sb;
    auto const& x = saturated(a, sa);
    auto const& y = saturated(b, sb);
    std::vector<std::vector<NfaEdge>> ox(x.num_states), oy(y.num_states);
    for (auto const& e : x.edges) {
      ox[e.from].push_back(e);
    }
    for (auto const& e : y.edges) {
      oy[e.from].push_back(e);
    }
    using P = std::pair<std::size_t, std::size_t>;
    std::map<P, std::pair<P, GroupLetter>> parent;
    std::deque<P>                          queue;
    for (auto p : x.initial) {
      for (auto q : y.initial) {
        if (parent.emplace(P{p, q}, std::pair{P{kNone, kNone}, kEpsilon}).second) {
          queue.emplace_back(p, q);
        }
      }
    }
    auto visit = [&](P from, P to, GroupLetter l) {
      if (parent.emplace(to, std::pair{from, l}).second) {
        queue.push_back(to);
      }
    };
    while (!queue.empty()) {
      auto const cur = queue.front();
      queue.pop_front();
      if (x.final.contains(cur.first) && y.final.contains(cur.second)) {
        std::vector<GroupLetter> word;
        for (P p = cur; p.first != kNone;) {
          auto const& [prev, l] = parent.at(p);
          if (l != kEpsilon) {
            word.push_back(l);
          }
          p = prev;
        }
        return GroupWord(std::vector<GroupLetter>(word.rbegin(), word.rend())).reduced();
      }
      for (auto const& e : ox[cur.first]) {
        if (e.label == kEpsilon) {
          visit(cur, {e.to, cur.second}, kEpsilon);
        }
      }
      for (auto const& f : oy[cur.second]) {
        if (f.label == kEpsilon) {
          visit(cur, {cur.first, f.to}, kEpsilon);
        }
      }
      for (auto const& e : ox[cur.first]) {
        if (e.label == kEpsilon) {
          continue;
        }
        for (auto const& f : oy[cur.second]) {
          if (f.label == e.label) {
            visit(cur, {e.to, f.to}, e.label);
          }
        }
      }
    }
    return std::nullopt;
  }

  bool rat_intersect_nonempty(GroupNfa const& a, GroupNfa const& b) {
    return rat_intersection_witness(a, b).has_value();
  }

  GroupNfa rat_inverse(GroupNfa const& n) {
    GroupNfa out;
    out.num_states = n.num_states;
    out.group      = n.group;
    for (auto const& e : n.edges) {
      out.edges.push_back({e.to, e.from, static_cast<GroupLetter>(-e.label)});
    }
    out.initial = n.final;
    out.final   = n.initial;
    return out;
  }

  GroupNfa rat_multiply(GroupWord const& l, GroupNfa const& n, GroupWord const& r) {
    GroupNfa out = n;
    out.saturated = false;
    auto const a = out.add_state(), z = out.add_state();
    for (auto q : n.initial) {
      out.add_word(a, q, l);
    }
    for (auto q : n.final) {
      out.add_word(q, z, r);
    }
    out.initial = {a};
    out.final   = {z};
    return out;
  }

  GroupNfa rat_union(GroupNfa const& a, GroupNfa const& b) {
    check_same_group(a, b);
    GroupNfa out  = a;
    out.saturated = false;
    if (out.group == kNone) {
      out.group = b.group;
    }
    auto const shift = out.num_states;
    out.num_states += b.num_states;
    for (auto const& e : b.edges) {
      out.edges.push_back({e.from + shift, e.to + shift, e.label});
    }
    for (auto q : b.initial) {
      out.initial.insert(q + shift);
    }
    for (auto q : b.final) {
      out.final.insert(q + shift);
    }
    return out;
  }

  bool enumerable(GroupBackend const& g) {
    return g.is_finite() || (g.is_free() && g.rank() == 0);
  }

  std::vector<GroupElement> all_elements(GroupBackend const& g) {
    if (g.is_finite()) {
      return g.elements();
    }
    if (enumerable(g)) {
      return {g.identity()};
    }
    fail(ErrorCode::InfiniteFixedSide, "group is not finite");
  }

  std::set<std::pair<GroupElement, GroupElement>>
  explicit_pairs(RhoSubset const& rho, GroupBackend const& g1, GroupBackend const& g2) {
    if (!enumerable(g1) || !enumerable(g2)) {
      fail(ErrorCode::InfiniteFixedSide, "explicit pair sets need two finite groups");
    }
    std::vector<std::pair<GroupElement, GroupElement>> labels;
    for (auto const& t : rho.transitions) {
      labels.emplace_back(g1.reduce(t.first), g2.reduce(t.second));
    }
    using Node = std::tuple<std::size_t, GroupElement, GroupElement>;
    std::set<Node>   seen{{rho.initial, g1.identity(), g2.identity()}};
    std::deque<Node> queue(seen.begin(), seen.end());
    std::set<std::pair<GroupElement, GroupElement>> out;
    while (!queue.empty()) {
      auto const [q, x, y] = queue.front();
      queue.pop_front();
      if (q == rho.final) {
        out.emplace(x, y);
      }
      for (std::size_t k = 0; k < rho.transitions.size(); ++k) {
        auto const& t = rho.transitions[k];
        if (t.from != q) {
          continue;
        }
        Node next{t.to, g1.multiply(x, labels[k].first), g2.multiply(labels[k].second, y)};
        if (seen.insert(next).second) {
          queue.push_back(next);
        }
      }
    }
    return out;
  }

  Slice slice_first(RhoSubset const&    rho,
                    GroupBackend const& g1,
                    GroupBackend const& g2,
                    GroupElement const& x) {
    if (!enumerable(g1)) {
      fail(ErrorCode::InfiniteFixedSide, "the fixed coordinate lies in an infinite group");
    }
    Slice out;
    if (enumerable(g2)) {
      for (auto const& [a, b] : explicit_pairs(rho, g1, g2)) {
        if (a == x) {
          out.elements.insert(b);
        }
      }
      return out;
    }
    auto const elems = all_elements(g1);
    std::vector<std::size_t> first_idx;
    std::vector<GroupWord>   second_word;
    for (auto const& t : rho.transitions) {
      first_idx.push_back(index_of(elems, g1.reduce(t.first)));
      second_word.push_back(g2.reduce(t.second).word);
    }
    auto const tindex = [&rho](ContactTransition const& t) {
      return static_cast<std::size_t>(&t - rho.transitions.data());
    };
    out.is_explicit = false;
    out.nfa         = product_slice(
        rho, elems, 0, index_of(elems, x), true,
        [&](ContactTransition const& t, std::size_t cur) {
          auto const k = tindex(t);
          auto const y = g1.multiply(elems[cur], elems[first_idx[k]]);
          return std::pair{index_of(elems, y), second_word[k]};
        });
    return out;
  }

  Slice slice_second(RhoSubset const&    rho,
                     GroupBackend const& g1,
                     GroupBackend const& g2,
                     GroupElement const& y) {
    if (!enumerable(g2)) {
      fail(ErrorCode::InfiniteFixedSide, "the fixed coordinate lies in an infinite group");
    }
    Slice out;
    if (enumerable(g1)) {
      for (auto const& [a, b] : explicit_pairs(rho, g1, g2)) {
        if (b == y) {
          out.elements.insert(a);
        }
      }
      return out;
    }
    auto const elems = all_elements(g2);
    std::vector<std::size_t> second_idx;
    std::vector<GroupWord>   first_word;
    for (auto const& t : rho.transitions) {
      second_idx.push_back(index_of(elems, g2.reduce(t.second)));
      first_word.push_back(g1.reduce(t.first).word);
    }
    auto const tindex = [&rho](ContactTransition const& t) {
      return static_cast<std::size_t>(&t - rho.transitions.data());
    };
    out.is_explicit = false;
    out.nfa         = product_slice(
        rho, elems, 0, index_of(elems, y), false,
        [&](ContactTransition const& t, std::size_t cur) {
          auto const k = tindex(t);
          auto const z = g2.multiply(elems[second_idx[k]], elems[cur]);
          return std::pair{index_of(elems, z), first_word[k]};
        });
    return out;
  }

}  // namespace freeidem
