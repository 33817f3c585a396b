#include "freeidem/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    constexpr std::size_t kMaxTableOrder = 4096;

    GroupWord cyclic_reduce(GroupWord const& w) {
      auto l = w.reduced().letters();
      std::size_t a = 0, z = l.size();
      while (z - a >= 2 && l[a] == -l[z - 1]) {
        ++a;
        --z;
      }
      return GroupWord(std::vector<GroupLetter>(l.begin() + a, l.begin() + z));
    }
  }  // namespace

  std::string generator_name(std::size_t i, std::size_t lambda) {
    if (i < 9 && lambda < 9) {
      return "f" + std::to_string(i + 1) + std::to_string(lambda + 1);
    }
    return "f" + std::to_string(i + 1) + "_" + std::to_string(lambda + 1);
  }

  std::vector<SingularSquare> singular_squares(BiorderedSet const& b,
                                               DClassGrid const&   grid) {
    using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, char>;
    std::map<Key, Element> found;
    auto const rows = grid.num_rows(), cols = grid.num_cols();
    auto record = [&found](SingularSquare const& s) {
      found.emplace(Key{s.i, s.j, s.lambda, s.mu, s.kind}, s.witness);
    };
    for (Element f = 0; f < b.size(); ++f) {
      // (a): f fixes e_{iλ}, e_{jλ} from the left and moves both to column μ
      // from the right.
      for (std::size_t lam = 0; lam < cols; ++lam) {
        for (std::size_t i = 0; i < rows; ++i) {
          auto const eil = grid.idempotent_at(i, lam);
          if (!eil || b.product(f, *eil) != eil) {
            continue;
          }
          auto const x = b.product(*eil, f);
          if (!x || !grid.contains(*x) || grid.row_of(*x) != i) {
            continue;
          }
          auto const mu = grid.col_of(*x);
          if (mu == lam) {
            continue;
          }
          for (std::size_t j = i + 1; j < rows; ++j) {
            auto const ejl = grid.idempotent_at(j, lam);
            auto const ejm = grid.idempotent_at(j, mu);
            if (!ejl || !ejm || b.product(f, *ejl) != ejl || b.product(*ejl, f) != ejm) {
              continue;
            }
            record({i, j, lam, mu, f, 'a'});
          }
        }
      }
      // (b): the left-right dual.
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t lam = 0; lam < cols; ++lam) {
          auto const eil = grid.idempotent_at(i, lam);
          if (!eil || b.product(*eil, f) != eil) {
            continue;
          }
          auto const x = b.product(f, *eil);
          if (!x || !grid.contains(*x) || grid.col_of(*x) != lam) {
            continue;
          }
          auto const j = grid.row_of(*x);
          if (j == i) {
            continue;
          }
          for (std::size_t mu = lam + 1; mu < cols; ++mu) {
            auto const eim = grid.idempotent_at(i, mu);
            auto const ejm = grid.idempotent_at(j, mu);
            if (!eim || !ejm || b.product(*eim, f) != eim || b.product(f, *eim) != ejm) {
              continue;
            }
            record({i, j, lam, mu, f, 'b'});
          }
        }
      }
    }
    std::vector<SingularSquare> out;
    for (auto const& [k, f] : found) {
      auto const& [i, j, lam, mu, kind] = k;
      out.push_back({i, j, lam, mu, f, kind});
    }
    return out;
  }

  std::vector<GroupWord> Presentation::relators() const {
    std::vector<GroupWord> out;
    for (auto t : tree) {
      out.push_back(GroupWord::generator(t));
    }
    out.insert(out.end(), square_relators.begin(), square_relators.end());
    return out;
  }

  std::string Presentation::to_string() const {
    std::string out = "generators:";
    for (auto const& n : names) {
      out += ' ' + n;
    }
    out += "\ntree:";
    for (auto t : tree) {
      out += ' ' + names[t];
    }
    out += "\nrelations:\n";
    for (auto t : tree) {
      out += "  " + names[t] + " = 1\n";
    }
    for (auto const& r : square_relators) {
      auto const& l = r.letters();
      auto lhs = GroupWord({l[0], l[1]}), rhs = GroupWord({-l[3], -l[2]});
      out += "  " + lhs.to_string(names) + " = " + rhs.to_string(names) + "\n";
    }
    return out;
  }

  Presentation presentation(BiorderedSet const& b, DClassGrid const& grid) {
    Presentation p;
    auto const   rows = grid.num_rows(), cols = grid.num_cols();
    p.num_generators = grid.num_cells();
    for (std::size_t k = 0; k < grid.num_cells(); ++k) {
      auto const [i, l] = grid.cell(k);
      p.names.push_back(generator_name(i, l));
    }
    // Breadth-first spanning tree of the bipartite graph: vertices are rows
    // 0..rows-1 followed by columns.
    std::vector<bool>        seen(rows + cols, false);
    std::deque<std::size_t>  queue{0};
    p.in_tree.assign(p.num_generators, false);
    seen[0] = true;
    while (!queue.empty()) {
      auto const v = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < grid.num_cells(); ++k) {
        auto const [i, l] = grid.cell(k);
        std::size_t other;
        if (v < rows && i == v) {
          other = rows + l;
        } else if (v >= rows && l == v - rows) {
          other = i;
        } else {
          continue;
        }
        if (!seen[other]) {
          seen[other]  = true;
          p.in_tree[k] = true;
          queue.push_back(other);
        }
      }
    }
    for (std::size_t k = 0; k < p.num_generators; ++k) {
      if (p.in_tree[k]) {
        p.tree.push_back(k);
      }
    }
    p.squares = singular_squares(b, grid);
    for (auto const& s : p.squares) {
      auto const il = grid.cell_index(s.i, s.lambda), im = grid.cell_index(s.i, s.mu);
      auto const jl = grid.cell_index(s.j, s.lambda), jm = grid.cell_index(s.j, s.mu);
      GroupWord  r({gen_letter(il, true), gen_letter(im), gen_letter(jm, true), gen_letter(jl)});
      if (std::find(p.square_relators.begin(), p.square_relators.end(), r)
          == p.square_relators.end()) {
        p.square_relators.push_back(std::move(r));
      }
    }
    return p;
  }

  std::string_view to_string(BackendKind k) noexcept {
    switch (k) {
      case BackendKind::Free:
        return "free";
      case BackendKind::Finite:
        return "finite";
      case BackendKind::Unknown:
        return "unknown";
    }
    return "unknown";
  }

  GroupBackend GroupBackend::free(Presentation const& p) {
    GroupBackend g;
    g.kind_  = BackendKind::Free;
    g.names_ = p.names;
    g.to_basis_.assign(p.num_generators, kNone);
    for (std::size_t k = 0; k < p.num_generators; ++k) {
      if (!p.in_tree[k]) {
        g.to_basis_[k] = g.basis_.size();
        g.basis_.push_back(k);
      }
    }
    return g;
  }

  GroupBackend GroupBackend::finite(FiniteGroup grp, std::vector<std::string> names) {
    GroupBackend g;
    g.kind_  = BackendKind::Finite;
    g.group_ = std::move(grp);
    g.names_ = std::move(names);
    return g;
  }

  GroupBackend GroupBackend::unknown(std::string reason, std::vector<std::string> names) {
    GroupBackend g;
    g.kind_   = BackendKind::Unknown;
    g.reason_ = std::move(reason);
    g.names_  = std::move(names);
    return g;
  }

  std::vector<std::string> GroupBackend::basis_names() const {
    std::vector<std::string> out;
    for (auto k : basis_) {
      out.push_back(names_[k]);
    }
    return out;
  }

  GroupElement GroupBackend::reduce(GroupWord const& w) const {
    GroupElement out;
    switch (kind_) {
      case BackendKind::Free:
        for (auto l : w.letters()) {
          auto const k = letter_gen(l);
          if (k >= to_basis_.size()) {
            fail(ErrorCode::MalformedInput, "group word uses an unknown generator");
          }
          if (to_basis_[k] != kNone) {
            out.word *= GroupWord::generator(to_basis_[k], letter_inverse(l));
          }
        }
        return out;
      case BackendKind::Finite:
        for (auto l : w.letters()) {
          auto const k = letter_gen(l);
          if (k >= group_.generator_images.size()) {
            fail(ErrorCode::MalformedInput, "group word uses an unknown generator");
          }
          auto x = group_.generator_images[k];
          if (letter_inverse(l)) {
            x = group_.inverses[x];
          }
          out.index = group_.table[out.index][x];
        }
        return out;
      case BackendKind::Unknown:
        break;
    }
    fail(ErrorCode::UnknownBackend, "no model for this group: " + reason_);
  }

  GroupElement GroupBackend::multiply(GroupElement const& a, GroupElement const& b) const {
    switch (kind_) {
      case BackendKind::Free:
        return {a.word * b.word, 0};
      case BackendKind::Finite:
        return {{}, group_.table[a.index][b.index]};
      case BackendKind::Unknown:
        break;
    }
    fail(ErrorCode::UnknownBackend, reason_);
  }

  GroupElement GroupBackend::inverse(GroupElement const& a) const {
    switch (kind_) {
      case BackendKind::Free:
        return {a.word.inverse(), 0};
      case BackendKind::Finite:
        return {{}, group_.inverses[a.index]};
      case BackendKind::Unknown:
        break;
    }
    fail(ErrorCode::UnknownBackend, reason_);
  }

  std::vector<GroupElement> GroupBackend::elements() const {
    if (kind_ != BackendKind::Finite) {
      fail(ErrorCode::Internal, "only finite groups can be listed");
    }
    std::vector<GroupElement> out;
    for (std::uint32_t x = 0; x < group_.order; ++x) {
      out.push_back({{}, x});
    }
    return out;
  }

  std::string GroupBackend::format(GroupElement const& a) const {
    switch (kind_) {
      case BackendKind::Free:
        return a.word.to_string(basis_names());
      case BackendKind::Finite:
        return group_.spellings[a.index].to_string(names_);
      case BackendKind::Unknown:
        break;
    }
    return "?";
  }

  GroupBackend classify(BiorderedSet const& b, DClassGrid const& grid, std::size_t coset_bound) {
    return classify(presentation(b, grid), coset_bound);
  }

  GroupBackend classify(Presentation const& p, std::size_t coset_bound) {
    if (p.squares.empty()) {
      return GroupBackend::free(p);
    }
    // Eliminate generators through relators of length one or two, keeping
    // the image of every original generator.
    auto const             n = p.num_generators;
    std::vector<GroupWord> image(n);
    std::vector<bool>      live(n, true);
    for (std::size_t k = 0; k < n; ++k) {
      image[k] = GroupWord::generator(k);
    }
    auto rels = p.relators();
    auto eliminate = [&](std::size_t x, GroupWord const& w) {
      live[x] = false;
      auto sub = [&](std::size_t g) { return g == x ? w : GroupWord::generator(g); };
      for (auto& im : image) {
        im = im.substitute(sub);
      }
      for (auto& r : rels) {
        r = cyclic_reduce(r.substitute(sub));
      }
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (auto& r : rels) {
        r = cyclic_reduce(r);
        auto const& l = r.letters();
        if (l.size() == 1) {
          eliminate(letter_gen(l[0]), GroupWord());
          changed = true;
        } else if (l.size() == 2 && letter_gen(l[0]) != letter_gen(l[1])) {
          // x y = 1 gives x = y⁻¹.
          auto const x = l[0];
          auto       w = GroupWord({-l[1]});
          eliminate(letter_gen(x), letter_inverse(x) ? w.inverse() : w);
          changed = true;
        }
        if (changed) {
          break;
        }
      }
      std::erase_if(rels, [](GroupWord const& r) { return r.empty(); });
    }

    std::vector<std::size_t> renum(n, kNone), orig;
    for (std::size_t k = 0; k < n; ++k) {
      if (live[k]) {
        renum[k] = orig.size();
        orig.push_back(k);
      }
    }
    auto to_new = [&renum](GroupWord const& w) {
      return w.substitute([&renum](std::size_t g) { return GroupWord::generator(renum[g]); });
    };
    std::vector<GroupWord> new_rels;
    for (auto const& r : rels) {
      new_rels.push_back(to_new(r));
    }
    CosetTable table;
    try {
      table = todd_coxeter(orig.size(), new_rels, coset_bound);
    } catch (Error const& e) {
      if (e.code() != ErrorCode::BoundExceeded) {
        throw;
      }
      return GroupBackend::unknown(e.what(), p.names);
    }
    if (table.size() > kMaxTableOrder) {
      return GroupBackend::unknown(
          "finite of order " + std::to_string(table.size()) + ", too large to tabulate",
          p.names);
    }

    FiniteGroup grp;
    grp.order = table.size();
    // Shortest spellings by breadth-first search from the identity coset.
    grp.spellings.assign(grp.order, GroupWord());
    std::vector<bool>          seen(grp.order, false);
    std::deque<std::uint32_t>  queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      auto const c = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < 2 * orig.size(); ++x) {
        auto const d = table.action[c][x];
        if (!seen[d]) {
          seen[d]          = true;
          grp.spellings[d] = grp.spellings[c] * GroupWord::generator(orig[x / 2], x % 2 == 1);
          queue.push_back(d);
        }
      }
    }
    std::vector<GroupWord> new_spell(grp.order);
    for (std::uint32_t c = 0; c < grp.order; ++c) {
      new_spell[c] = to_new(grp.spellings[c]);
    }
    grp.table.assign(grp.order, std::vector<std::uint32_t>(grp.order));
    grp.inverses.assign(grp.order, 0);
    for (std::uint32_t a = 0; a < grp.order; ++a) {
      for (std::uint32_t c = 0; c < grp.order; ++c) {
        auto const ac = table.apply(a, new_spell[c]);
        grp.table[a][c] = ac;
        if (ac == 0) {
          grp.inverses[a] = c;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      grp.generator_images.push_back(table.apply(0, to_new(image[k])));
    }
    return GroupBackend::finite(std::move(grp), p.names);
  }

  GroupElement group_reduce(GroupBackend const& backend, GroupWord const& w) {
    return backend.reduce(w);
  }

}  // namespace freeidem
