#include "freeidem/biorder.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "freeidem/error.hpp"

namespace freeidem {

  namespace {
    std::vector<std::string> split_ws(std::string_view text) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.emplace_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    // Number the blocks of an equivalence by least member.
    std::vector<ClassId> number_blocks(std::size_t n, auto&& related) {
      std::vector<ClassId> id(n, kNoElement);
      ClassId              next = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (id[e] != kNoElement) {
          continue;
        }
        for (std::size_t f = e; f < n; ++f) {
          if (id[f] == kNoElement && related(e, f)) {
            id[f] = next;
          }
        }
        ++next;
      }
      return id;
    }

    std::vector<std::vector<Element>> members_of(std::vector<ClassId> const& id) {
      std::vector<std::vector<Element>> out;
      for (Element e = 0; e < id.size(); ++e) {
        if (id[e] >= out.size()) {
          out.resize(id[e] + 1);
        }
        out[id[e]].push_back(e);
      }
      return out;
    }
  }  // namespace

  BiorderedSet BiorderedSet::validate_and_build(RawBiorder const& raw) {
    BiorderedSet b;
    b.names_ = raw.elements;
    for (Element e = 0; e < b.names_.size(); ++e) {
      if (!b.index_.emplace(b.names_[e], e).second) {
        fail(ErrorCode::DuplicateElement, b.names_[e]);
      }
    }
    auto const n = b.names_.size();
    b.table_.assign(n * n, kNoElement);
    auto lookup = [&b](std::string const& s) {
      auto it = b.index_.find(s);
      if (it == b.index_.end()) {
        fail(ErrorCode::UnknownElement, s);
      }
      return it->second;
    };
    for (auto const& [x, y, z] : raw.products) {
      auto const e = lookup(x), f = lookup(y), g = lookup(z);
      auto&      slot = b.table_[e * n + f];
      if (slot != kNoElement && slot != g) {
        fail(ErrorCode::MalformedInput,
             "conflicting products for " + x + " " + y);
      }
      slot = g;
    }

    for (Element e = 0; e < n; ++e) {
      for (Element f = 0; f < n; ++f) {
        if (e == f || !b.defined(e, f)) {
          continue;
        }
        if (!b.defined(f, e)) {
          fail(ErrorCode::HalfDefinedPair,
               b.names_[e] + " " + b.names_[f] + " is defined but "
                   + b.names_[f] + " " + b.names_[e] + " is not");
        }
        auto const ef = b.mul(e, f), fe = b.mul(f, e);
        if (ef != e && ef != f && fe != e && fe != f) {
          fail(ErrorCode::NonBasicProduct, b.names_[e] + " " + b.names_[f]);
        }
        if (b.table_[ef * n + ef] != ef) {
          fail(ErrorCode::NonIdempotentProduct,
               b.names_[e] + " " + b.names_[f] + " = " + b.names_[ef]);
        }
      }
    }
    for (Element e = 0; e < n; ++e) {
      if (b.table_[e * n + e] != e) {
        fail(ErrorCode::MissingIdempotentLaw, b.names_[e]);
      }
    }
    b.finish();
    return b;
  }

  BiorderedSet BiorderedSet::from_cayley_table(CayleyTable const& cayley) {
    auto const n = cayley.elements.size();
    if (cayley.table.size() != n) {
      fail(ErrorCode::MalformedInput, "table must have one row per element");
    }
    for (auto const& row : cayley.table) {
      if (row.size() != n) {
        fail(ErrorCode::MalformedInput, "table rows must have one entry per element");
      }
      for (auto x : row) {
        if (x >= n) {
          fail(ErrorCode::MalformedInput, "table entry out of range");
        }
      }
    }
    auto const& t = cayley.table;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (t[t[a][c]][d] != t[a][t[c][d]]) {
            fail(ErrorCode::NonAssociative,
                 "(" + cayley.elements[a] + " " + cayley.elements[c] + ") "
                     + cayley.elements[d]);
          }
        }
      }
    }
    std::vector<std::size_t> idem;
    for (std::size_t a = 0; a < n; ++a) {
      if (t[a][a] == a) {
        idem.push_back(a);
      }
    }
    std::vector<std::size_t> pos(n, kNone);
    for (std::size_t k = 0; k < idem.size(); ++k) {
      pos[idem[k]] = k;
    }
    RawBiorder raw;
    for (auto a : idem) {
      raw.elements.push_back(cayley.elements[a]);
    }
    for (auto e : idem) {
      for (auto f : idem) {
        auto const ef = t[e][f], fe = t[f][e];
        if (e == f || ef == e || ef == f || fe == e || fe == f) {
          // ef is idempotent for a basic pair: it lies in eSe or fSf.
          raw.products.push_back({cayley.elements[e], cayley.elements[f],
                                  cayley.elements[ef]});
          if (pos[ef] == kNone) {
            fail(ErrorCode::Internal, "basic product is not idempotent");
          }
        }
      }
    }
    return validate_and_build(raw);
  }

  void BiorderedSet::finish() {
    auto const n = size();
    identity_.reset();
    for (Element e = 0; e < n && !identity_; ++e) {
      bool top = true;
      for (Element f = 0; f < n && top; ++f) {
        top = le(f, e);
      }
      if (top) {
        identity_ = e;
      }
    }
    expansions_.assign(n, {});
    for (Element e = 0; e < n; ++e) {
      for (Element f = 0; f < n; ++f) {
        if (defined(e, f)) {
          expansions_[mul(e, f)].emplace_back(e, f);
        }
      }
    }
  }

  std::optional<Element> BiorderedSet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Element BiorderedSet::at(std::string_view name) const {
    auto e = find(name);
    if (!e) {
      fail(ErrorCode::UnknownLetter, std::string(name));
    }
    return *e;
  }

  Word BiorderedSet::parse_word(std::span<std::string const> letters) const {
    Word w;
    w.reserve(letters.size());
    for (auto const& s : letters) {
      w.push_back(at(s));
    }
    return w;
  }

  Word BiorderedSet::parse_word(std::string_view text) const {
    auto const parts = split_ws(text);
    return parse_word(std::span<std::string const>(parts));
  }

  std::string BiorderedSet::format(std::span<Element const> w) const {
    std::string out;
    for (auto e : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += names_[e];
    }
    return out;
  }

  RawBiorder BiorderedSet::to_raw() const {
    RawBiorder raw;
    raw.elements = names_;
    for (Element e = 0; e < size(); ++e) {
      for (Element f = 0; f < size(); ++f) {
        if (defined(e, f)) {
          raw.products.push_back({names_[e], names_[f], names_[mul(e, f)]});
        }
      }
    }
    return raw;
  }

  GreenData green_data(BiorderedSet const& b) {
    auto const n = b.size();
    GreenData  g;
    g.r_class = number_blocks(
        n, [&b](Element e, Element f) { return b.le_r(e, f) && b.le_r(f, e); });
    g.l_class = number_blocks(
        n, [&b](Element e, Element f) { return b.le_l(e, f) && b.le_l(f, e); });
    UnionFind uf(n);
    for (Element e = 0; e < n; ++e) {
      for (Element f = e + 1; f < n; ++f) {
        if (g.r_class[e] == g.r_class[f] || g.l_class[e] == g.l_class[f]) {
          uf.unite(e, f);
        }
      }
    }
    g.d_class = number_blocks(
        n, [&uf](Element e, Element f) { return uf.find(e) == uf.find(f); });
    g.r_members = members_of(g.r_class);
    g.l_members = members_of(g.l_class);
    g.d_members = members_of(g.d_class);

    auto const k = g.d_members.size();
    g.class_le.assign(k, std::vector<bool>(k, false));
    for (std::size_t c = 0; c < k; ++c) {
      g.class_le[c][c] = true;
    }
    for (Element x = 0; x < n; ++x) {
      for (Element e = 0; e < n; ++e) {
        if (b.le_r(x, e) || b.le_l(x, e)) {
          g.class_le[g.d_class[x]][g.d_class[e]] = true;
        }
      }
    }
    for (std::size_t m = 0; m < k; ++m) {
      for (std::size_t a = 0; a < k; ++a) {
        if (!g.class_le[a][m]) {
          continue;
        }
        for (std::size_t c = 0; c < k; ++c) {
          if (g.class_le[m][c]) {
            g.class_le[a][c] = true;
          }
        }
      }
    }

    std::optional<ClassId> top;
    if (auto one = b.identity()) {
      top = g.d_class[*one];
    }
    g.maximal.assign(k, false);
    for (ClassId c = 0; c < k; ++c) {
      if (top && c == *top) {
        continue;
      }
      bool maximal = true;
      for (ClassId d = 0; d < k && maximal; ++d) {
        if (d != c && !(top && d == *top) && g.class_le[c][d]) {
          maximal = false;
        }
      }
      g.maximal[c] = maximal;
    }
    return g;
  }

  DClassGrid::DClassGrid(ClassId              id,
                         std::vector<ClassId> rows,
                         std::vector<ClassId> cols,
                         std::vector<Element> cells,
                         std::size_t          universe)
      : id_(id),
        rows_(std::move(rows)),
        cols_(std::move(cols)),
        cells_(std::move(cells)),
        row_of_(universe, kNone),
        col_of_(universe, kNone),
        cell_index_(cells_.size(), kNone) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t l = 0; l < cols_.size(); ++l) {
        auto const e = cells_[i * cols_.size() + l];
        if (e == kNoElement) {
          continue;
        }
        row_of_[e]                        = i;
        col_of_[e]                        = l;
        cell_index_[i * cols_.size() + l] = cell_list_.size();
        cell_list_.emplace_back(i, l);
      }
    }
  }

  DClassGrid dclass_grid(BiorderedSet const& b, GreenData const& g, ClassId id) {
    if (id >= g.num_classes()) {
      fail(ErrorCode::UnknownClass, std::to_string(id));
    }
    std::vector<ClassId> rows, cols;
    for (auto e : g.d_members[id]) {
      rows.push_back(g.r_class[e]);
      cols.push_back(g.l_class[e]);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<Element> cells(rows.size() * cols.size(), kNoElement);
    for (auto e : g.d_members[id]) {
      auto const i = std::lower_bound(rows.begin(), rows.end(), g.r_class[e]) - rows.begin();
      auto const l = std::lower_bound(cols.begin(), cols.end(), g.l_class[e]) - cols.begin();
      auto&      slot = cells[i * cols.size() + l];
      if (slot != kNoElement) {
        fail(ErrorCode::Internal, "two idempotents in one H-class");
      }
      slot = e;
    }
    return DClassGrid(id, std::move(rows), std::move(cols), std::move(cells), b.size());
  }

}  // namespace freeidem
