#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace freeidem {

  //! Index of an idempotent in its biordered set (input order).
  using Element = std::uint32_t;
  //! Index of a D-class of the biordered set.
  using ClassId = std::uint32_t;
  //! A word over E, i.e. an element of the free semigroup E^+.
  using Word = std::vector<Element>;

  inline constexpr Element kNoElement = std::numeric_limits<Element>::max();
  inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  //! Raw biorder table as read from a file: element names and the list of
  //! defined products `e * f = g`.
  struct RawBiorder {
    std::vector<std::string>                elements;
    std::vector<std::array<std::string, 3>> products;
  };

  //! A full multiplication table of a finite semigroup.
  struct CayleyTable {
    std::vector<std::string>              elements;
    std::vector<std::vector<std::size_t>> table;
  };

  //! A finite biordered set: the idempotents together with the partial
  //! product retained on basic pairs.
  //!
  //! Instances are immutable once built; every query is read-only.
  class BiorderedSet {
   public:
    //! Checks the sanity conditions (idempotent law, basic pairs, closure of
    //! the pair under both orders of multiplication) and builds the set.
    static BiorderedSet validate_and_build(RawBiorder const& raw);

    //! The biordered set of idempotents of an associative table.
    static BiorderedSet from_cayley_table(CayleyTable const& cayley);

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }
    [[nodiscard]] std::string const& name(Element e) const {
      return names_[e];
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    [[nodiscard]] std::optional<Element> find(std::string_view name) const;

    //! Throws `UnknownLetter` if the name is not an element.
    [[nodiscard]] Element at(std::string_view name) const;

    [[nodiscard]] std::optional<Element> product(Element e, Element f) const {
      auto const g = table_[e * size() + f];
      return g == kNoElement ? std::nullopt : std::optional<Element>(g);
    }
    [[nodiscard]] bool defined(Element e, Element f) const {
      return table_[e * size() + f] != kNoElement;
    }
    //! Product known to be defined.
    [[nodiscard]] Element mul(Element e, Element f) const {
      return table_[e * size() + f];
    }

    [[nodiscard]] bool basic_pair(Element e, Element f) const {
      return defined(e, f);
    }
    //! e <=_r f  iff  fe = e.
    [[nodiscard]] bool le_r(Element e, Element f) const {
      return table_[f * size() + e] == e;
    }
    //! e <=_l f  iff  ef = e.
    [[nodiscard]] bool le_l(Element e, Element f) const {
      return table_[e * size() + f] == e;
    }
    //! The natural partial order.
    [[nodiscard]] bool le(Element e, Element f) const {
      return le_r(e, f) && le_l(e, f);
    }

    //! The element above every other element in the natural order, if any.
    [[nodiscard]] std::optional<Element> identity() const noexcept {
      return identity_;
    }

    //! Every (e, f) with e * f = g and {e, f} basic.
    [[nodiscard]] std::vector<std::pair<Element, Element>> const&
    factorisations_of(Element g) const {
      return expansions_[g];
    }

    [[nodiscard]] Word parse_word(std::span<std::string const> letters) const;
    //! Whitespace separated names.
    [[nodiscard]] Word parse_word(std::string_view text) const;
    [[nodiscard]] std::string format(std::span<Element const> w) const;

    [[nodiscard]] RawBiorder to_raw() const;

   private:
    BiorderedSet() = default;
    void finish();

    std::vector<std::string>                              names_;
    std::unordered_map<std::string, Element>              index_;
    std::vector<Element>                                  table_;
    std::optional<Element>                                identity_;
    std::vector<std::vector<std::pair<Element, Element>>> expansions_;
  };

  //! Green structure of a biordered set: R, L, D partitions, the order on
  //! D-classes and the maximality flags.
  struct GreenData {
    std::vector<ClassId> r_class;
    std::vector<ClassId> l_class;
    std::vector<ClassId> d_class;

    std::vector<std::vector<Element>> r_members;
    std::vector<std::vector<Element>> l_members;
    std::vector<std::vector<Element>> d_members;

    //! class_le[a][b] holds iff D_a is below or equal to D_b.
    std::vector<std::vector<bool>> class_le;
    std::vector<bool>              maximal;

    [[nodiscard]] std::size_t num_classes() const noexcept {
      return d_members.size();
    }
    [[nodiscard]] bool below(ClassId a, ClassId b) const {
      return a != b && class_le[a][b];
    }
  };

  //! Green data; classes are numbered by their least member.
  GreenData green_data(BiorderedSet const& b);

  //! One D-class laid out as a grid of R-classes (rows) and L-classes
  //! (columns); a cell holds the unique idempotent of that H-class, if any.
  class DClassGrid {
   public:
    DClassGrid() = default;
    DClassGrid(ClassId                id,
               std::vector<ClassId>   rows,
               std::vector<ClassId>   cols,
               std::vector<Element>   cells,
               std::size_t            universe);

    [[nodiscard]] ClassId id() const noexcept {
      return id_;
    }
    [[nodiscard]] std::size_t num_rows() const noexcept {
      return rows_.size();
    }
    [[nodiscard]] std::size_t num_cols() const noexcept {
      return cols_.size();
    }
    //! R-class id labelling row i.
    [[nodiscard]] ClassId row_label(std::size_t i) const {
      return rows_[i];
    }
    [[nodiscard]] ClassId col_label(std::size_t lambda) const {
      return cols_[lambda];
    }
    [[nodiscard]] std::optional<Element> idempotent_at(std::size_t i,
                                                       std::size_t lambda) const {
      auto const e = cells_[i * cols_.size() + lambda];
      return e == kNoElement ? std::nullopt : std::optional<Element>(e);
    }
    [[nodiscard]] bool has_cell(std::size_t i, std::size_t lambda) const {
      return cells_[i * cols_.size() + lambda] != kNoElement;
    }
    //! Row/column of an element of this class, kNone otherwise.
    [[nodiscard]] std::size_t row_of(Element e) const {
      return row_of_[e];
    }
    [[nodiscard]] std::size_t col_of(Element e) const {
      return col_of_[e];
    }
    [[nodiscard]] bool contains(Element e) const {
      return row_of_[e] != kNone;
    }

    //! Idempotent cells numbered row-major; this numbering indexes the
    //! generators f_{i,lambda} of the maximal subgroup.
    [[nodiscard]] std::size_t num_cells() const noexcept {
      return cell_list_.size();
    }
    [[nodiscard]] std::pair<std::size_t, std::size_t> cell(std::size_t k) const {
      return cell_list_[k];
    }
    //! Generator index of cell (i, lambda), kNone for an empty cell.
    [[nodiscard]] std::size_t cell_index(std::size_t i, std::size_t lambda) const {
      return cell_index_[i * cols_.size() + lambda];
    }

   private:
    ClassId                                          id_ = 0;
    std::vector<ClassId>                             rows_;
    std::vector<ClassId>                             cols_;
    std::vector<Element>                             cells_;
    std::vector<std::size_t>                         row_of_;
    std::vector<std::size_t>                         col_of_;
    std::vector<std::pair<std::size_t, std::size_t>> cell_list_;
    std::vector<std::size_t>                         cell_index_;
  };

  //! Throws `UnknownClass` when `id` is out of range.
  DClassGrid dclass_grid(BiorderedSet const& b, GreenData const& g, ClassId id);

}  // namespace freeidem
