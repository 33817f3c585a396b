#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "freeidem/biorder.hpp"
#include "freeidem/rees.hpp"
#include "freeidem/subgroup.hpp"

namespace freeidem {

  struct ContactAutomaton;

  struct Options {
    std::size_t coset_bound = kDefaultCosetBound;
  };

  //! Everything derived from one biordered set: Green data, D-class grids,
  //! the letter actions on every class, and (lazily) maximal subgroup
  //! models and contact automata. Lazily built parts are guarded, so a
  //! Structure may be shared between threads.
  class Structure {
   public:
    explicit Structure(BiorderedSet b, Options opts = {});
    ~Structure();
    Structure(Structure&&) noexcept;
    Structure& operator=(Structure&&) noexcept;

    [[nodiscard]] BiorderedSet const& biorder() const noexcept {
      return b_;
    }
    [[nodiscard]] GreenData const& green() const noexcept {
      return green_;
    }
    [[nodiscard]] Options const& options() const noexcept {
      return opts_;
    }
    [[nodiscard]] std::size_t num_classes() const noexcept {
      return grids_.size();
    }
    //! Throws `UnknownClass`.
    [[nodiscard]] DClassGrid const& grid(ClassId c) const;
    [[nodiscard]] PartialAction const& action(ClassId c, Element e) const;
    [[nodiscard]] bool maximal(ClassId c) const {
      return green_.maximal.at(c);
    }
    //! Class of the identity element, if there is one.
    [[nodiscard]] std::optional<ClassId> identity_class() const;

    [[nodiscard]] Presentation const&     presentation(ClassId c) const;
    [[nodiscard]] GroupBackend const&     backend(ClassId c) const;
    [[nodiscard]] ContactAutomaton const& contact(ClassId c1, ClassId c2) const;

    //! Word over the generators of class c for f_{iλ}.
    [[nodiscard]] GroupWord f(ClassId c, std::size_t i, std::size_t lambda) const;

   private:
    struct Lazy;

    BiorderedSet                            b_;
    Options                                 opts_;
    GreenData                               green_;
    std::vector<DClassGrid>                 grids_;
    std::vector<std::vector<PartialAction>> actions_;
    std::unique_ptr<Lazy>                   lazy_;
  };

}  // namespace freeidem
