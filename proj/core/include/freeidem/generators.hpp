#pragma once

#include <cstddef>
#include <string>

#include "freeidem/biorder.hpp"

namespace freeidem {

  //! Largest degree accepted for transformation monoids.
  inline constexpr std::size_t kMaxDegree = 6;
  //! Largest semigroup whose Cayley table is emitted.
  inline constexpr std::size_t kMaxCayley = 256;

  //! Maps act on the right: (s·t)(x) = t(s(x)). An element is named by its
  //! images, e.g. "t123"; for partial maps 0 marks an undefined point.
  RawBiorder  transformation_biorder(std::size_t n);
  RawBiorder  partial_transformation_biorder(std::size_t n);
  CayleyTable transformation_cayley(std::size_t n);
  CayleyTable partial_transformation_cayley(std::size_t n);

  //! m×n rectangular band: e_{iλ}e_{jμ} = e_{iμ}; elements "e{i}{λ}".
  RawBiorder rectangular_band(std::size_t m, std::size_t n);
  //! Two idempotents with no basic pair between them.
  RawBiorder free_pair();
  //! Chain c1 > c2 > ... > cn.
  RawBiorder semilattice_chain(std::size_t n);

}  // namespace freeidem
