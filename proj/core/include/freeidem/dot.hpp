#pragma once

#include <string>
#include <vector>

#include "freeidem/biorder.hpp"
#include "freeidem/contact.hpp"
#include "freeidem/ratgroup.hpp"

namespace freeidem {

  class Structure;

  //! Bipartite incidence graph of a D-class: rows and columns as nodes,
  //! one edge per idempotent cell.
  std::string incidence_dot(BiorderedSet const& b, DClassGrid const& grid);

  std::string contact_dot(Structure const& s, ContactAutomaton const& a);

  std::string nfa_dot(GroupNfa const& n, std::vector<std::string> const& names);

}  // namespace freeidem
