#include "freeidem/dot.hpp"

#include <sstream>

#include "freeidem/structure.hpp"

namespace freeidem {

  namespace {
    std::string quote(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + '"';
    }
  }  // namespace

  std::string incidence_dot(BiorderedSet const& b, DClassGrid const& grid) {
    std::ostringstream out;
    out << "graph D" << grid.id() + 1 << " {\n";
    for (std::size_t i = 0; i < grid.num_rows(); ++i) {
      out << "  r" << i + 1 << " [shape=box,label=\"R" << i + 1 << "\"];\n";
    }
    for (std::size_t l = 0; l < grid.num_cols(); ++l) {
      out << "  c" << l + 1 << " [shape=ellipse,label=\"L" << l + 1 << "\"];\n";
    }
    for (std::size_t i = 0; i < grid.num_rows(); ++i) {
      for (std::size_t l = 0; l < grid.num_cols(); ++l) {
        if (auto e = grid.idempotent_at(i, l)) {
          out << "  r" << i + 1 << " -- c" << l + 1 << " [label=" << quote(b.name(*e))
              << "];\n";
        }
      }
    }
    out << "}\n";
    return out.str();
  }

  std::string contact_dot(Structure const& s, ContactAutomaton const& a) {
    auto const& b  = s.biorder();
    auto const& n1 = s.presentation(a.first).names;
    auto const& n2 = s.presentation(a.second).names;
    std::ostringstream out;
    out << "digraph A" << a.first + 1 << "_" << a.second + 1 << " {\n";
    for (std::size_t q = 0; q < a.num_states(); ++q) {
      auto const [l, i] = a.decode(q);
      out << "  q" << q << " [label=\"(" << l + 1 << "," << i + 1 << ")\"];\n";
    }
    for (auto const& t : a.transitions) {
      out << "  q" << t.from << " -> q" << t.to << " [label="
          << quote(b.name(t.letter) + " | " + t.first.to_string(n1) + " ; "
                   + t.second.to_string(n2))
          << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string nfa_dot(GroupNfa const& n, std::vector<std::string> const& names) {
    std::ostringstream out;
    out << "digraph nfa {\n  rankdir=LR;\n";
    for (std::size_t q = 0; q < n.num_states; ++q) {
      out << "  q" << q << " [shape=" << (n.final.contains(q) ? "doublecircle" : "circle")
          << "];\n";
    }
    for (auto q : n.initial) {
      out << "  start" << q << " [shape=point];\n  start" << q << " -> q" << q << ";\n";
    }
    for (auto const& e : n.edges) {
      auto const label =
          e.label == kEpsilon ? std::string("eps") : GroupWord{e.label}.to_string(names);
      out << "  q" << e.from << " -> q" << e.to << " [label=" << quote(label) << "];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace freeidem
