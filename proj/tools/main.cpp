#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freeidem/contact.hpp"
#include "freeidem/csp.hpp"
#include "freeidem/dot.hpp"
#include "freeidem/error.hpp"
#include "freeidem/fountain.hpp"
#include "freeidem/generators.hpp"
#include "freeidem/green_ig.hpp"
#include "freeidem/io.hpp"
#include "freeidem/rees.hpp"
#include "freeidem/solver.hpp"
#include "freeidem/structure.hpp"
#include "freeidem/subgroup.hpp"

using namespace freeidem;

namespace {

  // Exit codes besides the decide verdicts 0/1/2.
  constexpr int kExitError = 3;

  std::string one_based(std::size_t k) {
    return std::to_string(k + 1);
  }

  std::string class_members(BiorderedSet const& b, std::vector<Element> const& m) {
    std::string out;
    for (auto e : m) {
      out += (out.empty() ? "" : " ") + b.name(e);
    }
    return out;
  }

  std::string triple_string(Structure const& s, ReesTriple const& t) {
    auto const& backend = s.backend(t.dclass);
    std::string g       = backend.kind() == BackendKind::Unknown
                              ? t.g.to_string(backend.generator_names())
                              : backend.format(backend.reduce(t.g));
    return "(D" + one_based(t.dclass) + ", " + one_based(t.i) + ", " + g + ", "
           + one_based(t.lambda) + ")";
  }

  void write_text(std::string const& path, std::string const& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      fail(ErrorCode::MalformedInput, "cannot write " + path);
    }
    out << text;
  }

  int run_validate(std::string const& file) {
    auto const b = load_biorder_file(file);
    auto const g = green_data(b);
    std::size_t basic = 0;
    for (Element e = 0; e < b.size(); ++e) {
      for (Element f = 0; f < b.size(); ++f) {
        basic += b.basic_pair(e, f) ? 1 : 0;
      }
    }
    std::cout << "ok: " << b.size() << " idempotents, " << basic << " basic pairs, "
              << g.num_classes() << " D-classes\n";
    return 0;
  }

  int run_structure(std::string const& file, std::string const& dot_dir, std::size_t bound) {
    Structure   s(load_biorder_file(file), Options{bound});
    auto const& b = s.biorder();
    auto const& g = s.green();
    std::cout << "idempotents: " << b.size() << "\n";
    if (auto id = b.identity()) {
      std::cout << "identity: " << b.name(*id) << "\n";
    }
    std::cout << "D-classes: " << s.num_classes() << "\n";
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      auto const& grid = s.grid(c);
      std::cout << "\nD" << one_based(c) << ": " << class_members(b, g.d_members[c]) << "\n";
      std::cout << "  grid " << grid.num_rows() << "x" << grid.num_cols()
                << (s.maximal(c) ? ", maximal" : "") << "\n";
      for (std::size_t i = 0; i < grid.num_rows(); ++i) {
        std::cout << "   ";
        for (std::size_t l = 0; l < grid.num_cols(); ++l) {
          auto e = grid.idempotent_at(i, l);
          std::cout << ' ' << (e ? b.name(*e) : std::string("."));
        }
        std::cout << "\n";
      }
      std::string below;
      for (ClassId d = 0; d < s.num_classes(); ++d) {
        if (g.below(d, c)) {
          below += " D" + one_based(d);
        }
      }
      if (!below.empty()) {
        std::cout << "  above:" << below << "\n";
      }
      auto const& p = s.presentation(c);
      std::istringstream lines(p.to_string());
      for (std::string line; std::getline(lines, line);) {
        std::cout << "  " << line << "\n";
      }
      auto const& backend = s.backend(c);
      std::cout << "  group: " << to_string(backend.kind());
      if (backend.is_free()) {
        std::cout << " of rank " << backend.rank();
        if (backend.rank() > 0) {
          std::cout << " (basis:";
          for (auto const& n : backend.basis_names()) {
            std::cout << ' ' << n;
          }
          std::cout << ")";
        }
      } else if (backend.is_finite()) {
        std::cout << " of order " << backend.group().order;
      } else {
        std::cout << " (" << backend.reason() << ")";
      }
      std::cout << "\n";
      if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        write_text(dot_dir + "/D" + one_based(c) + ".dot", incidence_dot(b, grid));
      }
    }
    return 0;
  }

  int run_fingerprint(std::string const& file, std::string const& word) {
    auto const b  = load_biorder_file(file);
    auto const g  = green_data(b);
    auto const w  = b.parse_word(word);
    auto const fp = minimal_r_factorisation(b, g, w);
    std::cout << "fingerprint:";
    for (auto c : fp.classes()) {
      std::cout << " D" << one_based(c);
    }
    std::cout << "\n";
    for (auto const& f : fp.factors) {
      std::span<Element const> part(w.data() + f.begin, f.end - f.begin);
      std::cout << "  [" << f.begin + 1 << ".." << f.end << "] D" << one_based(f.dclass)
                << ": " << b.format(part) << " (seed at " << f.begin + f.seed.position + 1
                << ")\n";
    }
    return 0;
  }

  int run_coords(std::string const& file, std::string const& word, std::size_t bound) {
    Structure  s(load_biorder_file(file), Options{bound});
    auto const w  = s.biorder().parse_word(word);
    auto const fp = minimal_r_factorisation(s.biorder(), s.green(), w);
    for (auto const& f : fp.factors) {
      std::span<Element const> part(w.data() + f.begin, f.end - f.begin);
      std::cout << s.biorder().format(part) << " -> " << triple_string(s, coordinatize(s, part))
                << "\n";
    }
    return 0;
  }

  int run_contact(std::string const& file,
                  std::size_t        c1,
                  std::size_t        c2,
                  std::string const& dot,
                  std::size_t        bound) {
    Structure s(load_biorder_file(file), Options{bound});
    if (c1 == 0 || c2 == 0) {
      fail(ErrorCode::UnknownClass, "classes are numbered from 1");
    }
    auto const& a  = s.contact(static_cast<ClassId>(c1 - 1), static_cast<ClassId>(c2 - 1));
    auto const& n1 = s.presentation(a.first).names;
    auto const& n2 = s.presentation(a.second).names;
    auto state     = [&a](std::size_t q) {
      auto const [l, i] = a.decode(q);
      return "(" + one_based(l) + "," + one_based(i) + ")";
    };
    std::cout << "states: " << a.num_states() << " (" << a.num_cols << " columns x "
              << a.num_rows << " rows)\n";
    std::cout << "transitions: " << a.transitions.size() << "\n";
    for (auto const& t : a.transitions) {
      std::cout << "  " << state(t.from) << " -" << s.biorder().name(t.letter) << "-> "
                << state(t.to) << "  [" << t.first.to_string(n1) << " ; "
                << t.second.to_string(n2) << "]\n";
    }
    if (!dot.empty()) {
      write_text(dot, contact_dot(s, a));
    }
    return 0;
  }

  int run_decide(std::string const& file,
                 std::string const& w1,
                 std::string const& w2,
                 bool               certificate,
                 std::string const& csp_out,
                 std::size_t        bound) {
    Structure  s(load_biorder_file(file), Options{bound});
    auto const u = s.biorder().parse_word(w1);
    auto const v = s.biorder().parse_word(w2);
    auto const d = decide(s, u, v);
    std::cout << to_string(d.verdict);
    if (d.reason != Reason::None) {
      std::cout << " (" << to_string(d.reason) << ")";
    }
    std::cout << "\n";
    if (certificate) {
      std::cout << d.certificate.dump(2) << "\n";
    }
    if (!csp_out.empty()) {
      if (d.csp) {
        write_text(csp_out, to_json(*d.csp).dump(2) + "\n");
      } else {
        std::cerr << "no CSP instance: the pair was decided\n";
      }
    }
    switch (d.verdict) {
      case Verdict::Equal:
        return 0;
      case Verdict::NotEqual:
        return 1;
      case Verdict::Unsupported:
        return 2;
    }
    return 2;
  }

  int run_fountain(std::string const& file, std::string const& word, std::size_t bound) {
    Structure   s(load_biorder_file(file), Options{bound});
    auto const& b = s.biorder();
    auto const  w = b.parse_word(word);
    auto const  t = tilde_witnesses(s, w);
    std::cout << "reduced: " << b.format(reduced_form(s, w)) << "\n";
    std::cout << "R~ witness: " << b.name(t.e_r) << "\n";
    std::cout << "L~ witness: " << b.name(t.e_l) << "\n";
    return 0;
  }

  int run_export_csp(std::string const& file,
                     std::string const& w1,
                     std::string const& w2,
                     std::string const& out,
                     std::size_t        bound) {
    Structure  s(load_biorder_file(file), Options{bound});
    auto const u   = s.biorder().parse_word(w1);
    auto const v   = s.biorder().parse_word(w2);
    auto const csp = export_csp(s, u, v);
    if (!csp) {
      std::cerr << "no CSP instance: fingerprints or endpoints differ\n";
      return 1;
    }
    write_text(out, to_json(*csp).dump(2) + "\n");
    return 0;
  }

  int run_gen(std::string const& kind,
              std::vector<std::size_t> const& params,
              bool cayley,
              std::string const& out) {
    auto param = [&params, &kind](std::size_t k) {
      if (k >= params.size()) {
        fail(ErrorCode::MalformedInput, kind + ": missing size parameter");
      }
      return params[k];
    };
    nlohmann::json doc;
    if (kind == "tn") {
      doc = cayley ? to_json(transformation_cayley(param(0)))
                   : to_json(transformation_biorder(param(0)));
    } else if (kind == "ptn") {
      doc = cayley ? to_json(partial_transformation_cayley(param(0)))
                   : to_json(partial_transformation_biorder(param(0)));
    } else if (kind == "rectband") {
      doc = to_json(rectangular_band(param(0), params.size() > 1 ? params[1] : param(0)));
    } else if (kind == "freepair") {
      doc = to_json(free_pair());
    } else if (kind == "semilattice-chain") {
      doc = to_json(semilattice_chain(param(0)));
    } else {
      fail(ErrorCode::MalformedInput, "unknown generator kind: " + kind);
    }
    if (cayley && kind != "tn" && kind != "ptn") {
      fail(ErrorCode::MalformedInput, "--cayley applies to tn and ptn only");
    }
    write_text(out, doc.dump() + "\n");
    return 0;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problem for free idempotent generated semigroups"};
  app.require_subcommand(1);
  std::size_t bound = kDefaultCosetBound;
  app.add_option("--coset-bound", bound, "Coset enumeration bound")->capture_default_str();

  std::string file, w1, w2, out, dot;
  bool        certificate = false, cayley = false;
  std::size_t c1 = 0, c2 = 0;

  auto* validate = app.add_subcommand("validate", "Check a biorder or Cayley file");
  validate->add_option("file", file)->required();

  auto* structure = app.add_subcommand("structure", "Green structure and maximal subgroups");
  structure->add_option("file", file)->required();
  structure->add_option("--dot-dir", dot, "Write incidence graphs as DOT files");

  auto* fingerprint = app.add_subcommand("fingerprint", "Minimal r-factorisation of a word");
  fingerprint->add_option("file", file)->required();
  fingerprint->add_option("word", w1)->required();

  auto* coords = app.add_subcommand("coords", "Rees coordinates of each factor");
  coords->add_option("file", file)->required();
  coords->add_option("word", w1)->required();

  auto* contact = app.add_subcommand("contact", "Contact automaton of two D-classes");
  contact->add_option("file", file)->required();
  contact->add_option("first", c1)->required();
  contact->add_option("second", c2)->required();
  contact->add_option("--dot", dot, "Write the automaton as DOT");

  auto* dec = app.add_subcommand("decide", "Decide whether two words are equal");
  dec->add_option("file", file)->required();
  dec->add_option("w1", w1)->required();
  dec->add_option("w2", w2)->required();
  dec->add_flag("--certificate", certificate, "Print the certificate as JSON");
  dec->add_option("--export-csp", out, "Write the CSP instance when unsupported");

  auto* fountain = app.add_subcommand("fountain", "Reduced form and tilde witnesses");
  fountain->add_option("file", file)->required();
  fountain->add_option("word", w1)->required();

  auto* csp = app.add_subcommand("export-csp", "Write the constraint instance of a pair");
  csp->add_option("file", file)->required();
  csp->add_option("w1", w1)->required();
  csp->add_option("w2", w2)->required();
  csp->add_option("-o,--output", out, "Output file (default stdout)");

  std::string              kind;
  std::vector<std::size_t> params;
  auto* gen = app.add_subcommand("gen", "Generate an example biorder");
  gen->add_option("kind", kind, "tn | ptn | rectband | freepair | semilattice-chain")
      ->required();
  gen->add_option("params", params, "Size parameters");
  gen->add_flag("--cayley", cayley, "Emit the full Cayley table (tn, ptn)");
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto const code = app.exit(e);
    return code == 0 ? 0 : kExitError + 1;
  }

  try {
    if (*validate) {
      return run_validate(file);
    }
    if (*structure) {
      return run_structure(file, dot, bound);
    }
    if (*fingerprint) {
      return run_fingerprint(file, w1);
    }
    if (*coords) {
      return run_coords(file, w1, bound);
    }
    if (*contact) {
      return run_contact(file, c1, c2, dot, bound);
    }
    if (*dec) {
      return run_decide(file, w1, w2, certificate, out, bound);
    }
    if (*fountain) {
      return run_fountain(file, w1, bound);
    }
    if (*csp) {
      return run_export_csp(file, w1, w2, out, bound);
    }
    if (*gen) {
      return run_gen(kind, params, cayley, out);
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
