#include <random>
#include <sstream>

#include "doctest.h"

#include "freeidem/error.hpp"
#include "freeidem/io.hpp"
#include "freeidem/solver.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace freeidem;

namespace {

  Decision run(Structure const& s, char const* u, char const* v) {
    auto const& b = s.biorder();
    return decide(s, b.parse_word(u), b.parse_word(v));
  }

  // A 2x2 band under an extra idempotent t, next to an isolated x.
  BiorderedSet band_under_t() {
    RawBiorder raw;
    raw.elements = {"e11", "e12", "e21", "e22", "t", "x"};
    for (int i = 1; i <= 2; ++i) {
      for (int l = 1; l <= 2; ++l) {
        auto const e = "e" + std::to_string(i) + std::to_string(l);
        for (int j = 1; j <= 2; ++j) {
          for (int m = 1; m <= 2; ++m) {
            if (i == j || l == m) {
              raw.products.push_back(
                  {e, "e" + std::to_string(j) + std::to_string(m), "e" + std::to_string(i) + std::to_string(m)});
            }
          }
        }
        raw.products.push_back({"t", e, e});
        raw.products.push_back({e, "t", e});
      }
    }
    raw.products.push_back({"t", "t", "t"});
    raw.products.push_back({"x", "x", "x"});
    return BiorderedSet::validate_and_build(raw);
  }

  ClassId finite_class(Structure const& s) {
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      if (s.backend(c).is_finite()) {
        return c;
      }
    }
    FAIL("no finite class");
    return 0;
  }

}  // namespace

TEST_CASE("decide examples") {
  Structure p(fixtures::pair());
  auto      d = run(p, "e f", "f e");
  CHECK(d.verdict == Verdict::NotEqual);
  CHECK(d.reason == Reason::Fingerprint);
  CHECK(run(p, "e f e", "e f e").verdict == Verdict::Equal);
  CHECK(run(p, "e e f", "e f f").verdict == Verdict::Equal);

  Structure rb(fixtures::band(2, 2));
  auto      g = run(rb, "e11 e22", "e12");
  CHECK(g.verdict == Verdict::NotEqual);
  CHECK(g.reason == Reason::Group);
  CHECK(run(rb, "e11 e21", "e11").verdict == Verdict::Equal);
  CHECK(run(rb, "e11", "e22").reason == Reason::Endpoints);
  CHECK(run(rb, "e11 e22 e11", "e11 e22 e12 e11").verdict == Verdict::Equal);

  Structure ch(fixtures::chain(2));
  CHECK(run(ch, "c1 c2", "c2").verdict == Verdict::Equal);
  CHECK(run(ch, "c1", "c2").verdict == Verdict::NotEqual);

  CHECK_THROWS_AS((void) decide(p, Word{7}, Word{0}), Error);
  CHECK(to_string(Verdict::Unsupported) == "unsupported");
  CHECK(to_string(Reason::Csp) == "csp");
}

TEST_CASE("identity letters are elided") {
  Structure  t3(fixtures::tn(3));
  auto const& b = t3.biorder();
  REQUIRE(b.identity().has_value());
  CHECK(elide_identity(b, b.parse_word("t123 t113 t123")) == b.parse_word("t113"));
  CHECK(run(t3, "t123 t113", "t113 t123").verdict == Verdict::Equal);
  CHECK(run(t3, "t123", "t123 t123").verdict == Verdict::Equal);
  CHECK(run(t3, "t123", "t113").reason == Reason::Fingerprint);
}

TEST_CASE("completeness on rewrites") {
  std::mt19937_64 rng(41);
  for (auto const& bo : {fixtures::tn(3), fixtures::ptn(3), fixtures::band(3, 3), fixtures::tn(4)}) {
    Structure s(bo);
    for (int k = 0; k < 60; ++k) {
      auto const w = oracle::random_word(rng, bo.size(), 1 + rng() % 6);
      auto const r = random_rewrite(bo, w, rng() % 50, rng());
      auto const d = decide(s, w, r);
      CHECK(d.verdict == Verdict::Equal);
    }
  }
}

TEST_CASE("soundness against the realising semigroup") {
  std::mt19937_64 rng(42);
  for (auto const& bo : {fixtures::tn(3), fixtures::ptn(3), fixtures::tn(4)}) {
    Structure s(bo);
    int       equal = 0;
    for (int k = 0; k < 1500; ++k) {
      auto const u = oracle::random_word(rng, bo.size(), 1 + rng() % 5);
      auto const v = k % 2 == 0 ? random_rewrite(bo, u, rng() % 20, rng())
                                : oracle::random_word(rng, bo.size(), 1 + rng() % 5);
      auto const d = decide(s, u, v);
      REQUIRE(d.verdict != Verdict::Unsupported);
      if (d.verdict == Verdict::Equal) {
        ++equal;
        CHECK(oracle::image(bo, u) == oracle::image(bo, v));
        // fingerprint necessity
        CHECK(d_fingerprint(bo, s.green(), elide_identity(bo, u))
              == d_fingerprint(bo, s.green(), elide_identity(bo, v)));
      }
    }
    CHECK(equal >= 750);
  }
}

TEST_CASE("distinct images are never equal") {
  std::mt19937_64 rng(43);
  Structure       t4(fixtures::tn(4));
  auto const&     b = t4.biorder();
  int             tried = 0;
  while (tried < 300) {
    auto const u = oracle::random_word(rng, b.size(), 1 + rng() % 4);
    auto const v = oracle::random_word(rng, b.size(), 1 + rng() % 4);
    if (oracle::image(b, u) == oracle::image(b, v)) {
      continue;
    }
    ++tried;
    CHECK(decide(t4, u, v).verdict == Verdict::NotEqual);
  }
}

TEST_CASE("certificates") {
  Structure  rb(fixtures::band(2, 2));
  auto const d = run(rb, "e11 e22", "e12");
  CHECK(d.certificate["verdict"] == "not-equal");
  CHECK(d.certificate["reason"] == "group");
  CHECK(d.certificate["u"]["fingerprint"] == nlohmann::json::array({0}));
  CHECK(d.certificate["u"]["factors"][0]["g"].is_string());
  CHECK(d.certificate["group"]["u"] == "f22");
  CHECK(d.certificate["group"]["v"] == "1");
  CHECK_FALSE(d.csp.has_value());
}

TEST_CASE("unsupported regime") {
  auto const bo = band_under_t();
  Structure  s(bo);
  auto const d = run(s, "e11 x e22", "e11 x e22");
  CHECK(d.verdict == Verdict::Unsupported);
  REQUIRE(d.csp.has_value());
  CHECK(d.csp->constraints.size() == 2);
  CHECK(d.certificate.contains("detail"));
  // a single class is decided through the group word problem
  CHECK(run(s, "e11 e22", "e12").verdict == Verdict::NotEqual);
  CHECK(run(s, "e11 e21", "e11").verdict == Verdict::Equal);
  // fingerprints still separate
  CHECK(run(s, "e11 x e22", "e11 e22").reason == Reason::Fingerprint);
}

TEST_CASE("csp export") {
  Structure rb(fixtures::band(2, 2));
  auto const& b = rb.biorder();
  auto const one = export_csp(rb, b.parse_word("e11 e22"), b.parse_word("e12"));
  REQUIRE(one.has_value());
  CHECK(one->constraints.empty());
  CHECK(one->groups.size() == 1);
  CHECK(one->groups[0].kind == BackendKind::Free);
  CHECK(one->groups[0].rank == 1);
  CHECK_FALSE(export_csp(rb, b.parse_word("e11"), b.parse_word("e22")).has_value());

  Structure p(fixtures::pair());
  auto const two = export_csp(p, p.biorder().parse_word("e f"), p.biorder().parse_word("e f"));
  REQUIRE(two.has_value());
  REQUIRE(two->constraints.size() == 1);
  CHECK(two->groups[0].rank == 0);
  CHECK(two->groups[1].rank == 0);
  auto const pairs = explicit_pairs(two->constraints[0], p.backend(0), p.backend(1));
  CHECK(pairs.size() == 1);

  Structure t4(fixtures::tn(4));
  auto const& tb = t4.biorder();
  std::mt19937_64 rng(44);
  bool             mixed = false;
  for (int k = 0; k < 400 && !mixed; ++k) {
    auto const w = oracle::random_word(rng, tb.size(), 2 + rng() % 4);
    if (auto c = export_csp(t4, w, w)) {
      std::set<BackendKind> kinds;
      for (auto const& g : c->groups) {
        if (g.kind == BackendKind::Finite) {
          CHECK(g.order == 2);
        }
        if (!(g.kind == BackendKind::Free && g.rank == 0)) {
          kinds.insert(g.kind);
        }
      }
      mixed = kinds.size() == 2;
      // round trip, bit-stable
      auto const j    = to_json(*c);
      auto const back = csp_from_json(j);
      CHECK(to_json(back).dump() == j.dump());
      CHECK(back.fingerprint == c->fingerprint);
      CHECK(back.groups == c->groups);
    }
  }
  CHECK(mixed);

  CHECK_THROWS_AS((void) csp_from_json(nlohmann::json::parse(R"({"schema":"other"})")), Error);
}

TEST_CASE("solve_p on two groups") {
  Structure   t4(fixtures::tn(4));
  auto const  c  = finite_class(t4);
  auto const& g  = t4.backend(c);
  std::size_t sg = 0;
  while (g.reduce(GroupWord::generator(sg)) == g.identity()) {
    ++sg;
  }
  auto const s = GroupWord::generator(sg);

  RhoSubset unit;
  unit.num_states = 1;
  RhoSubset none;
  none.num_states = 2;
  none.final      = 1;
  std::vector<GroupBackend const*> gs{&g, &g};
  for (auto const& a1 : {GroupWord{}, s}) {
    for (auto const& b1 : {GroupWord{}, s}) {
      for (auto const& a2 : {GroupWord{}, s}) {
        for (auto const& b2 : {GroupWord{}, s}) {
          bool const expect = g.reduce(a1) == g.reduce(b1) && g.reduce(a2) == g.reduce(b2);
          CHECK(solve_p(gs, {unit}, {a1, a2}, {b1, b2}).satisfiable == expect);
          CHECK_FALSE(solve_p(gs, {none}, {a1, a2}, {b1, b2}).satisfiable);
        }
      }
    }
  }
  CHECK_THROWS_AS((void) solve_p(gs, {}, {s, s}, {s, s}), Error);

  Structure rb(fixtures::band(2, 2));
  std::vector<GroupBackend const*> ff{&rb.backend(0), &rb.backend(0)};
  RhoSubset labelled;
  labelled.num_states = 1;
  labelled.transitions.push_back({0, 0, 0, GroupWord{4}, GroupWord{}});
  try {
    (void) solve_p(ff, {labelled}, {GroupWord{}, GroupWord{}}, {GroupWord{}, GroupWord{}});
    FAIL("expected UnsupportedRegime");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::UnsupportedRegime);
  }
  CHECK(solve_p(ff, {unit}, {GroupWord{4}, GroupWord{}}, {GroupWord{4}, GroupWord{}}).satisfiable);
  CHECK_FALSE(solve_p(ff, {unit}, {GroupWord{4}, GroupWord{}}, {GroupWord{}, GroupWord{}}).satisfiable);
}

TEST_CASE("solve_p on three finite groups against brute force") {
  Structure   t4(fixtures::tn(4));
  auto const  c  = finite_class(t4);
  auto const& g  = t4.backend(c);
  auto const  n  = t4.presentation(c).num_generators;
  auto const  el = all_elements(g);
  std::vector<GroupBackend const*> gs{&g, &g, &g};
  std::mt19937_64 rng(45);
  int             sat = 0;
  for (int k = 0; k < 300; ++k) {
    std::vector<RhoSubset> rho{oracle::random_rho(rng, n, n), oracle::random_rho(rng, n, n)};
    std::vector<GroupWord> a, b;
    for (int t = 0; t < 3; ++t) {
      a.push_back(GroupWord::generator(rng() % n, rng() % 2 == 0));
      b.push_back(rng() % 2 == 0 ? GroupWord{} : GroupWord::generator(rng() % n));
    }
    auto const p1 = explicit_pairs(rho[0], g, g);
    auto const p2 = explicit_pairs(rho[1], g, g);
    auto const r  = [&](GroupWord const& w) { return g.reduce(w); };
    bool       expect = false;
    for (auto const& x2 : el) {
      auto const first  = g.multiply(g.inverse(r(a[0])), r(b[0]));
      auto const second = g.multiply(g.multiply(g.inverse(r(a[1])), g.inverse(x2)), r(b[1]));
      auto const last   = g.multiply(r(b[2]), g.inverse(r(a[2])));
      expect = expect || (p1.contains({first, x2}) && p2.contains({second, last}));
    }
    auto const got = solve_p(gs, rho, a, b);
    CHECK(got.satisfiable == expect);
    sat += expect;
  }
  CHECK(sat > 0);
  CHECK(sat < 300);
}

TEST_CASE("solve_p with a free end against bounded paths") {
  Structure   t4(fixtures::tn(4));
  Structure   rb(fixtures::band(2, 2));
  auto const  c  = finite_class(t4);
  auto const& g  = t4.backend(c);
  auto const& f  = rb.backend(0);
  auto const  n  = t4.presentation(c).num_generators;
  std::vector<GroupBackend const*> gs{&g, &g, &f};
  std::mt19937_64 rng(46);
  for (int k = 0; k < 200; ++k) {
    std::vector<RhoSubset> rho{oracle::random_rho(rng, n, n), oracle::random_rho(rng, n, 4)};
    std::vector<GroupWord> a{GroupWord::generator(rng() % n), GroupWord{}, GroupWord{}};
    std::vector<GroupWord> b{GroupWord{}, GroupWord::generator(rng() % n),
                             rng() % 2 == 0 ? GroupWord{} : GroupWord{4}};
    auto const p1 = explicit_pairs(rho[0], g, g);
    auto const p2 = oracle::path_labels(rho[1], g, f, 6);
    bool       found = false;
    for (auto const& x2 : all_elements(g)) {
      auto const first  = g.multiply(g.inverse(g.reduce(a[0])), g.reduce(b[0]));
      auto const second = g.multiply(g.multiply(g.inverse(g.reduce(a[1])), g.inverse(x2)), g.reduce(b[1]));
      auto const last   = f.multiply(f.reduce(b[2]), f.inverse(f.reduce(a[2])));
      found = found || (p1.contains({first, x2}) && p2.contains({second, last}));
    }
    if (found) {
      CHECK(solve_p(gs, rho, a, b).satisfiable);
    }
  }
}
