#include <set>
#include <tuple>

#include "doctest.h"

#include "freeidem/error.hpp"
#include "freeidem/group_word.hpp"
#include "freeidem/todd_coxeter.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracle.hpp"

using namespace freeidem;

namespace {

  using SquareKey = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, char, Element>;

  // Literal transcription of the two square conditions over every
  // quadruple, keeping the least witness.
  std::set<SquareKey> brute_squares(BiorderedSet const& b, DClassGrid const& grid) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, char>, Element> best;
    auto is = [&b](Element x, Element y, Element z) { return b.product(x, y) == std::optional(z); };
    for (Element f = 0; f < b.size(); ++f) {
      for (std::size_t i = 0; i < grid.num_rows(); ++i) {
        for (std::size_t j = 0; j < grid.num_rows(); ++j) {
          for (std::size_t l = 0; l < grid.num_cols(); ++l) {
            for (std::size_t m = 0; m < grid.num_cols(); ++m) {
              if (i == j || l == m) {
                continue;
              }
              auto a = grid.idempotent_at(i, l), c = grid.idempotent_at(i, m);
              auto d = grid.idempotent_at(j, l), e = grid.idempotent_at(j, m);
              if (!a || !c || !d || !e) {
                continue;
              }
              if (i < j && is(f, *a, *a) && is(f, *d, *d) && is(*a, f, *c) && is(*d, f, *e)) {
                best.emplace(std::tuple{i, j, l, m, 'a'}, f);
              }
              if (l < m && is(*a, f, *a) && is(*c, f, *c) && is(f, *a, *d) && is(f, *c, *e)) {
                best.emplace(std::tuple{i, j, l, m, 'b'}, f);
              }
            }
          }
        }
      }
    }
    std::set<SquareKey> out;
    for (auto const& [k, f] : best) {
      out.emplace(std::get<0>(k), std::get<1>(k), std::get<2>(k), std::get<3>(k), std::get<4>(k), f);
    }
    return out;
  }

  std::set<SquareKey> keys(std::vector<SingularSquare> const& v) {
    std::set<SquareKey> out;
    for (auto const& s : v) {
      out.emplace(s.i, s.j, s.lambda, s.mu, s.kind, s.witness);
    }
    return out;
  }

  std::optional<ClassId> rank_class(Structure const& s, std::size_t r) {
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      auto const& m = s.green().d_members[c];
      if (oracle::rank(oracle::decode(s.biorder().name(m.front()))) == r) {
        return c;
      }
    }
    return std::nullopt;
  }

}  // namespace

TEST_CASE("group words") {
  GroupWord w{1, 2, -2, -1, 3};
  CHECK(w.reduced() == GroupWord{3});
  CHECK_FALSE(w.is_reduced());
  CHECK(GroupWord{1, -2}.inverse() == GroupWord{2, -1});
  CHECK((GroupWord{1, 2} * GroupWord{-2, 3}) == GroupWord{1, 3});
  CHECK(GroupWord{}.to_string({"a"}) == "1");
  CHECK(GroupWord{1, -2}.to_string({"a", "b"}) == "a b^-1");
  auto const sub = GroupWord{1, -2}.substitute([](std::size_t g) {
    return g == 0 ? GroupWord{} : GroupWord{1, 1};
  });
  CHECK(sub == GroupWord{-1, -1});
}

TEST_CASE("todd-coxeter") {
  auto const c2 = todd_coxeter(1, {GroupWord{1, 1}});
  CHECK(c2.size() == 2);
  auto const s3 = todd_coxeter(2, {GroupWord{1, 1}, GroupWord{2, 2}, GroupWord{1, 2, 1, 2, 1, 2}});
  CHECK(s3.size() == 6);
  auto const q8 = todd_coxeter(2, {GroupWord{1, 1, 1, 1}, GroupWord{1, 1, -2, -2}, GroupWord{-2, 1, 2, 1}});
  CHECK(q8.size() == 8);
  auto const trivial = todd_coxeter(2, {GroupWord{1}, GroupWord{2}});
  CHECK(trivial.size() == 1);
  CHECK_THROWS_AS((void) todd_coxeter(1, {}, 1000), Error);
  try {
    (void) todd_coxeter(2, {GroupWord{1, 2, -1, -2}}, 500);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::BoundExceeded);
  }
  // the table is a regular permutation action
  for (std::uint32_t c = 0; c < s3.size(); ++c) {
    for (std::size_t g = 0; g < 2; ++g) {
      CHECK(s3.action[s3.action[c][2 * g]][2 * g + 1] == c);
    }
    CHECK(s3.apply(c, GroupWord{1, 2, 1, 2, 1, 2}) == c);
  }
}

TEST_CASE("singular squares") {
  auto const b = fixtures::band(2, 2);
  auto const g = green_data(b);
  CHECK(singular_squares(b, dclass_grid(b, g, 0)).empty());

  Structure t3(fixtures::tn(3));
  CHECK(t3.presentation(*rank_class(t3, 2)).squares.empty());
  Structure t4(fixtures::tn(4));
  CHECK_FALSE(t4.presentation(*rank_class(t4, 2)).squares.empty());

  for (auto const& s : {fixtures::tn(3), fixtures::tn(4), fixtures::ptn(3), fixtures::band(3, 3)}) {
    auto const gd = green_data(s);
    for (ClassId c = 0; c < gd.num_classes(); ++c) {
      auto const grid = dclass_grid(s, gd, c);
      CHECK(keys(singular_squares(s, grid)) == brute_squares(s, grid));
    }
  }
}

TEST_CASE("presentations") {
  Structure rb(fixtures::band(2, 2));
  auto const& p = rb.presentation(0);
  CHECK(p.num_generators == 4);
  CHECK(p.names == std::vector<std::string>{"f11", "f12", "f21", "f22"});
  CHECK(p.tree == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.squares.empty());
  CHECK(p.relators().size() == 3);

  Structure t4(fixtures::tn(4));
  auto const& r1 = t4.presentation(*rank_class(t4, 1));
  CHECK(r1.tree.size() == r1.num_generators);
  CHECK(t4.backend(*rank_class(t4, 1)).is_trivial());

  Structure ch(fixtures::chain(1));
  CHECK(ch.presentation(0).num_generators == 1);
  CHECK(ch.backend(0).is_trivial());

  CHECK(generator_name(0, 1) == "f12");
  CHECK(generator_name(9, 1) == "f10_2");

  // tree edges form a spanning tree of the incidence graph
  for (auto const& b : {fixtures::tn(4), fixtures::ptn(3), fixtures::band(3, 4)}) {
    Structure s(b);
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      auto const& grid = s.grid(c);
      auto const& pr   = s.presentation(c);
      CHECK(pr.tree.size() + 1 == grid.num_rows() + grid.num_cols());
      std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> quads;
      for (auto const& q : pr.squares) {
        quads.emplace(q.i, q.j, q.lambda, q.mu);
      }
      CHECK(pr.square_relators.size() == quads.size());
    }
  }
}

TEST_CASE("classification") {
  Structure rb(fixtures::band(2, 2));
  CHECK(rb.backend(0).is_free());
  CHECK(rb.backend(0).rank() == 1);
  CHECK(rb.backend(0).basis_names() == std::vector<std::string>{"f22"});

  Structure t4(fixtures::tn(4));
  auto const& g2 = t4.backend(*rank_class(t4, 2));
  REQUIRE(g2.is_finite());
  CHECK(g2.group().order == 2);

  Structure t3(fixtures::tn(3));
  auto const& f3 = t3.backend(*rank_class(t3, 2));
  CHECK(f3.is_free());
  CHECK(f3.rank() == 1);

  // a too-small coset bound leaves the class unclassified
  Structure tight(fixtures::tn(4), Options{1});
  CHECK(tight.backend(*rank_class(tight, 2)).kind() == BackendKind::Unknown);
  CHECK_THROWS_AS((void) tight.backend(*rank_class(tight, 2)).reduce(GroupWord{}), Error);
}

TEST_CASE("group reduction") {
  Structure   rb(fixtures::band(2, 2));
  auto const& g = rb.backend(0);
  CHECK(group_reduce(g, GroupWord{1, 4, -4}) == g.identity());
  // elements are spelled over the basis {f22}
  CHECK(g.reduce(GroupWord{-3, 4}).word == GroupWord{1});
  CHECK(g.format(g.reduce(GroupWord{-3, 4})) == "f22");

  Structure   t4(fixtures::tn(4));
  auto const& c2 = t4.backend(*rank_class(t4, 2));
  for (auto const& x : c2.elements()) {
    CHECK(c2.multiply(x, c2.inverse(x)) == c2.identity());
    if (!(x == c2.identity())) {
      CHECK(c2.multiply(x, x) == c2.identity());
    }
  }
}

TEST_CASE("group invariants over all test biorders") {
  for (auto const& b : {fixtures::tn(3), fixtures::tn(4), fixtures::tn(5), fixtures::ptn(3),
                        fixtures::ptn(4), fixtures::band(3, 3), fixtures::pair(), fixtures::chain(4)}) {
    Structure s(b);
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      auto const& g = s.backend(c);
      if (s.maximal(c)) {
        CHECK(s.presentation(c).squares.empty());
        CHECK(g.is_free());
      }
      if (s.presentation(c).squares.empty()) {
        REQUIRE(g.is_free());
        CHECK(g.rank() == oracle::cycle_rank(s.grid(c)));
      }
      if (g.is_finite()) {
        auto const& t = g.group().table;
        auto const  n = g.group().order;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            CHECK(t[x][y] < n);
            for (std::size_t z = 0; z < n; z += 3) {
              CHECK(t[t[x][y]][z] == t[x][t[y][z]]);
            }
          }
        }
        // each generator image is the value of its spelling
        for (std::size_t k = 0; k < g.group().generator_images.size(); ++k) {
          CHECK(g.reduce(GroupWord::generator(k)).index == g.group().generator_images[k]);
        }
      }
    }
  }
}
