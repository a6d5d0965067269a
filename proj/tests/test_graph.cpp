#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fixtures.hpp"
#include "intdel/intdel.hpp"
#include "intdel/testkit.hpp"

using namespace intdel;

TEST_CASE("closed neighborhood") {
  Graph tri = fixtures::complete(3);
  CHECK(closed_neighborhood(tri, 0).to_vector() == std::vector<int>{0, 1, 2});
  Graph p3 = fixtures::path(3);
  CHECK(closed_neighborhood(p3, 0).to_vector() == std::vector<int>{0, 1});
  Graph c5 = fixtures::cycle(5);
  CHECK(closed_neighborhood(c5, 2).to_vector() == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS(closed_neighborhood(c5, 9), UsageError);

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = random_gnp(9, 0.4, seed);
    for (int u = 0; u < g.n(); ++u) {
      CHECK(closed_neighborhood(g, u).test(u));
      Bitset single(g.n());
      single.set(u);
      Bitset cn = common_neighbors(g, single);
      Bitset expect = closed_neighborhood(g, u);
      expect.reset(u);
      CHECK(cn == expect);
    }
  }
}

TEST_CASE("common neighbors") {
  Graph c5 = fixtures::cycle(5);
  CHECK(common_neighbors(c5, Bitset::of(5, {0, 2})).to_vector() == std::vector<int>{1});

  Graph star(4);  // center 0
  star.add_edge_internal(0, 1);
  star.add_edge_internal(0, 2);
  star.add_edge_internal(0, 3);
  CHECK(common_neighbors(star, Bitset::of(4, {1, 2, 3})).to_vector() == std::vector<int>{0});

  Graph c11 = fixtures::cycle(11);
  CHECK(common_neighbors(c11, c11.all_vertices()).empty());
  CHECK_THROWS_AS(common_neighbors(c11, Bitset(11)), UsageError);
}

TEST_CASE("is_clique") {
  Graph k4 = fixtures::complete(4);
  CHECK(is_clique(k4, Bitset::of(4, {0, 2, 3})));
  Graph c5 = fixtures::cycle(5);
  CHECK_FALSE(is_clique(c5, Bitset::of(5, {0, 1, 2})));
  CHECK(is_clique(c5, Bitset(5)));
  CHECK(is_clique(c5, Bitset::of(5, {3})));
}

TEST_CASE("induced subgraph") {
  Graph c5 = fixtures::cycle(5);
  Graph p4 = induced_subgraph(c5, Bitset::of(5, {0, 1, 2, 3}));
  CHECK(p4.n() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(is_interval(p4).has_value());

  Graph full = induced_subgraph(c5, c5.all_vertices());
  CHECK(full.n() == 5);
  CHECK(full.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(full.parent_id(v) == v);

  // dagger-AW(d=7) minus its shallow terminal is interval
  auto aw = fixtures::dagger_aw(7);
  Bitset keep = aw.g.all_vertices();
  keep.reset(aw.s);
  CHECK(is_interval(induced_subgraph(aw.g, keep)).has_value());
  CHECK_FALSE(is_interval(aw.g).has_value());
}

TEST_CASE("induced subgraph composition") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = random_gnp(10, 0.5, seed);
    Bitset a = Bitset::of(10, {0, 2, 3, 5, 6, 8, 9});
    Graph h1 = induced_subgraph(g, a);
    Bitset b(h1.n());
    for (int v = 0; v < h1.n(); v += 2) b.set(v);
    Graph h2 = induced_subgraph(h1, b);

    Bitset direct_keep(10);
    INTDEL_FOR_SET(v, b) direct_keep.set(h1.parent_id(v));
    Graph direct = induced_subgraph(g, direct_keep);
    REQUIRE(h2.n() == direct.n());
    for (int u = 0; u < h2.n(); ++u) {
      CHECK(h1.parent_id(h2.parent_id(u)) == direct.parent_id(u));
      for (int v = 0; v < h2.n(); ++v) CHECK(h2.adjacent(u, v) == direct.adjacent(u, v));
    }
  }
}

TEST_CASE("is_separator") {
  Graph p3 = fixtures::path(3);
  CHECK(is_separator(p3, Bitset::of(3, {1}), 0, 2));
  Graph c5 = fixtures::cycle(5);
  for (int v = 0; v < 5; ++v) {
    Bitset s(5);
    s.set(v);
    int a = (v + 1) % 5, b = (v + 2) % 5;
    CHECK_FALSE(is_separator(c5, s, a, b));
  }
  CHECK(is_separator(c5, Bitset::of(5, {1, 4}), 0, 2));
  CHECK_THROWS_AS(is_separator(c5, Bitset::of(5, {1}), 1, 3), UsageError);
}

TEST_CASE("shortest_path_avoiding") {
  Graph c5 = fixtures::cycle(5);
  CHECK(*shortest_path_avoiding(c5, 0, 2, Bitset(5)) == VertexSequence{0, 1, 2});
  CHECK(*shortest_path_avoiding(c5, 0, 2, Bitset::of(5, {1})) == VertexSequence{0, 4, 3, 2});
  Graph p3 = fixtures::path(3);
  CHECK_FALSE(shortest_path_avoiding(p3, 0, 2, Bitset::of(3, {1})).has_value());

  // chordless in g - forbidden
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    Graph g = random_gnp(11, 0.3, seed);
    Rng rng(seed * 77);
    Bitset forbidden(11);
    for (int v = 0; v < 11; ++v)
      if (rng.bernoulli(0.2)) forbidden.set(v);
    for (int a = 0; a < 11; ++a) {
      for (int b = a + 1; b < 11; ++b) {
        if (forbidden.test(a) || forbidden.test(b)) continue;
        auto p = shortest_path_avoiding(g, a, b, forbidden);
        if (!p) continue;
        for (size_t i = 0; i < p->size(); ++i)
          for (size_t j = i + 2; j < p->size(); ++j)
            CHECK_FALSE(g.adjacent((*p)[i], (*p)[j]));
      }
    }
  }
}

TEST_CASE("graph text io round trip") {
  std::string text = "# comment\n6 4\n0 1\n\n1 2\n# more\n2 3\n4 5\n";
  std::istringstream in(text);
  Graph g = read_graph(in);
  CHECK(g.n() == 6);
  CHECK(g.edge_count() == 4);
  std::ostringstream out;
  write_graph(out, g);
  std::istringstream in2(out.str());
  Graph g2 = read_graph(in2);
  REQUIRE(g2.n() == g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v) CHECK(g.adjacent(u, v) == g2.adjacent(u, v));
}

TEST_CASE("graph text parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_graph(in);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line_number == line);
    }
  };
  expect_line("3 2\n0 1\n0 9\n", 3);
  expect_line("3 1\n0 0\n", 2);
  expect_line("nope\n", 1);
  expect_line("3 2\n0 1\n", 2);  // missing edge reported at last seen line
}
