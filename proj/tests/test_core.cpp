#include "doctest.h"
#include "test_util.hpp"

using namespace hyperzeta;
using hztest::load_fixture;

TEST_CASE("parsing the .hg format") {
  Hypergraph h = parse_hypergraph(
      "vertices 4\nedge 0 1 2\nedge 0 3\nedge 1 3\nedge 2 3\n");
  CHECK(h.n_vertices == 4);
  REQUIRE(h.hyperedges.size() == 4);
  CHECK(h.hyperedges[0] == std::vector<int>{0, 1, 2});
  CHECK(h.order_sum() == 9);
  CHECK(h == load_fixture("golden4"));

  Hypergraph tiny = parse_hypergraph("vertices 1\nedge 0\n");
  CHECK(tiny.n_vertices == 1);
  CHECK(tiny.hyperedges == std::vector<std::vector<int>>{{0}});

  CHECK_THROWS_AS(parse_hypergraph("vertices 2\nedge 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("vertices 2\nedge 0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("vertices 2\nedge\n"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("edge 0 1\n"), ParseError);
  try {
    parse_hypergraph("vertices 2\n# fine\nedge 0 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }

  // round trip through the canonical writer
  Hypergraph again = parse_hypergraph(to_hg_format(h));
  CHECK(again == h);
}

TEST_CASE("validation flags") {
  ValidationReport golden4 = validate(load_fixture("golden4"));
  CHECK(golden4.connected);
  CHECK(golden4.min_degree_ok);
  CHECK(golden4.orders_ok);
  CHECK(golden4.min_vertex_degree == 2);

  ValidationReport lone = validate(parse_hypergraph("vertices 3\nedge 0 1 2\n"));
  CHECK_FALSE(lone.min_degree_ok);

  ValidationReport split =
      validate(parse_hypergraph("vertices 4\nedge 0 1\nedge 2 3\n"));
  CHECK_FALSE(split.connected);
}

TEST_CASE("bipartite graph of a hypergraph") {
  Hypergraph golden4 = load_fixture("golden4");
  BipartiteGraph b = bipartite_of(golden4);
  CHECK(b.left_count == 4);
  CHECK(b.right_count == 4);
  CHECK(b.edges.size() == 9);
  CHECK(b.edges.size() == golden4.order_sum());
  CHECK(b.is_connected());

  // K3's subdivision graph is a 6-cycle: bipartite, 2-regular
  BipartiteGraph c6 = bipartite_of(load_fixture("k3"));
  CHECK(c6.left_count + c6.right_count == 6);
  CHECK(c6.edges.size() == 6);
  IntMatrix q = c6.q_matrix();
  for (std::size_t i = 0; i < 6; ++i) CHECK(q.at(i, i) == 1);

  BipartiteGraph one = bipartite_of(parse_hypergraph("vertices 1\nedge 0\n"));
  CHECK(one.edges.size() == 1);
}

TEST_CASE("dual hypergraph") {
  Hypergraph golden4 = load_fixture("golden4");
  Hypergraph d = dual_of(golden4);
  CHECK(d.n_vertices == 4);
  REQUIRE(d.hyperedges.size() == 4);
  CHECK(d.hyperedges[0] == std::vector<int>{0, 1});
  CHECK(d.hyperedges[1] == std::vector<int>{0, 2});
  CHECK(d.hyperedges[2] == std::vector<int>{0, 3});
  CHECK(d.hyperedges[3] == std::vector<int>{1, 2, 3});
  CHECK(dual_of(d) == golden4);

  Hypergraph k3d = dual_of(load_fixture("k3"));
  CHECK(k3d.n_vertices == 3);
  CHECK(k3d.hyperedges.size() == 3);
  for (const auto& e : k3d.hyperedges) CHECK(e.size() == 2);

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Hypergraph h = hztest::random_valid_hypergraph(rng);
    CHECK(dual_of(dual_of(h)) == h);
    CHECK(incidence_matrix(dual_of(h)) == incidence_matrix(h).transpose());
  }
}

TEST_CASE("incidence and adjacency matrices") {
  Hypergraph golden4 = load_fixture("golden4");
  IntMatrix m = incidence_matrix(golden4);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  Int col0 = m.at(0, 0) + m.at(1, 0) + m.at(2, 0) + m.at(3, 0);
  CHECK(col0 == 3);
  Int row3 = m.at(3, 0) + m.at(3, 1) + m.at(3, 2) + m.at(3, 3);
  CHECK(row3 == 3);

  IntMatrix a = adjacency_of_hypergraph(golden4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(a.at(i, i) == 0);
    for (std::size_t j = 0; j < 4; ++j) CHECK(a.at(i, j) == a.at(j, i));
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(a.at(i, j) == 1);

  // order-2 hyperedges reduce to graph adjacency
  IntMatrix ak3 = adjacency_of_hypergraph(load_fixture("k3"));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(ak3.at(i, j) == (i == j ? 0 : 1));
}

TEST_CASE("regularity and Euler characteristic") {
  CHECK(regularity_of(load_fixture("k4")) == std::pair<int, int>{3, 2});
  CHECK(regularity_of(load_fixture("fano")) == std::pair<int, int>{3, 3});
  CHECK_FALSE(regularity_of(load_fixture("golden4")).has_value());
  CHECK(euler_chi_bipartite(load_fixture("golden4")) == -1);
  CHECK(euler_chi_bipartite(load_fixture("k4")) == -2);
  // (d,r)-regular: -chi = n1(d-1) - n2
  Hypergraph fano = load_fixture("fano");
  CHECK(-euler_chi_bipartite(fano) == 7 * 2 - 7);

  // Eq-style regular matrix identities: M M^t = A + d I, M^t M = A* + r I
  for (const char* name : {"k4", "fano", "c6"}) {
    Hypergraph h = load_fixture(name);
    auto [d, r] = *regularity_of(h);
    IntMatrix m = incidence_matrix(h);
    IntMatrix lhs = m * m.transpose();
    IntMatrix a = adjacency_of_hypergraph(h);
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, i) += d;
    CHECK(lhs == a);
    IntMatrix rhs = m.transpose() * m;
    IntMatrix ad = adjacency_of_hypergraph(dual_of(h));
    for (std::size_t i = 0; i < ad.rows(); ++i) ad.at(i, i) += r;
    CHECK(rhs == ad);
  }
}

TEST_CASE("degree-1 pruning") {
  // path pendant on a triangle: pruning strips the pendant edge and vertex
  Hypergraph g = parse_hypergraph(
      "vertices 4\nedge 0 1\nedge 1 2\nedge 0 2\nedge 2 3\n");
  Hypergraph p = prune_degree_one(g);
  CHECK(p.n_vertices == 3);
  CHECK(p.hyperedges.size() == 3);
  CHECK(validate(p).zeta_ready());
  // order-1 hyperedges vanish too
  Hypergraph o1 = parse_hypergraph(
      "vertices 3\nedge 0 1\nedge 1 2\nedge 0 2\nedge 1\n");
  CHECK(prune_degree_one(o1).hyperedges.size() == 3);
  // already-clean inputs are untouched
  Hypergraph golden4 = load_fixture("golden4");
  CHECK(prune_degree_one(golden4) == golden4);
}
