#ifndef HYPERZETA_TEST_UTIL_HPP
#define HYPERZETA_TEST_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "hyperzeta/distinguish.hpp"

namespace hztest {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name + ".hg";
}

inline hyperzeta::Hypergraph load_fixture(const std::string& name) {
  return hyperzeta::load_hypergraph(fixture(name));
}

/// Connected hypergraph with min degree >= 2, <= max_vertices vertices,
/// hyperedge orders in [2,4], total order sum <= max_order_sum.
inline hyperzeta::Hypergraph random_valid_hypergraph(std::mt19937& rng,
                                                     int max_vertices = 8,
                                                     int max_order_sum = 14) {
  using namespace hyperzeta;
  for (;;) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    const int n = nv(rng);
    std::uniform_int_distribution<int> ne(2, n + 2);
    const int m = ne(rng);
    Hypergraph h;
    h.n_vertices = static_cast<std::size_t>(n);
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::uniform_int_distribution<int> ord(2, std::min(4, n));
    for (int j = 0; j < m; ++j) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> e(pool.begin(), pool.begin() + ord(rng));
      std::sort(e.begin(), e.end());
      h.hyperedges.push_back(std::move(e));
    }
    if (h.order_sum() > static_cast<std::size_t>(max_order_sum)) continue;
    ValidationReport rep = validate(h);
    if (rep.connected && rep.min_degree_ok && rep.orders_ok) return h;
  }
}

/// Random connected simple graph (all orders 2) with min degree >= 2.
inline hyperzeta::Graph random_valid_graph(std::mt19937& rng, int max_vertices = 8) {
  using namespace hyperzeta;
  for (;;) {
    std::uniform_int_distribution<int> nv(3, max_vertices);
    const int n = nv(rng);
    std::vector<std::vector<int>> all;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<int> ne(n, std::min<int>(n + 4, all.size()));
    Hypergraph h;
    h.n_vertices = static_cast<std::size_t>(n);
    h.hyperedges.assign(all.begin(), all.begin() + ne(rng));
    ValidationReport rep = validate(h);
    if (rep.connected && rep.min_degree_ok) return Graph{h};
  }
}

/// Relabel the vertices of a graph by a random permutation.
inline hyperzeta::Graph relabel(const hyperzeta::Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.h.n_vertices);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  hyperzeta::Hypergraph out;
  out.n_vertices = g.h.n_vertices;
  for (const auto& e : g.h.hyperedges) {
    std::vector<int> ne;
    for (int v : e) ne.push_back(perm[v]);
    std::sort(ne.begin(), ne.end());
    out.hyperedges.push_back(std::move(ne));
  }
  return hyperzeta::Graph{out};
}

}  // namespace hztest

#endif
