#ifndef HYPERZETA_LINEGRAPH_HPP
#define HYPERZETA_LINEGRAPH_HPP

#include <map>
#include <optional>

#include "hyperzeta/hypergraph.hpp"
#include "hyperzeta/poly.hpp"

namespace hyperzeta {

/// One oriented edge of the edge-colored clique expansion.
struct Arc {
  int origin;
  int terminus;
  int color;  // index of the hyperedge this arc came from
};

/// Edge-colored clique expansion with both orientations of every edge.
struct ColoredOrientedGraph {
  std::size_t n_vertices = 0;
  std::vector<Arc> arcs;
  std::vector<int> involution;  // arc index of the inverse arc
};

/// Oriented line graph: vertices are arcs of the expansion, arcs connect
/// consecutive, differently colored expansion edges.
struct OrientedLineGraph {
  std::size_t n_vertices = 0;
  std::vector<std::pair<int, int>> arcs;
};

class EnumerationTooLarge : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical mode (no seed): arcs in lexicographic (color, pair) order.
/// A seed shuffles arc order; the zeta determinant must not change.
ColoredOrientedGraph clique_expand(const Hypergraph& h,
                                   std::optional<unsigned> seed = std::nullopt);

OrientedLineGraph oriented_line_graph(const ColoredOrientedGraph& g);

/// The Perron-Frobenius operator T as a 0/1 matrix.
IntMatrix perron_frobenius_matrix(const OrientedLineGraph& l);

bool is_strongly_connected(const OrientedLineGraph& l);

/// N_k = trace(T^k) for k = 1..max_len, exact.
std::vector<Int> closed_path_counts(const OrientedLineGraph& l, std::size_t max_len);

/// Brute-force oracle: counts rotation classes of primitive closed admissible
/// paths per length <= max_len. Throws EnumerationTooLarge past the budget.
std::map<int, long> enumerate_prime_cycles(const OrientedLineGraph& l, int max_len,
                                           std::size_t node_budget = 50'000'000);

}  // namespace hyperzeta

#endif
