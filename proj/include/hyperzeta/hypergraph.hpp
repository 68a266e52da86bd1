#ifndef HYPERZETA_HYPERGRAPH_HPP
#define HYPERZETA_HYPERGRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperzeta/matrix.hpp"

namespace hyperzeta {

/// Finite hypergraph: vertex count plus an ordered sequence of hyperedges.
/// Hyperedges are stored as sorted vertex-index vectors without repeats;
/// duplicate hyperedges are legal and kept as distinct entries.
struct Hypergraph {
  std::size_t n_vertices = 0;
  std::vector<std::vector<int>> hyperedges;

  std::size_t order_sum() const;           // sum of |e|
  std::vector<int> vertex_degrees() const; // number of hyperedges per vertex

  bool operator==(const Hypergraph&) const = default;
};

struct BipartiteGraph {
  std::size_t left_count = 0;   // |V(H)|
  std::size_t right_count = 0;  // |E(H)|
  std::vector<std::pair<int, int>> edges;

  bool is_connected() const;
  IntMatrix adjacency() const;  // (left+right) x (left+right), Eq-style block form
  IntMatrix q_matrix() const;   // D - I
};

struct ValidationReport {
  bool connected = false;
  bool min_degree_ok = false;  // every vertex in >= 2 hyperedges
  bool orders_ok = false;      // every hyperedge of order >= 2
  int min_vertex_degree = 0;
  int min_order = 0;
  std::vector<std::string> notes;

  bool zeta_ready() const { return connected && min_degree_ok; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class ValidationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse the `.hg` text format: '#' comments, `vertices <n>`,
/// then `edge <i0> <i1> ...` lines with distinct 0-based indices.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
Hypergraph load_hypergraph(const std::string& path);
std::string to_hg_format(const Hypergraph& h);

ValidationReport validate(const Hypergraph& h);
BipartiteGraph bipartite_of(const Hypergraph& h);
Hypergraph dual_of(const Hypergraph& h);
IntMatrix incidence_matrix(const Hypergraph& h);
IntMatrix adjacency_of_hypergraph(const Hypergraph& h);
std::optional<std::pair<int, int>> regularity_of(const Hypergraph& h);
long euler_chi_bipartite(const Hypergraph& h);

/// Iteratively strip degree-1 vertices of the associated bipartite graph
/// (vertices in a single hyperedge, hyperedges of order <= 1) and renumber.
/// Mirrors degree-1 pruning on graphs, which preserves the zeta function.
Hypergraph prune_degree_one(const Hypergraph& h);

}  // namespace hyperzeta

#endif
