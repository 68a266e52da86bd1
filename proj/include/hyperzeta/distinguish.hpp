#ifndef HYPERZETA_DISTINGUISH_HPP
#define HYPERZETA_DISTINGUISH_HPP

#include "hyperzeta/spectra.hpp"

namespace hyperzeta {

/// An ordinary simple graph: a hypergraph whose hyperedges all have order 2,
/// with no duplicate edges.
struct Graph {
  Hypergraph h;
};

/// Wraps and checks a hypergraph; throws std::invalid_argument when an edge
/// has order != 2 or a duplicate edge is present.
Graph as_graph(const Hypergraph& h);

/// All k-subsets of vertices inducing a complete subgraph, in lexicographic
/// order. Requires k >= 3.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k);

/// Replace the chosen cliques by hyperedges on the same vertex sets; every
/// base edge lying inside at least one chosen clique is removed exactly once.
/// Throws when a set is not a clique of g.
Hypergraph collapse(const Graph& g, const std::vector<std::vector<int>>& cliques);

enum class CollapseMode { AllSingletons, DisjointPairs, AllCliquesAtOnce, Explicit };

/// One zeta^{-1} polynomial per collapse choice generated by the mode,
/// returned sorted canonically (a multiset). Explicit mode collapses exactly
/// the cliques given in explicit_cliques as a single choice.
std::vector<IntPoly> invariant_multiset(
    const Graph& g, int k, CollapseMode mode,
    const std::vector<std::vector<int>>& explicit_cliques = {},
    std::vector<std::string>* warnings = nullptr);

enum class DistinguishVerdict { Distinguished, NotDistinguishedByThisInvariant };

struct DistinguishResult {
  bool cospectral = false;                 // equal characteristic polynomials
  bool same_ihara = false;                 // equal plain zeta reciprocals
  bool invariant_multisets_equal = false;
  DistinguishVerdict verdict = DistinguishVerdict::NotDistinguishedByThisInvariant;
  std::vector<IntPoly> multiset1, multiset2;
};

DistinguishResult distinguish(const Graph& g1, const Graph& g2, int k, CollapseMode mode);

/// Plain Ihara zeta reciprocal computed by Bass's formula directly on the
/// graph: (1-u^2)^{-chi} det(I - uA + u^2 Q). Degree-1 vertices are pruned
/// first; throws ValidationError when the pruned graph is not zeta-ready.
IntPoly ihara_zeta_graph(const Graph& g);

}  // namespace hyperzeta

#endif
