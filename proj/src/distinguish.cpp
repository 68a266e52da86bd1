#include "hyperzeta/distinguish.hpp"

#include <algorithm>
#include <set>

namespace hyperzeta {

namespace {

std::vector<std::vector<char>> adjacency_table(const Graph& g) {
  std::vector<std::vector<char>> adj(g.h.n_vertices,
                                     std::vector<char>(g.h.n_vertices, 0));
  for (const auto& e : g.h.hyperedges) adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
  return adj;
}

}  // namespace

Graph as_graph(const Hypergraph& h) {
  std::set<std::vector<int>> seen;
  for (const auto& e : h.hyperedges) {
    if (e.size() != 2)
      throw std::invalid_argument("as_graph: hyperedge of order != 2");
    if (!seen.insert(e).second)
      throw std::invalid_argument("as_graph: duplicate edge");
  }
  return Graph{h};
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("enumerate_cliques: k >= 3 required");
  auto adj = adjacency_table(g);
  const int n = static_cast<int>(g.h.n_vertices);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      bool ok = true;
      for (int u : cur)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  extend(extend, 0);
  return out;  // recursion order is already lexicographic
}

Hypergraph collapse(const Graph& g, const std::vector<std::vector<int>>& cliques) {
  auto adj = adjacency_table(g);
  std::set<std::vector<int>> chosen;
  std::set<std::pair<int, int>> covered;
  for (auto c : cliques) {
    std::sort(c.begin(), c.end());
    if (c.size() < 2 || std::adjacent_find(c.begin(), c.end()) != c.end())
      throw std::invalid_argument("collapse: vertex set is not a clique");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[i] < 0 || c[j] >= static_cast<int>(g.h.n_vertices) || !adj[c[i]][c[j]])
          throw std::invalid_argument("collapse: vertex set is not a clique");
        covered.insert({c[i], c[j]});
      }
    chosen.insert(c);
  }
  Hypergraph out;
  out.n_vertices = g.h.n_vertices;
  out.hyperedges.assign(chosen.begin(), chosen.end());
  for (const auto& e : g.h.hyperedges)
    if (!covered.count({e[0], e[1]})) out.hyperedges.push_back(e);
  return out;
}

namespace {

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int v : a)
    if (std::find(b.begin(), b.end(), v) != b.end()) return false;
  return true;
}

/// All maximum-cardinality sets of pairwise vertex-disjoint cliques.
std::vector<std::vector<std::vector<int>>> max_disjoint_sets(
    const std::vector<std::vector<int>>& cliques) {
  std::vector<std::vector<std::vector<int>>> best;
  std::size_t best_size = 0;
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() > best_size) {
      best_size = cur.size();
      best.clear();
    }
    if (cur.size() == best_size) best.push_back(cur);
    // even taking every remaining clique cannot beat the incumbent twice over,
    // so only prune when the bound fails
    if (cur.size() + (cliques.size() - start) < best_size) return;
    for (std::size_t i = start; i < cliques.size(); ++i) {
      bool ok = true;
      for (const auto& c : cur)
        if (!disjoint(c, cliques[i])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(cliques[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  // keep only the sets that reached the final maximum
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& s : best)
    if (s.size() == best_size) out.push_back(std::move(s));
  return out;
}

}  // namespace

std::vector<IntPoly> invariant_multiset(
    const Graph& g, int k, CollapseMode mode,
    const std::vector<std::vector<int>>& explicit_cliques,
    std::vector<std::string>* warnings) {
  std::vector<std::vector<std::vector<int>>> choices;
  if (mode == CollapseMode::Explicit) {
    choices.push_back(explicit_cliques);
  } else {
    auto cliques = enumerate_cliques(g, k);
    switch (mode) {
      case CollapseMode::AllSingletons:
        if (cliques.empty()) choices.push_back({});
        for (const auto& c : cliques) choices.push_back({c});
        break;
      case CollapseMode::DisjointPairs:
        choices = max_disjoint_sets(cliques);
        break;
      case CollapseMode::AllCliquesAtOnce:
        choices.push_back(cliques);
        break;
      default:
        break;
    }
  }
  std::vector<IntPoly> out;
  for (const auto& choice : choices) {
    ZetaResult z = zeta_via_linegraph(collapse(g, choice));
    if (warnings)
      warnings->insert(warnings->end(), z.warnings.begin(), z.warnings.end());
    out.push_back(std::move(z.reciprocal));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistinguishResult distinguish(const Graph& g1, const Graph& g2, int k,
                              CollapseMode mode) {
  DistinguishResult r;
  r.cospectral = char_poly(adjacency_of_hypergraph(g1.h)) ==
                 char_poly(adjacency_of_hypergraph(g2.h));
  r.same_ihara = ihara_zeta_graph(g1) == ihara_zeta_graph(g2);
  r.multiset1 = invariant_multiset(g1, k, mode);
  r.multiset2 = invariant_multiset(g2, k, mode);
  r.invariant_multisets_equal = r.multiset1 == r.multiset2;
  r.verdict = r.invariant_multisets_equal
                  ? DistinguishVerdict::NotDistinguishedByThisInvariant
                  : DistinguishVerdict::Distinguished;
  return r;
}

IntPoly ihara_zeta_graph(const Graph& g) {
  Hypergraph h = prune_degree_one(g.h);
  ValidationReport rep = validate(h);
  if (!rep.zeta_ready())
    throw ValidationError("ihara_zeta_graph: graph is not zeta-ready after pruning");

  const std::size_t n = h.n_vertices;
  IntMatrix a = adjacency_of_hypergraph(h);
  auto deg = h.vertex_degrees();
  IntMatrix c1(n, n), c2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c1.at(i, j) = -a.at(i, j);
    c2.at(i, i) = deg[i] - 1;
  }
  IntPoly det = det_pencil(IntMatrix::identity(n), c1, c2);
  long chi = static_cast<long>(n) - static_cast<long>(h.hyperedges.size());
  IntPoly one_minus_u2({1, 0, -1});
  if (chi > 0) return det.divide_exact(one_minus_u2.pow(chi));
  return det * one_minus_u2.pow(-chi);
}

}  // namespace hyperzeta
