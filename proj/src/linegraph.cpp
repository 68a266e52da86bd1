#include "hyperzeta/linegraph.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace hyperzeta {

ColoredOrientedGraph clique_expand(const Hypergraph& h, std::optional<unsigned> seed) {
  ColoredOrientedGraph g;
  g.n_vertices = h.n_vertices;
  for (std::size_t ei = 0; ei < h.hyperedges.size(); ++ei) {
    const auto& e = h.hyperedges[ei];
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        g.arcs.push_back({e[a], e[b], static_cast<int>(ei)});
        g.arcs.push_back({e[b], e[a], static_cast<int>(ei)});
      }
  }
  if (seed) {
    // shuffle inverse pairs and flip which direction is listed first
    std::mt19937 rng(*seed);
    std::vector<std::size_t> pairs(g.arcs.size() / 2);
    for (std::size_t i = 0; i < pairs.size(); ++i) pairs[i] = i;
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<Arc> shuffled;
    shuffled.reserve(g.arcs.size());
    for (std::size_t p : pairs) {
      Arc fwd = g.arcs[2 * p], rev = g.arcs[2 * p + 1];
      if (rng() & 1u) std::swap(fwd, rev);
      shuffled.push_back(fwd);
      shuffled.push_back(rev);
    }
    g.arcs = std::move(shuffled);
  }
  g.involution.resize(g.arcs.size());
  for (std::size_t i = 0; i < g.arcs.size(); i += 2) {
    g.involution[i] = static_cast<int>(i + 1);
    g.involution[i + 1] = static_cast<int>(i);
  }
  return g;
}

OrientedLineGraph oriented_line_graph(const ColoredOrientedGraph& g) {
  OrientedLineGraph l;
  l.n_vertices = g.arcs.size();
  std::vector<std::vector<int>> arcs_from(g.n_vertices);
  for (std::size_t j = 0; j < g.arcs.size(); ++j)
    arcs_from[static_cast<std::size_t>(g.arcs[j].origin)].push_back(static_cast<int>(j));
  for (std::size_t i = 0; i < g.arcs.size(); ++i)
    for (int j : arcs_from[static_cast<std::size_t>(g.arcs[i].terminus)])
      if (g.arcs[i].color != g.arcs[static_cast<std::size_t>(j)].color)
        l.arcs.emplace_back(static_cast<int>(i), j);
  return l;
}

IntMatrix perron_frobenius_matrix(const OrientedLineGraph& l) {
  if (l.n_vertices == 0) throw std::invalid_argument("empty line graph has no matrix");
  IntMatrix t(l.n_vertices, l.n_vertices);
  for (auto [i, j] : l.arcs)
    t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return t;
}

bool is_strongly_connected(const OrientedLineGraph& l) {
  const std::size_t n = l.n_vertices;
  if (n == 0) return false;
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (auto [i, j] : l.arcs) {
    fwd[static_cast<std::size_t>(i)].push_back(j);
    rev[static_cast<std::size_t>(j)].push_back(i);
  }
  auto reach = [n](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    return cnt;
  };
  return reach(fwd) == n && reach(rev) == n;
}

std::vector<Int> closed_path_counts(const OrientedLineGraph& l, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("closed_path_counts: max_len >= 1");
  std::vector<Int> counts;
  counts.reserve(max_len);
  if (l.n_vertices == 0) {
    counts.assign(max_len, Int(0));
    return counts;
  }
  IntMatrix t = perron_frobenius_matrix(l);
  IntMatrix power = t;
  counts.push_back(power.trace());
  for (std::size_t k = 2; k <= max_len; ++k) {
    power = power * t;
    counts.push_back(power.trace());
  }
  return counts;
}

namespace {

bool is_primitive(const std::vector<int>& walk) {
  const std::size_t n = walk.size();
  for (std::size_t p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i)
      if (walk[i] != walk[i - p]) periodic = false;
    if (periodic) return false;
  }
  return true;
}

std::vector<int> min_rotation(const std::vector<int>& walk) {
  const std::size_t n = walk.size();
  std::vector<int> best = walk;
  std::vector<int> rot(n);
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) rot[i] = walk[(i + s) % n];
    if (rot < best) best = rot;
  }
  return best;
}

}  // namespace

std::map<int, long> enumerate_prime_cycles(const OrientedLineGraph& l, int max_len,
                                           std::size_t node_budget) {
  if (max_len < 1) throw std::invalid_argument("enumerate_prime_cycles: max_len >= 1");
  std::map<int, long> counts;
  const std::size_t n = l.n_vertices;
  if (n == 0) return counts;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : l.arcs) adj[static_cast<std::size_t>(i)].push_back(j);

  std::set<std::vector<int>> seen;
  std::size_t visited = 0;
  std::vector<int> walk;

  // Depth-first walks from each start vertex; only vertices >= start may
  // appear, so every rotation class is generated with its minimal vertex
  // as the start.
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (++visited > node_budget)
      throw EnumerationTooLarge("prime-cycle enumeration exceeded its node budget");
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (w < start) continue;
      if (w == start) {
        // the arc back to start closes a walk whose cyclic vertex sequence
        // is exactly `walk`
        if (is_primitive(walk)) {
          auto canon = min_rotation(walk);
          if (seen.insert(std::move(canon)).second)
            ++counts[static_cast<int>(walk.size())];
        }
        // a closed walk may continue through the start vertex
        if (static_cast<int>(walk.size()) < max_len) {
          walk.push_back(start);
          self(self, start, start);
          walk.pop_back();
        }
      } else if (static_cast<int>(walk.size()) < max_len) {
        walk.push_back(w);
        self(self, start, w);
        walk.pop_back();
      }
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    walk.assign(1, static_cast<int>(s));
    dfs(dfs, static_cast<int>(s), static_cast<int>(s));
  }
  return counts;
}

}  // namespace hyperzeta
