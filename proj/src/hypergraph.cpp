#include "hyperzeta/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace hyperzeta {

std::size_t Hypergraph::order_sum() const {
  std::size_t s = 0;
  for (const auto& e : hyperedges) s += e.size();
  return s;
}

std::vector<int> Hypergraph::vertex_degrees() const {
  std::vector<int> deg(n_vertices, 0);
  for (const auto& e : hyperedges)
    for (int v : e) ++deg[static_cast<std::size_t>(v)];
  return deg;
}

bool BipartiteGraph::is_connected() const {
  const std::size_t n = left_count + right_count;
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [v, e] : edges) {
    adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(left_count) + e);
    adj[left_count + static_cast<std::size_t>(e)].push_back(v);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

IntMatrix BipartiteGraph::adjacency() const {
  const std::size_t n = left_count + right_count;
  IntMatrix a(n, n);
  for (auto [v, e] : edges) {
    a.at(static_cast<std::size_t>(v), left_count + static_cast<std::size_t>(e)) = 1;
    a.at(left_count + static_cast<std::size_t>(e), static_cast<std::size_t>(v)) = 1;
  }
  return a;
}

IntMatrix BipartiteGraph::q_matrix() const {
  const std::size_t n = left_count + right_count;
  std::vector<long> deg(n, 0);
  for (auto [v, e] : edges) {
    ++deg[static_cast<std::size_t>(v)];
    ++deg[left_count + static_cast<std::size_t>(e)];
  }
  IntMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i) q.at(i, i) = deg[i] - 1;
  return q;
}

Hypergraph parse_hypergraph(std::istream& in) {
  Hypergraph h;
  bool have_vertices = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "vertices") {
      if (have_vertices) throw ParseError(lineno, "duplicate 'vertices' line");
      long n;
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "malformed 'vertices' line");
      h.n_vertices = static_cast<std::size_t>(n);
      have_vertices = true;
    } else if (head == "edge") {
      if (!have_vertices) throw ParseError(lineno, "'edge' before 'vertices'");
      std::vector<int> e;
      long v;
      while (ls >> v) {
        if (v < 0 || static_cast<std::size_t>(v) >= h.n_vertices)
          throw ParseError(lineno, "vertex index out of range: " + std::to_string(v));
        e.push_back(static_cast<int>(v));
      }
      if (!ls.eof()) throw ParseError(lineno, "malformed 'edge' line");
      if (e.empty()) throw ParseError(lineno, "empty hyperedge");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw ParseError(lineno, "repeated vertex within hyperedge");
      h.hyperedges.push_back(std::move(e));
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (!have_vertices) throw ParseError(lineno, "missing 'vertices' line");
  return h;
}

Hypergraph parse_hypergraph(const std::string& text) {
  std::istringstream is(text);
  return parse_hypergraph(is);
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_hypergraph(in);
}

std::string to_hg_format(const Hypergraph& h) {
  std::ostringstream os;
  os << "vertices " << h.n_vertices << "\n";
  for (const auto& e : h.hyperedges) {
    os << "edge";
    for (int v : e) os << ' ' << v;
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const Hypergraph& h) {
  ValidationReport r;
  auto deg = h.vertex_degrees();
  r.min_vertex_degree = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());
  r.min_degree_ok = r.min_vertex_degree >= 2;
  r.min_order = h.hyperedges.empty()
                    ? 0
                    : static_cast<int>(
                          std::min_element(h.hyperedges.begin(), h.hyperedges.end(),
                                           [](const auto& a, const auto& b) {
                                             return a.size() < b.size();
                                           })
                              ->size());
  r.orders_ok = r.min_order >= 2;
  r.connected = bipartite_of(h).is_connected();
  if (!r.connected) r.notes.push_back("associated bipartite graph is disconnected");
  if (!r.min_degree_ok)
    r.notes.push_back("a hypervertex lies in fewer than two hyperedges");
  if (!r.orders_ok) r.notes.push_back("a hyperedge has order below two");
  return r;
}

BipartiteGraph bipartite_of(const Hypergraph& h) {
  BipartiteGraph b;
  b.left_count = h.n_vertices;
  b.right_count = h.hyperedges.size();
  for (std::size_t ei = 0; ei < h.hyperedges.size(); ++ei)
    for (int v : h.hyperedges[ei]) b.edges.emplace_back(v, static_cast<int>(ei));
  return b;
}

Hypergraph dual_of(const Hypergraph& h) {
  Hypergraph d;
  d.n_vertices = h.hyperedges.size();
  d.hyperedges.assign(h.n_vertices, {});
  for (std::size_t ei = 0; ei < h.hyperedges.size(); ++ei)
    for (int v : h.hyperedges[ei])
      d.hyperedges[static_cast<std::size_t>(v)].push_back(static_cast<int>(ei));
  return d;
}

IntMatrix incidence_matrix(const Hypergraph& h) {
  IntMatrix m(h.n_vertices, h.hyperedges.size());
  for (std::size_t ei = 0; ei < h.hyperedges.size(); ++ei)
    for (int v : h.hyperedges[ei]) m.at(static_cast<std::size_t>(v), ei) = 1;
  return m;
}

IntMatrix adjacency_of_hypergraph(const Hypergraph& h) {
  IntMatrix m = incidence_matrix(h);
  IntMatrix a = m * m.transpose();
  auto deg = h.vertex_degrees();
  for (std::size_t i = 0; i < h.n_vertices; ++i) a.at(i, i) -= deg[i];
  return a;
}

std::optional<std::pair<int, int>> regularity_of(const Hypergraph& h) {
  if (h.n_vertices == 0 || h.hyperedges.empty()) return std::nullopt;
  auto deg = h.vertex_degrees();
  int d = deg[0];
  for (int v : deg)
    if (v != d) return std::nullopt;
  std::size_t r = h.hyperedges[0].size();
  for (const auto& e : h.hyperedges)
    if (e.size() != r) return std::nullopt;
  return std::make_pair(d, static_cast<int>(r));
}

long euler_chi_bipartite(const Hypergraph& h) {
  return static_cast<long>(h.n_vertices) + static_cast<long>(h.hyperedges.size()) -
         static_cast<long>(h.order_sum());
}

Hypergraph prune_degree_one(const Hypergraph& h) {
  std::vector<char> vertex_alive(h.n_vertices, 1);
  std::vector<std::set<int>> edges;
  edges.reserve(h.hyperedges.size());
  for (const auto& e : h.hyperedges) edges.emplace_back(e.begin(), e.end());
  std::vector<char> edge_alive(edges.size(), 1);

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> deg(h.n_vertices, 0);
    for (std::size_t ei = 0; ei < edges.size(); ++ei)
      if (edge_alive[ei])
        for (int v : edges[ei]) ++deg[static_cast<std::size_t>(v)];
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      if (edge_alive[ei] && edges[ei].size() <= 1) {
        edge_alive[ei] = 0;
        changed = true;
      }
    }
    for (std::size_t v = 0; v < h.n_vertices; ++v) {
      if (!vertex_alive[v]) continue;
      if (deg[v] == 0) {
        vertex_alive[v] = 0;
        changed = true;
      } else if (deg[v] == 1) {
        vertex_alive[v] = 0;
        changed = true;
        for (std::size_t ei = 0; ei < edges.size(); ++ei)
          if (edge_alive[ei]) edges[ei].erase(static_cast<int>(v));
      }
    }
  }

  std::vector<int> remap(h.n_vertices, -1);
  Hypergraph out;
  for (std::size_t v = 0; v < h.n_vertices; ++v)
    if (vertex_alive[v]) remap[v] = static_cast<int>(out.n_vertices++);
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    if (!edge_alive[ei]) continue;
    std::vector<int> e;
    for (int v : edges[ei]) e.push_back(remap[static_cast<std::size_t>(v)]);
    std::sort(e.begin(), e.end());
    out.hyperedges.push_back(std::move(e));
  }
  return out;
}

}  // namespace hyperzeta
