#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "hyperzeta/distinguish.hpp"

using namespace hyperzeta;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitDistinguished = 4;

const char* route_name(ZetaRoute r) {
  switch (r) {
    case ZetaRoute::LineGraph: return "linegraph";
    case ZetaRoute::Bass: return "bass";
    case ZetaRoute::Hashimoto1: return "hashimoto1";
    case ZetaRoute::Hashimoto2: return "hashimoto2";
  }
  return "?";
}

void print_result(const ZetaResult& z) {
  std::cout << "route " << route_name(z.route)
            << " zeta_inverse: " << z.reciprocal.to_string() << "\n";
  for (const auto& w : z.warnings)
    std::cout << "route " << route_name(z.route) << " warning: " << w << "\n";
}

int cmd_zeta(const std::string& file, const std::string& route, unsigned seeds) {
  Hypergraph h = load_hypergraph(file);
  if (route == "linegraph" || route == "all")
    print_result(zeta_via_linegraph(h));
  if (route == "bass" || route == "all") print_result(zeta_via_bass(h));
  if (route == "hashimoto" || route == "all") {
    if (regularity_of(prune_degree_one(h))) {
      auto [f1, f2] = zeta_via_hashimoto(h);
      print_result(f1);
      print_result(f2);
    } else if (route == "hashimoto") {
      std::cerr << "error: hashimoto route requires a (d,r)-regular hypergraph\n";
      return kExitValidation;
    }
  }
  if (route != "all") return kExitOk;

  CrossValidation cv = cross_validate(h, seeds);
  std::cout << "cross_validation routes_agree: " << (cv.routes_agree ? "true" : "false")
            << "\n";
  std::cout << "cross_validation degree: " << cv.degree << " expected: "
            << cv.degree_expected << " ok: " << (cv.degree_ok ? "true" : "false")
            << "\n";
  std::cout << "cross_validation dual_identity: " << (cv.dual_ok ? "true" : "false")
            << "\n";
  std::cout << "cross_validation orientation_invariance: "
            << (cv.orientation_ok ? "true" : "false") << " seeds: " << seeds << "\n";
  std::cout << "cross_validation regular: " << (cv.regular ? "true" : "false") << "\n";
  for (const auto& w : cv.warnings) std::cout << "warning: " << w << "\n";
  if (!cv.all_ok()) {
    if (!cv.mismatch.empty()) std::cout << "mismatch: " << cv.mismatch << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_oracle(const std::string& file, int order) {
  Hypergraph h = prune_degree_one(load_hypergraph(file));
  IntPoly rec = zeta_via_linegraph(h).reciprocal;
  OrientedLineGraph l = oriented_line_graph(clique_expand(h));
  RatSeries series = series_reciprocal(rec, order);
  RatSeries euler =
      euler_product_truncation(enumerate_prime_cycles(l, order), order);
  RatSeries expo = exp_weighted_counts(
      closed_path_counts(l, static_cast<std::size_t>(order)));
  bool all_ok = true;
  for (int k = 0; k <= order; ++k) {
    bool ok = series.coefficients[k] == euler.coefficients[k] &&
              series.coefficients[k] == expo.coefficients[k];
    all_ok = all_ok && ok;
    std::cout << "order " << k << " series: " << series.coefficients[k]
              << " euler_product: " << euler.coefficients[k]
              << " trace_exp: " << expo.coefficients[k]
              << " match: " << (ok ? "true" : "false") << "\n";
  }
  return all_ok ? kExitOk : kExitMismatch;
}

int cmd_spectra(const std::string& file) {
  Hypergraph h = load_hypergraph(file);
  if (!regularity_of(h)) {
    std::cerr << "error: spectra requires a (d,r)-regular hypergraph\n";
    return kExitValidation;
  }
  auto [d, r] = *regularity_of(h);
  std::cout << "regular d: " << d << " r: " << r << "\n";
  std::cout << "char_poly_primal: "
            << char_poly(adjacency_of_hypergraph(h)).to_string() << "\n";
  std::cout << "char_poly_dual: "
            << char_poly(adjacency_of_hypergraph(dual_of(h))).to_string() << "\n";
  IntMatrix ab = bipartite_of(h).adjacency();
  std::cout << "char_poly_bipartite_squared: " << char_poly(ab * ab).to_string()
            << "\n";
  CharRelationReport rel = verify_char_relations(h);
  std::cout << "relation_product: " << (rel.eq_product ? "true" : "false") << "\n";
  std::cout << "relation_transfer: " << (rel.eq_transfer ? "true" : "false") << "\n";
  if (auto ob = obvious_eigenvalues(h))
    std::cout << "obvious_eigenvalue value: " << ob->value
              << " multiplicity: " << ob->multiplicity
              << " of_dual: " << (ob->of_dual ? "true" : "false") << "\n";
  else
    std::cout << "obvious_eigenvalue none\n";
  return rel.eq_product && rel.eq_transfer ? kExitOk : kExitMismatch;
}

int cmd_ramanujan(const std::string& file, const std::string& tol_text) {
  Hypergraph h = load_hypergraph(file);
  Rat tol(tol_text);
  tol.canonicalize();
  SpectralReport rep = ramanujan_check(h, tol);
  const char* verdict = rep.ramanujan == RamanujanVerdict::Yes ? "Yes"
                        : rep.ramanujan == RamanujanVerdict::No
                            ? "No"
                            : "BoundaryWithinTolerance";
  std::cout << "regular d: " << rep.d << " r: " << rep.r << " q: " << rep.q << "\n";
  std::cout << "char_poly: " << rep.char_poly.to_string() << "\n";
  std::cout << "lambda1_interval: (" << rep.lambda1.first << ", "
            << rep.lambda1.second << "]\n";
  std::cout << "alon_boppana_bound: " << rep.alon_boppana.integer_part
            << " + sqrt(" << rep.alon_boppana.radicand << ")\n";
  std::cout << "ramanujan: " << verdict << " violations: " << rep.violations
            << " boundary_roots: " << rep.boundary_roots << "\n";

  PoleReport pa = pole_audit(h);
  std::cout << "pole_mult_at_1: " << pa.mult_at_1
            << " expected: " << pa.expected_mult_at_1 << "\n";
  std::cout << "pole_mult_at_-1/(r-1): " << pa.mult_at_neg_inv_r_minus_1
            << " expected: " << pa.expected_mult_neg << "\n";
  std::cout << "poles_simple_at_1: " << (pa.simple_pole_at_1 ? "true" : "false")
            << " simple_at_1/q: " << (pa.simple_pole_at_inv_q ? "true" : "false")
            << "\n";
  std::cout << "nontrivial_roots_on_critical_circle: "
            << (pa.all_nontrivial_on_circle ? "true" : "false") << "\n";
  for (const auto& e : pa.det_part_roots)
    std::cout << "det_part_root: " << e.description << "\n";

  bool rh = riemann_hypothesis_check(h);  // throws on internal disagreement
  std::cout << "riemann_hypothesis: " << (rh ? "true" : "false") << "\n";
  if (pa.mult_at_1 != pa.expected_mult_at_1 ||
      pa.mult_at_neg_inv_r_minus_1 != pa.expected_mult_neg)
    return kExitMismatch;
  return kExitOk;
}

CollapseMode parse_mode(const std::string& mode) {
  if (mode == "all-singletons") return CollapseMode::AllSingletons;
  if (mode == "disjoint-pairs") return CollapseMode::DisjointPairs;
  if (mode == "all-cliques") return CollapseMode::AllCliquesAtOnce;
  throw CLI::ValidationError("--mode",
                             "expected all-singletons|disjoint-pairs|all-cliques");
}

int cmd_distinguish(const std::string& f1, const std::string& f2, int k,
                    const std::string& mode) {
  Graph g1 = as_graph(load_hypergraph(f1));
  Graph g2 = as_graph(load_hypergraph(f2));
  DistinguishResult r = distinguish(g1, g2, k, parse_mode(mode));
  std::cout << "cospectral: " << (r.cospectral ? "true" : "false") << "\n";
  std::cout << "same_ihara: " << (r.same_ihara ? "true" : "false") << "\n";
  for (const auto& p : r.multiset1)
    std::cout << "invariant_1: " << p.to_string() << "\n";
  for (const auto& p : r.multiset2)
    std::cout << "invariant_2: " << p.to_string() << "\n";
  std::cout << "invariant_multisets_equal: "
            << (r.invariant_multisets_equal ? "true" : "false") << "\n";
  std::cout << "verdict: "
            << (r.verdict == DistinguishVerdict::Distinguished
                    ? "Distinguished"
                    : "NotDistinguishedByThisInvariant")
            << "\n";
  return r.verdict == DistinguishVerdict::Distinguished ? kExitDistinguished
                                                        : kExitOk;
}

int cmd_validate(const std::string& file) {
  Hypergraph h = load_hypergraph(file);
  ValidationReport rep = validate(h);
  std::cout << "vertices: " << h.n_vertices << " hyperedges: "
            << h.hyperedges.size() << " order_sum: " << h.order_sum() << "\n";
  std::cout << "connected: " << (rep.connected ? "true" : "false") << "\n";
  std::cout << "min_vertex_degree: " << rep.min_vertex_degree
            << " ok: " << (rep.min_degree_ok ? "true" : "false") << "\n";
  std::cout << "min_order: " << rep.min_order
            << " ok: " << (rep.orders_ok ? "true" : "false") << "\n";
  std::cout << "zeta_ready: " << (rep.zeta_ready() ? "true" : "false") << "\n";
  if (auto reg = regularity_of(h))
    std::cout << "regular d: " << reg->first << " r: " << reg->second << "\n";
  else
    std::cout << "regular: no\n";
  if (rep.zeta_ready()) {
    OrientedLineGraph l = oriented_line_graph(clique_expand(prune_degree_one(h)));
    std::cout << "line_graph_vertices: " << l.n_vertices << "\n";
    if (!is_strongly_connected(l))
      std::cout << "warning: oriented line graph is not strongly connected\n";
  }
  for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Ihara-Selberg zeta functions of hypergraphs"};
  app.require_subcommand(1);

  std::string file, file2, route = "all", mode = "disjoint-pairs";
  std::string tolerance = "1/1000000000";
  unsigned seeds = 10;
  int order = 10, k = 3;

  auto* zeta = app.add_subcommand("zeta", "compute zeta^{-1} by one or all routes");
  zeta->add_option("file", file, "input .hg file")->required();
  zeta->add_option("--route", route, "linegraph|bass|hashimoto|all")
      ->check(CLI::IsMember({"linegraph", "bass", "hashimoto", "all"}));
  zeta->add_option("--seeds", seeds, "orientation seeds for cross-validation");

  auto* oracle = app.add_subcommand("oracle", "series vs Euler-product comparison");
  oracle->add_option("file", file, "input .hg file")->required();
  oracle->add_option("--order", order, "truncation order")->check(CLI::Range(1, 16));

  auto* spectra = app.add_subcommand("spectra", "characteristic-polynomial report");
  spectra->add_option("file", file, "input .hg file")->required();

  auto* ram = app.add_subcommand("ramanujan", "Ramanujan verdict and pole audit");
  ram->add_option("file", file, "input .hg file")->required();
  ram->add_option("--tolerance", tolerance, "boundary band, a rational like 1/1000000000");

  auto* dist = app.add_subcommand("distinguish", "compare two graphs by collapse invariants");
  dist->add_option("g1", file, "first graph .hg file")->required();
  dist->add_option("g2", file2, "second graph .hg file")->required();
  dist->add_option("--k", k, "clique size")->check(CLI::Range(3, 16));
  dist->add_option("--mode", mode, "all-singletons|disjoint-pairs|all-cliques");

  auto* val = app.add_subcommand("validate", "validation report");
  val->add_option("file", file, "input .hg file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (zeta->parsed()) return cmd_zeta(file, route, seeds);
    if (oracle->parsed()) return cmd_oracle(file, order);
    if (spectra->parsed()) return cmd_spectra(file);
    if (ram->parsed()) return cmd_ramanujan(file, tolerance);
    if (dist->parsed()) return cmd_distinguish(file, file2, k, mode);
    if (val->parsed()) return cmd_validate(file);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "internal cross-check mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
