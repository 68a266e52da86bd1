#include "hyperzeta/zeta.hpp"

#include <sstream>

namespace hyperzeta {

namespace {

Hypergraph prepare(const Hypergraph& h, std::vector<std::string>& warnings) {
  Hypergraph hp = prune_degree_one(h);
  if (hp.n_vertices != h.n_vertices || hp.hyperedges.size() != h.hyperedges.size())
    warnings.push_back("degree-1 bipartite vertices pruned before zeta computation");
  if (hp.n_vertices == 0)
    throw ValidationError("hypergraph is empty after degree-1 pruning");
  ValidationReport v = validate(hp);
  if (!v.zeta_ready()) {
    std::string msg = "validation failed:";
    for (const auto& n : v.notes) msg += " " + n + ";";
    throw ValidationError(msg);
  }
  return hp;
}

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) throw std::domain_error("functional equation: zero base with nonzero exponent");
  Rat acc(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  for (long i = 0; i < (e > 0 ? e : -e); ++i) acc *= b;
  return acc;
}

struct RegularData {
  Hypergraph h;  // dualized so that d >= r
  long d, r, n1, n2, q, neg_chi;
  bool dualized;
};

RegularData regular_data(const Hypergraph& input, std::vector<std::string>& warnings) {
  Hypergraph hp = prepare(input, warnings);
  auto reg = regularity_of(hp);
  if (!reg) throw std::invalid_argument("hypergraph is not (d,r)-regular");
  RegularData rd;
  rd.dualized = reg->first < reg->second;
  rd.h = rd.dualized ? dual_of(hp) : hp;
  rd.d = rd.dualized ? reg->second : reg->first;
  rd.r = rd.dualized ? reg->first : reg->second;
  rd.n1 = static_cast<long>(rd.h.n_vertices);
  rd.n2 = static_cast<long>(rd.h.hyperedges.size());
  rd.q = (rd.d - 1) * (rd.r - 1);
  rd.neg_chi = -euler_chi_bipartite(rd.h);
  if (rd.dualized) warnings.push_back("d < r: computed on the dual hypergraph");
  // exponent-sign bookkeeping for the factorization
  if (rd.neg_chi < 0 || rd.n2 < rd.n1)
    throw std::logic_error("regular factorization: negative exponent, sign bookkeeping broken");
  return rd;
}

}  // namespace

ZetaResult zeta_via_linegraph(const Hypergraph& h, std::optional<unsigned> seed) {
  ZetaResult res;
  res.route = ZetaRoute::LineGraph;
  Hypergraph hp = prepare(h, res.warnings);
  ColoredOrientedGraph g = clique_expand(hp, seed);
  OrientedLineGraph l = oriented_line_graph(g);
  if (!is_strongly_connected(l))
    res.warnings.push_back("oriented line graph is not strongly connected");
  IntMatrix t = perron_frobenius_matrix(l);
  IntMatrix id = IntMatrix::identity(l.n_vertices);
  IntMatrix minus_t(l.n_vertices, l.n_vertices);
  for (std::size_t i = 0; i < l.n_vertices; ++i)
    for (std::size_t j = 0; j < l.n_vertices; ++j) minus_t.at(i, j) = -t.at(i, j);
  IntMatrix zero(l.n_vertices, l.n_vertices);
  res.reciprocal = det_pencil(id, minus_t, zero);
  return res;
}

IntPoly bass_bipartite_reciprocal(const Hypergraph& h) {
  std::vector<std::string> warnings;
  Hypergraph hp = prepare(h, warnings);
  BipartiteGraph b = bipartite_of(hp);
  const std::size_t n = b.left_count + b.right_count;
  IntMatrix a = b.adjacency();
  IntMatrix minus_a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) minus_a.at(i, j) = -a.at(i, j);
  IntPoly det = det_pencil(IntMatrix::identity(n), minus_a, b.q_matrix());
  long neg_chi = -euler_chi_bipartite(hp);
  if (neg_chi < 0) throw std::logic_error("bass route: positive Euler characteristic");
  IntPoly one_minus_t2(std::vector<Int>{1, 0, -1});
  return one_minus_t2.pow(static_cast<unsigned long>(neg_chi)) * det;
}

ZetaResult zeta_via_bass(const Hypergraph& h) {
  ZetaResult res;
  res.route = ZetaRoute::Bass;
  Hypergraph hp = prepare(h, res.warnings);
  IntPoly bt = bass_bipartite_reciprocal(hp);
  if (!is_even_poly(bt))
    throw std::logic_error("bass route: bipartite reciprocal is not even");
  res.reciprocal = substitute_even(bt);
  return res;
}

std::pair<ZetaResult, ZetaResult> zeta_via_hashimoto(const Hypergraph& h) {
  ZetaResult r1, r2;
  r1.route = ZetaRoute::Hashimoto1;
  r2.route = ZetaRoute::Hashimoto2;
  RegularData rd = regular_data(h, r1.warnings);
  r2.warnings = r1.warnings;

  IntPoly one_minus_u(std::vector<Int>{1, -1});
  IntPoly pre_chi = one_minus_u.pow(static_cast<unsigned long>(rd.neg_chi));

  auto det_form = [&](const IntMatrix& adj, long shift, std::size_t n) {
    IntMatrix c1(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        c1.at(i, j) = -adj.at(i, j);
        if (i == j) c1.at(i, j) += shift;
      }
    IntMatrix c2(n, n);
    for (std::size_t i = 0; i < n; ++i) c2.at(i, i) = rd.q;
    return det_pencil(IntMatrix::identity(n), c1, c2);
  };

  // form 1: vertices of H
  IntPoly det1 = det_form(adjacency_of_hypergraph(rd.h), rd.r - 2,
                          static_cast<std::size_t>(rd.n1));
  IntPoly pre1(std::vector<Int>{1, rd.r - 1});
  r1.reciprocal = pre_chi * pre1.pow(static_cast<unsigned long>(rd.n2 - rd.n1)) * det1;

  // form 2: vertices of H*; the (1+(d-1)u)^(n1-n2) prefactor has a
  // non-positive exponent, so the determinant must divide exactly
  IntPoly det2 = det_form(adjacency_of_hypergraph(dual_of(rd.h)), rd.d - 2,
                          static_cast<std::size_t>(rd.n2));
  IntPoly pre2(std::vector<Int>{1, rd.d - 1});
  IntPoly reduced = det2.divide_exact(pre2.pow(static_cast<unsigned long>(rd.n2 - rd.n1)));
  r2.reciprocal = pre_chi * reduced;

  return {r1, r2};
}

CrossValidation cross_validate(const Hypergraph& h, unsigned orientation_seeds) {
  CrossValidation cv;
  ZetaResult lg = zeta_via_linegraph(h);
  ZetaResult bass = zeta_via_bass(h);
  cv.reciprocal = lg.reciprocal;
  cv.warnings = lg.warnings;

  std::vector<std::pair<std::string, IntPoly>> routes{
      {"linegraph", lg.reciprocal}, {"bass", bass.reciprocal}};
  Hypergraph hp = prune_degree_one(h);
  cv.regular = regularity_of(hp).has_value();
  if (cv.regular) {
    auto [h1, h2] = zeta_via_hashimoto(h);
    routes.emplace_back("hashimoto1", h1.reciprocal);
    routes.emplace_back("hashimoto2", h2.reciprocal);
  }
  cv.routes_agree = true;
  for (std::size_t i = 1; i < routes.size(); ++i) {
    if (routes[i].second != routes[0].second) {
      cv.routes_agree = false;
      std::ostringstream os;
      os << routes[0].first << ": " << routes[0].second.to_string() << " | "
         << routes[i].first << ": " << routes[i].second.to_string();
      cv.mismatch = os.str();
    }
  }

  cv.degree = lg.reciprocal.degree();
  cv.degree_expected = static_cast<long>(hp.order_sum());
  cv.degree_ok = cv.degree == cv.degree_expected;

  cv.dual_ok = zeta_via_linegraph(dual_of(h)).reciprocal == lg.reciprocal;

  cv.orientation_ok = true;
  for (unsigned s = 1; s <= orientation_seeds; ++s)
    if (zeta_via_linegraph(h, s).reciprocal != lg.reciprocal) {
      cv.orientation_ok = false;
      break;
    }
  return cv;
}

bool functional_equation_check(const Hypergraph& h, FeForm form, const Rat& u) {
  std::vector<std::string> warnings;
  RegularData rd = regular_data(h, warnings);
  IntPoly zinv = zeta_via_hashimoto(h).first.reciprocal;

  if (u == 0) throw std::domain_error("functional equation: u must be nonzero");
  auto lambda = [&](const Rat& x) -> Rat {
    Rat zeta_inv_val = zinv.eval(x);
    if (zeta_inv_val == 0)
      throw std::domain_error("functional equation: u is a pole of zeta");
    Rat one_minus(1);
    one_minus -= x;
    Rat pf;
    switch (form) {
      case FeForm::Lambda1:
        pf = rat_pow(one_minus, rd.n1 + rd.neg_chi) *
             rat_pow(Rat(1) + Rat(rd.r - 1) * x, rd.n2 - rd.n1) *
             rat_pow(Rat(1) - Rat(rd.q) * x, rd.n1);
        break;
      case FeForm::Lambda2:
        pf = rat_pow(one_minus, rd.n2 + rd.neg_chi) *
             rat_pow(Rat(1) + Rat(rd.d - 1) * x, rd.n1 - rd.n2) *
             rat_pow(Rat(1) - Rat(rd.q) * x, rd.n2);
        break;
      case FeForm::Xi1:
        pf = rat_pow(one_minus, rd.neg_chi) *
             rat_pow(Rat(1) + Rat(rd.r - 1) * x, rd.n2 - rd.n1) *
             rat_pow(Rat(1) + Rat(rd.q) * x * x, rd.n1);
        break;
      case FeForm::Xi2:
        pf = rat_pow(one_minus, rd.neg_chi) *
             rat_pow(Rat(1) + Rat(rd.d - 1) * x, rd.n1 - rd.n2) *
             rat_pow(Rat(1) + Rat(rd.q) * x * x, rd.n2);
        break;
    }
    return pf / zeta_inv_val;
  };

  Rat mirror = Rat(1) / (Rat(rd.q) * u);
  return lambda(u) == lambda(mirror);
}

bool functional_equation_generic(const Hypergraph& h, const IntPoly& p, int sign,
                                 bool use_dual_form, const Rat& u) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("expected sign must be +1 or -1");
  std::vector<std::string> warnings;
  RegularData rd = regular_data(h, warnings);
  IntPoly zinv = zeta_via_hashimoto(h).first.reciprocal;
  if (u == 0) throw std::domain_error("functional equation: u must be nonzero");

  long eta = use_dual_form ? rd.n2 : rd.n1;
  long k = use_dual_form ? rd.d : rd.r;
  long side = use_dual_form ? rd.n1 - rd.n2 : rd.n2 - rd.n1;

  auto lambda = [&](const Rat& x) -> Rat {
    Rat zeta_inv_val = zinv.eval(x);
    if (zeta_inv_val == 0)
      throw std::domain_error("functional equation: u is a pole of zeta");
    Rat pv = p.eval(x);
    return rat_pow(pv, eta) * rat_pow(Rat(1) - x, rd.neg_chi) *
           rat_pow(Rat(1) + Rat(k - 1) * x, side) / zeta_inv_val;
  };

  Rat mirror = Rat(1) / (Rat(rd.q) * u);
  return lambda(u) == Rat(sign) * lambda(mirror);
}

EvennessReport evenness_report(const Hypergraph& h) {
  EvennessReport rep;
  IntPoly z = zeta_via_linegraph(h).reciprocal;
  rep.even = is_even_poly(z);
  rep.unimodular_implied = rep.even;
  rep.odd_total_degree = (z.degree() % 2) != 0;
  return rep;
}

}  // namespace hyperzeta
