#include "hyperzeta/spectra.hpp"

namespace hyperzeta {

int AlonBoppanaBound::compare(const Rat& v) const {
  // integer_part + sqrt(radicand) vs v  <=>  sqrt(radicand) vs v - integer_part
  Rat rhs = v - Rat(integer_part);
  if (rhs < 0) return 1;
  int cmp = sgn(Rat(radicand) - rhs * rhs);
  return cmp;
}

AlonBoppanaBound alon_boppana_bound(long d, long r) {
  if (d < 2 || r < 2) throw std::invalid_argument("alon_boppana_bound: d, r >= 2");
  long q = (d - 1) * (r - 1);
  return {r - 2, 4 * q};
}

IntPoly char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix neg(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) neg.at(i, j) = -m.at(i, j);
  IntMatrix zero(n, n);
  return det_pencil(neg, IntMatrix::identity(n), zero);
}

namespace {

std::pair<long, long> require_regular(const Hypergraph& h) {
  auto reg = regularity_of(h);
  if (!reg) throw std::invalid_argument("hypergraph is not (d,r)-regular");
  return {reg->first, reg->second};
}

}  // namespace

CharRelationReport verify_char_relations(const Hypergraph& h) {
  auto [d, r] = require_regular(h);
  IntPoly p = char_poly(adjacency_of_hypergraph(h));
  IntPoly ps = char_poly(adjacency_of_hypergraph(dual_of(h)));
  IntMatrix ab = bipartite_of(h).adjacency();
  IntPoly q = char_poly(ab * ab);

  CharRelationReport rep;
  rep.eq_product = q == p.compose_shift(-Int(d)) * ps.compose_shift(-Int(r));
  rep.eq_transfer =
      IntPoly::monomial(1, h.n_vertices) * ps.compose_shift(-Int(r)) ==
      IntPoly::monomial(1, h.hyperedges.size()) * p.compose_shift(-Int(d));
  return rep;
}

std::optional<ObviousEigenvalue> obvious_eigenvalues(const Hypergraph& h) {
  auto [d, r] = require_regular(h);
  long n1 = static_cast<long>(h.n_vertices);
  long n2 = static_cast<long>(h.hyperedges.size());
  if (d < r) return ObviousEigenvalue{-d, n1 - n2, false};
  if (r < d) return ObviousEigenvalue{-r, n2 - n1, true};
  return std::nullopt;
}

SpectralReport ramanujan_check(const Hypergraph& h, const Rat& tolerance) {
  auto [d, r] = require_regular(h);
  if (!bipartite_of(h).is_connected())
    throw std::invalid_argument("ramanujan_check: hypergraph must be connected");

  SpectralReport rep;
  rep.d = d;
  rep.r = r;
  rep.q = (d - 1) * (r - 1);
  rep.alon_boppana = alon_boppana_bound(d, r);
  rep.char_poly = char_poly(adjacency_of_hypergraph(h));
  rep.obvious = obvious_eigenvalues(h);
  rep.lambda1 = isolate_largest_root(rep.char_poly);

  // strip the simple Perron eigenvalue d(r-1)
  Rat perron(d * (r - 1));
  if (rep.char_poly.eval(perron) != 0)
    throw std::invalid_argument("ramanujan_check: d(r-1) is not an eigenvalue (disconnected input?)");
  IntPoly stripped = rep.char_poly.deflate(perron);

  // strip the obvious eigenvalue -d when it belongs to H itself
  if (rep.obvious && !rep.obvious->of_dual) {
    Rat root(-d);
    for (long k = 0; k < rep.obvious->multiplicity; ++k) {
      if (stripped.eval(root) != 0)
        throw std::logic_error("ramanujan_check: obvious eigenvalue multiplicity too small");
      stripped = stripped.deflate(root);
    }
  }

  auto outside = [&](const Rat& radicand) -> long {
    if (stripped.degree() < 1) return 0;
    Rat center(r - 2);
    AlgPoint left = AlgPoint::quadratic(center, Rat(-1), radicand);
    AlgPoint right = AlgPoint::quadratic(center, Rat(1), radicand);
    return count_roots_open(stripped, AlgPoint::neg_inf(), left) +
           count_roots_halfopen(stripped, right, AlgPoint::pos_inf());
  };

  Rat four_q(4 * rep.q);
  long n_out = outside(four_q);
  long n_strict = outside(four_q + tolerance * tolerance);
  rep.violations = n_out;
  rep.boundary_roots = n_out - n_strict;
  rep.ramanujan = n_strict > 0 ? RamanujanVerdict::No
                  : n_out > 0  ? RamanujanVerdict::BoundaryWithinTolerance
                               : RamanujanVerdict::Yes;
  return rep;
}

PoleReport pole_audit(const Hypergraph& h) {
  auto [d0, r0] = require_regular(h);
  Hypergraph hh = d0 < r0 ? dual_of(h) : h;
  auto [d, r] = require_regular(hh);
  long n1 = static_cast<long>(hh.n_vertices);
  long n2 = static_cast<long>(hh.hyperedges.size());
  long q = (d - 1) * (r - 1);
  long neg_chi = -euler_chi_bipartite(hh);

  PoleReport rep;
  rep.expected_mult_at_1 = neg_chi + 1;  // prefactor plus the Perron factor
  rep.expected_mult_neg = n2 - n1;

  IntPoly zinv = zeta_via_hashimoto(hh).first.reciprocal;
  rep.mult_at_1 = static_cast<long>(zinv.root_multiplicity(Rat(1)));
  rep.mult_at_neg_inv_r_minus_1 =
      static_cast<long>(zinv.root_multiplicity(Rat(-1, r - 1)));

  // determinant part: det(I - (A - r + 2)u + q u^2)
  IntMatrix a = adjacency_of_hypergraph(hh);
  const std::size_t n = a.rows();
  IntMatrix c1(n, n), c2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) c1.at(i, j) = -a.at(i, j);
    c1.at(i, i) += r - 2;
    c2.at(i, i) = q;
  }
  IntPoly det = det_pencil(IntMatrix::identity(n), c1, c2);

  // the Perron eigenvalue contributes (1-u)(1-qu)
  if (det.eval(Rat(1)) != 0 || det.eval(Rat(1, q)) != 0)
    throw std::logic_error("pole_audit: missing Perron factor (disconnected input?)");
  IntPoly stripped = det.deflate(Rat(1)).deflate(Rat(1, q));
  rep.simple_pole_at_1 = stripped.eval(Rat(1)) != 0;
  rep.simple_pole_at_inv_q = stripped.eval(Rat(1, q)) != 0;

  if (stripped.degree() < 1) {
    rep.all_nontrivial_on_circle = true;
    return rep;
  }

  IntPoly sf = squarefree_part(stripped);
  long real_roots = count_distinct_real_roots(sf);
  // real roots on the critical circle are exactly the roots of q u^2 - 1
  RatPoly circle{Rat(-1), Rat(0), Rat(q)};
  RatPoly g = rat_gcd(to_rat_poly(sf), circle);
  long on_circle_real = static_cast<long>(g.size()) - 1;
  rep.all_nontrivial_on_circle = real_roots == on_circle_real;

  for (long i = 0; i < on_circle_real; ++i)
    rep.det_part_roots.push_back(
        {"real root at modulus q^{-1/2}", ModulusClass::OnCriticalCircle});
  for (long i = 0; i < real_roots - on_circle_real; ++i)
    rep.det_part_roots.push_back(
        {"real root with modulus != q^{-1/2}", ModulusClass::OffCriticalCircle});
  long complex_pairs = (sf.degree() - real_roots) / 2;
  for (long i = 0; i < complex_pairs; ++i)
    rep.det_part_roots.push_back(
        {"complex conjugate pair on modulus q^{-1/2}", ModulusClass::OnCriticalCircle});
  return rep;
}

bool riemann_hypothesis_check(const Hypergraph& h) {
  PoleReport pa = pole_audit(h);
  bool rh = pa.all_nontrivial_on_circle && pa.simple_pole_at_1 && pa.simple_pole_at_inv_q;
  SpectralReport sr = ramanujan_check(h);
  bool ramanujan_exact = sr.violations == 0;
  if (rh != ramanujan_exact)
    throw std::logic_error("riemann_hypothesis_check: pole and eigenvalue criteria disagree");
  return rh;
}

}  // namespace hyperzeta
