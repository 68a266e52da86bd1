#include "doctest.h"
#include "test_util.hpp"

using namespace hyperzeta;
using hztest::load_fixture;

namespace {
IntPoly P(std::vector<Int> c) { return IntPoly(std::move(c)); }
}

TEST_CASE("exact root counting with quadratic-irrational endpoints") {
  // (x^2 - 2)(x - 3): roots -sqrt2, sqrt2, 3
  IntPoly p = P({-2, 0, 1}) * P({-3, 1});
  CHECK(count_distinct_real_roots(p) == 3);
  CHECK(count_roots_halfopen(p, AlgPoint::neg_inf(), AlgPoint::rational(Rat(0))) == 1);
  // (sqrt2, +inf) contains 3 but not sqrt2 itself
  AlgPoint s2 = AlgPoint::quadratic(Rat(0), Rat(1), Rat(2));
  CHECK(count_roots_halfopen(p, s2, AlgPoint::pos_inf()) == 1);
  // (-sqrt2-epsilon ... ] via open interval over the whole line
  AlgPoint ms2 = AlgPoint::quadratic(Rat(0), Rat(-1), Rat(2));
  CHECK(count_roots_open(p, AlgPoint::neg_inf(), ms2) == 0);
  CHECK(count_roots_halfopen(p, AlgPoint::neg_inf(), ms2) == 1);
  CHECK(sign_at(to_rat_poly(p), s2) == 0);
  CHECK(sign_at(to_rat_poly(p), AlgPoint::rational(Rat(4))) > 0);

  // repeated roots count once
  CHECK(count_distinct_real_roots(P({1, -1}).pow(4)) == 1);
  // no real roots
  CHECK(count_distinct_real_roots(P({1, 0, 1})) == 0);

  auto [lo, hi] = isolate_largest_root(p);
  CHECK(lo < 3);
  CHECK(hi >= 3);
  CHECK(hi - lo <= Rat(1, 1000000));

  CHECK(squarefree_part(P({1, -1}).pow(3) * P({0, 1})).degree() == 2);
}

TEST_CASE("characteristic polynomials") {
  IntMatrix ak3 = adjacency_of_hypergraph(load_fixture("k3"));
  CHECK(char_poly(ak3) == P({-2, -3, 0, 1}));  // (x-2)(x+1)^2
  IntMatrix z(2, 2);
  CHECK(char_poly(z) == P({0, 0, 1}));
  IntPoly pf = char_poly(adjacency_of_hypergraph(load_fixture("golden4")));
  CHECK(pf.degree() == 4);
  // Perron root below the max-degree bound, at least the min row sum
  auto [lo, hi] = isolate_largest_root(pf);
  CHECK(hi <= Rat(4));
  CHECK(lo >= Rat(2));
}

TEST_CASE("characteristic-polynomial relations for regular hypergraphs") {
  for (const char* name : {"k4", "fano", "c6", "nonramanujan14"}) {
    CAPTURE(name);
    CharRelationReport rep = verify_char_relations(load_fixture(name));
    CHECK(rep.eq_product);
    CHECK(rep.eq_transfer);
    // A(B_H)^2 has no negative eigenvalues
    IntMatrix ab = bipartite_of(load_fixture(name)).adjacency();
    IntPoly q = char_poly(ab * ab);
    CHECK(count_roots_open(q, AlgPoint::neg_inf(), AlgPoint::rational(Rat(0))) == 0);
  }
  CHECK_THROWS(verify_char_relations(load_fixture("golden4")));
}

TEST_CASE("obvious eigenvalues") {
  // K4: d=3 > r=2, so the -r eigenvalue belongs to the dual with mult n2-n1
  auto k4 = obvious_eigenvalues(load_fixture("k4"));
  REQUIRE(k4.has_value());
  CHECK(k4->value == -2);
  CHECK(k4->multiplicity == 2);
  CHECK(k4->of_dual);

  // the dual itself is (2,3)-regular with |V| > |E|
  auto k4d = obvious_eigenvalues(dual_of(load_fixture("k4")));
  REQUIRE(k4d.has_value());
  CHECK(k4d->value == -2);
  CHECK(k4d->multiplicity == 2);
  CHECK_FALSE(k4d->of_dual);
  // and -2 really is a root of multiplicity 2 of the dual's char poly
  IntPoly pd = char_poly(adjacency_of_hypergraph(dual_of(load_fixture("k4"))));
  CHECK(pd.root_multiplicity(Rat(-2)) == 2);

  CHECK_FALSE(obvious_eigenvalues(load_fixture("fano")).has_value());
  CHECK_THROWS(obvious_eigenvalues(load_fixture("golden4")));
}

TEST_CASE("exact bound expression") {
  AlonBoppanaBound b32 = alon_boppana_bound(3, 2);  // 0 + 2*sqrt(2)
  CHECK(b32.integer_part == 0);
  CHECK(b32.radicand == 8);
  CHECK(b32.compare(Rat(2)) > 0);
  CHECK(b32.compare(Rat(3)) < 0);
  AlonBoppanaBound b33 = alon_boppana_bound(3, 3);  // 1 + 4 = 5 exactly
  CHECK(b33.compare(Rat(5)) == 0);
  AlonBoppanaBound b22 = alon_boppana_bound(2, 2);
  CHECK(b22.compare(Rat(2)) == 0);
}

TEST_CASE("Ramanujan verdicts") {
  SpectralReport k4 = ramanujan_check(load_fixture("k4"));
  CHECK(k4.ramanujan == RamanujanVerdict::Yes);
  CHECK(k4.violations == 0);
  CHECK(k4.q == 2);

  // C6: eigenvalues 2cos(k pi/3); the boundary roots satisfy g = 0 exactly
  SpectralReport c6 = ramanujan_check(load_fixture("c6"));
  CHECK(c6.ramanujan == RamanujanVerdict::Yes);
  CHECK(c6.violations == 0);

  SpectralReport fano = ramanujan_check(load_fixture("fano"));
  CHECK(fano.ramanujan == RamanujanVerdict::Yes);

  SpectralReport bad = ramanujan_check(load_fixture("nonramanujan14"));
  CHECK(bad.ramanujan == RamanujanVerdict::No);
  CHECK(bad.violations > 0);
  CHECK(bad.boundary_roots == 0);

  // with a huge tolerance band the same violations become boundary cases
  SpectralReport band = ramanujan_check(load_fixture("nonramanujan14"), Rat(2));
  CHECK(band.ramanujan == RamanujanVerdict::BoundaryWithinTolerance);
  CHECK(band.boundary_roots == band.violations);

  // the dual sees the same verdict (the defining inequality is self-dual)
  SpectralReport k4d = ramanujan_check(dual_of(load_fixture("k4")));
  CHECK(k4d.ramanujan == RamanujanVerdict::Yes);

  CHECK_THROWS(ramanujan_check(load_fixture("golden4")));
  CHECK_THROWS(ramanujan_check(parse_hypergraph("vertices 4\nedge 0 1\nedge 0 1\nedge 2 3\nedge 2 3\n")));
}

TEST_CASE("pole audit") {
  PoleReport k4 = pole_audit(load_fixture("k4"));
  CHECK(k4.mult_at_1 == 3);  // prefactor 2 plus the Perron factor
  CHECK(k4.expected_mult_at_1 == 3);
  CHECK(k4.mult_at_neg_inv_r_minus_1 == 2);
  CHECK(k4.expected_mult_neg == 2);
  CHECK(k4.all_nontrivial_on_circle);
  CHECK(k4.simple_pole_at_1);
  CHECK(k4.simple_pole_at_inv_q);

  PoleReport fano = pole_audit(load_fixture("fano"));
  CHECK(fano.mult_at_1 == fano.expected_mult_at_1);
  CHECK(fano.mult_at_neg_inv_r_minus_1 == fano.expected_mult_neg);
  CHECK(fano.all_nontrivial_on_circle);

  PoleReport bad = pole_audit(load_fixture("nonramanujan14"));
  CHECK_FALSE(bad.all_nontrivial_on_circle);
  bool off = false;
  for (const auto& e : bad.det_part_roots)
    off = off || e.modulus == ModulusClass::OffCriticalCircle;
  CHECK(off);
}

TEST_CASE("Riemann hypothesis criterion agrees with the eigenvalue criterion") {
  CHECK(riemann_hypothesis_check(load_fixture("k4")));
  CHECK(riemann_hypothesis_check(load_fixture("c6")));
  CHECK(riemann_hypothesis_check(load_fixture("fano")));
  CHECK_FALSE(riemann_hypothesis_check(load_fixture("nonramanujan14")));
  CHECK(riemann_hypothesis_check(dual_of(load_fixture("k4"))));
}
