#ifndef HYPERZETA_STURM_HPP
#define HYPERZETA_STURM_HPP

#include "hyperzeta/poly.hpp"

namespace hyperzeta {

/// Point of the real line extended by quadratic irrationals: a + b*sqrt(rho)
/// with rational a, b and rational rho >= 0, plus the two infinities.
struct AlgPoint {
  enum Kind { NegInf, Finite, PosInf } kind = Finite;
  Rat a, b, rho;

  static AlgPoint neg_inf() { return {NegInf, 0, 0, 0}; }
  static AlgPoint pos_inf() { return {PosInf, 0, 0, 0}; }
  static AlgPoint rational(const Rat& v) { return {Finite, v, 0, 0}; }
  static AlgPoint quadratic(const Rat& a, const Rat& b, const Rat& rho) {
    if (rho < 0) throw std::invalid_argument("AlgPoint: negative radicand");
    return {Finite, a, b, rho};
  }
};

using RatPoly = std::vector<Rat>;  // ascending, trailing zeros stripped

RatPoly to_rat_poly(const IntPoly& p);
void rat_normalize(RatPoly& p);
RatPoly rat_derivative(const RatPoly& p);
RatPoly rat_rem(const RatPoly& a, const RatPoly& b);
RatPoly rat_gcd(RatPoly a, RatPoly b);  // monic gcd
RatPoly rat_divide_exact(const RatPoly& a, const RatPoly& b);

/// Sign (-1, 0, +1) of p evaluated at an algebraic point.
int sign_at(const RatPoly& p, const AlgPoint& x);

/// Number of DISTINCT real roots of p in the half-open interval (lo, hi].
/// Multiple roots are counted once; infinite endpoints allowed.
long count_roots_halfopen(const IntPoly& p, const AlgPoint& lo, const AlgPoint& hi);

/// Distinct real roots strictly between lo and hi (open interval).
long count_roots_open(const IntPoly& p, const AlgPoint& lo, const AlgPoint& hi);

long count_distinct_real_roots(const IntPoly& p);

/// Isolating rational interval (lo, hi] for the largest real root.
/// Requires at least one real root.
std::pair<Rat, Rat> isolate_largest_root(const IntPoly& p);

/// Squarefree part p / gcd(p, p'), integer coefficients (primitive).
IntPoly squarefree_part(const IntPoly& p);

}  // namespace hyperzeta

#endif
