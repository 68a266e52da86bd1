#ifndef HYPERZETA_POLY_HPP
#define HYPERZETA_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperzeta/matrix.hpp"

namespace hyperzeta {

/// Univariate polynomial over arbitrary-precision integers.
/// Coefficients ascending by degree; trailing zeros are always stripped,
/// so the zero polynomial has an empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
  static IntPoly one() { return constant(1); }
  /// The monomial coeff * u^deg.
  static IntPoly monomial(Int coeff, std::size_t deg);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator-() const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }
  bool operator<(const IntPoly& o) const { return c_ < o.c_; }

  IntPoly pow(unsigned long e) const;
  IntPoly derivative() const;
  /// p(x + shift), exact integer composition.
  IntPoly compose_shift(const Int& shift) const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  /// Multiplicity of the rational root x0 (0 if not a root).
  unsigned root_multiplicity(const Rat& x0) const;
  /// Quotient after dividing out (x - x0)^k once; x0 must be a root.
  /// For rational x0 = a/b the factor used is (b*x - a).
  IntPoly deflate(const Rat& x0) const;

  /// Exact division; throws if the remainder is nonzero or quotient
  /// coefficients are not integers.
  IntPoly divide_exact(const IntPoly& divisor) const;

  std::string to_string() const;  // ascending coefficients, space-separated
  static IntPoly from_string(const std::string& line);

 private:
  void normalize();
  std::vector<Int> c_;
};

/// Truncated power series with exact rational coefficients c0..c_order.
struct RatSeries {
  std::size_t order = 0;
  std::vector<Rat> coefficients;  // size order+1

  static RatSeries one(std::size_t order);
  RatSeries mul(const RatSeries& o) const;
  bool operator==(const RatSeries& o) const {
    return order == o.order && coefficients == o.coefficients;
  }
};

RatSeries series_of_poly(const IntPoly& p, std::size_t order);
/// First order+1 coefficients of 1/p; requires p(0) = 1.
RatSeries series_reciprocal(const IntPoly& p, std::size_t order);
/// exp(sum_k N_k u^k / k) truncated to order N.size().
RatSeries exp_weighted_counts(const std::vector<Int>& counts);
/// Truncation of prod_l (1 - u^l)^(-count(l)).
RatSeries euler_product_truncation(const std::map<int, long>& prime_counts,
                                   std::size_t order);

/// Replace t^2 -> u in an even polynomial; throws on odd-degree terms.
IntPoly substitute_even(const IntPoly& p);
bool is_even_poly(const IntPoly& p);

/// det(C0 + u*C1 + u^2*C2) by evaluation at 2n+1 integer points
/// (fraction-free elimination per point) and exact interpolation.
/// Evaluation points are processed in parallel when HYPERZETA_THREADS > 1.
IntPoly det_pencil(const IntMatrix& c0, const IntMatrix& c1, const IntMatrix& c2);

}  // namespace hyperzeta

#endif
