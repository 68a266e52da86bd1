#include "hyperzeta/poly.hpp"

#include <sstream>

namespace hyperzeta {

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(Int coeff, std::size_t deg) {
  std::vector<Int> c(deg + 1);
  c[deg] = std::move(coeff);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned long e) const {
  IntPoly result = IntPoly::one();
  IntPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(static_cast<long>(i));
  return IntPoly(std::move(out));
}

IntPoly IntPoly::compose_shift(const Int& shift) const {
  // Horner: p(x + s) built from the leading coefficient down.
  IntPoly result;
  IntPoly x_plus_s(std::vector<Int>{shift, 1});
  for (std::size_t i = c_.size(); i-- > 0;) {
    result = result * x_plus_s + IntPoly::constant(c_[i]);
  }
  return result;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Rat(c_[i]);
  return acc;
}

unsigned IntPoly::root_multiplicity(const Rat& x0) const {
  unsigned mult = 0;
  IntPoly p = *this;
  while (!p.is_zero() && p.eval(x0) == 0) {
    p = p.deflate(x0);
    ++mult;
  }
  return mult;
}

IntPoly IntPoly::deflate(const Rat& x0) const {
  if (eval(x0) != 0) throw std::invalid_argument("deflate: not a root");
  // divide by (den*x - num); quotient coefficients stay integral because the
  // content of (den*x - num) is 1.
  Int num = x0.get_num(), den = x0.get_den();
  std::vector<Rat> q(c_.size() - 1);
  Rat carry = 0;  // synthetic division at x0, then scale
  for (std::size_t i = c_.size(); i-- > 1;) {
    carry = carry * x0 + Rat(c_[i]);
    q[i - 1] = carry / Rat(den);
  }
  std::vector<Int> out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rat canon = q[i];
    canon.canonicalize();
    if (canon.get_den() != 1)
      throw std::logic_error("deflate: non-integer quotient coefficient");
    out[i] = canon.get_num();
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  // long division over the rationals, checked back to integers
  std::vector<Rat> rem(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) rem[i] = Rat(c_[i]);
  long dd = divisor.degree();
  long rd = degree();
  if (rd < dd) {
    if (is_zero()) return IntPoly();
    throw std::invalid_argument("divide_exact: inexact division");
  }
  std::vector<Rat> quot(static_cast<std::size_t>(rd - dd) + 1);
  Rat lead(divisor.coeff(static_cast<std::size_t>(dd)));
  for (long k = rd - dd; k >= 0; --k) {
    Rat q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q != 0)
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(k + j)] -= q * Rat(divisor.coeff(static_cast<std::size_t>(j)));
  }
  for (const Rat& r : rem)
    if (r != 0) throw std::invalid_argument("divide_exact: nonzero remainder");
  std::vector<Int> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    Rat canon = quot[i];
    canon.canonicalize();
    if (canon.get_den() != 1)
      throw std::invalid_argument("divide_exact: non-integer quotient");
    out[i] = canon.get_num();
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ' ';
    os << c_[i].get_str();
  }
  return os.str();
}

IntPoly IntPoly::from_string(const std::string& line) {
  std::istringstream is(line);
  std::vector<Int> c;
  std::string tok;
  while (is >> tok) c.emplace_back(tok);
  return IntPoly(std::move(c));
}

RatSeries RatSeries::one(std::size_t order) {
  RatSeries s;
  s.order = order;
  s.coefficients.assign(order + 1, Rat(0));
  s.coefficients[0] = 1;
  return s;
}

RatSeries RatSeries::mul(const RatSeries& o) const {
  RatSeries out;
  out.order = std::min(order, o.order);
  out.coefficients.assign(out.order + 1, Rat(0));
  for (std::size_t i = 0; i <= out.order; ++i)
    for (std::size_t j = 0; i + j <= out.order; ++j)
      out.coefficients[i + j] += coefficients[i] * o.coefficients[j];
  return out;
}

RatSeries series_of_poly(const IntPoly& p, std::size_t order) {
  RatSeries s;
  s.order = order;
  s.coefficients.assign(order + 1, Rat(0));
  for (std::size_t i = 0; i <= order; ++i) s.coefficients[i] = Rat(p.coeff(i));
  return s;
}

RatSeries series_reciprocal(const IntPoly& p, std::size_t order) {
  if (p.coeff(0) != 1)
    throw std::invalid_argument("series_reciprocal: constant term must be 1");
  RatSeries s;
  s.order = order;
  s.coefficients.assign(order + 1, Rat(0));
  s.coefficients[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += Rat(p.coeff(k)) * s.coefficients[n - k];
    s.coefficients[n] = -acc;
    if (s.coefficients[n].get_den() != 1)
      throw std::logic_error("series_reciprocal: non-integer coefficient");
  }
  return s;
}

RatSeries exp_weighted_counts(const std::vector<Int>& counts) {
  const std::size_t order = counts.size();
  // exponential of S = sum N_k u^k / k via E' = S' E
  RatSeries e;
  e.order = order;
  e.coefficients.assign(order + 1, Rat(0));
  e.coefficients[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rat acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += Rat(counts[k - 1]) * e.coefficients[n - k];
    e.coefficients[n] = acc / Rat(static_cast<long>(n));
  }
  return e;
}

RatSeries euler_product_truncation(const std::map<int, long>& prime_counts,
                                   std::size_t order) {
  RatSeries s = RatSeries::one(order);
  for (const auto& [len, count] : prime_counts) {
    if (len <= 0 || count <= 0) continue;
    // (1 - u^len)^(-count): coefficient of u^(len*j) is C(count+j-1, j)
    RatSeries factor;
    factor.order = order;
    factor.coefficients.assign(order + 1, Rat(0));
    Int binom = 1;
    for (std::size_t j = 0; static_cast<std::size_t>(len) * j <= order; ++j) {
      if (j > 0) {
        binom *= Int(count + static_cast<long>(j) - 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(j));
      }
      factor.coefficients[static_cast<std::size_t>(len) * j] = Rat(binom);
    }
    s = s.mul(factor);
  }
  return s;
}

IntPoly substitute_even(const IntPoly& p) {
  if (!is_even_poly(p))
    throw std::invalid_argument("substitute_even: polynomial has odd-degree terms");
  std::vector<Int> out((p.coeffs().size() + 1) / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(2 * i);
  return IntPoly(std::move(out));
}

bool is_even_poly(const IntPoly& p) {
  for (std::size_t i = 1; i < p.coeffs().size(); i += 2)
    if (p.coeff(i) != 0) return false;
  return true;
}

}  // namespace hyperzeta
