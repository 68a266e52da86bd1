#include "hyperzeta/sturm.hpp"

#include <algorithm>

namespace hyperzeta {

RatPoly to_rat_poly(const IntPoly& p) {
  RatPoly out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Rat(p.coeff(i));
  return out;
}

void rat_normalize(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rat(static_cast<long>(i));
  return out;
}

RatPoly rat_rem(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::invalid_argument("rat_rem: division by zero polynomial");
  RatPoly r = a;
  rat_normalize(r);
  while (r.size() >= b.size() && !r.empty()) {
    Rat factor = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    rat_normalize(r);
  }
  return r;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  rat_normalize(a);
  rat_normalize(b);
  while (!b.empty()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

RatPoly rat_divide_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly r = a, q;
  rat_normalize(r);
  if (b.empty()) throw std::invalid_argument("rat_divide_exact: zero divisor");
  if (r.size() < b.size()) {
    if (r.empty()) return {};
    throw std::invalid_argument("rat_divide_exact: inexact");
  }
  q.assign(r.size() - b.size() + 1, Rat(0));
  while (r.size() >= b.size() && !r.empty()) {
    Rat factor = r.back() / b.back();
    std::size_t shift = r.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= factor * b[i];
    rat_normalize(r);
  }
  if (!r.empty()) throw std::invalid_argument("rat_divide_exact: nonzero remainder");
  return q;
}

namespace {

int rat_sign(const Rat& v) { return sgn(v); }

// sign of a + b*sqrt(rho) with rho >= 0
int quad_sign(const Rat& a, const Rat& b, const Rat& rho) {
  if (b == 0 || rho == 0) return rat_sign(a);
  if (a == 0) return rat_sign(b);
  int sa = rat_sign(a), sb = rat_sign(b);
  if (sa == sb) return sa;
  int cmp = rat_sign(a * a - b * b * rho);  // compares |a| vs |b|sqrt(rho)
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
}

}  // namespace

int sign_at(const RatPoly& p, const AlgPoint& x) {
  if (p.empty()) return 0;
  if (x.kind == AlgPoint::PosInf) return rat_sign(p.back());
  if (x.kind == AlgPoint::NegInf) {
    int s = rat_sign(p.back());
    return (p.size() - 1) % 2 == 0 ? s : -s;
  }
  if (x.b == 0 || x.rho == 0) {
    // plain rational evaluation
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x.a + p[i];
    return rat_sign(acc);
  }
  // Horner in Q(sqrt(rho)): track (s, t) meaning s + t*sqrt(rho)
  Rat s(0), t(0);
  for (std::size_t i = p.size(); i-- > 0;) {
    Rat ns = s * x.a + t * x.b * x.rho + p[i];
    Rat nt = s * x.b + t * x.a;
    s = ns;
    t = nt;
  }
  return quad_sign(s, t, x.rho);
}

namespace {

// Rescale by a positive rational so coefficients are coprime integers.
// Sign variations are unaffected and the arithmetic stays small.
void make_primitive(RatPoly& p) {
  if (p.empty()) return;
  Int lcm_den(1);
  for (const Rat& c : p)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  Int content(0);
  std::vector<Int> ic(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat scaled = p[i] * Rat(lcm_den);
    scaled.canonicalize();
    ic[i] = scaled.get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
  }
  if (content > 1)
    for (Int& c : ic) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = Rat(ic[i]);
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
  std::vector<RatPoly> chain;
  RatPoly p0 = to_rat_poly(p);
  rat_normalize(p0);
  if (p0.empty()) return chain;
  make_primitive(p0);
  chain.push_back(p0);
  RatPoly p1 = rat_derivative(p0);
  rat_normalize(p1);
  if (p1.empty()) return chain;
  make_primitive(p1);
  chain.push_back(p1);
  for (;;) {
    RatPoly r = rat_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rat& c : r) c = -c;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  // If p has repeated roots the chain ends at a nonconstant gcd(p, p');
  // divide it out so the chain counts distinct roots correctly even when an
  // evaluation point coincides with a repeated root.
  if (chain.back().size() > 1) {
    RatPoly g = chain.back();
    for (RatPoly& q : chain) {
      q = rat_divide_exact(q, g);
      make_primitive(q);
    }
  }
  return chain;
}

long sign_variations(const std::vector<RatPoly>& chain, const AlgPoint& x) {
  long v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

long count_roots_halfopen(const IntPoly& p, const AlgPoint& lo, const AlgPoint& hi) {
  if (p.is_zero()) throw std::invalid_argument("root counting on the zero polynomial");
  auto chain = sturm_chain(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

long count_roots_open(const IntPoly& p, const AlgPoint& lo, const AlgPoint& hi) {
  long c = count_roots_halfopen(p, lo, hi);
  if (hi.kind == AlgPoint::Finite) {
    RatPoly rp = to_rat_poly(p);
    if (sign_at(rp, hi) == 0) --c;
  }
  return c;
}

long count_distinct_real_roots(const IntPoly& p) {
  return count_roots_halfopen(p, AlgPoint::neg_inf(), AlgPoint::pos_inf());
}

std::pair<Rat, Rat> isolate_largest_root(const IntPoly& p) {
  if (count_distinct_real_roots(p) == 0)
    throw std::invalid_argument("isolate_largest_root: no real roots");
  // Cauchy bound
  Rat bound(1);
  Rat lead(p.coeff(static_cast<std::size_t>(p.degree())));
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    Rat m = abs(Rat(p.coeff(i)) / lead);
    if (m > bound) bound = m;
  }
  bound += 1;
  Rat lo = -bound, hi = bound;
  auto chain = sturm_chain(p);
  auto above = [&](const Rat& x) {
    // distinct roots in (x, +inf)
    return sign_variations(chain, AlgPoint::rational(x)) -
           sign_variations(chain, AlgPoint::pos_inf());
  };
  // Invariant: the largest root lies in (lo, hi]. Bisect until the interval
  // is narrower than 1/10^6.
  const Rat width_target(1, 1000000);
  while (hi - lo > width_target) {
    Rat mid = (lo + hi) / 2;
    if (above(mid) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  RatPoly g = rat_gcd(to_rat_poly(p), to_rat_poly(p.derivative()));
  if (g.size() <= 1) return p;
  RatPoly q = rat_divide_exact(to_rat_poly(p), g);
  // clear denominators and content
  Int lcm_den(1);
  for (const Rat& c : q) {
    Rat canon = c;
    canon.canonicalize();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), canon.get_den().get_mpz_t());
  }
  std::vector<Int> ic(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    Rat scaled = q[i] * Rat(lcm_den);
    scaled.canonicalize();
    ic[i] = scaled.get_num();
  }
  Int content(0);
  for (const Int& c : ic) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1)
    for (Int& c : ic) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(ic));
}

}  // namespace hyperzeta
