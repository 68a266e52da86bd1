#include <atomic>
#include <cstdlib>
#include <thread>

#include "hyperzeta/poly.hpp"

namespace hyperzeta {

namespace {

unsigned worker_count(std::size_t jobs) {
  unsigned n = 1;
  if (const char* env = std::getenv("HYPERZETA_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) n = static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (n > hw && hw > 0) n = hw;
  if (n > jobs) n = static_cast<unsigned>(jobs);
  return n == 0 ? 1 : n;
}

// Newton divided differences, converted to monomial coefficients.
IntPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);
  // Horner over the Newton basis
  std::vector<Rat> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    coeffs.insert(coeffs.begin(), Rat(0));
    for (std::size_t j = 0; j + 1 < coeffs.size(); ++j)
      coeffs[j] -= Rat(xs[i]) * coeffs[j + 1];
    coeffs[0] += dd[i];
  }
  std::vector<Int> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i].get_den() != 1)
      throw std::logic_error("det_pencil: interpolation produced a non-integer coefficient");
    out[i] = coeffs[i].get_num();
  }
  return IntPoly(std::move(out));
}

}  // namespace

IntPoly det_pencil(const IntMatrix& c0, const IntMatrix& c1, const IntMatrix& c2) {
  const std::size_t n = c0.rows();
  if (c0.cols() != n || c1.rows() != n || c1.cols() != n || c2.rows() != n ||
      c2.cols() != n)
    throw std::invalid_argument("det_pencil: matrices must be square and equal-sized");

  const std::size_t npoints = 2 * n + 1;
  std::vector<Int> xs(npoints), ys(npoints);
  xs[0] = 0;
  for (std::size_t i = 1; i < npoints; ++i) {
    long k = static_cast<long>((i + 1) / 2);
    xs[i] = (i % 2 == 1) ? Int(k) : Int(-k);
  }

  auto eval_point = [&](std::size_t idx) {
    const Int& u = xs[idx];
    Int u2 = u * u;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = c0.at(i, j) + u * c1.at(i, j) + u2 * c2.at(i, j);
    ys[idx] = det_bareiss(std::move(m));
  };

  unsigned workers = worker_count(npoints);
  if (workers <= 1) {
    for (std::size_t i = 0; i < npoints; ++i) eval_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= npoints) return;
          eval_point(i);
        }
      });
    for (auto& t : pool) t.join();
  }

  return interpolate(xs, ys);
}

}  // namespace hyperzeta
