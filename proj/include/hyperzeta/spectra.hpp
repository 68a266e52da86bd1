#ifndef HYPERZETA_SPECTRA_HPP
#define HYPERZETA_SPECTRA_HPP

#include "hyperzeta/sturm.hpp"
#include "hyperzeta/zeta.hpp"

namespace hyperzeta {

/// r - 2 + 2*sqrt(q) carried exactly as (integer part, radicand 4q).
struct AlonBoppanaBound {
  long integer_part;  // r - 2
  long radicand;      // 4q, so the bound is integer_part + sqrt(radicand)

  /// Exact comparison of the bound against a rational value.
  /// Returns -1, 0, +1 for bound < v, == v, > v.
  int compare(const Rat& v) const;
};

AlonBoppanaBound alon_boppana_bound(long d, long r);

enum class RamanujanVerdict { Yes, No, BoundaryWithinTolerance };

struct ObviousEigenvalue {
  long value;         // -d (or -r when reported for the dual)
  long multiplicity;  // |V| - |E| (or |E| - |V|)
  bool of_dual;       // true when d > r and the value belongs to H*
};

struct SpectralReport {
  IntPoly char_poly;                       // of A(H)
  std::optional<ObviousEigenvalue> obvious;
  std::pair<Rat, Rat> lambda1;             // isolating interval (lo, hi]
  RamanujanVerdict ramanujan = RamanujanVerdict::No;
  long violations = 0;        // distinct non-obvious eigenvalues outside the bound
  long boundary_roots = 0;    // violations within the tolerance band
  long d = 0, r = 0, q = 0;
  AlonBoppanaBound alon_boppana{0, 0};
};

enum class ModulusClass { OnCriticalCircle, OffCriticalCircle };

struct PoleRootEntry {
  std::string description;
  ModulusClass modulus;
};

struct PoleReport {
  long mult_at_1 = 0;                  // multiplicity of (1-u) in zeta^{-1}
  long mult_at_neg_inv_r_minus_1 = 0;  // multiplicity of u = -1/(r-1)
  long expected_mult_at_1 = 0;         // -chi + 1 (prefactor plus Perron factor)
  long expected_mult_neg = 0;          // n2 - n1
  std::vector<PoleRootEntry> det_part_roots;
  bool all_nontrivial_on_circle = false;
  bool simple_pole_at_1 = false;
  bool simple_pole_at_inv_q = false;
};

/// Exact characteristic polynomial det(xI - M).
IntPoly char_poly(const IntMatrix& m);

struct CharRelationReport {
  bool eq_product = true;   // Q(x) = P(x-d) P*(x-r)
  bool eq_transfer = true;  // x^{|V|} P*(x-r) = x^{|E|} P(x-d)
};

CharRelationReport verify_char_relations(const Hypergraph& h);

std::optional<ObviousEigenvalue> obvious_eigenvalues(const Hypergraph& h);

SpectralReport ramanujan_check(const Hypergraph& h, const Rat& tolerance = Rat(1, 1000000000));

PoleReport pole_audit(const Hypergraph& h);

/// Pole-location criterion in the u-plane; asserts agreement with the
/// eigenvalue criterion and throws on any internal inconsistency.
bool riemann_hypothesis_check(const Hypergraph& h);

}  // namespace hyperzeta

#endif
