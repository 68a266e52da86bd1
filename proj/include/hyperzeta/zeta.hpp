#ifndef HYPERZETA_ZETA_HPP
#define HYPERZETA_ZETA_HPP

#include "hyperzeta/linegraph.hpp"

namespace hyperzeta {

enum class ZetaRoute { LineGraph, Bass, Hashimoto1, Hashimoto2 };

struct ZetaResult {
  IntPoly reciprocal;  // zeta_H(u)^{-1}, constant term 1
  ZetaRoute route;
  std::vector<std::string> warnings;
};

/// zeta^{-1} = det(I - uT) over the canonical orientation.
ZetaResult zeta_via_linegraph(const Hypergraph& h,
                              std::optional<unsigned> seed = std::nullopt);

/// Bass on the associated bipartite graph, then t^2 -> u.
ZetaResult zeta_via_bass(const Hypergraph& h);
/// The pre-substitution Z_B(t)^{-1}; exposed for auditing the even form.
IntPoly bass_bipartite_reciprocal(const Hypergraph& h);

/// Both factorized forms for a regular hypergraph; dualizes first when d < r.
std::pair<ZetaResult, ZetaResult> zeta_via_hashimoto(const Hypergraph& h);

struct CrossValidation {
  IntPoly reciprocal;
  bool routes_agree = false;
  bool degree_ok = false;       // deg == sum of hyperedge orders (after pruning)
  bool dual_ok = false;         // zeta_H == zeta_{H*}
  bool orientation_ok = false;  // identical over all seeds
  bool regular = false;
  long degree = 0;
  long degree_expected = 0;
  std::vector<std::string> warnings;
  std::string mismatch;  // coefficient diff when a route disagrees

  bool all_ok() const {
    return routes_agree && degree_ok && dual_ok && orientation_ok;
  }
};

CrossValidation cross_validate(const Hypergraph& h, unsigned orientation_seeds = 10);

enum class FeForm { Lambda1, Lambda2, Xi1, Xi2 };

/// Exact rational check of the chosen explicit functional equation at u.
/// Throws when u sits on a zero or pole of either side.
bool functional_equation_check(const Hypergraph& h, FeForm form, const Rat& u);

/// Generic form of the functional equation: caller supplies p(u) with the
/// p(u)^eta = sign (qu^2)^eta p(1/(qu))^eta symmetry and the expected sign.
/// use_dual_form selects the n2-powered variant.
bool functional_equation_generic(const Hypergraph& h, const IntPoly& p, int sign,
                                 bool use_dual_form, const Rat& u);

struct EvennessReport {
  bool even = false;
  bool unimodular_implied = false;  // one-way: false means "no conclusion"
  bool odd_total_degree = false;    // odd degree certifies "not a graph zeta"
};

EvennessReport evenness_report(const Hypergraph& h);

}  // namespace hyperzeta

#endif
