"""Exact generalized Ihara-Selberg zeta functions of finite hypergraphs."""

try:
    from ._hyperzeta import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - build-tree layout used by ctest
    from _hyperzeta import *  # noqa: F401,F403

__all__ = [
    "Hypergraph",
    "parse",
    "load",
    "to_hg",
    "dual",
    "prune",
    "regularity",
    "validate",
    "zeta_linegraph",
    "zeta_bass",
    "zeta_hashimoto",
    "cross_validate",
    "ramanujan",
    "riemann_hypothesis",
    "ihara_zeta",
    "enumerate_cliques",
    "collapse",
    "invariant_multiset",
    "distinguish",
]
