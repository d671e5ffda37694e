"""Ollivier-type curvature for vertex pairs and hyperedges, and its Lin-Lu-Yau limit.

Pair curvature is ``1 - W(mu_u, mu_v) / d(u, v)`` with the walk measures of
the flavor at hand. Hyperedge curvature aggregates all pairwise transports
inside the edge (undirected) or couples the tail and head set measures
(directed/oriented).

The Lin-Lu-Yau value is the limit of ``g(alpha) = kappa_alpha / (1-alpha)``
as alpha approaches 1. Because the transport optimum is piecewise linear
in alpha and kappa vanishes at alpha=1, g is constant near 1; sampling at
``alpha_k = 1 - 2**-k`` and stopping at the first two equal consecutive
values certifies the limit exactly in rational mode. A directed hyperedge
whose curvature at alpha=1 is strictly negative has no finite limit, and
the limit search reports that instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .hypergraph import ORIENTED, UNDIRECTED, Hypergraph
from .metric import DistanceOracle, edge_length
from .rational import as_alpha
from .transport import wasserstein
from .walk import (
    _pair_measure,
    measure_set,
    measure_undirected,
)

DEFAULT_ALPHA_GRID = tuple(Fraction(k, 10) for k in range(10)) + (Fraction(99, 100),)
DEFAULT_K_MAX = 24
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class AlphaCurve:
    """Sampled (alpha, kappa_alpha) values plus the normalized curve."""

    samples: tuple
    normalized: tuple


@dataclass(frozen=True)
class CurvatureReport:
    """LLY limit of one target together with its sampled alpha curve."""

    target: tuple
    variant: str | None
    curve: AlphaCurve
    lly: Fraction
    stabilization_alpha: Fraction


def _pair_transport(hg, oracle, u, v, alpha, exact):
    if hg.flavor == UNDIRECTED:
        mu = measure_undirected(hg, u, alpha)
        nu = measure_undirected(hg, v, alpha)
    else:
        mu = _pair_measure(hg, u, "in", alpha)
        nu = _pair_measure(hg, v, "out", alpha)
    return wasserstein(mu, nu, oracle, exact=exact).value


def _require_pair_flavor(hg: Hypergraph, oracle: DistanceOracle) -> None:
    if hg.flavor == UNDIRECTED or hg.flavor == ORIENTED:
        return
    # Plain directed hypergraphs support pair curvature only when their
    # quasi-distance happens to be symmetric; that symmetry is all the
    # oriented constructions actually use.
    if not oracle.symmetric:
        raise errors.UnsupportedFlavor(
            "pair curvature needs the undirected or oriented flavor, "
            "or a directed instance with symmetric quasi-distance"
        )


def kappa_alpha_pair(
    hg: Hypergraph, oracle: DistanceOracle, u: int, v: int, alpha, exact: bool = True
):
    """Curvature ``1 - W(mu_u, mu_v)/d(u, v)`` of an ordered vertex pair."""
    if u == v:
        raise errors.SamePair(f"pair curvature needs two distinct vertices, got ({u}, {v})")
    _require_pair_flavor(hg, oracle)
    a = as_alpha(alpha)
    w = _pair_transport(hg, oracle, u, v, a, exact)
    d = oracle.d(u, v)
    return 1 - w / d if exact else 1.0 - w / float(d)


def kappa_alpha_edge_undirected(
    hg: Hypergraph,
    oracle: DistanceOracle,
    edge_index: int,
    alpha,
    variant: str = "sum",
    exact: bool = True,
):
    """Curvature of an undirected hyperedge under a length normalizer.

    The numerator is the transport defect summed over all member pairs,
    ``sum_{i<j} (d(x_i, x_j) - W(mu_i, mu_j))``; the denominator is the
    selected length variant. With ``variant="sum"`` this is exactly
    ``1 - (sum of pairwise W) / L_sum``, the form whose normalized value
    stays bounded; min and max rescale the same defect, keeping the value
    zero at alpha=1 so the normalized curve still converges.
    """
    if hg.flavor != UNDIRECTED:
        raise errors.UnsupportedFlavor("use kappa_alpha_edge_directed for directed flavors")
    a = as_alpha(alpha)
    vs = hg.edges[edge_index].sorted_vertices()
    defect = Fraction(0) if exact else 0.0
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            w = _pair_transport(hg, oracle, vs[i], vs[j], a, exact)
            d = oracle.d(vs[i], vs[j])
            defect += (d - w) if exact else (float(d) - w)
    length = edge_length(hg, oracle, edge_index, variant).value
    return defect / length if exact else defect / float(length)


def kappa_alpha_edge_directed(
    hg: Hypergraph, oracle: DistanceOracle, edge_index: int, alpha, exact: bool = True
):
    """Curvature ``1 - W(mu_tail, mu_head)/L(h)`` of a directed hyperedge."""
    if hg.flavor == UNDIRECTED:
        raise errors.UnsupportedFlavor("use kappa_alpha_edge_undirected for the undirected flavor")
    a = as_alpha(alpha)
    mu = measure_set(hg, edge_index, "tail", a)
    nu = measure_set(hg, edge_index, "head", a)
    w = wasserstein(mu, nu, oracle, exact=exact).value
    length = edge_length(hg, oracle, edge_index, "min").value
    return 1 - w / length if exact else 1.0 - w / float(length)


def _kappa_at(hg, oracle, target, alpha, variant, exact):
    kind = target[0]
    if kind == "pair":
        return kappa_alpha_pair(hg, oracle, target[1], target[2], alpha, exact=exact)
    if kind == "edge":
        if hg.flavor == UNDIRECTED:
            return kappa_alpha_edge_undirected(
                hg, oracle, target[1], alpha, variant=variant, exact=exact
            )
        return kappa_alpha_edge_directed(hg, oracle, target[1], alpha, exact=exact)
    raise ValueError(f"unknown target kind {target[0]!r}")


def lly_limit(
    hg: Hypergraph,
    oracle: DistanceOracle,
    target: tuple,
    variant: str = "sum",
    alpha_grid=None,
    k_max: int = DEFAULT_K_MAX,
    exact: bool = True,
    tol: float = FLOAT_TOL,
) -> CurvatureReport:
    """Normalized-curvature limit of a ``("pair", u, v)`` or ``("edge", h)`` target.

    Samples ``g(alpha_k)`` at ``alpha_k = 1 - 2**-k`` for k = 2, 3, ... and
    declares the limit at the first two equal consecutive values (equal
    within ``tol`` in float mode). Raises NoStabilization when k_max is
    exhausted, or immediately when the target provably diverges.
    """
    grid = DEFAULT_ALPHA_GRID if alpha_grid is None else tuple(as_alpha(a) for a in alpha_grid)
    report_variant = variant if target[0] == "edge" and hg.flavor == UNDIRECTED else None

    if target[0] == "edge" and hg.flavor != UNDIRECTED:
        kappa_one = _kappa_at(hg, oracle, target, Fraction(1), variant, exact)
        diverges = kappa_one < 0 if exact else kappa_one < -tol
        if diverges:
            raise errors.NoStabilization(
                f"target {target} has curvature {kappa_one} at alpha=1; "
                "the normalized curve decreases without bound"
            )

    samples = []
    normalized = []
    for a in grid:
        k = _kappa_at(hg, oracle, target, a, variant, exact)
        samples.append((a, k))
        if a != 1:
            normalized.append((a, k / (1 - a) if exact else k / (1.0 - float(a))))

    prev = None
    prev_alpha = None
    for kk in range(2, k_max + 1):
        a = Fraction(2**kk - 1, 2**kk)
        kappa = _kappa_at(hg, oracle, target, a, variant, exact)
        g = kappa / (1 - a) if exact else kappa / (1.0 - float(a))
        settled = (g == prev) if exact else (prev is not None and abs(g - prev) <= tol)
        if settled:
            return CurvatureReport(
                target=target,
                variant=report_variant,
                curve=AlphaCurve(samples=tuple(samples), normalized=tuple(normalized)),
                lly=g,
                stabilization_alpha=prev_alpha,
            )
        prev, prev_alpha = g, a
    raise errors.NoStabilization(
        f"normalized curvature of {target} did not settle within k <= {k_max}"
    )


def well_transported_pairs(hg: Hypergraph, oracle: DistanceOracle) -> list[tuple[int, int, int]]:
    """All (u, v, edge) triples with u, v in the edge and d(u, v) equal to its weight."""
    if hg.flavor != UNDIRECTED:
        raise errors.UnsupportedFlavor("well-transported pairs are an undirected notion")
    found = []
    for k, edge in enumerate(hg.edges):
        vs = edge.sorted_vertices()
        for i in range(len(vs)):
            for j in range(i + 1, len(vs)):
                if oracle.d(vs[i], vs[j]) == edge.weight:
                    found.append((vs[i], vs[j], k))
    found.sort()
    return found
