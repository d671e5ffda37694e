"""Exact discrete 1-Wasserstein transport with primal coupling and dual witness.

The solver is a transportation simplex on the complete bipartite support
graph: northwest-corner start, Bland entering rule on lexicographic
(row, col) order, leaving arc chosen as the lexicographically smallest
minimizer. With Fraction arithmetic the optimum, the coupling, and the
dual potential are exact and reproducible; a float path with a pivot
tolerance serves large instances.

Ground costs come from a :class:`~hypercurv.metric.DistanceOracle` and may
be asymmetric; they are used as-is, no symmetrization ever happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import errors
from .metric import DistanceOracle

FLOAT_PIVOT_TOL = 1e-12


@dataclass
class Coupling:
    """Sparse joint mass assignment on vertex pairs."""

    entries: dict[tuple[int, int], Fraction]

    def left_marginal(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (u, _v), m in self.entries.items():
            out[u] = out.get(u, 0) + m
        return {u: m for u, m in out.items() if m != 0}

    def right_marginal(self) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for (_u, v), m in self.entries.items():
            out[v] = out.get(v, 0) + m
        return {v: m for v, m in out.items() if m != 0}

    def total(self):
        return sum(self.entries.values())

    def cost(self, oracle: DistanceOracle):
        return sum(m * oracle.d(u, v) for (u, v), m in self.entries.items())


@dataclass
class TransportResult:
    """Optimal value, an optimal coupling, and (optionally) a dual potential."""

    value: Fraction
    coupling: Coupling
    dual_potential: dict[int, Fraction] | None = None


def _measure_items(mu) -> list[tuple[int, Fraction]]:
    mass = mu.mass if hasattr(mu, "mass") else dict(mu)
    return sorted((v, m) for v, m in mass.items() if m != 0)


def wasserstein(
    mu,
    nu,
    oracle: DistanceOracle,
    with_potential: bool = False,
    exact: bool = True,
) -> TransportResult:
    """Minimum-cost coupling between two equal-mass sparse measures.

    ``mu`` and ``nu`` are ProbabilityMeasures or plain ``{vertex: mass}``
    maps. The optimum is taken over couplings supported on
    support(mu) x support(nu), which is the whole transportation polytope.
    ``with_potential`` additionally returns a function f on all oracle
    vertices satisfying f(u) - f(v) <= d(u, v) for every ordered pair.
    """
    rows = _measure_items(mu)
    cols = _measure_items(nu)
    if not rows or not cols:
        raise errors.MassMismatch("transport endpoints must carry positive mass")
    supply = [m for _v, m in rows]
    demand = [m for _v, m in cols]
    if sum(supply) != sum(demand):
        raise errors.MassMismatch(
            f"total masses differ: {sum(supply)} vs {sum(demand)}"
        )
    row_ids = [v for v, _m in rows]
    col_ids = [v for v, _m in cols]
    cost = [[oracle.d(u, v) for v in col_ids] for u in row_ids]

    if exact:
        value, flows, duals_u, duals_v = _transportation_simplex(supply, demand, cost)
    else:
        value, flows, duals_u, duals_v = _transportation_simplex(
            [float(s) for s in supply],
            [float(d) for d in demand],
            [[float(c) for c in row] for row in cost],
            tol=FLOAT_PIVOT_TOL,
        )

    coupling = Coupling(
        entries={
            (row_ids[i], col_ids[j]): q for (i, j), q in sorted(flows.items()) if q != 0
        }
    )
    potential = None
    if with_potential:
        potential = _dual_potential(oracle, col_ids, duals_v, exact=exact)
    return TransportResult(value=value, coupling=coupling, dual_potential=potential)


def _dual_potential(oracle, col_ids, duals_v, exact: bool):
    # One-sided transform of the column prices: f(z) = min_j d(z, y_j) - v_j.
    # The triangle inequality makes f feasible for every ordered pair, and
    # complementary slackness makes its objective meet the primal value.
    potential = {}
    for z in range(oracle.n):
        best = None
        for j, y in enumerate(col_ids):
            cand = (oracle.d(z, y) if exact else float(oracle.d(z, y))) - duals_v[j]
            if best is None or cand < best:
                best = cand
        potential[z] = best
    return potential


def _transportation_simplex(supply, demand, cost, tol=None):
    """Primal simplex over a spanning-tree basis; returns value, flows, duals.

    ``tol=None`` means exact comparisons (Fractions); otherwise a float
    pivot threshold.
    """
    nr, nc = len(supply), len(demand)
    zero = Fraction(0) if tol is None else 0.0
    flows, basis = _northwest_corner(supply, demand, zero)
    negative = (lambda x: x < 0) if tol is None else (lambda x: x < -tol)

    while True:
        u, v = _tree_duals(basis, cost, nr, nc, zero)
        entering = None
        for i in range(nr):
            for j in range(nc):
                if (i, j) not in flows and negative(cost[i][j] - u[i] - v[j]):
                    entering = (i, j)
                    break
            if entering:
                break
        if entering is None:
            break
        plus, minus = _pivot_cycle(basis, entering)
        theta = min(flows[c] for c in minus)
        leaving = min(c for c in minus if flows[c] == theta)
        for c in plus:
            flows[c] = flows.get(c, zero) + theta
        for c in minus:
            flows[c] -= theta
        del flows[leaving]
        basis.remove(leaving)
        basis.append(entering)
        basis.sort()

    value = sum((q * cost[i][j] for (i, j), q in flows.items()), zero)
    return value, flows, u, v


def _northwest_corner(supply, demand, zero):
    nr, nc = len(supply), len(demand)
    s = list(supply)
    d = list(demand)
    flows = {}
    i = j = 0
    while True:
        q = s[i] if s[i] < d[j] else d[j]
        flows[(i, j)] = q
        s[i] -= q
        d[j] -= q
        if i == nr - 1 and j == nc - 1:
            break
        if s[i] == zero and i < nr - 1:
            i += 1
        else:
            j += 1
    return flows, sorted(flows)


def _tree_duals(basis, cost, nr, nc, zero):
    adj = [[] for _ in range(nr + nc)]
    for (i, j) in basis:
        adj[i].append(nr + j)
        adj[nr + j].append(i)
    u = [None] * nr
    v = [None] * nc
    u[0] = zero
    stack = [0]
    seen = {0}
    while stack:
        node = stack.pop()
        for nxt in adj[node]:
            if nxt in seen:
                continue
            seen.add(nxt)
            if node < nr:  # node is a row, nxt a column
                v[nxt - nr] = cost[node][nxt - nr] - u[node]
            else:
                u[nxt] = cost[nxt][node - nr] - v[node - nr]
            stack.append(nxt)
    return u, v


def _pivot_cycle(basis, entering):
    """Cells gaining/losing flow when ``entering`` joins the tree basis."""
    adj: dict[int, list[int]] = {}
    for (i, j) in basis:
        adj.setdefault(i, []).append(~j)
        adj.setdefault(~j, []).append(i)
    start, goal = entering[0], ~entering[1]
    parent = {start: None}
    stack = [start]
    while stack:
        node = stack.pop()
        if node == goal:
            break
        for nxt in adj.get(node, ()):  # deterministic: basis is kept sorted
            if nxt not in parent:
                parent[nxt] = node
                stack.append(nxt)
    path = []
    node = goal
    while node is not None:
        path.append(node)
        node = parent[node]
    path.reverse()  # row, col, row, ..., col
    cells = []
    for a, b in zip(path, path[1:]):
        row, col = (a, b) if a >= 0 else (b, a)
        cells.append((row, ~col))
    minus = cells[0::2]
    plus = [entering] + cells[1::2]
    return plus, minus


def lipschitz_check(f, oracle: DistanceOracle) -> bool:
    """True iff f(u) - f(v) <= d(u, v) for every ordered vertex pair.

    Checking both orders of each pair makes this the two-sided condition
    whenever the oracle is symmetric.
    """
    values = [f[v] for v in range(oracle.n)]
    for u in range(oracle.n):
        for v in range(oracle.n):
            if u != v and values[u] - values[v] > oracle.d(u, v):
                return False
    return True


def dual_value(f, mu, nu, oracle: DistanceOracle):
    """Objective sum f * (mu - nu) of a verified dual witness.

    Always a lower bound on the transport value; meets it exactly when the
    ground distance is symmetric.
    """
    if not lipschitz_check(f, oracle):
        raise errors.NotLipschitz("candidate potential violates a distance constraint")
    total = Fraction(0)
    for v, m in _measure_items(mu):
        total += f[v] * m
    for v, m in _measure_items(nu):
        total -= f[v] * m
    return total


def interpolate_coupling(pi_a, pi_c, lam) -> Coupling:
    """Entrywise convex combination lam*pi_a + (1-lam)*pi_c.

    The marginals of the result are the same convex combinations of the
    input marginals, which is what makes interpolated couplings feasible
    for interpolated walk measures.
    """
    lam = Fraction(lam) if not isinstance(lam, float) else Fraction(lam).limit_denominator(2**32)
    if lam < 0 or lam > 1:
        raise errors.AlphaOutOfRange(f"interpolation weight must be in [0, 1], got {lam}")
    if pi_a.total() != pi_c.total():
        raise errors.ShapeMismatch(
            f"couplings carry different total mass: {pi_a.total()} vs {pi_c.total()}"
        )
    entries: dict[tuple[int, int], Fraction] = {}
    for key, m in pi_a.entries.items():
        entries[key] = lam * m
    for key, m in pi_c.entries.items():
        entries[key] = entries.get(key, Fraction(0)) + (1 - lam) * m
    return Coupling(entries={k: m for k, m in sorted(entries.items()) if m != 0})
