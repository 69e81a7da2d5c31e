"""Clique search for tight (k,k)-designs.

In a tight design every pair of distinct words sits at an inner product that
is a root of ``Q_k^{1,1}``, so the design is a clique in the Cayley graph on
F_2^n whose connection set is the words of "allowed" weight. The graph is
translation invariant, so the all-zero word is put in the clique up front and
the search runs inside its neighbourhood.

The clique search is a Tomita-style branch and bound: candidate sets are int
bitsets and greedy colouring supplies the upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .bounds import FeasibilityReport, TightnessReport, root_screen, screen_tight, tightness_certificate, universal_bound
from .codes import BinaryCode

__all__ = [
    "MAX_VERTICES",
    "ScreenFailure",
    "CompatibilityGraph",
    "CliqueResult",
    "SearchReport",
    "build_graph",
    "find_clique",
    "search_tight",
]

MAX_VERTICES = 1 << 22


class ScreenFailure(ValueError):
    """Roots of ``Q_k^{1,1}`` are not all in T_n; carries the screen report."""

    def __init__(self, msg: str, report: FeasibilityReport):
        super().__init__(msg)
        self.report = report


@dataclass(frozen=True)
class CompatibilityGraph:
    """Cayley graph on F_2^n restricted to the neighbourhood of 0.

    ``vertices`` lists the words adjacent to 0 in increasing order and
    ``adjacency[i]`` is the bitset (over indices into ``vertices``) of the
    neighbours of ``vertices[i]``.
    """

    n: int
    k: int
    allowed_distances: frozenset[int]
    vertices: tuple[int, ...]
    adjacency: tuple[int, ...] = field(repr=False)

    @property
    def order(self) -> int:
        return 1 << self.n

    def adjacent(self, x: int, y: int) -> bool:
        return (x ^ y).bit_count() in self.allowed_distances


def build_graph(n: int, k: int) -> CompatibilityGraph:
    if (1 << n) > MAX_VERTICES:
        raise ValueError(f"2^{n} vertices exceeds the cap of 2^22")
    ok, roots = root_screen(n, k)
    if not ok:
        raise ScreenFailure(
            f"Q_{k}^(1,1) at n={n} has roots outside T_n (found {len(roots)} of {k} in T_n)",
            screen_tight(n, k),
        )
    allowed = frozenset(int(n * (1 - t) / 2) for t in roots)
    assert all(0 < d < n for d in allowed)
    verts = tuple(w for w in range(1, 1 << n) if w.bit_count() in allowed)
    adj = []
    for w in verts:
        row = 0
        for j, u in enumerate(verts):
            if (w ^ u).bit_count() in allowed:
                row |= 1 << j
        adj.append(row)
    return CompatibilityGraph(n, k, allowed, verts, tuple(adj))


@dataclass(frozen=True)
class CliqueResult:
    status: str  # "found", "exhausted" or "budget"
    clique: Optional[tuple[int, ...]]
    nodes: int
    rejected: int = 0


class _Budget(Exception):
    pass


class _Found(Exception):
    def __init__(self, clique):
        self.clique = clique


def _colour_order(P: int, adj) -> tuple[list[int], list[int]]:
    order, colours = [], []
    colour = 0
    U = P
    while U:
        colour += 1
        Q = U
        while Q:
            low = Q & -Q
            v = low.bit_length() - 1
            Q &= ~low & ~adj[v]
            U &= ~low
            order.append(v)
            colours.append(colour)
    return order, colours


def find_clique(
    G: CompatibilityGraph,
    target: int,
    budget: int = 1_000_000,
    accept: Callable[[tuple[int, ...]], bool] | None = None,
) -> CliqueResult:
    """Look for a clique of `target` words containing the all-zero word.

    `budget` caps the number of branch nodes. `accept`, when given, is
    called on every clique of the target size; rejected cliques do not stop
    the search. Cliques are reported as sorted tuples of words.
    """
    if target < 1:
        raise ValueError("target must be >= 1")
    adj = G.adjacency
    verts = G.vertices
    nodes = 0
    rejected = 0
    R: list[int] = []

    def emit():
        nonlocal rejected
        clique = tuple(sorted([0] + [verts[i] for i in R]))
        if accept is None or accept(clique):
            raise _Found(clique)
        rejected += 1

    def expand(P: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Budget
        need = target - 1 - len(R)
        if need <= 0:
            emit()
            return
        order, colours = _colour_order(P, adj)
        for i in range(len(order) - 1, -1, -1):
            if colours[i] < need:
                return
            v = order[i]
            R.append(v)
            expand(P & adj[v])
            R.pop()
            P &= ~(1 << v)

    try:
        expand((1 << len(verts)) - 1)
    except _Found as hit:
        return CliqueResult("found", hit.clique, nodes, rejected)
    except _Budget:
        return CliqueResult("budget", None, nodes - 1, rejected)
    return CliqueResult("exhausted", None, nodes, rejected)


@dataclass(frozen=True)
class SearchReport:
    n: int
    k: int
    target: int
    status: str  # "found", "excluded" or "inconclusive"
    reason: str
    screen: FeasibilityReport
    code: Optional[BinaryCode] = None
    certificate: Optional[TightnessReport] = None
    nodes: int = 0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "target": self.target,
            "status": self.status,
            "reason": self.reason,
            "nodes": self.nodes,
            "screen": self.screen.to_dict(),
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def search_tight(n: int, k: int, budget: int = 1_000_000, target: int | None = None) -> SearchReport:
    """Screen, build the compatibility graph and search for a tight design.

    `target` defaults to the universal bound; overriding it is meant for
    exhaustion experiments (a larger target proves the bound is a ceiling for
    cliques).
    """
    screen = screen_tight(n, k)
    bound = universal_bound(n, k)
    goal = bound if target is None else target
    if screen.verdict == "excluded" and target is None:
        failed = [c.name for c in screen.checks if c.counts and not c.passed]
        return SearchReport(n, k, goal, "excluded", "screen: " + ", ".join(failed), screen)
    try:
        G = build_graph(n, k)
    except ScreenFailure as exc:
        return SearchReport(n, k, goal, "excluded", str(exc), screen)
    except ValueError as exc:
        return SearchReport(n, k, goal, "inconclusive", str(exc), screen)

    def certified(clique):
        if goal != bound:
            return True
        return tightness_certificate(BinaryCode(n, clique), k).ok

    res = find_clique(G, goal, budget, accept=certified)
    if res.status == "found":
        code = BinaryCode(n, res.clique)
        cert = tightness_certificate(code, k) if goal == bound else None
        return SearchReport(n, k, goal, "found", f"clique of size {len(code)}", screen, code, cert, res.nodes)
    if res.status == "exhausted":
        return SearchReport(n, k, goal, "excluded", f"exhaustive search: no certified clique of size {goal}", screen, nodes=res.nodes)
    return SearchReport(n, k, goal, "inconclusive", f"node budget {budget} exhausted", screen, nodes=res.nodes)
