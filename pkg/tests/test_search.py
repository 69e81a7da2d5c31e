from itertools import combinations

import pytest

from kkdesign.bounds import screen_tight, tightness_certificate
from kkdesign.codes import BinaryCode, kk_level
from kkdesign.constructions import hadamard_of_order
from kkdesign.search import (
    MAX_VERTICES,
    CompatibilityGraph,
    ScreenFailure,
    build_graph,
    find_clique,
    search_tight,
)


def test_build_graph_examples():
    g = build_graph(6, 2)
    assert g.order == 64 and g.allowed_distances == {2, 4}
    assert len(g.vertices) == 15 + 15
    g = build_graph(4, 1)
    assert g.order == 16 and g.allowed_distances == {2}
    assert g.vertices == tuple(w for w in range(16) if w.bit_count() == 2)


def test_build_graph_errors():
    with pytest.raises(ScreenFailure) as exc:
        build_graph(7, 2)
    assert exc.value.report.verdict == "excluded"
    with pytest.raises(ValueError):
        build_graph(23, 1)
    assert (1 << 22) == MAX_VERTICES


@pytest.mark.parametrize("n,k", [(4, 1), (6, 2), (8, 1), (8, 3)])
def test_graph_invariants(n, k):
    g = build_graph(n, k)
    assert all(0 < d < n for d in g.allowed_distances)
    for i, row in enumerate(g.adjacency):
        assert not (row >> i) & 1
        for j in range(len(g.vertices)):
            assert ((row >> j) & 1) == ((g.adjacency[j] >> i) & 1)
            assert ((row >> j) & 1) == g.adjacent(g.vertices[i], g.vertices[j])


def _check_clique(g, clique):
    assert 0 in clique
    for a, b in combinations(clique, 2):
        assert (a ^ b).bit_count() in g.allowed_distances


def test_find_clique_examples():
    g = build_graph(4, 1)
    res = find_clique(g, 4)
    assert res.status == "found" and len(res.clique) == 4
    _check_clique(g, res.clique)
    assert tightness_certificate(BinaryCode(4, res.clique), 1).ok

    g = build_graph(6, 2)
    res = find_clique(g, 16)
    assert res.status == "found"
    _check_clique(g, res.clique)
    assert tightness_certificate(BinaryCode(6, res.clique), 2).ok

    res = find_clique(g, 17)
    assert res.status == "exhausted" and res.clique is None

    assert find_clique(g, 16, budget=1).status == "budget"
    assert find_clique(g, 1).clique == (0,)
    with pytest.raises(ValueError):
        find_clique(g, 0)


def test_find_clique_deterministic():
    g = build_graph(8, 1)
    a, b = find_clique(g, 8), find_clique(build_graph(8, 1), 8)
    assert a == b and a.status == "found"


def _max_clique_bruteforce(m, edges):
    for size in range(m, 0, -1):
        for S in combinations(range(m), size):
            if all((a, b) in edges for a, b in combinations(S, 2)):
                return size
    return 0


def test_find_clique_against_bruteforce(rng):
    # random graphs plugged in directly; vertex 0 is implicit and adjacent to all
    for _ in range(40):
        m = rng.randint(1, 11)
        p = rng.choice([0.3, 0.5, 0.8])
        edges = {(a, b) for a in range(m) for b in range(a + 1, m) if rng.random() < p}
        adj = [0] * m
        for a, b in edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        g = CompatibilityGraph(4, 1, frozenset(), tuple(range(1, m + 1)), tuple(adj))
        omega = _max_clique_bruteforce(m, edges) + 1
        assert find_clique(g, omega).status == "found"
        assert find_clique(g, omega + 1).status == "exhausted"


def test_accept_predicate_rejections():
    g = build_graph(6, 2)
    seen = []

    def accept(clique):
        seen.append(clique)
        return len(seen) >= 3

    res = find_clique(g, 16, accept=accept)
    assert res.status == "found" and res.rejected == 2 and res.clique == seen[-1]


@pytest.mark.parametrize("n", range(2, 7))
def test_k1_exhaustive_small(n):
    # a tight (1,1)-design exists iff the screen is open and a Hadamard matrix of order n exists
    try:
        hadamard_of_order(n)
        hadamard = True
    except ValueError:
        hadamard = False
    if n == 2:
        hadamard = True  # [[1, 1], [1, -1]]
    screen_open = screen_tight(n, 1).verdict == "open"
    try:
        g = build_graph(n, 1)
    except ScreenFailure:
        found = False
    else:
        res = find_clique(g, n, accept=lambda c: tightness_certificate(BinaryCode(n, c), 1).ok)
        assert res.status in ("found", "exhausted")
        found = res.status == "found"
    assert found == (screen_open and hadamard)


def test_search_tight_examples():
    rep = search_tight(6, 2)
    assert rep.status == "found" and len(rep.code) == 16 and rep.certificate.ok
    rep = search_tight(7, 1)
    assert rep.status == "excluded" and "n = 0 mod 4" in rep.reason
    rep = search_tight(12, 1)
    assert rep.status == "found" and len(rep.code) == 12 and rep.certificate.ok
    assert kk_level(rep.code) >= 1
    rep = search_tight(6, 2, target=17)
    assert rep.status == "excluded" and rep.certificate is None
    assert search_tight(23, 1).status == "excluded"
    assert search_tight(22, 2).status == "excluded"  # 20 is not a square
    assert search_tight(24, 1).status == "inconclusive"  # open, but over the vertex cap
    assert search_tight(6, 2, budget=1).status == "inconclusive"


def test_search_report_dict():
    d = search_tight(4, 1).to_dict()
    assert d["status"] == "found" and d["screen"]["verdict"] == "open"
    assert d["certificate"]["checks"]
