"""The 27-vertex crystal graph with classical arrow colors 1..6.

Vertices are integers 1..27.  An arrow (b, a, b') encodes f_a(b) = b' and
equivalently e_a(b') = b.  The edge list is static data; structural
invariants (vertex/edge counts, one-in/one-out per color, unique source
and sink, acyclicity, weights summing to zero) are checked at import time
so that a single mistyped arrow fails loudly instead of silently
corrupting everything downstream.
"""

from __future__ import annotations

from functools import lru_cache

from .cartan import ADJACENT, CARTAN, NODES, Weight, simple_root, weight_sub

VERTICES = tuple(range(1, 28))

EDGES = (
    (1, 1, 2), (2, 2, 3), (3, 3, 4),
    (4, 4, 5), (4, 6, 7),
    (5, 5, 6), (5, 6, 8),
    (6, 6, 9), (7, 4, 8),
    (8, 5, 9), (8, 3, 10),
    (9, 3, 11),
    (10, 5, 11), (10, 2, 13),
    (11, 4, 12), (11, 2, 14),
    (12, 2, 15),
    (13, 5, 14), (13, 1, 18),
    (14, 4, 15), (14, 1, 19),
    (15, 3, 16), (15, 1, 20),
    (16, 6, 17), (16, 1, 21),
    (17, 1, 22),
    (18, 5, 19), (19, 4, 20), (20, 3, 21),
    (21, 6, 22), (21, 2, 23),
    (22, 2, 24), (23, 6, 24),
    (24, 3, 25), (25, 4, 26), (26, 5, 27),
)

_F = {(s, c): t for s, c, t in EDGES}
_E = {(t, c): s for s, c, t in EDGES}

# per-vertex arrow lists, sorted by color for deterministic traversal
OUT_ARROWS = {v: tuple(sorted((c, t) for s, c, t in EDGES if s == v)) for v in VERTICES}
IN_ARROWS = {v: tuple(sorted((c, s) for s, c, t in EDGES if t == v)) for v in VERTICES}


def f(b: int, i: int) -> int | None:
    """Follow the color-i arrow out of b, or None."""
    if i not in NODES:
        raise ValueError(f"color must be in 1..6, got {i!r}")
    return _F.get((b, i))


def e(b: int, i: int) -> int | None:
    """Follow the color-i arrow into b backwards, or None."""
    if i not in NODES:
        raise ValueError(f"color must be in 1..6, got {i!r}")
    return _E.get((b, i))


def eps(b: int, i: int) -> int:
    """Number of times e_i applies at b."""
    k = 0
    while (b := _E.get((b, i))) is not None:
        k += 1
    return k


def phi(b: int, i: int) -> int:
    """Number of times f_i applies at b."""
    k = 0
    while (b := _F.get((b, i))) is not None:
        k += 1
    return k


def wt(b: int) -> Weight:
    """Vertex weight: coordinate a is phi(b,a) - eps(b,a)."""
    return tuple(phi(b, a) - eps(b, a) for a in NODES)


@lru_cache(maxsize=None)
def _reachable_from(j: int) -> frozenset[int]:
    out = {j}
    for _, t in OUT_ARROWS[j]:
        out |= _reachable_from(t)
    return frozenset(out)


def reachable(i: int, j: int) -> bool:
    """True iff a directed arrow path (possibly empty) leads from j to i."""
    return i in _reachable_from(j)


def routes(start: int | None = None):
    """Yield every route (nonempty tuple of composable arrows), optionally
    restricted to routes whose first arrow leaves `start`."""
    def extend(prefix, tail):
        for c, t in OUT_ARROWS[tail]:
            route = prefix + ((tail, c, t),)
            yield route
            yield from extend(route, t)

    starts = (start,) if start is not None else VERTICES
    for v in starts:
        yield from extend((), v)


def _route_colors(route) -> tuple[int, ...]:
    return tuple(c for _, c, _ in route)


def verify_graph_lemma() -> list[str]:
    """Check the four route properties of the graph on every route.

    Returns a list of human-readable counterexample descriptions; an empty
    list means the graph satisfies all four properties:

    1. on a route whose first and last arrows share color a with no
       color-a arrow between them, exactly two arrows have a color
       adjacent to a;
    2. on a route starting at vertex 1 with colors (a_1..a_l),
       sum_{j<l} C[a_j][a_l] equals -1, or 0 when a_l = 1;
    3. a two-step route with non-adjacent colors (a, b) has a companion
       route with colors (b, a) and the same endpoints;
    4. on a route with a_1 adjacent to a_l and no other color adjacent to
       a_l in between, every intermediate arrow source also carries an
       outgoing arrow of color a_l.
    """
    bad: list[str] = []
    for route in routes():
        colors = _route_colors(route)
        l = len(colors)
        a_last = colors[-1]
        # (1)
        if l >= 2 and colors[0] == a_last and a_last not in colors[1:-1]:
            n_adj = sum(1 for c in colors if c in ADJACENT[a_last])
            if n_adj != 2:
                bad.append(f"item1 {route}: {n_adj} arrows adjacent to {a_last}")
        # (2)
        if route[0][0] == 1:
            total = sum(CARTAN[c - 1][a_last - 1] for c in colors[:-1])
            want = (1 if a_last == 1 else 0) - 1
            if total != want:
                bad.append(f"item2 {route}: sum {total} != {want}")
        # (3)
        if l == 2 and colors[1] not in ADJACENT[colors[0]]:
            v0, v2 = route[0][0], route[1][2]
            mid = _F.get((v0, colors[1]))
            if mid is None or _F.get((mid, colors[0])) != v2:
                bad.append(f"item3 {route}: no swapped companion route")
        # (4)
        if (l >= 2 and colors[0] in ADJACENT[a_last]
                and all(c not in ADJACENT[a_last] for c in colors[1:-1])):
            for src, c, _ in route[1:-1]:
                if (src, a_last) not in _F:
                    bad.append(f"item4 {route}: no color-{a_last} arrow at {src}")
    return bad


def _check_graph() -> None:
    assert len(EDGES) == 36 and len(set(EDGES)) == 36
    verts = {s for s, _, _ in EDGES} | {t for _, _, t in EDGES}
    assert verts == set(VERTICES)
    # each color class is a partial matching with exactly 6 arrows
    for a in NODES:
        cls = [(s, t) for s, c, t in EDGES if c == a]
        assert len(cls) == 6
        assert len({s for s, _ in cls}) == 6 and len({t for _, t in cls}) == 6
    # unique source and sink
    assert {v for v in VERTICES if not IN_ARROWS[v]} == {1}
    assert {v for v in VERTICES if not OUT_ARROWS[v]} == {27}
    # acyclic and connected: everything reachable from 1, nothing loops
    assert _reachable_from(1) == frozenset(VERTICES)
    for s, _, t in EDGES:
        assert not reachable(s, t)  # no arrow closes a cycle
    # arrows shift weights by a simple root, and the full weight sum vanishes
    for s, c, t in EDGES:
        assert wt(t) == weight_sub(wt(s), simple_root(c))
    assert tuple(sum(wt(v)[a] for v in VERTICES) for a in range(6)) == (0,) * 6


_check_graph()
