"""The box-removal walk delta, its inverse, and the full bijection phi.

One delta step walks the crystal graph from vertex 1.  At each vertex it
looks at every outgoing arrow: for the arrow's color a it seeks the
shortest singular row of partition a (rigging equal to the vacancy
number) whose length is at least the previously selected length and which
was not selected before in that partition.  The arrow with the smaller
candidate wins (smaller color on a tie) and the walk advances; it stops
at the first vertex where no arrow admits a selection.  Singularity is
judged against the vacancies and riggings of the *input* configuration
throughout the walk; all changes are committed at the end: every selected
row shrinks by one box (length-1 rows disappear) and is re-rigged to the
new vacancy number at its new length, unselected rows keep their riggings
and the length drops by one.

The inverse walk starts at a given vertex and runs backwards to vertex 1,
selecting the longest singular row of length at most the previous
selection, where a virtual row of length 0 (vacancy 0, rigging 0) is
always available and selecting it creates a new length-1 row.  Selected
rows grow by one box and are re-rigged to the new vacancy number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import crystal
from .cartan import NODES
from .rigged import RiggedConfiguration, Row, cc, vacancy

INF = math.inf


class InvalidPairError(ValueError):
    """Adding this vertex to this configuration does not invert a delta step."""


@dataclass(frozen=True)
class DeltaRecord:
    """Everything one delta run did, for auditing and the table oracle."""

    route: tuple[tuple[int, int, int], ...]          # arrows (src, color, dst)
    selections: tuple[tuple[int, int, int, int], ...]  # (step, color, length, row id)
    ell: tuple[tuple[int, ...], ...]                 # selected lengths per color
    b: int                                           # stopping vertex
    alpha1_before: int                               # rows of partition 1, before
    alpha1_after: int                                # rows of partition 1, after

    def ell_at(self, a: int, k: int) -> float:
        """k-th selected length in partition a (1-based), or infinity."""
        seq = self.ell[a - 1]
        return seq[k - 1] if k <= len(seq) else INF

    def k_count(self, a: int) -> int:
        return len(self.ell[a - 1])


def _vacancy_table(shapes, length: int) -> dict[tuple[int, int], int]:
    maxlen = max((l for mu in shapes for l in mu), default=0)
    return {(a, i): vacancy(shapes, length, a, i)
            for a in NODES for i in range(1, maxlen + 1)}


def _minimal_selection(rows, taken, pvac, a, lower):
    """Shortest unselected singular row of partition a with length >= lower."""
    best = None
    for idx, (l, r) in enumerate(rows):
        if idx in taken or l < lower:
            continue
        if r == pvac[(a, l)] and (best is None or l < best[0]):
            best = (l, idx)
    return best


def _commit_removals(rc: RiggedConfiguration, taken: dict[int, list[int]]):
    """Shrink the selected rows, re-rig them to the new vacancies, drop length."""
    new_rows: list[list[list]] = []
    for a in NODES:
        rows = []
        for idx, (l, r) in enumerate(rc.parts[a - 1]):
            if idx in taken[a]:
                if l > 1:
                    rows.append([l - 1, None])
            else:
                rows.append([l, r])
        new_rows.append(rows)
    shapes = tuple(tuple(sorted((l for l, _ in rows), reverse=True))
                   for rows in new_rows)
    parts = []
    for a in NODES:
        fixed: list[Row] = []
        for l, r in new_rows[a - 1]:
            if r is None:
                r = vacancy(shapes, rc.length - 1, a, l)
            fixed.append((l, r))
        parts.append(fixed)
    return RiggedConfiguration.make(rc.length - 1, parts)


def delta(rc: RiggedConfiguration):
    """One step of the bijection: returns (smaller rc, vertex, record)."""
    if rc.length < 1:
        raise ValueError("delta needs length >= 1")
    pvac = _vacancy_table(rc.shapes(), rc.length)
    taken: dict[int, list[int]] = {a: [] for a in NODES}
    ell: dict[int, list[int]] = {a: [] for a in NODES}
    route = []
    selections = []
    cur, lower, step = 1, 1, 0
    while True:
        best = None  # (length, color, dst, row id)
        for a, dst in crystal.OUT_ARROWS[cur]:
            cand = _minimal_selection(rc.parts[a - 1], taken[a], pvac, a, lower)
            if cand is not None and (best is None or cand[0] < best[0]):
                best = (cand[0], a, dst, cand[1])
        if best is None:
            break
        l, a, dst, idx = best
        step += 1
        taken[a].append(idx)
        ell[a].append(l)
        route.append((cur, a, dst))
        selections.append((step, a, l, idx))
        cur, lower = dst, l
    out = _commit_removals(rc, taken)
    record = DeltaRecord(
        route=tuple(route),
        selections=tuple(selections),
        ell=tuple(tuple(ell[a]) for a in NODES),
        b=cur,
        alpha1_before=len(rc.parts[0]),
        alpha1_after=len(out.parts[0]),
    )
    return out, cur, record


def gamma(rc: RiggedConfiguration) -> int:
    """The vertex a delta step extracts from rc."""
    return delta(rc)[1]


def delta_branches(rc: RiggedConfiguration):
    """All (smaller rc, vertex) outcomes over every tie resolution in delta.

    The walk output is claimed to be independent of which of two equally
    good arrows is taken; this explores both sides of every tie so tests
    can assert it.
    """
    if rc.length < 1:
        raise ValueError("delta needs length >= 1")
    pvac = _vacancy_table(rc.shapes(), rc.length)
    results = []

    def walk(cur, lower, taken):
        cands = []
        for a, dst in crystal.OUT_ARROWS[cur]:
            sel = _minimal_selection(rc.parts[a - 1], taken[a], pvac, a, lower)
            if sel is not None:
                cands.append((sel[0], a, dst, sel[1]))
        if not cands:
            results.append((_commit_removals(rc, taken), cur))
            return
        lmin = min(c[0] for c in cands)
        for l, a, dst, idx in cands:
            if l != lmin:
                continue
            branch = {x: list(v) for x, v in taken.items()}
            branch[a].append(idx)
            walk(dst, l, branch)

    walk(1, 1, {a: [] for a in NODES})
    return results


def _maximal_selection(rows, taken, pvac, a, upper):
    """Longest unselected singular row with length <= upper; the virtual
    zero-length row (always singular) is the fallback."""
    best = (0, None)
    for idx, (l, r) in enumerate(rows):
        if idx in taken or l > upper:
            continue
        if r == pvac[(a, l)] and l > best[0]:
            best = (l, idx)
    return best


def _commit_additions(rc: RiggedConfiguration, taken, created):
    new_rows: list[list[list]] = []
    for a in NODES:
        rows = []
        for idx, (l, r) in enumerate(rc.parts[a - 1]):
            if idx in taken[a]:
                rows.append([l + 1, None])
            else:
                rows.append([l, r])
        rows.extend([1, None] for _ in range(created[a]))
        new_rows.append(rows)
    shapes = tuple(tuple(sorted((l for l, _ in rows), reverse=True))
                   for rows in new_rows)
    parts = []
    for a in NODES:
        fixed: list[Row] = []
        for l, r in new_rows[a - 1]:
            if r is None:
                r = vacancy(shapes, rc.length + 1, a, l)
                if r < 0:
                    raise InvalidPairError(
                        f"growing a row at node {a} forces a negative rigging")
            fixed.append((l, r))
        parts.append(fixed)
    return RiggedConfiguration.make(rc.length + 1, parts)


def delta_inv(rc: RiggedConfiguration, b: int) -> RiggedConfiguration:
    """Invert a delta step that stopped at vertex b; raises InvalidPairError
    when (rc, b) is not in the image of delta."""
    if b not in crystal.VERTICES:
        raise ValueError(f"vertex out of range 1..27: {b}")
    pvac = _vacancy_table(rc.shapes(), rc.length)
    taken: dict[int, list[int]] = {a: [] for a in NODES}
    created: dict[int, int] = {a: 0 for a in NODES}
    cur, upper = b, INF
    while cur != 1:
        best = None  # (length, color, src, row id or None)
        for a, src in crystal.IN_ARROWS[cur]:
            l, idx = _maximal_selection(rc.parts[a - 1], taken[a], pvac, a, upper)
            if best is None or l > best[0]:
                best = (l, a, src, idx)
        l, a, src, idx = best
        if idx is None:
            created[a] += 1
        else:
            taken[a].append(idx)
        cur, upper = src, l
    bigger = _commit_additions(rc, taken, created)
    try:
        bigger.check()
    except ValueError as exc:
        raise InvalidPairError(str(exc)) from exc
    back, b_back, _ = delta(bigger)
    if b_back != b or back != rc:
        raise InvalidPairError(
            f"vertex {b} cannot be appended to this configuration")
    return bigger


def delta_inv_branches(rc: RiggedConfiguration, b: int):
    """All results of the inverse walk over every tie resolution."""
    pvac = _vacancy_table(rc.shapes(), rc.length)
    results = []

    def walk(cur, upper, taken, created):
        if cur == 1:
            results.append(_commit_additions(rc, taken, created))
            return
        cands = []
        for a, src in crystal.IN_ARROWS[cur]:
            l, idx = _maximal_selection(rc.parts[a - 1], taken[a], pvac, a, upper)
            cands.append((l, a, src, idx))
        lmax = max(c[0] for c in cands)
        for l, a, src, idx in cands:
            if l != lmax:
                continue
            branch_taken = {x: list(v) for x, v in taken.items()}
            branch_created = dict(created)
            if idx is None:
                branch_created[a] += 1
            else:
                branch_taken[a].append(idx)
            walk(src, l, branch_taken, branch_created)

    walk(b, INF, {a: [] for a in NODES}, {a: 0 for a in NODES})
    return results


def phi(rc: RiggedConfiguration):
    """Map a rigged configuration to its classically restricted path."""
    return phi_with_steps(rc)[0]


def phi_with_steps(rc: RiggedConfiguration):
    """Like phi, but also return the per-step (rc, record) trace.

    The trace lists (input rc, record) for each delta application, in the
    order they run; the extracted vertices fill the path right to left.
    """
    out = []
    steps = []
    while rc.length > 0:
        smaller, b, record = delta(rc)
        steps.append((rc, record))
        out.append(b)
        rc = smaller
    return tuple(reversed(out)), steps


def phi_inv(path) -> RiggedConfiguration:
    """Map a classically restricted path back to its rigged configuration."""
    rc = RiggedConfiguration.empty(0)
    for b in path:
        rc = delta_inv(rc, b)
    return rc


# Interval tables predicting the vacancy change of one delta step.  Each
# entry lists (upper bound expression, value); bounds are selected lengths
# l(a, k) and are weakly increasing over any actual run, the last bound is
# infinite.  The predicted difference new-p minus old-p at column i is the
# value of the first interval whose upper bound exceeds i.
def _tables(l):
    mn, mx = min, max
    return {
        1: ((l(1, 1), -1), (l(2, 1), +1), (l(2, 2), 0), (l(1, 2), -1),
            (l(2, 3), +1), (INF, 0)),
        2: ((l(1, 1), 0), (l(2, 1), -1), (l(3, 1), +1), (l(3, 2), 0),
            (l(2, 2), -1), (mn(l(1, 2), l(3, 3)), +1),
            (mx(l(1, 2), l(3, 3)), 0), (l(2, 3), -1), (l(3, 4), +1), (INF, 0)),
        3: ((l(2, 1), 0), (l(3, 1), -1), (mn(l(4, 1), l(6, 1)), +1),
            (mx(l(4, 1), l(6, 1)), 0), (l(3, 2), -1),
            (mn(l(2, 2), l(4, 2)), +1), (mx(l(2, 2), l(4, 2)), 0),
            (l(3, 3), -1), (mn(l(6, 2), l(2, 3)), +1),
            (mx(l(6, 2), l(2, 3)), 0), (l(3, 4), -1), (l(4, 3), +1), (INF, 0)),
        4: ((l(3, 1), 0), (l(4, 1), -1), (mn(l(5, 1), l(3, 2)), +1),
            (mx(l(5, 1), l(3, 2)), 0), (l(4, 2), -1), (l(3, 3), +1),
            (l(3, 4), 0), (l(4, 3), -1), (l(5, 2), +1), (INF, 0)),
        5: ((l(4, 1), 0), (l(5, 1), -1), (l(4, 2), +1), (l(4, 3), 0),
            (l(5, 2), -1), (INF, +1)),
        6: ((l(3, 1), 0), (l(6, 1), -1), (l(3, 2), +1), (l(3, 3), 0),
            (l(6, 2), -1), (l(3, 4), +1), (INF, 0)),
    }


def vacancy_change_oracle(record: DeltaRecord):
    """The interval tables of the record's run: node -> ((upper, value), ...)."""
    return _tables(record.ell_at)


def predicted_vacancy_change(record: DeltaRecord, a: int, i: int) -> int:
    """Table-predicted difference of the vacancy number at (a, i), i >= 1."""
    if i < 1:
        raise ValueError("column index must be >= 1")
    for upper, value in vacancy_change_oracle(record)[a]:
        if i < upper:
            return value
    raise AssertionError("unreachable: tables end at infinity")
