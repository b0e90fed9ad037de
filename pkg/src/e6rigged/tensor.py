"""Tensor powers of the crystal: paths, crystal operators, enumeration.

A path is a tuple of vertex ids (b_1, ..., b_L), leftmost factor first.
Crystal operators follow the original tensor-product convention: on
b1 (x) b2, e_i acts on the left factor when phi_i(b1) >= eps_i(b2) and on
the right factor otherwise; longer products are bracketed to the left.
"""

from __future__ import annotations

from collections import defaultdict

from . import crystal
from .cartan import NODES, ZERO_WEIGHT, Weight, is_dominant, weight_add

Path = tuple[int, ...]

_EPS = {b: tuple(crystal.eps(b, i) for i in NODES) for b in crystal.VERTICES}
_PHI = {b: tuple(crystal.phi(b, i) for i in NODES) for b in crystal.VERTICES}
_WT = {b: crystal.wt(b) for b in crystal.VERTICES}


def eps_phi_tensor(p: Path, i: int) -> tuple[int, int]:
    """String statistics (eps_i, phi_i) of a path, by the left-to-right fold."""
    ce, cp = 0, 0
    for b in p:
        be, bp = _EPS[b][i - 1], _PHI[b][i - 1]
        ce, cp = ce + max(0, be - cp), bp + max(0, cp - be)
    return ce, cp


def e_tensor(p: Path, i: int) -> Path | None:
    """Raising operator on the tensor product; None when the result is 0."""
    if not p:
        return None
    if len(p) == 1:
        b = crystal.e(p[0], i)
        return None if b is None else (b,)
    head, last = p[:-1], p[-1]
    if eps_phi_tensor(head, i)[1] >= _EPS[last][i - 1]:
        head2 = e_tensor(head, i)
        return None if head2 is None else head2 + (last,)
    b = crystal.e(last, i)
    return None if b is None else head + (b,)


def f_tensor(p: Path, i: int) -> Path | None:
    """Lowering operator, the adjoint of e_tensor."""
    if not p:
        return None
    if len(p) == 1:
        b = crystal.f(p[0], i)
        return None if b is None else (b,)
    head, last = p[:-1], p[-1]
    if eps_phi_tensor(head, i)[1] > _EPS[last][i - 1]:
        head2 = f_tensor(head, i)
        return None if head2 is None else head2 + (last,)
    b = crystal.f(last, i)
    return None if b is None else head + (b,)


def eps_tensor(p: Path, i: int) -> int:
    k = 0
    while (p := e_tensor(p, i)) is not None:
        k += 1
    return k


def phi_tensor(p: Path, i: int) -> int:
    k = 0
    while (p := f_tensor(p, i)) is not None:
        k += 1
    return k


def wt_path(p: Path) -> Weight:
    w = ZERO_WEIGHT
    for b in p:
        w = weight_add(w, _WT[b])
    return w


def is_classically_restricted(p: Path, lam: Weight) -> bool:
    """True iff p has weight lam and every raising operator kills it."""
    if wt_path(p) != lam:
        return False
    return all(e_tensor(p, i) is None for i in NODES)


def enumerate_all_hw(length: int) -> dict[Weight, tuple[Path, ...]]:
    """All classically restricted paths of the given length, keyed by weight.

    Built by dynamic programming on the length: a path extends a shorter
    one of weight mu by factor b exactly when eps_i(b) <= mu_i for every
    color, and then has weight mu + wt(b).
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    level: dict[Weight, list[Path]] = {ZERO_WEIGHT: [()]}
    for _ in range(length):
        nxt: dict[Weight, list[Path]] = defaultdict(list)
        for mu, paths in level.items():
            for b in crystal.VERTICES:
                if all(ev <= mv for ev, mv in zip(_EPS[b], mu)):
                    nu = weight_add(mu, _WT[b])
                    nxt[nu].extend(p + (b,) for p in paths)
        level = nxt
    return {lam: tuple(sorted(paths)) for lam, paths in sorted(level.items())}


def enumerate_paths(lam: Weight, length: int) -> tuple[Path, ...]:
    """The classically restricted paths of weight lam; empty unless dominant."""
    if not is_dominant(lam):
        return ()
    return enumerate_all_hw(length).get(lam, ())


def format_path(p: Path) -> str:
    return " ".join(str(b) for b in p)


def parse_path(line: str) -> Path:
    parts = line.split()
    path = tuple(int(x) for x in parts)
    for b in path:
        if b not in _WT:
            raise ValueError(f"vertex out of range 1..27: {b}")
    return path
