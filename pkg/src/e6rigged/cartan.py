"""Cartan data for the finite part of E6 and exact weight arithmetic.

Nodes are numbered 1..6 along the chain 1-2-3-4-5 with node 6 attached to
node 3.  A weight is a plain 6-tuple of integers in fundamental-weight
coordinates, so coordinate a is the pairing with the simple coroot of
node a and dominance is coordinatewise nonnegativity.
"""

from __future__ import annotations

from fractions import Fraction

Weight = tuple[int, int, int, int, int, int]

NODES = (1, 2, 3, 4, 5, 6)

CARTAN = (
    (2, -1, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0),
    (0, -1, 2, -1, 0, -1),
    (0, 0, -1, 2, -1, 0),
    (0, 0, 0, -1, 2, 0),
    (0, 0, -1, 0, 0, 2),
)

# a ~ b  iff  C_ab = -1
ADJACENT = {a: tuple(b for b in NODES if CARTAN[a - 1][b - 1] == -1) for a in NODES}

ZERO_WEIGHT: Weight = (0, 0, 0, 0, 0, 0)


def _check_node(a: int) -> None:
    if a not in NODES:
        raise ValueError(f"node must be in 1..6, got {a!r}")


def fundamental_weight(a: int) -> Weight:
    """The a-th fundamental weight as a coordinate vector."""
    _check_node(a)
    return tuple(1 if b == a else 0 for b in NODES)


def simple_root(a: int) -> Weight:
    """Simple root of node a in fundamental-weight coordinates (Cartan row a)."""
    _check_node(a)
    return CARTAN[a - 1]


def weight_add(x: Weight, y: Weight) -> Weight:
    return tuple(u + v for u, v in zip(x, y))


def weight_sub(x: Weight, y: Weight) -> Weight:
    return tuple(u - v for u, v in zip(x, y))


def is_dominant(x: Weight) -> bool:
    return all(c >= 0 for c in x)


def format_weight(x: Weight) -> str:
    return ",".join(str(c) for c in x)


def parse_weight(text: str) -> Weight:
    parts = text.strip().split(",")
    if len(parts) != 6:
        raise ValueError(f"weight needs six comma-separated integers, got {text!r}")
    return tuple(int(p) for p in parts)


def _invert_cartan() -> tuple[tuple[Fraction, ...], ...]:
    # Gauss-Jordan over Fractions; the matrix is invertible (finite type).
    n = 6
    aug = [[Fraction(CARTAN[i][j]) for j in range(n)]
           + [Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col]
        aug[col] = [x / inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


CARTAN_INV = _invert_cartan()


def solve_config_sizes(lam: Weight, length: int) -> tuple[int, ...] | None:
    """Sizes |nu^(a)| forced by the weight constraint, or None if infeasible.

    Solves sum_a n_a * alpha_a = length * Lambda_1 - lam exactly over the
    rationals; the configuration set is empty unless the unique solution is
    a vector of nonnegative integers.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    rhs = [length * (1 if b == 1 else 0) - lam[b - 1] for b in NODES]
    n = [sum(CARTAN_INV[a][b] * rhs[b] for b in range(6)) for a in range(6)]
    if any(x.denominator != 1 or x < 0 for x in n):
        return None
    return tuple(int(x) for x in n)


def feasible_weights(length: int) -> list[Weight]:
    """All dominant weights whose configuration-size equation is solvable.

    Enumerates size vectors n in the box 0 <= n_a <= length * (C^-1)_a1
    (the bound follows from n = C^-1 (L Lambda_1 - lam) and positivity of
    the inverse Cartan matrix) and keeps the dominant weights they induce.
    """
    if length < 0:
        raise ValueError("length must be >= 0")
    bounds = [int(length * CARTAN_INV[a][0]) for a in range(6)]
    out = []

    def rec(a: int, n: list[int]):
        if a == 6:
            lam = tuple(length * (1 if b == 1 else 0)
                        - sum(CARTAN[c][b - 1] * n[c] for c in range(6))
                        for b in NODES)
            if is_dominant(lam):
                out.append(lam)
            return
        for v in range(bounds[a] + 1):
            n[a] = v
            rec(a + 1, n)
        n[a] = 0

    rec(0, [0] * 6)
    return sorted(set(out))
