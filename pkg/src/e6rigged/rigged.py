"""Rigged configurations and the fermionic polynomial M.

A configuration is a 6-tuple of partitions (weakly decreasing tuples of
positive integers), one per Dynkin node.  A rigged configuration attaches
an integer label in [0, vacancy] to every row; rows are kept in canonical
order (decreasing length, then decreasing rigging) so configurations
compare and hash by value.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .cartan import (ADJACENT, CARTAN, NODES, Weight, is_dominant,
                     solve_config_sizes)
from .laurent import LaurentPolynomial

Partition = tuple[int, ...]
Row = tuple[int, int]  # (length, rigging)
Shapes = tuple[Partition, Partition, Partition, Partition, Partition, Partition]


def q_i(mu: Partition, i: int) -> int:
    """Number of boxes of mu in the first i columns."""
    if i < 0:
        raise ValueError("column index must be >= 0")
    return sum(min(part, i) for part in mu)


def vacancy(shapes: Shapes, length: int, a: int, i: int) -> int:
    """Vacancy number p_i for node a: L*[a=1] - 2 Q_i(a) + sum over b~a of Q_i(b).

    Zero at i = 0 by convention; may be negative for inadmissible shapes.
    """
    if i == 0:
        return 0
    p = length if a == 1 else 0
    p -= 2 * q_i(shapes[a - 1], i)
    for b in ADJACENT[a]:
        p += q_i(shapes[b - 1], i)
    return p


def multiplicities(mu: Partition) -> dict[int, int]:
    m: dict[int, int] = {}
    for part in mu:
        m[part] = m.get(part, 0) + 1
    return m


def charge(shapes: Shapes, length: int) -> int:
    """Quadratic charge of a configuration (independent of riggings)."""
    total = 0
    mults = [multiplicities(mu) for mu in shapes]
    for a in NODES:
        for b in NODES:
            cab = CARTAN[a - 1][b - 1]
            if cab == 0:
                continue
            for j, mj in mults[a - 1].items():
                for k, mk in mults[b - 1].items():
                    total += cab * min(j, k) * mj * mk
    assert total % 2 == 0
    return total // 2 - length * len(shapes[0])


def charge_by_vacancy(shapes: Shapes, length: int) -> int:
    """Charge computed through vacancy numbers; must agree with charge()."""
    s = 0
    for a in NODES:
        for i, m in multiplicities(shapes[a - 1]).items():
            s += vacancy(shapes, length, a, i) * m
    total = s + length * len(shapes[0])
    assert total % 2 == 0
    return -total // 2


def is_admissible_config(shapes: Shapes, lam: Weight, length: int) -> bool:
    """Shapes solve the size equation for (lam, length) and no occupied row
    has a negative vacancy number (which suffices for all rows)."""
    sizes = solve_config_sizes(lam, length)
    if sizes is None or tuple(sum(mu) for mu in shapes) != sizes:
        return False
    for a in NODES:
        for i in set(shapes[a - 1]):
            if vacancy(shapes, length, a, i) < 0:
                return False
    return True


@dataclass(frozen=True)
class RiggedConfiguration:
    """Six rigged partitions plus the path length they are tied to."""

    length: int
    parts: tuple[tuple[Row, ...], ...]

    @staticmethod
    def canonical_rows(rows) -> tuple[Row, ...]:
        return tuple(sorted(rows, key=lambda r: (-r[0], -r[1])))

    @classmethod
    def make(cls, length: int, parts) -> "RiggedConfiguration":
        return cls(length, tuple(cls.canonical_rows(rows) for rows in parts))

    @classmethod
    def empty(cls, length: int = 0) -> "RiggedConfiguration":
        return cls(length, ((),) * 6)

    def shapes(self) -> Shapes:
        return tuple(tuple(sorted((l for l, _ in rows), reverse=True))
                     for rows in self.parts)

    def riggings_total(self) -> int:
        return sum(r for rows in self.parts for _, r in rows)

    def vacancy(self, a: int, i: int) -> int:
        return vacancy(self.shapes(), self.length, a, i)

    def weight(self) -> Weight:
        """The dominant weight this configuration represents, from the sizes."""
        sizes = [sum(l for l, _ in rows) for rows in self.parts]
        return tuple(self.length * (1 if b == 1 else 0)
                     - sum(CARTAN[a][b - 1] * sizes[a] for a in range(6))
                     for b in NODES)

    def check(self) -> None:
        """Raise ValueError unless rows are canonical with riggings in range."""
        shapes = self.shapes()
        for a in NODES:
            rows = self.parts[a - 1]
            if rows != self.canonical_rows(rows):
                raise ValueError(f"rows of partition {a} are not in canonical order")
            for l, r in rows:
                if l < 1:
                    raise ValueError(f"row length must be >= 1, got {l}")
                p = vacancy(shapes, self.length, a, l)
                if not 0 <= r <= p:
                    raise ValueError(
                        f"rigging {r} out of range [0, {p}] at node {a}, length {l}")

    def to_text(self) -> str:
        lines = [f"L {self.length}"]
        for a in NODES:
            cells = " ".join(f"({l},{r})" for l, r in self.parts[a - 1])
            lines.append(f"nu{a}: {cells}".rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RiggedConfiguration":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 7 or not lines[0].startswith("L "):
            raise ValueError("expected a line 'L <int>' plus six 'nu<a>:' lines")
        length = int(lines[0][2:])
        parts = []
        for a, line in zip(NODES, lines[1:]):
            prefix = f"nu{a}:"
            if not line.startswith(prefix):
                raise ValueError(f"expected line starting with {prefix!r}, got {line!r}")
            rows = []
            for cell in line[len(prefix):].split():
                if not (cell.startswith("(") and cell.endswith(")")):
                    raise ValueError(f"bad row cell {cell!r}")
                l, r = cell[1:-1].split(",")
                rows.append((int(l), int(r)))
            parts.append(tuple(rows))
        rc = cls(length, tuple(parts))
        if rc.parts != tuple(cls.canonical_rows(p) for p in rc.parts):
            raise ValueError("rows are not in canonical order")
        return rc


def cc(rc: RiggedConfiguration) -> int:
    """Statistic c(nu, J): charge of the shapes plus total rigging size."""
    return charge(rc.shapes(), rc.length) + rc.riggings_total()


@lru_cache(maxsize=None)
def _partitions_of(n: int, maxpart: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        out.extend((first,) + rest for rest in _partitions_of(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, largest-first lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _partitions_of(n, n)


# Node order in which partitions are chosen during enumeration.  Once all
# neighbors of node a are fixed, the vacancies of a are final and can be
# screened; this order finalizes one extra node per step after the second.
_ENUM_ORDER = (1, 2, 3, 6, 4, 5)
_READY_AFTER = {1: (), 2: (1,), 3: (2,), 6: (6,), 4: (3,), 5: (4, 5)}


def enumerate_configs(lam: Weight, length: int) -> list[Shapes]:
    """All admissible configurations for (lam, length)."""
    sizes = solve_config_sizes(lam, length)
    if sizes is None:
        return []
    choices = {a: partitions_of(sizes[a - 1]) for a in NODES}
    out: list[Shapes] = []
    shapes: list[Partition] = [()] * 6

    def ok(a: int) -> bool:
        return all(vacancy(tuple(shapes), length, a, i) >= 0
                   for i in set(shapes[a - 1]))

    def rec(k: int):
        if k == 6:
            out.append(tuple(shapes))
            return
        node = _ENUM_ORDER[k]
        for mu in choices[node]:
            shapes[node - 1] = mu
            if all(ok(b) for b in _READY_AFTER[node]):
                rec(k + 1)
        shapes[node - 1] = ()

    rec(0)
    return out


def _riggings_in_box(m: int, p: int) -> list[tuple[int, ...]]:
    # weakly decreasing rigging tuples of length m with entries in [0, p]
    return [tuple(sorted(c, reverse=True))
            for c in itertools.combinations_with_replacement(range(p + 1), m)]


def enumerate_rcs(lam: Weight, length: int) -> list[RiggedConfiguration]:
    """All rigged configurations for (lam, length), in a canonical order."""
    if not is_dominant(lam):
        return []
    out = []
    for shapes in enumerate_configs(lam, length):
        blocks = []  # (node, length, rigging choices)
        for a in NODES:
            mults = multiplicities(shapes[a - 1])
            for i in sorted(mults, reverse=True):
                p = vacancy(shapes, length, a, i)
                blocks.append((a, i, _riggings_in_box(mults[i], p)))
        for pick in itertools.product(*(opts for _, _, opts in blocks)):
            parts: list[list[Row]] = [[] for _ in range(6)]
            for (a, i, _), rigs in zip(blocks, pick):
                parts[a - 1].extend((i, r) for r in rigs)
            out.append(RiggedConfiguration.make(length, parts))
    return sorted(out, key=lambda rc: rc.parts)


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPolynomial:
    """Gaussian binomial coefficient [n choose k] as a polynomial in q."""
    if k < 0 or k > n:
        return LaurentPolynomial.zero()
    if k == 0 or k == n:
        return LaurentPolynomial.one()
    return qbinom(n - 1, k - 1) + qbinom(n - 1, k).shift(k)


def fermionic_M(lam: Weight, length: int) -> LaurentPolynomial:
    """The fermionic polynomial M(lam, length; q), computed two ways.

    The product form sums q^charge times Gaussian binomials over admissible
    configurations; the expanded form sums q^cc over all rigged
    configurations.  Both are computed and must agree.
    """
    if not is_dominant(lam):
        return LaurentPolynomial.zero()
    product_form = LaurentPolynomial.zero()
    for shapes in enumerate_configs(lam, length):
        term = LaurentPolynomial.one()
        for a in NODES:
            for i, m in multiplicities(shapes[a - 1]).items():
                p = vacancy(shapes, length, a, i)
                term = term * qbinom(p + m, m)
        product_form = product_form + term.shift(charge(shapes, length))
    expanded: dict[int, int] = {}
    for rc in enumerate_rcs(lam, length):
        c = cc(rc)
        expanded[c] = expanded.get(c, 0) + 1
    expanded_form = LaurentPolynomial(expanded)
    if product_form != expanded_form:
        raise RuntimeError(
            f"fermionic polynomial mismatch at lam={lam}, L={length}: "
            f"{product_form} vs {expanded_form}")
    return product_form
