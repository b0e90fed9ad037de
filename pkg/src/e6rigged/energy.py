"""Local energy H on pairs of vertices, path energy D, one-dimensional sum X.

H takes the values 0, -1, -2 and is constant on each of the three
classical components of the twofold tensor product, whose highest weight
elements are 1(x)1, 1(x)2 and 1(x)18.  The production rule is a direct
case split: H(b,c) = -2 on an explicit 27-element list S1, 0 when b can
be reached from c along arrows, and -1 otherwise.  The component method
is kept as an independent cross-check.
"""

from __future__ import annotations

from . import crystal, tensor
from .cartan import NODES, Weight, is_dominant
from .laurent import LaurentPolynomial

# pairs with H = -2; the transcription count is asserted below
S1 = frozenset(
    [(1, j) for j in range(18, 28)]
    + [(2, j) for j in range(23, 28)]
    + [(3, j) for j in range(25, 28)]
    + [(4, j) for j in range(26, 28)]
    + [(7, j) for j in range(26, 28)]
    + [(i, 27) for i in (5, 8, 10, 13, 18)]
)
assert len(S1) == 27


def _h_value(b: int, c: int) -> int:
    if (b, c) in S1:
        return -2
    if crystal.reachable(b, c):
        return 0
    return -1


H_TABLE = {(b, c): _h_value(b, c) for b in crystal.VERTICES for c in crystal.VERTICES}


def local_H(b: int, c: int) -> int:
    """Local energy of b (x) c."""
    return H_TABLE[(b, c)]


_COMPONENT_VALUE = {(1, 1): 0, (1, 2): -1, (1, 18): -2}


def local_H_by_component(b: int, c: int) -> int:
    """Local energy via the component head: raise b (x) c to highest weight."""
    pair = (b, c)
    raised = True
    while raised:
        raised = False
        for i in NODES:
            up = tensor.e_tensor(pair, i)
            if up is not None:
                pair = up
                raised = True
                break
    if pair not in _COMPONENT_VALUE:
        raise RuntimeError(f"unexpected highest weight pair {pair}; graph data is broken")
    return _COMPONENT_VALUE[pair]


def energy_D(p: tensor.Path) -> int:
    """Energy statistic: sum over j of (L - j) * H(b_j, b_j+1)."""
    L = len(p)
    return sum((L - j) * H_TABLE[(p[j - 1], p[j])] for j in range(1, L))


def one_dim_sum(lam: Weight, length: int) -> LaurentPolynomial:
    """Generating polynomial sum of q^D over the restricted paths of weight lam."""
    if not is_dominant(lam):
        return LaurentPolynomial.zero()
    counts: dict[int, int] = {}
    for p in tensor.enumerate_paths(lam, length):
        d = energy_D(p)
        counts[d] = counts.get(d, 0) + 1
    return LaurentPolynomial(counts)
