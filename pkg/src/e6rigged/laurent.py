"""Exact integer Laurent polynomials in q."""

from __future__ import annotations

from fractions import Fraction


class LaurentPolynomial:
    """Immutable polynomial in q and 1/q with integer coefficients.

    Stored as a map exponent -> nonzero coefficient.  Supports +, -, *,
    scalar multiples, evaluation, and the canonical text rendering with
    terms in ascending exponent order (e.g. "q^-2 + 3*q^-1 + 1").
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        items = {}
        if coeffs:
            for exp, c in dict(coeffs).items():
                if c:
                    items[int(exp)] = int(c)
        self._coeffs = items

    @classmethod
    def term(cls, coeff: int, exp: int = 0) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self):
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.term(other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.term(other)
        out = dict(self._coeffs)
        for exp, c in other._coeffs.items():
            out[exp] = out.get(exp, 0) + c
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.term(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def shift(self, exp: int) -> "LaurentPolynomial":
        """Multiply by q**exp."""
        return LaurentPolynomial({e + exp: c for e, c in self._coeffs.items()})

    def evaluate(self, value):
        """Substitute a number for q (Fractions handle negative exponents)."""
        total = Fraction(0)
        for exp, c in self._coeffs.items():
            total += c * Fraction(value) ** exp
        return int(total) if total.denominator == 1 else total

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for exp, c in self.items():
            if exp == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"q^{exp}")
            else:
                terms.append(f"{c}*q^{exp}")
        return " + ".join(terms)

    def __repr__(self):
        return f"LaurentPolynomial({self._coeffs!r})"
