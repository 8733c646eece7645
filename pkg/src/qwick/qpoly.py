"""Exact arithmetic for polynomials in the deformation parameter q.

Coefficients are arbitrary-precision Python integers; storage is a sparse
exponent-to-coefficient map with no stored zeros.  At q=1 the scalar
coefficient of ``(c c+)^n`` grows factorially and overflows 64-bit machine
words near n = 20, so exact big integers are not optional here.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["QPolynomial", "q_bracket"]

Exact = Union[int, Fraction]


class QPolynomial:
    """A polynomial in q with integer coefficients and exponents >= 0."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        store: dict[int, int] = {}
        for exponent, coefficient in items:
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            if coefficient:
                store[exponent] = store.get(exponent, 0) + coefficient
                if not store[exponent]:
                    del store[exponent]
        self._coeffs = store

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "QPolynomial":
        """The polynomial ``coefficient * q**exponent``."""
        return cls({exponent: coefficient})

    def items(self) -> list[tuple[int, int]]:
        """Terms as ``(exponent, coefficient)`` pairs, ascending exponent."""
        return sorted(self._coeffs.items())

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient; -1 for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __add__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        total = dict(self._coeffs)
        for exponent, coefficient in other._coeffs.items():
            value = total.get(exponent, 0) + coefficient
            if value:
                total[exponent] = value
            else:
                total.pop(exponent, None)
        result = QPolynomial.zero()
        result._coeffs = total
        return result

    __radd__ = __add__

    def __mul__(self, other: "QPolynomial | int") -> "QPolynomial":
        if isinstance(other, int):
            other = QPolynomial({0: other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        product: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                value = product.get(e, 0) + c1 * c2
                if value:
                    product[e] = value
                else:
                    del product[e]
        result = QPolynomial.zero()
        result._coeffs = product
        return result

    __rmul__ = __mul__

    def evaluate(self, value: Exact) -> Exact:
        """Evaluate at the exact rational ``value`` (Horner on the sparse terms)."""
        acc: Exact = 0
        previous: int | None = None
        for exponent, coefficient in sorted(self._coeffs.items(), reverse=True):
            if previous is not None:
                acc *= value ** (previous - exponent)
            acc += coefficient
            previous = exponent
        if previous is not None and previous > 0:
            acc *= value**previous
        return acc

    def text(self, spaced: bool = True) -> str:
        """Render terms in ascending exponent: ``1``, ``q``, ``2q^3``, ...

        ``spaced`` controls whether ``+`` is padded; coefficient lists inside
        parentheses conventionally use the compact form.
        """
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for index, (exponent, coefficient) in enumerate(self.items()):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{exponent}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if index == 0:
                sign = "-" if coefficient < 0 else ""
                parts.append(sign + body)
            else:
                joiner = (" + ", " - ") if spaced else ("+", "-")
                parts.append((joiner[1] if coefficient < 0 else joiner[0]) + body)
        return "".join(parts)

    def latex(self) -> str:
        """LaTeX form, exponents in braces: ``q^{3}+2q^{4}``."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for index, (exponent, coefficient) in enumerate(self.items()):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = "q" if exponent == 1 else f"q^{{{exponent}}}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            sign = "-" if coefficient < 0 else ("+" if index else "")
            parts.append(sign + body)
        return "".join(parts)

    def to_pairs(self) -> list[list[object]]:
        """JSON form: ``[[exponent, coefficient-as-decimal-string], ...]`` ascending."""
        return [[exponent, str(coefficient)] for exponent, coefficient in self.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[object]]) -> "QPolynomial":
        return cls({int(exponent): int(coefficient) for exponent, coefficient in pairs})

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"QPolynomial({self.text()})"


def q_bracket(a: int) -> QPolynomial:
    """The q-deformed integer ``1 + q + ... + q^(a-1)``; zero when a = 0."""
    if a < 0:
        raise ValueError("q_bracket requires a >= 0")
    return QPolynomial({exponent: 1 for exponent in range(a)})
