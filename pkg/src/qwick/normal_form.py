"""Normally ordered expressions: maps from monomial shape to coefficient.

A normally ordered expression is a finite sum ``sum_{k,l} C_{k,l}(q)
(c+)^k c^l``; this module stores it as a map from the shape ``(k, l)``
(creator power, annihilator power) to the :class:`~qwick.qpoly.QPolynomial`
coefficient ``C_{k,l}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .qpoly import Exact, QPolynomial

__all__ = ["NormalForm"]


def _monomial_text(creators: int, annihilators: int) -> str:
    parts: list[str] = []
    if creators == 1:
        parts.append("(c+)")
    elif creators > 1:
        parts.append(f"(c+)^{creators}")
    if annihilators == 1:
        parts.append("c")
    elif annihilators > 1:
        parts.append(f"c^{annihilators}")
    return " ".join(parts)


def _monomial_latex(creators: int, annihilators: int) -> str:
    out = ""
    if creators == 1:
        out += r"c^{\dag}"
    elif creators > 1:
        out += r"(c^{\dag})^{%d}" % creators
    if annihilators == 1:
        out += "c"
    elif annihilators > 1:
        out += "c^{%d}" % annihilators
    return out


class NormalForm:
    """A normally ordered operator expression.

    Behaves as an immutable mapping from ``(creator_power,
    annihilator_power)`` keys to nonzero :class:`QPolynomial` coefficients.
    Iteration order is descending creator power, which matches how such
    expressions are conventionally written out.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], QPolynomial] = ()):
        store: dict[tuple[int, int], QPolynomial] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (creators, annihilators), coefficient in items:
            if creators < 0 or annihilators < 0:
                raise ValueError(f"negative power in key {(creators, annihilators)}")
            if not isinstance(coefficient, QPolynomial):
                coefficient = QPolynomial({0: coefficient})
            if coefficient:
                store[(creators, annihilators)] = coefficient
        self._terms = store

    @classmethod
    def identity(cls) -> "NormalForm":
        """The normal form of the empty word: the scalar 1."""
        return cls({(0, 0): QPolynomial.one()})

    def __getitem__(self, key: tuple[int, int]) -> QPolynomial:
        return self._terms[key]

    def get(self, key: tuple[int, int], default: QPolynomial | None = None) -> QPolynomial:
        if default is None:
            default = QPolynomial.zero()
        return self._terms.get(key, default)

    def keys(self) -> list[tuple[int, int]]:
        return sorted(self._terms, reverse=True)

    def items(self) -> list[tuple[tuple[int, int], QPolynomial]]:
        return [(key, self._terms[key]) for key in self.keys()]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.keys())

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset((key, poly) for key, poly in self._terms.items()))

    def evaluate(self, value: Exact) -> dict[tuple[int, int], Exact]:
        """Evaluate every coefficient at the exact rational ``value``."""
        return {key: self._terms[key].evaluate(value) for key in self.keys()}

    def text(self) -> str:
        """Plain-text rendering, e.g. ``q (c+) c + 1``."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (creators, annihilators), coefficient in self.items():
            monomial = _monomial_text(creators, annihilators)
            terms = coefficient.items()
            if not monomial:
                parts.append(coefficient.text())
            elif len(terms) == 1:
                if terms[0] == (0, 1):
                    parts.append(monomial)
                else:
                    parts.append(f"{coefficient.text()} {monomial}")
            else:
                parts.append(f"({coefficient.text(spaced=False)}) {monomial}")
        return " + ".join(parts)

    def latex(self) -> str:
        """LaTeX rendering mirroring the ``(c^{\\dag})^k c^l`` convention."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for (creators, annihilators), coefficient in self.items():
            monomial = _monomial_latex(creators, annihilators)
            terms = coefficient.items()
            if not monomial:
                parts.append(coefficient.latex())
            elif len(terms) == 1 and terms[0][1] == 1 and terms[0][0] == 0:
                parts.append(monomial)
            elif len(terms) == 1 and terms[0][1] > 0:
                parts.append(coefficient.latex() + monomial)
            else:
                parts.append(f"({coefficient.latex()}){monomial}")
        return "+".join(parts)

    def to_json_terms(self) -> list[dict[str, object]]:
        """JSON form: one object per term, descending creator power."""
        return [
            {
                "creators": creators,
                "annihilators": annihilators,
                "coeff": self._terms[(creators, annihilators)].to_pairs(),
            }
            for creators, annihilators in self.keys()
        ]

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"NormalForm({self.text()})"


def format_exact(value: Exact) -> str:
    """Decimal string for an exact value; fractions render as ``p/q``."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)
