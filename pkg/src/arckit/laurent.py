"""Exact Laurent polynomials in one variable q over the integers.

Coefficients are arbitrary-precision ints; terms are stored sparsely as a
degree -> coefficient mapping with no zero entries.  Everything in this
package that carries a grading (graded dimensions, transition matrices,
Grothendieck-group coefficients) is an instance of this class.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """An element of Z[q, q^-1], immutable and hashable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = terms
        acc: dict[int, int] = {}
        for deg, coeff in items:
            if coeff:
                acc[deg] = acc.get(deg, 0) + coeff
                if not acc[deg]:
                    del acc[deg]
        self._terms = tuple(sorted(acc.items()))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q(power: int = 1, coeff: int = 1) -> "LaurentPoly":
        """The monomial coeff * q**power."""
        return LaurentPoly({power: coeff})

    @staticmethod
    def from_int(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    # -- basic queries -----------------------------------------------------

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeff(self, deg: int) -> int:
        for d, c in self._terms:
            if d == deg:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[0][0]

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc = dict(self._terms)
        for d, c in other._terms:
            acc[d] = acc.get(d, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({d: -c for d, c in self._terms})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        acc: dict[int, int] = {}
        for d1, c1 in self._terms:
            for d2, c2 in other._terms:
                d = d1 + d2
                acc[d] = acc.get(d, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        return LaurentPoly({d + k: c for d, c in self._terms})

    # -- the structure maps from the text ----------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1 applied to every monomial."""
        return LaurentPoly({-d: c for d, c in self._terms})

    def eval_at_one(self) -> int:
        """Specialise at q = 1, i.e. sum all coefficients."""
        return sum(c for _, c in self._terms)

    # -- comparisons and formatting -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for d, c in self._terms:
            if d == 0:
                mono = str(abs(c))
            else:
                qpart = "q" if d == 1 else f"q^{d}"
                mono = qpart if abs(c) == 1 else f"{abs(c)}*{qpart}"
            sign = "-" if c < 0 else "+"
            chunks.append((sign, mono))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, mono in chunks[1:]:
            out += f" {sign} {mono}"
        return out

    # -- (de)serialisation --------------------------------------------------

    def to_json(self) -> list[list[int]]:
        return [[d, c] for d, c in self._terms]

    @staticmethod
    def from_json(data: Iterable[Iterable[int]]) -> "LaurentPoly":
        return LaurentPoly({int(d): int(c) for d, c in data})


def _coerce(value: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.from_int(value)
    raise TypeError(f"cannot coerce {value!r} to LaurentPoly")


def quantum_bracket(a: int) -> LaurentPoly:
    """(q^a - q^-a)/(q - q^-1) as an honest Laurent polynomial."""
    if a == 0:
        return LaurentPoly.zero()
    sign = 1 if a > 0 else -1
    a = abs(a)
    return LaurentPoly({d: sign for d in range(-(a - 1), a, 2)})
