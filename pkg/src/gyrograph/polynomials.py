"""Univariate polynomials with exact integer coefficients.

All counting polynomials produced by this package (Hosoya, resolving,
characteristic) are held exactly; no floating point enters coefficient
arithmetic.
"""

from __future__ import annotations

import json
from typing import Iterator, Mapping


class IntPolynomial:
    """Immutable sparse polynomial over the integers.

    Coefficients are stored as an exponent -> coefficient map with no
    explicit zeros.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | None = None) -> None:
        clean: dict[int, int] = {}
        if coeffs:
            for exp, c in coeffs.items():
                e = int(exp)
                c = int(c)
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                if c != 0:
                    clean[e] = c
        self._coeffs = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls()

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls({0: c})

    @classmethod
    def x_power(cls, exp: int, coeff: int = 1) -> "IntPolynomial":
        return cls({exp: coeff})

    @classmethod
    def from_coefficient_list(cls, ascending: list[int]) -> "IntPolynomial":
        """Build from [c0, c1, c2, ...] = c0 + c1 x + c2 x^2 + ..."""
        return cls({e: c for e, c in enumerate(ascending)})

    # -- queries -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else -1

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def __getitem__(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def items(self) -> Iterator[tuple[int, int]]:
        """(exponent, coefficient) pairs in descending exponent order."""
        return iter(sorted(self._coeffs.items(), reverse=True))

    def coefficient_sum(self) -> int:
        return sum(self._coeffs.values())

    def __call__(self, x: int) -> int:
        """Exact evaluation at an integer point."""
        return sum(c * x**e for e, c in self._coeffs.items())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _as_poly(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        return _as_poly(other) + (-self)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = _as_poly(other)
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict[str, int]:
        """JSON-friendly exponent -> coefficient map (string keys)."""
        return {str(e): c for e, c in sorted(self._coeffs.items(), reverse=True)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: Mapping[str | int, int]) -> "IntPolynomial":
        return cls({int(e): int(c) for e, c in d.items()})

    def __str__(self) -> str:
        """Human-readable form with descending exponents, e.g. 'x^3 - 2x^2 - 7x + 8'."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                term = var if mag == 1 else f"{mag}{var}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs!r})"


def _as_poly(value: "IntPolynomial | int") -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to IntPolynomial")
