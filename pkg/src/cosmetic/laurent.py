"""Sparse one-variable Laurent polynomials with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPoly"]

Number = Union[int, Fraction]


class LaurentPoly:
    """Immutable map ``exponent -> coefficient`` with zeros dropped.

    >>> a = LaurentPoly.monomial(1, var="A")
    >>> str(-(a ** 2) - a ** -2)
    '-A^2-A^-2'
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in items:
            if not isinstance(c, int) or not isinstance(e, int):
                raise TypeError("exponents and coefficients must be integers")
            clean[e] = clean.get(e, 0) + c
        self._terms = {e: c for e, c in sorted(clean.items()) if c}
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> "LaurentPoly":
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, value: int, var: str = "A") -> "LaurentPoly":
        return cls({0: value}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms))

    @property
    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.var != self.var and other._terms and self._terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            # (c x^e)^-m = c^m x^(-e m) since c = c^-1 for units
            m = -k
            return LaurentPoly({-e * m: c ** m}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()}, self.var)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return self._terms == other._terms
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.var if not self.is_constant() else "", tuple(self._terms.items())))
        return self._hash

    def __call__(self, value: Number) -> Number:
        total: Number = 0
        for e, c in self._terms.items():
            total += c * Fraction(value) ** e
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def substitute(self, var: str, scale: int) -> "LaurentPoly":
        """Re-express in ``var`` where self.var = var^(1/scale); every
        exponent must be divisible by ``scale`` (negative scales invert)."""
        out = {}
        for e, c in self._terms.items():
            if e % scale:
                raise ValueError(f"exponent {e} is not divisible by {scale}")
            out[e // scale] = c
        return LaurentPoly(out, var)

    def serialize(self) -> list[str]:
        """Terms as ``"coeff*var^exp"`` strings in ascending exponent order."""
        return [f"{c}*{self.var}^{e}" for e, c in self._terms.items()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r}, var={self.var!r})"
