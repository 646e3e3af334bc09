"""Exact integer polynomials in one variable ``z`` and formal fractions of them.

Coefficients are Python ints but are kept inside the signed 64-bit range;
leaving it raises :class:`OverflowError` instead of silently growing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"integer {value} does not fit in 64 bits")
    return value


class IntPolynomial:
    """Immutable polynomial with integer coefficients, index = degree.

    >>> (IntPolynomial([2, -1]) ** 2).coeffs
    (4, -4, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [checked(int(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls([c])

    @classmethod
    def monomial(cls, c: int, degree: int) -> IntPolynomial:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.render()

    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return IntPolynomial(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = checked(out[i + j] + checked(a * b))
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = checked(checked(acc * x) + c)
        return acc

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by ``z**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def render(self) -> str:
        """Ascending-degree text form, e.g. ``10 - 16*z + 8*z^2 - 1*z^3``."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if k == 0 else (f"{mag}*z" if k == 1 else f"{mag}*z^{k}")
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise ValueError("expected a JSON array of integers")
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        """Inverse of :meth:`render`; also tolerates missing ``1*`` and extra spaces."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        coeffs: dict[int, int] = {}
        pos = 0
        for m in _TERM.finditer(s):
            if m.start() != pos or not (m["coef"] or m["z"]):
                break
            pos = m.end()
            sign = -1 if m["sign"] == "-" else 1
            if m["z"]:
                c = int(m["coef"]) if m["coef"] else 1
                k = int(m["exp"]) if m["exp"] else 1
            else:
                c, k = int(m["coef"]), 0
            coeffs[k] = coeffs.get(k, 0) + sign * c
        if pos != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        top = max(coeffs, default=-1)
        return cls(coeffs.get(k, 0) for k in range(top + 1))


_TERM = re.compile(r"(?P<sign>[+-])(?:(?P<coef>\d+)(?:\*(?=z))?)?(?P<z>z(?:\^(?P<exp>\d+))?)?")

Z = IntPolynomial([0, 1])
ONE = IntPolynomial([1])


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_sub(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a - b


def poly_mul(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a * b


def poly_pow(a: IntPolynomial, n: int) -> IntPolynomial:
    return a**n


def poly_eval(a: IntPolynomial, x: int) -> int:
    return a(x)


@dataclass(frozen=True, eq=False)
class RationalPolyFraction:
    """``num / den`` exactly as given, never reduced or sign-normalised."""

    num: IntPolynomial
    den: IntPolynomial

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("denominator is the zero polynomial")

    def __eq__(self, other):
        if not isinstance(other, RationalPolyFraction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalPolyFraction is unhashable (equality is by cross-multiplication)")

    def series_coeffs(self, n: int) -> list[int]:
        return series_coeffs(self, n)


def series_coeffs(f: RationalPolyFraction, n: int) -> list[int]:
    """First ``n`` power-series coefficients of ``f.num / f.den`` by long division.

    The returned values are unbounded Python ints: the series of
    ``1 / (1 - z*M(z))`` grows geometrically and leaves 64 bits after a
    handful of terms for large posets.
    """
    if n < 0:
        raise ValueError("number of terms must be non-negative")
    den0 = f.den[0]
    if den0 == 0:
        raise ZeroDivisionError("denominator has zero constant term; no power-series inverse")
    out: list[int] = []
    for k in range(n):
        acc = f.num[k]
        for i in range(1, min(k, f.den.degree) + 1):
            acc -= f.den[i] * out[k - i]
        q, r = divmod(acc, den0)
        if r:
            raise ArithmeticError(f"non-integral coefficient at degree {k}")
        out.append(q)
    return out


def convolve(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    """First ``n`` coefficients of the product of two coefficient sequences."""
    return [
        sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b))
        for k in range(n)
    ]
