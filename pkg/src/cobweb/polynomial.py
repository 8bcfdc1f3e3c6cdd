"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Optional, Tuple

__all__ = ["IntPolynomial", "poly_add", "poly_shift_mul", "poly_eval"]


class IntPolynomial:
    """Immutable polynomial in ``t``; ``coefficients[i]`` multiplies ``t**i``.

    Stored canonically with no trailing zeros, so equality is coefficient-wise
    and the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(a) for a in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self._c: Tuple[int, ...] = tuple(c)

    @classmethod
    def constant(cls, a: int) -> "IntPolynomial":
        return cls([a])

    @classmethod
    def monomial(cls, degree: int, a: int = 1) -> "IntPolynomial":
        return cls([0] * degree + [a])

    @classmethod
    def from_descending(cls, coefficients: Iterable[int]) -> "IntPolynomial":
        return cls(list(coefficients)[::-1])

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> Optional[int]:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def descending(self) -> Tuple[int, ...]:
        return self._c[::-1]

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == IntPolynomial([other])._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial([-a for a in self._c])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * a for a in self._c])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = [0] * max(len(self._c) + len(other._c) - 1, 0)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``t**k``."""
        if not self._c:
            return self
        return IntPolynomial((0,) * k + self._c)

    def __call__(self, t0: int) -> int:
        acc = 0
        for a in reversed(self._c):
            acc = acc * t0 + a
        return acc

    def __repr__(self):
        return f"IntPolynomial({list(self._c)})"

    def to_text(self, var: str = "t") -> str:
        """Render with descending powers, e.g. ``t^2 - 3t + 10``."""
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            a = self._c[i]
            if a == 0:
                continue
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                power = var if i == 1 else f"{var}^{i}"
                body = power if mag == 1 else f"{mag}{power}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(("+ " if a > 0 else "- ") + body)
        return " ".join(parts)

    __str__ = to_text

    @classmethod
    def parse(cls, text: str, var: str = "t") -> "IntPolynomial":
        """Inverse of :meth:`to_text`; also accepts ``*`` and missing spaces."""
        s = text.replace(" ", "").replace("*", "").replace("−", "-")
        if not s:
            raise ValueError("empty polynomial text")
        v = re.escape(var)
        term = re.compile(rf"([+-]?)(\d*)({v}(?:\^(\d+))?)?")
        coeffs = {}
        pos = 0
        while pos < len(s):
            m = term.match(s, pos)
            if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse polynomial {text!r} at offset {pos}")
            if pos > 0 and not m.group(1):
                raise ValueError(f"missing sign before term at offset {pos} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                deg = int(m.group(4)) if m.group(4) else 1
            else:
                deg = 0
            coeffs[deg] = coeffs.get(deg, 0) + sign * mag
            pos = m.end()
        top = max(coeffs)
        return cls(coeffs.get(i, 0) for i in range(top + 1))


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    return a + b


def poly_shift_mul(a: IntPolynomial) -> IntPolynomial:
    return a.shift(1)


def poly_eval(a: IntPolynomial, t0: int) -> int:
    return a(t0)
