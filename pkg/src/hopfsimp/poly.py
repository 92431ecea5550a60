"""Dense univariate polynomials with exact coefficients.

Coefficients are :class:`fractions.Fraction` by default.  A polynomial in one
variable may also carry polynomials in a *different* variable as its
coefficients, which is how a principal specialization in ``t`` keeps its
``q``-dependence.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Scalar = Union[int, Fraction, "Poly"]


def _coerce(c):
    if isinstance(c, Poly):
        return c
    return Fraction(c)


class Poly:
    """Immutable polynomial ``sum(coeffs[i] * var**i)``; no trailing zeros."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "q"):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers
    @classmethod
    def constant(cls, c: Scalar, var: str = "q") -> "Poly":
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "q") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1, var: str = "q") -> "Poly":
        return cls([0] * degree + [c], var)

    @classmethod
    def binomial(cls, l: int, var: str = "t") -> "Poly":
        """``binomial(var, l)`` as the falling factorial over ``l!``; valid at negative integers."""
        p = cls([1], var)
        for i in range(l):
            p = p * cls([-i, 1], var)
        return p * Fraction(1, factorial(l))

    # structure
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def constant_term(self):
        return self.coefficient(0)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def _same(self, other) -> bool:
        return isinstance(other, Poly) and other.var == self.var

    # arithmetic
    def __add__(self, other):
        if self._same(other):
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] = out[i] + c
            return Poly(out, self.var)
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        out = list(self.coeffs) or [Fraction(0)]
        out[0] = out[0] + other
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._same(other):
            if not self.coeffs or not other.coeffs:
                return Poly([], self.var)
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Poly(out, self.var)
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        return Poly([c * other for c in self.coeffs], self.var)

    def __rmul__(self, other):
        if not isinstance(other, (int, Fraction, Poly)):
            return NotImplemented
        return Poly([other * c for c in self.coeffs], self.var)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Poly([1], self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or another polynomial."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # comparison
    def __eq__(self, other):
        if self._same(other):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, Poly)):
            if len(self.coeffs) > 1:
                return False
            return self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash((self.var, self.coeffs))

    # display
    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if isinstance(c, Poly) and not c.is_constant():
                cs, neg = f"({c})", False
            else:
                c = c.constant_term() if isinstance(c, Poly) else c
                neg = c < 0
                cs = str(abs(c))
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and cs == "1":
                term = mono
            elif mono:
                term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(("-" if neg else "+", term))
        sign, first = parts[0]
        text = ("-" if sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


def q_poly(coeffs) -> Poly:
    return Poly(coeffs, "q")


def t_poly(coeffs) -> Poly:
    return Poly(coeffs, "t")
