"""Dense univariate polynomials with exact integer coefficients."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable

from .errors import InputError


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The coefficient tuple is normalised so the last entry is nonzero; the
    zero polynomial has ``coeffs == ()`` and degree ``-inf``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # construction helpers
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls([c])

    X: "Polynomial"

    # basic queries
    @property
    def degree(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                power = "x" if i == 1 else f"x^{i}"
                body = power if a == 1 else f"{a}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic
    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative powers are not polynomials")
        result = Polynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift_degree(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    # evaluation (Horner)
    def __call__(self, z):
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_int(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_rational(self, z) -> Fraction:
        z = Fraction(z)
        # homogenised Horner keeps everything in integers
        p, q = z.numerator, z.denominator
        acc = 0
        scale = 1
        for c in reversed(self.coeffs):
            acc = acc * p + c * scale
            scale *= q
        if not self.coeffs:
            return Fraction(0)
        return Fraction(acc, scale // q)

    def eval_complex(self, z: complex) -> complex:
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def lowest_degree(self) -> int:
        """Index of the lowest nonzero coefficient."""
        if not self.coeffs:
            raise InputError("zero polynomial has no lowest-degree term")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable")

    def deflate_zero(self) -> tuple[int, "Polynomial"]:
        """Split off x**k; returns (k, p / x**k)."""
        k = self.lowest_degree()
        return k, Polynomial(self.coeffs[k:])

    # serialisation
    def to_json(self) -> str:
        return json.dumps([str(c) for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        data = json.loads(text)
        if not isinstance(data, list):
            raise InputError("polynomial JSON must be an array")
        return cls(int(c) for c in data)


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial([value])
    raise TypeError(f"cannot combine Polynomial with {type(value).__name__}")


Polynomial.X = Polynomial([0, 1])


# function-style aliases
def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001 - mirrors the ring op
    return p ** k


def derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def lowest_degree(p: Polynomial) -> int:
    return p.lowest_degree()


def binomial_shift(k: int) -> Polynomial:
    """(x + 1)**k, built row by row from the binomial coefficients."""
    if k < 0:
        raise InputError("binomial_shift needs k >= 0")
    row = [1]
    for i in range(k):
        # C(k, i+1) = C(k, i) * (k - i) / (i + 1)
        row.append(row[-1] * (k - i) // (i + 1))
    return Polynomial(row)


def is_unimodal(p: Polynomial) -> tuple[bool, int]:
    """Weakly rising then weakly falling coefficients from index 0.

    Returns ``(verdict, mode)``; the mode is the first index of the
    maximum, which is a valid mode whenever the verdict is true.
    """
    cs = p.coeffs
    if not cs:
        raise InputError("unimodality of the zero polynomial is undefined")
    k = 0
    while k + 1 < len(cs) and cs[k] <= cs[k + 1]:
        k += 1
    rest_ok = all(cs[i] >= cs[i + 1] for i in range(k, len(cs) - 1))
    top = max(cs)
    mode = cs.index(top)
    return rest_ok, mode
