"""Exact integer polynomials in one variable with checked 64-bit range."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Tuple

from .exceptions import ArithmeticCapacityError

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticCapacityError(f"value {value} does not fit in a signed 64-bit integer")
    return value


def _trim(coeffs) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(_checked(int(c)) for c in coeffs)


@dataclass(frozen=True)
class Polynomial:
    """Coefficients indexed by degree; the zero polynomial has no coefficients."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Polynomial":
        return cls((0,) * degree + (coeff,))

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return 0

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        return poly_add(self, other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return poly_eval(self, x)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                mono = "t" if d == 1 else f"t^{d}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(_checked(p[i] + q[i]) for i in range(n))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if not p.coeffs or not q.coeffs:
        return Polynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = _checked(out[i + j] + _checked(a * b))
    return Polynomial(out)


def poly_eval(p: Polynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = _checked(_checked(acc * x) + c)
    return acc


def poly_product(factors: Iterable[Polynomial]) -> Polynomial:
    acc = Polynomial.one()
    for f in factors:
        acc = poly_mul(acc, f)
    return acc
