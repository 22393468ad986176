"""Exact coefficient fields: prime fields F_p and the rationals."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

DEFAULT_PRIME = 32003
GENERICITY_FLOOR = 32003


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """A prime field (``p`` set) or the rationals (``p is None``).

    Elements of F_p are plain ints in ``range(p)``; rationals are
    :class:`fractions.Fraction`.
    """

    p: int | None = DEFAULT_PRIME

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __call__(self, c) -> int | Fraction:
        """Coerce an int (or Fraction) into the field."""
        if self.p is None:
            return Fraction(c)
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return c % self.p

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(c)
        return pow(c, -1, self.p)

    def random_element(self, rng: random.Random, nonzero: bool = False):
        if self.p is None:
            # bounded integer sample; genericity is verified downstream
            lo = 1 if nonzero else 0
            c = rng.randint(lo, GENERICITY_FLOOR - 1)
            return Fraction(c if rng.random() < 0.5 else -c)
        return rng.randint(1 if nonzero else 0, self.p - 1)

    def size_ok_for_genericity(self, floor: int = GENERICITY_FLOOR) -> bool:
        return self.p is None or self.p >= floor

    def to_signed(self, c) -> int | Fraction:
        """Representative closest to zero, used for printing."""
        if self.p is None:
            return c
        return c - self.p if c > self.p // 2 else c

    def __str__(self):
        return "Q" if self.p is None else str(self.p)


QQ = Field(None)
GF32003 = Field(DEFAULT_PRIME)
