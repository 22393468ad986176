"""Sparse multivariate polynomials over an exact field, and monomial orders.

A monomial is a tuple of exponents of length ``nvars``. A polynomial stores
a dict from monomials to nonzero field elements and is treated as immutable.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import Field, GF32003


# ---------------------------------------------------------------- monomials

def mono_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: tuple, b: tuple) -> bool:
    """True when monomial ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a: tuple, b: tuple) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


# ---------------------------------------------------------------- orders

def _grevlex_key(mono: Sequence[int], weights=None):
    if weights is None:
        deg = sum(mono)
    else:
        deg = sum(w * e for w, e in zip(weights, mono))
    return (deg,) + tuple(-e for e in reversed(mono))


@dataclass(frozen=True)
class MonomialOrder:
    """Monomial order: ``grevlex``, ``lex`` or ``block``.

    A ``block`` order compares the exponents of the variables in ``front``
    first (by weighted grevlex), then the remaining variables (by weighted
    grevlex). Any monomial containing a front variable is therefore larger
    than every monomial free of them, which is what elimination needs.
    ``weights`` gives per-variable degrees (defaults to 1).
    """

    kind: str = "grevlex"
    front: frozenset = frozenset()
    weights: tuple | None = None
    _cache: dict = dc_field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "front", frozenset(self.front))

    def key(self, mono: tuple):
        k = self._cache.get(mono)
        if k is None:
            k = self._compute_key(mono)
            self._cache[mono] = k
        return k

    def _compute_key(self, mono):
        if self.kind == "lex":
            return mono
        w = self.weights
        if self.kind == "grevlex":
            return _grevlex_key(mono, w)
        fi = sorted(self.front)
        ri = [i for i in range(len(mono)) if i not in self.front]
        fw = None if w is None else [w[i] for i in fi]
        rw = None if w is None else [w[i] for i in ri]
        # concatenation compares like the pair (front key, rest key)
        return (_grevlex_key([mono[i] for i in fi], fw)
                + _grevlex_key([mono[i] for i in ri], rw))

    def nkey(self, mono: tuple):
        """Negated key, for use in min-heaps."""
        k = self._cache.get((None, mono))
        if k is None:
            k = tuple(-x for x in self.key(mono))
            self._cache[(None, mono)] = k
        return k

    def degree(self, mono: tuple) -> int:
        """(Weighted) degree used by the pair selection strategy."""
        if self.weights is None:
            return sum(mono)
        return sum(w * e for w, e in zip(self.weights, mono))


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(front: Iterable[int], weights=None) -> MonomialOrder:
    return MonomialOrder("block", frozenset(front), None if weights is None else tuple(weights))


# ---------------------------------------------------------------- polynomials

class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("terms", "nvars", "field", "_hash")

    def __init__(self, terms: dict, nvars: int, field: Field = GF32003, *, _clean=False):
        if not _clean:
            cleaned = {}
            for mono, c in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(f"monomial {mono} does not have {nvars} exponents")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = field(c)
                if c:
                    cleaned[mono] = c
            terms = cleaned
        self.terms = terms
        self.nvars = nvars
        self.field = field
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, nvars: int, field: Field = GF32003) -> "Polynomial":
        return cls({}, nvars, field, _clean=True)

    @classmethod
    def constant(cls, c, nvars: int, field: Field = GF32003) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def variable(cls, i: int, nvars: int, field: Field = GF32003) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return cls({mono: field(1)}, nvars, field, _clean=True)

    @classmethod
    def linear(cls, coeffs: Sequence, field: Field = GF32003) -> "Polynomial":
        """The linear form sum(coeffs[j] * x_j)."""
        n = len(coeffs)
        terms = {}
        for j, c in enumerate(coeffs):
            c = field(c)
            if c:
                terms[tuple(1 if k == j else 0 for k in range(n))] = c
        return cls(terms, n, field, _clean=True)

    # basic predicates
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial({m: c for m, c in self.terms.items() if sum(m) == d},
                          self.nvars, self.field, _clean=True)

    def support(self) -> set:
        """Indices of variables that occur."""
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def coefficient(self, mono) -> object:
        return self.terms.get(tuple(mono), self.field(0))

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self.field(0))

    def leading_term(self, order: MonomialOrder = GREVLEX):
        mono = max(self.terms, key=order.key)
        return mono, self.terms[mono]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings "
                             f"({self.nvars} vars over {self.field} vs "
                             f"{other.nvars} vars over {other.field})")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        p = self.field.p
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if p is not None:
                v %= p
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        if p is None:
            terms = {m: -c for m, c in self.terms.items()}
        else:
            terms = {m: p - c for m, c in self.terms.items()}
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        p = self.field.p
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                terms[m] = terms.get(m, 0) + c1 * c2
        if p is not None:
            terms = {m: c % p for m, c in terms.items()}
        terms = {m: c for m, c in terms.items() if c}
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        p = self.field.p
        if p is None:
            terms = {m: v * c for m, v in self.terms.items()}
        else:
            terms = {m: v * c % p for m, v in self.terms.items()}
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def mul_monomial(self, mono: tuple, c=1) -> "Polynomial":
        c = self.field(c)
        p = self.field.p
        terms = {}
        for m, v in self.terms.items():
            v = v * c if p is None else v * c % p
            if v:
                terms[mono_mul(m, mono)] = v
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c))

    # comparisons
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (self.nvars == other.nvars and self.field == other.field
                    and self.terms == other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field.p, frozenset(self.terms.items())))
        return self._hash

    # substitutions and ring changes
    def kill(self, variables: Iterable[int]) -> "Polynomial":
        """Set the given variables to zero (same ambient ring)."""
        vs = set(variables)
        terms = {m: c for m, c in self.terms.items() if not any(m[i] for i in vs)}
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def restrict(self, keep: Sequence[int]) -> "Polynomial":
        """Image in the polynomial ring on the variables ``keep`` (others set to 0).

        Variable ``keep[j]`` becomes variable ``j`` of the smaller ring.
        """
        keep = list(keep)
        ks = set(keep)
        terms = {}
        for m, c in self.terms.items():
            if any(e for i, e in enumerate(m) if e and i not in ks):
                continue
            terms[tuple(m[i] for i in keep)] = c
        return Polynomial(terms, len(keep), self.field, _clean=True)

    def embed(self, positions: Sequence[int], nvars: int) -> "Polynomial":
        """Place variable ``j`` of this ring at index ``positions[j]`` of a ring with ``nvars`` variables."""
        if len(positions) != self.nvars:
            raise ValueError("positions must list one index per variable")
        terms = {}
        for m, c in self.terms.items():
            new = [0] * nvars
            for j, e in enumerate(m):
                new[positions[j]] += e
            terms[tuple(new)] = c
        return Polynomial(terms, nvars, self.field, _clean=True)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Substitute ``images[i]`` for variable ``i``."""
        if len(images) != self.nvars:
            raise ValueError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            return Polynomial(dict(self.terms), 0, self.field, _clean=True)
        target_n = images[0].nvars
        result = Polynomial.zero(target_n, self.field)
        powers: dict = {}
        for m, c in self.terms.items():
            t = Polynomial.constant(c, target_n, self.field)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in powers:
                        powers[key] = images[i] ** e
                    t = t * powers[key]
            result = result + t
        return result

    def linear_coefficients(self) -> list:
        """Coefficient vector of a linear form."""
        vec = [self.field(0)] * self.nvars
        for m, c in self.terms.items():
            if sum(m) != 1:
                raise ValueError("not a linear form")
            vec[m.index(1)] = c
        return vec

    def coefficient_of_variable(self, i: int) -> "Polynomial":
        """For a quadric q, the linear form L with q = x_i*L + (terms free of x_i).

        Terms x_i*x_j contribute c*x_j, and x_i^2 contributes c*x_i.
        """
        terms = {}
        for m, c in self.terms.items():
            if m[i]:
                rest = list(m)
                rest[i] -= 1
                terms[tuple(rest)] = c
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    # display
    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.sorted_terms(order):
            c = self.field.to_signed(c)
            sign = "-" if c < 0 else "+"
            c = abs(c)
            factors = []
            for i, e in enumerate(mono):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(c)] + factors)
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.to_str()!r}, nvars={self.nvars}, field={self.field})"

    __str__ = to_str


def variables(nvars: int, field: Field = GF32003) -> list:
    return [Polynomial.variable(i, nvars, field) for i in range(nvars)]
