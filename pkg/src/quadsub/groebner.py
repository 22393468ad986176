"""Buchberger's algorithm and the ideal-theoretic computations built on it.

The kernel works on raw ``{monomial: coefficient}`` dicts. Monomials are
exponent tuples for ideals; for submodules of a free module they are
``(component, e_1, ..., e_N)`` tuples (see :mod:`quadsub.resolution`).
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .field import Field
from .poly import GREVLEX, MonomialOrder, Polynomial, block_order, mono_coprime


class BudgetExceeded(RuntimeError):
    """A computation hit its configured resource ceiling."""


class UnitIdealError(ValueError):
    pass


# ---------------------------------------------------------------- monomial ops

class _IdealOps:
    module = False

    @staticmethod
    def divides(a, b):
        for x, y in zip(a, b):
            if x > y:
                return False
        return True

    @staticmethod
    def lcm(a, b):
        return tuple(x if x > y else y for x, y in zip(a, b))

    @staticmethod
    def quotient(a, b):
        return tuple(x - y for x, y in zip(a, b))

    @staticmethod
    def shift(q, m):
        return tuple(x + y for x, y in zip(q, m))

    @staticmethod
    def coprime(a, b):
        return mono_coprime(a, b)


class _ModuleOps:
    module = True

    @staticmethod
    def divides(a, b):
        if a[0] != b[0]:
            return False
        for x, y in zip(a[1:], b[1:]):
            if x > y:
                return False
        return True

    @staticmethod
    def lcm(a, b):
        if a[0] != b[0]:
            return None
        return (a[0],) + tuple(x if x > y else y for x, y in zip(a[1:], b[1:]))

    @staticmethod
    def quotient(a, b):
        return tuple(x - y for x, y in zip(a[1:], b[1:]))

    @staticmethod
    def shift(q, m):
        return (m[0],) + tuple(x + y for x, y in zip(q, m[1:]))

    @staticmethod
    def coprime(a, b):
        # the product criterion does not hold for module elements
        return False


IDEAL_OPS = _IdealOps()
MODULE_OPS = _ModuleOps()


# ---------------------------------------------------------------- kernel

def leading(f: dict, order) -> tuple:
    return max(f, key=order.key)


def make_monic(f: dict, order, field: Field) -> dict:
    if not f:
        return f
    lc = f[leading(f, order)]
    if lc == 1:
        return f
    inv = field.inv(lc)
    p = field.p
    if p is None:
        return {m: c * inv for m, c in f.items()}
    return {m: c * inv % p for m, c in f.items()}


def _find_reducer(mono, basis, ops):
    for lm, g in basis:
        if ops.divides(lm, mono):
            return lm, g
    return None


def reduce_raw(f: dict, basis: Sequence, order, field: Field, ops=IDEAL_OPS,
               full: bool = True) -> dict:
    """Remainder of ``f`` on division by monic ``basis`` = [(lm, poly), ...].

    With ``full=False`` only the leading term is reduced (top reduction).
    """
    p = field.p
    f = dict(f)
    heap = [(order.nkey(m), m) for m in f]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = f.get(m)
        if not c:
            continue
        red = _find_reducer(m, basis, ops)
        if red is None:
            if not full:
                rem.update({k: v for k, v in f.items() if v})
                return rem
            rem[m] = c
            del f[m]
            continue
        lm, g = red
        q = ops.quotient(m, lm)
        for gm, gc in g.items():
            t = ops.shift(q, gm)
            old = f.get(t)
            if old is None:
                v = -c * gc
                if p is not None:
                    v %= p
                if v:
                    f[t] = v
                    heapq.heappush(heap, (order.nkey(t), t))
            else:
                v = old - c * gc
                if p is not None:
                    v %= p
                if v:
                    f[t] = v
                else:
                    del f[t]
    return rem


def _spoly(f, lf, g, lg, lcm, ops, field):
    p = field.p
    qf = ops.quotient(lcm, lf)
    qg = ops.quotient(lcm, lg)
    out: dict = {}
    for m, c in f.items():
        out[ops.shift(qf, m)] = c
    for m, c in g.items():
        t = ops.shift(qg, m)
        v = out.get(t, 0) - c
        if p is not None:
            v %= p
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


def groebner_raw(gens: Sequence[dict], order, field: Field, ops=IDEAL_OPS,
                 budget: int | None = None, stats: dict | None = None) -> list:
    """Reduced Groebner basis of ``gens`` (list of monic dicts, sorted by leading monomial).

    Buchberger's algorithm with the normal selection strategy (smallest lcm
    degree first, ties broken by pair index) and the Gebauer-Moeller
    installation of both Buchberger criteria.
    """
    polys: list = []   # all basis elements ever added
    lms: list = []
    active: list = []  # indices whose leading monomials are minimal
    pairs: list = []   # heap of (degree, j, i)
    live: set = set()
    steps = 0

    def update(h):
        nonlocal active
        lh = lms[h]
        cand = [g for g in active if ops.lcm(lms[g], lh) is not None]
        lcms = {g: ops.lcm(lms[g], lh) for g in cand}
        kept = []
        for idx, g1 in enumerate(cand):
            l1 = lcms[g1]
            if ops.coprime(lms[g1], lh):
                kept.append(g1)
                continue
            rest = cand[idx + 1:]
            if any(ops.divides(lcms[g2], l1) for g2 in rest):
                continue
            if any(ops.divides(lcms[g2], l1) for g2 in kept):
                continue
            kept.append(g1)
        new_pairs = [g for g in kept if not ops.coprime(lms[g], lh)]
        # chain criterion on old pairs
        for pr in list(live):
            i, j = pr
            lij = ops.lcm(lms[i], lms[j])
            if (ops.divides(lh, lij) and ops.lcm(lms[i], lh) != lij
                    and ops.lcm(lms[j], lh) != lij):
                live.discard(pr)
        for g in new_pairs:
            pr = (g, h)
            live.add(pr)
            heapq.heappush(pairs, (order.degree(lcms[g]), h, g))
        active = [g for g in active if not ops.divides(lh, lms[g])] + [h]

    def basis():
        return [(lms[g], polys[g]) for g in active]

    for f in gens:
        f = reduce_raw(f, basis(), order, field, ops)
        if f:
            f = make_monic(f, order, field)
            polys.append(f)
            lms.append(leading(f, order))
            update(len(polys) - 1)

    while pairs:
        _, h, g = heapq.heappop(pairs)
        if (g, h) not in live:
            continue
        live.discard((g, h))
        steps += 1
        if budget is not None and steps > budget:
            raise BudgetExceeded(f"Groebner basis exceeded {budget} S-pair reductions")
        lcm = ops.lcm(lms[g], lms[h])
        s = _spoly(polys[g], lms[g], polys[h], lms[h], lcm, ops, field)
        s = reduce_raw(s, basis(), order, field, ops)
        if s:
            s = make_monic(s, order, field)
            polys.append(s)
            lms.append(leading(s, order))
            update(len(polys) - 1)

    if stats is not None:
        stats["spairs"] = stats.get("spairs", 0) + steps
    # interreduce
    elems = [polys[g] for g in active]
    elems.sort(key=lambda f: order.key(leading(f, order)))
    out = []
    for i, f in enumerate(elems):
        others = [(leading(g, order), g) for k, g in enumerate(elems) if k != i]
        lm = leading(f, order)
        tail = {m: c for m, c in f.items() if m != lm}
        tail = reduce_raw(tail, others, order, field, ops)
        tail[lm] = f[lm]
        out.append(tail)
    return out


# ---------------------------------------------------------------- public layer

@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis for a fixed monomial order."""

    order: MonomialOrder
    elements: tuple
    nvars: int
    field: Field

    def leading_monomials(self) -> list:
        return [f.leading_term(self.order)[0] for f in self.elements]

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials())

    def _raw(self):
        return [(f.leading_term(self.order)[0], f.terms) for f in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def buchberger(ideal: "Ideal | Sequence[Polynomial]", order: MonomialOrder = GREVLEX,
               budget: int | None = None) -> GroebnerBasis:
    if not isinstance(ideal, Ideal):
        ideal = Ideal(list(ideal))
    return ideal.groebner(order, budget=budget)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.nvars != G.nvars:
        raise ValueError("polynomial and basis live in different rings")
    rem = reduce_raw(f.terms, G._raw(), G.order, G.field)
    return Polynomial(rem, f.nvars, f.field, _clean=True)


class Ideal:
    """Ideal given by generators, with a write-once Groebner basis cache per order."""

    def __init__(self, generators: Sequence[Polynomial], nvars: int | None = None,
                 field: Field | None = None):
        generators = list(generators)
        if generators:
            nvars = generators[0].nvars
            field = generators[0].field
            for g in generators:
                if g.nvars != nvars or g.field != field:
                    raise ValueError("generators live in different rings")
        if nvars is None or field is None:
            raise ValueError("empty ideal needs nvars and field")
        self.generators = generators
        self.nvars = nvars
        self.field = field
        self._gb: dict = {}

    def groebner(self, order: MonomialOrder = GREVLEX, budget: int | None = None) -> GroebnerBasis:
        gb = self._gb.get(order)
        if gb is None:
            raw = groebner_raw([g.terms for g in self.generators if g], order, self.field,
                               budget=budget)
            elems = tuple(Polynomial(f, self.nvars, self.field, _clean=True) for f in raw)
            gb = GroebnerBasis(order, elems, self.nvars, self.field)
            self._gb.setdefault(order, gb)
        return gb

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self.groebner()).is_zero()

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.generators]})"


def _as_ideal(I, nvars=None, field=None) -> Ideal:
    if isinstance(I, Ideal):
        return I
    return Ideal(list(I), nvars, field)


def monomial_dimension(monomials: Sequence[tuple], nvars: int) -> int:
    """Krull dimension of K[x]/(monomials): largest independent variable set.

    A set S is independent when no monomial is supported inside S. Returns
    -1 when the constant monomial is present.
    """
    supports = []
    for m in monomials:
        s = frozenset(i for i, e in enumerate(m) if e)
        if not s:
            return -1
        supports.append(s)
    # drop non-minimal supports
    supports = sorted(set(supports), key=len)
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    if not minimal:
        return nvars
    allv = range(nvars)
    for size in range(nvars, -1, -1):
        for S in itertools.combinations(allv, size):
            Sset = set(S)
            if not any(t <= Sset for t in minimal):
                return size
    return 0


def dimension(I, nvars: int | None = None, field: Field | None = None) -> int:
    """Krull dimension of R/I (-1 for the unit ideal)."""
    I = _as_ideal(I, nvars, field)
    gb = I.groebner(GREVLEX)
    return monomial_dimension(gb.leading_monomials(), I.nvars)


def height(I, nvars: int | None = None, field: Field | None = None) -> int:
    I = _as_ideal(I, nvars, field)
    d = dimension(I)
    if d < 0:
        raise UnitIdealError("unit ideal has no height")
    return I.nvars - d


@dataclass(frozen=True)
class RegSeqCertificate:
    forms: tuple
    length: int
    ambient_height: int
    verdict: bool


def is_regular_sequence(forms: Sequence[Polynomial], nvars: int | None = None,
                        field: Field | None = None) -> RegSeqCertificate:
    """Regular-sequence test for forms: height of the ideal equals the number of forms."""
    forms = list(forms)
    for f in forms:
        if not f.is_zero() and not f.is_homogeneous():
            raise ValueError("is_regular_sequence needs homogeneous forms")
        if not f.is_zero() and f.degree() == 0:
            raise ValueError("forms must have positive degree")
    k = len(forms)
    if k == 0:
        return RegSeqCertificate((), 0, 0, True)
    if any(f.is_zero() for f in forms):
        nz = [f for f in forms if not f.is_zero()]
        ht = height(Ideal(nz, forms[0].nvars, forms[0].field)) if nz else 0
        return RegSeqCertificate(tuple(forms), k, ht, False)
    ht = height(Ideal(forms))
    return RegSeqCertificate(tuple(forms), k, ht, ht == k)


def height_after_killing(I, kill: Sequence[int], nvars: int | None = None,
                         field: Field | None = None) -> int:
    """Height of the image of I in the polynomial ring on the surviving variables."""
    I = _as_ideal(I, nvars, field)
    ks = set(kill)
    keep = [i for i in range(I.nvars) if i not in ks]
    image = [g.restrict(keep) for g in I.generators]
    image = [g for g in image if g]
    J = Ideal(image, len(keep), I.field)
    d = dimension(J)
    if d < 0:
        raise UnitIdealError("image is the unit ideal")
    return len(keep) - d


# ---------------------------------------------------------------- elimination

def _tag_ring(fs: Sequence[Polynomial], nvars: int, field: Field):
    """Ideal (T_i - f_i) in K[x_1..x_N, T_1..T_t], tags weighted by deg f_i."""
    t = len(fs)
    total = nvars + t
    pos = list(range(nvars))
    gens = []
    weights = [1] * nvars
    for i, f in enumerate(fs):
        tag = Polynomial.variable(nvars + i, total, field)
        gens.append(tag - f.embed(pos, total))
        weights.append(max(f.degree(), 1))
    return gens, total, weights


@dataclass(frozen=True)
class Membership:
    member: bool
    expression: Polynomial | None  # polynomial in the tag variables T_1..T_t


def subalgebra_membership(f: Polynomial, gens: Sequence[Polynomial]) -> Membership:
    """Decide f in K[gens] by eliminating the original variables from (T_i - g_i)."""
    gens = list(gens)
    N, field = f.nvars, f.field
    for g in gens:
        if g.nvars != N or g.field != field:
            raise ValueError("generators and f live in different rings")
    t = len(gens)
    if t == 0:
        ok = f.degree() <= 0
        expr = Polynomial(dict(((), c) for c in [f.constant_term()] if c), 0, field) if ok else None
        return Membership(ok, expr)
    tag_gens, total, weights = _tag_ring(gens, N, field)
    order = block_order(range(N), weights)
    gb = Ideal(tag_gens).groebner(order)
    nf = normal_form(f.embed(list(range(N)), total), gb)
    if nf.support() & set(range(N)):
        return Membership(False, None)
    expr = nf.restrict(list(range(N, total)))
    return Membership(True, expr)


def front_relations(front_polys: Sequence[Polynomial]) -> Ideal:
    """Kernel of K[T_1..T_n] -> K[front_polys], as an ideal in the tag ring.

    The generators are the reduced Groebner basis elements free of the
    original variables.
    """
    fs = list(front_polys)
    if not fs:
        raise ValueError("need at least one polynomial")
    N, field = fs[0].nvars, fs[0].field
    n = len(fs)
    tag_gens, total, weights = _tag_ring(fs, N, field)
    order = block_order(range(N), weights)
    gb = Ideal(tag_gens).groebner(order)
    orig = set(range(N))
    rels = [g.restrict(list(range(N, total))) for g in gb if not (g.support() & orig)]
    return Ideal(rels, n, field)


def ideal_equal(a: Sequence[Polynomial], b: Sequence[Polynomial], nvars: int, field: Field) -> bool:
    """Equality of ideals by comparing reduced Groebner bases."""
    ga = Ideal([f for f in a if f], nvars, field).groebner()
    gb = Ideal([f for f in b if f], nvars, field).groebner()
    return ga.elements == gb.elements
