"""Minimal graded free resolutions of R/I by iterated syzygies.

Elements of a free module R^k are dicts keyed by ``(component, e_1..e_N)``.
Syzygies of homogeneous elements g_1..g_t of R^k come from a module
Groebner basis of the rows [g_j | e_j] in R^(k+t) under an order that
eliminates the first k components; the minimal generators of each syzygy
module are then picked out degree by degree with linear algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import Field
from .groebner import MODULE_OPS, BudgetExceeded, groebner_raw, reduce_raw
from .poly import Polynomial

DEFAULT_RESOLUTION_BUDGET = 200_000


class ModuleOrder:
    """Degree-then-grevlex order on module monomials (term over position).

    Components below ``elim`` are weighted above everything else, so a
    Groebner basis under this order eliminates them.
    """

    def __init__(self, shifts: Sequence[int], elim: int = 0):
        self.shifts = list(shifts)
        self.elim = elim
        self._cache: dict = {}

    def degree(self, mono):
        return self.shifts[mono[0]] + sum(mono[1:])

    def key(self, mono):
        k = self._cache.get(mono)
        if k is None:
            c = mono[0]
            k = ((1 if c < self.elim else 0), self.degree(mono)) \
                + tuple(-e for e in reversed(mono[1:])) + (-c,)
            self._cache[mono] = k
        return k

    def nkey(self, mono):
        k = self._cache.get((None, mono))
        if k is None:
            k = tuple(-x for x in self.key(mono))
            self._cache[(None, mono)] = k
        return k


class _ExactOps:
    """Monomial 'division' that only matches equal monomials: plain Gaussian elimination."""

    module = True

    @staticmethod
    def divides(a, b):
        return a == b

    @staticmethod
    def quotient(a, b):
        return None

    @staticmethod
    def shift(q, m):
        return m


_EXACT = _ExactOps()


def element_degree(v: dict, shifts: Sequence[int]) -> int:
    degs = {shifts[m[0]] + sum(m[1:]) for m in v}
    if len(degs) != 1:
        raise ValueError("module element is not homogeneous")
    return degs.pop()


def _monomials_of_degree(nvars: int, d: int):
    if nvars == 0:
        if d == 0:
            yield ()
        return
    if nvars == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _monomials_of_degree(nvars - 1, d - e):
            yield (e,) + rest


def _mul_mono(v: dict, q: tuple) -> dict:
    return {(m[0],) + tuple(a + b for a, b in zip(q, m[1:])): c for m, c in v.items()}


def minimal_generators(elems: Sequence[dict], shifts: Sequence[int], nvars: int,
                       field: Field) -> list:
    """A minimal homogeneous generating set chosen greedily by degree.

    An element is kept when it is not in the K-span of the degree-d part
    of the submodule generated by the elements kept so far.
    """
    elems = [e for e in elems if e]
    degs = [element_degree(e, shifts) for e in elems]
    order = ModuleOrder(shifts)
    kept: list = []
    kept_deg: list = []
    for d in sorted(set(degs)):
        echelon: list = []

        def add_row(v):
            r = reduce_raw(v, echelon, order, field, _EXACT)
            if r:
                lm = max(r, key=order.key)
                inv = field.inv(r[lm])
                if field.p is None:
                    r = {m: c * inv for m, c in r.items()}
                else:
                    r = {m: c * inv % field.p for m, c in r.items()}
                echelon.append((lm, r))
                return True
            return False

        for k, kd in zip(kept, kept_deg):
            for q in _monomials_of_degree(nvars, d - kd):
                add_row(_mul_mono(k, q))
        for e, ed in zip(elems, degs):
            if ed == d and add_row(e):
                kept.append(e)
                kept_deg.append(d)
    return kept


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def remaining(self):
        if self.limit is None:
            return None
        left = self.limit - self.used
        if left <= 0:
            raise BudgetExceeded(f"resolution exceeded {self.limit} S-pair reductions")
        return left


def syzygies(gens: Sequence[dict], target_shifts: Sequence[int], nvars: int, field: Field,
             budget: _Budget | None = None) -> tuple:
    """Generators (a Groebner basis) of the syzygy module of ``gens`` in R^t.

    Returns ``(syz, source_shifts)`` with source_shifts[j] = degree of gens[j].
    """
    k = len(target_shifts)
    t = len(gens)
    src = [element_degree(g, target_shifts) for g in gens]
    shifts = list(target_shifts) + src
    order = ModuleOrder(shifts, elim=k)
    zero = (0,) * nvars
    rows = []
    for j, g in enumerate(gens):
        row = dict(g)
        row[(k + j,) + zero] = field(1)
        rows.append(row)
    stats: dict = {}
    limit = budget.remaining() if budget is not None else None
    try:
        gb = groebner_raw(rows, order, field, MODULE_OPS, budget=limit, stats=stats)
    finally:
        if budget is not None:
            budget.used += stats.get("spairs", 0)
    syz = []
    for f in gb:
        if all(m[0] >= k for m in f):
            syz.append({(m[0] - k,) + m[1:]: c for m, c in f.items()})
    return syz, src


@dataclass(frozen=True)
class FreeResolution:
    """Minimal graded free resolution F_0 <- F_1 <- ... of R/I.

    ``differentials[i]`` lists the columns of d_{i+1}: F_{i+1} -> F_i, each a
    module element of F_i. ``degrees[i]`` are the generator degrees of F_i.
    """

    betti_ranks: tuple
    degrees: tuple
    differentials: tuple
    nvars: int
    field: Field

    @property
    def length(self) -> int:
        return len(self.betti_ranks) - 1

    pd = length

    def graded_betti(self) -> dict:
        table: dict = {}
        for i, ds in enumerate(self.degrees):
            for d in ds:
                table[(i, d)] = table.get((i, d), 0) + 1
        return table

    def is_complex(self) -> bool:
        """Check d_i o d_{i+1} = 0 for all consecutive differentials."""
        p = self.field.p
        for i in range(len(self.differentials) - 1):
            d_lo, d_hi = self.differentials[i], self.differentials[i + 1]
            for col in d_hi:
                acc: dict = {}
                for m, c in col.items():
                    j, q = m[0], m[1:]
                    for tm, tc in d_lo[j].items():
                        key = (tm[0],) + tuple(a + b for a, b in zip(q, tm[1:]))
                        v = acc.get(key, 0) + c * tc
                        acc[key] = v % p if p is not None else v
                if any(acc.values()):
                    return False
        return True


def projective_dimension(I, budget: int | None = DEFAULT_RESOLUTION_BUDGET) -> FreeResolution:
    """Minimal free resolution of R/I for a homogeneous ideal I.

    Raises :class:`BudgetExceeded` rather than returning a truncated answer.
    """
    from .groebner import Ideal
    if not isinstance(I, Ideal):
        I = Ideal(list(I))
    gens = [g for g in I.generators if g]
    N, field = I.nvars, I.field
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError("projective_dimension needs a homogeneous ideal")
        if g.degree() == 0:
            raise ValueError("unit ideal: R/I = 0 has no finite resolution to report")
    if not gens:
        return FreeResolution((1,), ((0,),), (), N, field)
    bud = _Budget(budget)
    current = [{(0,) + m: c for m, c in g.terms.items()} for g in gens]
    current = minimal_generators(current, [0], N, field)
    target = [0]
    ranks = [1]
    degrees = [(0,)]
    maps = []
    while current:
        src = [element_degree(v, target) for v in current]
        ranks.append(len(current))
        degrees.append(tuple(src))
        maps.append(tuple(current))
        if len(ranks) > N + 2:
            raise RuntimeError("resolution longer than the number of variables allows")
        syz, src = syzygies(current, target, N, field, bud)
        current = minimal_generators(syz, src, N, field)
        target = src
    return FreeResolution(tuple(ranks), tuple(degrees), tuple(maps), N, field)


def module_element_to_polys(v: dict, rank: int, nvars: int, field: Field) -> list:
    """Split a module element into its coordinate polynomials."""
    parts: list = [dict() for _ in range(rank)]
    for m, c in v.items():
        parts[m[0]][m[1:]] = c
    return [Polynomial(t, nvars, field, _clean=True) for t in parts]


def colon(ideal_gens: Sequence[Polynomial], f: Polynomial, nvars: int, field: Field,
          budget: int | None = DEFAULT_RESOLUTION_BUDGET) -> list:
    """Generators of (I : f) for homogeneous I and f, from the syzygies of [f, I]."""
    gens = [f] + [g for g in ideal_gens if g]
    elems = [{(0,) + m: c for m, c in g.terms.items()} for g in gens]
    syz, _ = syzygies(elems, [0], nvars, field, _Budget(budget))
    out = []
    for v in syz:
        terms = {m[1:]: c for m, c in v.items() if m[0] == 0}
        if terms:
            out.append(Polynomial(terms, nvars, field, _clean=True))
    return out


def is_regular_on_quotient(ideal_gens: Sequence[Polynomial], seq: Sequence[Polynomial],
                           nvars: int, field: Field) -> bool:
    """Exact test that ``seq`` is a regular sequence on R/I (homogeneous data).

    Each element must be a nonzerodivisor modulo I plus its predecessors,
    i.e. (J : g) = J, and the final quotient must be nonzero.
    """
    from .groebner import Ideal, normal_form
    current = [g for g in ideal_gens if g]
    for g in seq:
        J = Ideal(current, nvars, field)
        gb = J.groebner()
        if gb.is_unit():
            return False
        for a in colon(current, g, nvars, field):
            if not normal_form(a, gb).is_zero():
                return False
        current = current + [g]
    return not Ideal(current, nvars, field).groebner().is_unit()
