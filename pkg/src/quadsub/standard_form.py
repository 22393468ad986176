"""Normalizing a sequence of linear and quadratic forms, and the variables, into standard form.

After normalization the variables split into consecutive blocks

    leading  x_1..x_m       the linear forms themselves
    front    u_1..u_h       where F_1..F_h restrict to a system of parameters
    primary  v_1..v_r       span the coefficients of leading/front variables
    secondary w_1..w_s      span the coefficients of the primary variables
    tail     everything from w_1 on (tails include the secondaries)

and every quadric splits as F_i = f_i + e_i + g_i with f_i in K[u] (front
polynomial), g_i in K[tail] (tail polynomial) and e_i in the ideal
(x, v) of K[x, u, v, w].
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import GenericityError, InvariantViolation
from .field import GENERICITY_FLOOR
from .groebner import (Ideal, dimension, front_relations, height, height_after_killing,
                       ideal_equal, is_regular_sequence)
from .linalg import (LinearChange, complete_rows, express, independent_subset, inverse,
                     rank, span_basis)
from .poly import Polynomial

DEFAULT_RETRY_BUDGET = 25


@dataclass(frozen=True)
class StandardFormState:
    forms: tuple            # F_1..F_n (quadrics or 0), then x_1..x_m
    nvars: int
    m: int
    n: int
    h: int
    d: int
    r: int
    s: int
    front_polys: tuple      # in K[u_1..u_h]
    tail_polys: tuple       # in K[tail variables]
    P: Ideal                # front relations, in K[T_1..T_n]
    change: LinearChange    # forms(y) come from the input via input(change y)
    input_forms: tuple = dc_field(compare=False)
    notes: tuple = dc_field(default=(), compare=False)

    @property
    def field(self):
        return self.change.field

    @property
    def quadrics(self) -> tuple:
        return self.forms[:self.n]

    @property
    def leading(self) -> list:
        return list(range(self.m))

    @property
    def front(self) -> list:
        return list(range(self.m, self.m + self.h))

    @property
    def primary(self) -> list:
        a = self.m + self.h
        return list(range(a, a + self.r))

    @property
    def secondary(self) -> list:
        a = self.m + self.h + self.r
        return list(range(a, a + self.s))

    @property
    def tail(self) -> list:
        return list(range(self.m + self.h + self.r, self.nvars))

    def variable(self, i: int) -> Polynomial:
        return Polynomial.variable(i, self.nvars, self.field)

    def lift(self, f: Polynomial) -> Polynomial:
        """Express a polynomial in standard-form coordinates in the input coordinates."""
        return self.change.inverse().apply(f)


# ---------------------------------------------------------------- helpers

def _quad_monomials(N):
    out = []
    for i in range(N):
        for j in range(i, N):
            e = [0] * N
            e[i] += 1
            e[j] += 1
            out.append(tuple(e))
    return out


def _quad_vector(f: Polynomial, monos):
    return [f.coefficient(m) for m in monos]


def _coefficient_forms(F: Polynomial, rows: Sequence[int], cols: Sequence[int]) -> list:
    """For each variable a in ``rows``: sum over b in ``cols`` of coef(x_a x_b) x_b."""
    cs = set(cols)
    out = []
    for a in rows:
        terms = {}
        for mono, c in F.terms.items():
            if not mono[a]:
                continue
            rest = list(mono)
            rest[a] -= 1
            b = next((i for i, e in enumerate(rest) if e), None)
            if b is not None and b in cs and b != a:
                terms[tuple(rest)] = c
        if terms:
            out.append(Polynomial(terms, F.nvars, F.field, _clean=True))
    return out


def _validate(F: Sequence[Polynomial]):
    if not F:
        raise ValueError("need at least one form")
    N, field = F[0].nvars, F[0].field
    for f in F:
        if f.nvars != N or f.field != field:
            raise ValueError("forms live in different rings")
        if f.is_zero():
            continue
        if not f.is_homogeneous():
            raise ValueError(f"form {f} is not homogeneous")
        if f.degree() > 2:
            raise ValueError(f"form {f} has degree {f.degree()} > 2")
        if f.degree() == 0:
            raise ValueError("constant forms are not allowed")
    return N, field


def _zeros_last(quads):
    nz = [q for q in quads if q]
    return nz + [q for q in quads if not q]


# ---------------------------------------------------------------- main construction

def achieve_standard_form(F: Sequence[Polynomial], seed: int = 0,
                          retry_budget: int = DEFAULT_RETRY_BUDGET, pinned: int = 0,
                          rng: random.Random | None = None,
                          check: bool = True) -> StandardFormState:
    """Put the forms ``F`` and the variables in standard form.

    ``pinned`` fixes the first quadric slots: they must already restrict to a
    regular sequence of length h modulo the linear forms, and are never
    recombined (used when re-normalizing tail polynomials).
    """
    F = list(F)
    N, field = _validate(F)
    if not field.size_ok_for_genericity(GENERICITY_FLOOR):
        raise ValueError(f"field F_{field.p} is below the genericity floor {GENERICITY_FLOOR}")
    rng = rng if rng is not None else random.Random(seed)
    notes = []

    # (i) linear-dependence cleanup
    linear = [f for f in F if f and f.degree() == 1]
    quads = [f for f in F if f and f.degree() == 2]
    lin_rows = [f.linear_coefficients() for f in linear]
    keep_lin = independent_subset(lin_rows, field)
    basis_lin = [linear[i] for i in keep_lin]
    m = len(basis_lin)
    n = len(F) - m
    qmonos = _quad_monomials(N)
    keep_q = independent_subset([_quad_vector(q, qmonos) for q in quads], field)
    if pinned and keep_q[:pinned] != list(range(pinned)):
        raise InvariantViolation("pinned quadrics are linearly dependent")
    quads = [quads[i] for i in keep_q]
    zero = Polynomial.zero(N, field)
    quads = quads + [zero] * (n - len(quads))

    # (ii) the linear forms become the leading variables
    rows, _ = complete_rows([f.linear_coefficients() for f in basis_lin], N, field)
    change = LinearChange.new_coordinates(rows, field)
    quads = change.apply_all(quads)
    lead = list(range(m))

    # (iii) drop terms involving only leading variables
    rest = set(range(m, N))
    quads = [Polynomial({mo: c for mo, c in q.terms.items()
                         if any(mo[i] for i in rest)}, N, field, _clean=True) for q in quads]
    if pinned:
        if any(not q for q in quads[:pinned]):
            raise InvariantViolation("a pinned quadric vanished modulo the leading variables")
    quads = _zeros_last(quads)

    # (iv) maximal regular sequence modulo the leading variables
    h = height_after_killing(Ideal(quads, N, field), lead) if any(quads) else 0
    quads = _regular_prefix(quads, h, lead, N, field, rng, retry_budget, pinned, notes)

    # (v) extend to a homogeneous system of parameters by linear forms
    block = list(range(m, N))
    if h or len(block):
        ells = _hsop_extension(quads[:h], lead, block, h, N, field, rng, retry_budget, notes)
        full, added = complete_rows(ells, len(block), field)
        units = full[len(ells):]
        sub_rows = units + ells  # front coordinates first, then the new trailing variables
        sub = inverse(sub_rows, field)
        ch = LinearChange.on_block(N, block, sub, field)
        quads = ch.apply_all(quads)
        change = change.then(ch)

    front = list(range(m, m + h))

    # (vi) f_1..f_d a basis of the front span, f_i = 0 beyond
    quads, d = _front_basis(quads, h, front, field)

    # (vii) primary extension variables
    lu = list(range(m + h))
    block = list(range(m + h, N))
    coeffs = [c for q in quads for c in _coefficient_forms(q, lu, block)]
    r, ch = span_basis(coeffs, block, N, field)
    quads = ch.apply_all(quads)
    change = change.then(ch)

    # (viii) secondary extension variables; the change fixes v_1..v_r
    prim = list(range(m + h, m + h + r))
    block = list(range(m + h + r, N))
    coeffs = [c for q in quads for c in _coefficient_forms(q, prim, block)]
    s, ch = span_basis(coeffs, block, N, field)
    quads = ch.apply_all(quads)
    change = change.then(ch)

    leading_vars = [Polynomial.variable(i, N, field) for i in lead]
    forms = tuple(quads) + tuple(leading_vars)
    tail = list(range(m + h + r, N))
    front_polys = tuple(q.restrict(front) for q in quads)
    tail_polys = tuple(q.restrict(tail) for q in quads)
    if n:
        P = front_relations(list(front_polys))
    else:
        P = Ideal([], 0, field)
    state = StandardFormState(forms, N, m, n, h, d, r, s, front_polys, tail_polys, P,
                              change, tuple(F), tuple(notes))
    if check:
        failures = check_standard_form(state)
        if failures:
            raise InvariantViolation("standard form violated: " + "; ".join(failures))
    return state


def _regular_prefix(quads, h, lead, N, field, rng, budget, pinned, notes):
    """Arrange that the first h quadrics restrict to a regular sequence mod the leading variables."""
    if h == 0:
        return quads

    def good(qs):
        return height_after_killing(Ideal(qs[:h], N, field), lead) == h

    if pinned:
        if pinned < h or not good(quads):
            raise InvariantViolation("pinned quadrics do not form a regular sequence "
                                     "of the required length")
        return quads
    nz = [q for q in quads if q]
    zeros = quads[len(nz):]
    # sparse attempt: greedy selection among the given quadrics
    chosen: list = []
    for i, q in enumerate(nz):
        trial = [nz[j] for j in chosen] + [q]
        if height_after_killing(Ideal(trial, N, field), lead) == len(trial):
            chosen.append(i)
            if len(chosen) == h:
                break
    if len(chosen) == h:
        order = chosen + [i for i in range(len(nz)) if i not in chosen]
        return [nz[i] for i in order] + zeros
    k = len(nz)
    for _ in range(budget):
        M = [[field.random_element(rng) for _ in range(k)] for _ in range(k)]
        if rank(M, field) < k:
            continue
        mixed = []
        for row in M:
            acc = Polynomial.zero(N, field)
            for c, q in zip(row, nz):
                if c:
                    acc = acc + q.scale(c)
            mixed.append(acc)
        if good(mixed):
            notes.append("random combination of quadrics")
            return mixed + zeros
    raise GenericityError(f"no regular sequence of length {h} found in {budget} random "
                          "combinations; use a larger field")


def _hsop_extension(first, lead, block, h, N, field, rng, budget, notes):
    """Linear forms (coefficient rows on ``block``) completing F_1..F_h mod leading vars to an hsop."""
    nb = len(block)
    images = [q.restrict(block) for q in first]
    need = nb - h
    ells: list = []
    current = Ideal(images, nb, field) if images else Ideal([], nb, field)
    dim = dimension(current)
    if dim != nb - h:
        raise InvariantViolation(f"expected dimension {nb - h} modulo leading variables, got {dim}")

    def try_form(row):
        lf = Polynomial.linear(row, field)
        gens = current.generators + [lf]
        J = Ideal(gens, nb, field)
        return J, dimension(J)

    for k in range(need):
        target = nb - h - k - 1
        found = None
        # sparse candidates first: single variables
        for j in range(nb):
            row = [field(1) if t == j else field(0) for t in range(nb)]
            J, dj = try_form(row)
            if dj == target:
                found = (row, J)
                break
        if found is None:
            for _ in range(budget):
                row = [field.random_element(rng) for _ in range(nb)]
                J, dj = try_form(row)
                if dj == target:
                    found = (row, J)
                    notes.append("random hsop linear form")
                    break
        if found is None:
            raise GenericityError("could not extend to a homogeneous system of parameters "
                                  f"within {budget} random linear forms")
        ells.append(found[0])
        current = found[1]
    return ells


def _front_basis(quads, h, front, field):
    """Reorder/reduce F_{h+1}..F_n so f_1..f_d are independent and f_i = 0 for i > d."""
    n = len(quads)
    quads = list(quads)
    fr = [q.restrict(front) for q in quads]
    monos = sorted({mo for f in fr for mo in f.terms})

    def vec(f):
        return [f.coefficient(mo) for mo in monos]

    basis = list(range(h))
    if rank([vec(fr[i]) for i in basis], field) != h:
        raise InvariantViolation("front polynomials of the regular prefix are dependent")
    reduced = []
    for i in range(h, n):
        lam = express(vec(fr[i]), [vec(fr[j]) for j in basis], field)
        if lam is None:
            basis.append(i)
        else:
            q = quads[i]
            for c, j in zip(lam, basis):
                if c:
                    q = q - quads[j].scale(c)
            quads[i] = q
            reduced.append(i)
    d = len(basis)
    rest = [quads[i] for i in reduced]
    order = [quads[i] for i in basis] + [q for q in rest if q] + [q for q in rest if not q]
    return order, d


# ---------------------------------------------------------------- checks

def check_standard_form(st: StandardFormState) -> list:
    """Return the list of violated standard-form conditions (empty when all hold)."""
    fails = []
    N, field, m, n, h = st.nvars, st.field, st.m, st.n, st.h
    quads, lin = st.forms[:n], st.forms[n:]
    # (1)
    if len(lin) != m or any(lin[i] != st.variable(i) for i in range(m)):
        fails.append("(1) trailing forms are not the leading variables")
    if any(q and not q.is_homogeneous(2) for q in quads):
        fails.append("(1) a quadric slot holds a non-quadric")
    # (2)
    for q in quads:
        if any(not any(mo[i] for i in range(m, N)) for mo in q.terms):
            fails.append("(2) a quadric has a monomial in the leading variables only")
            break
    # (3)
    seq = list(quads[:h]) + [st.variable(i) for i in range(m)] + \
        [st.variable(i) for i in range(m + h, N)]
    if seq and not is_regular_sequence(seq).verdict:
        fails.append("(3) F_1..F_h, leading and trailing variables are not a regular sequence")
    # (4)
    if st.r > (m + h) * n:
        fails.append(f"(4) r = {st.r} exceeds (m+h)n")
    allowed = set(st.primary)
    beyond = set(range(m + h, N))
    for q in quads:
        for c in _coefficient_forms(q, range(m + h), beyond):
            if c.support() - allowed:
                fails.append("(4) a leading/front coefficient leaves the primary span")
                break
    # (5)
    if st.s > (m + h) * n * n:
        fails.append(f"(5) s = {st.s} exceeds (m+h)n^2")
    allowed = set(st.secondary)
    beyond = set(st.tail)
    for q in quads:
        for c in _coefficient_forms(q, st.primary, beyond):
            if c.support() - allowed:
                fails.append("(5) a primary coefficient leaves the secondary span")
                break
    # (6)
    if not h <= st.d <= n:
        fails.append(f"(6) d = {st.d} outside [h, n]")
    fr = st.front_polys
    monos = sorted({mo for f in fr for mo in f.terms})
    vecs = [[f.coefficient(mo) for mo in monos] for f in fr[:st.d]]
    if vecs and rank(vecs, field) != st.d:
        fails.append("(6) f_1..f_d are dependent")
    if any(f for f in fr[st.d:]):
        fails.append("(6) some f_i with i > d is nonzero")
    return fails


def same_ideal_as_input(st: StandardFormState) -> bool:
    """The forms generate the transformed input ideal (reduced GB comparison)."""
    moved = st.change.apply_all(list(st.input_forms))
    return ideal_equal(list(st.forms), moved, st.nvars, st.field)


# ---------------------------------------------------------------- key lemma

@dataclass(frozen=True)
class KeyLemmaReport:
    hsop_ok: bool
    decomposition_ok: bool
    front_relations_satisfied: bool
    high_tails_vanish: bool
    P_height: int
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return (self.hsop_ok and self.decomposition_ok and self.front_relations_satisfied
                and self.high_tails_vanish)


def key_lemma_check(st: StandardFormState) -> KeyLemmaReport:
    field, N, m, h, n = st.field, st.nvars, st.m, st.h, st.n
    failures = []
    # (a)
    if h:
        a_ok = dimension(Ideal(list(st.front_polys[:h]), h, field)) == 0
    else:
        a_ok = True
    P_height = height(st.P) if n else 0
    if a_ok and P_height != n - h:
        failures.append(f"(a) P has height {P_height}, expected {n - h}")
        a_ok = False
    elif not a_ok:
        failures.append("(a) f_1..f_h is not a system of parameters")
    # (b)
    b_ok = True
    inner = set(range(m + h + st.r + st.s))
    xv = set(st.leading) | set(st.primary)
    for q, f, g in zip(st.quadrics, st.front_polys, st.tail_polys):
        e = q - f.embed(st.front, N) - g.embed(st.tail, N)
        if e.support() - inner:
            b_ok = False
        if any(not any(mo[i] for i in xv) for mo in e.terms):
            b_ok = False
    if not b_ok:
        failures.append("(b) e_i is not in the ideal (x, v) of K[x, u, v, w]")
    # (c)
    c_ok = True
    tails = list(st.tail_polys)
    if n:
        for H in st.P.generators:
            if tails and H.compose(tails):
                c_ok = False
                break
    if not c_ok:
        failures.append("(c) a front relation does not vanish on the tails")
    # (d)
    d_ok = not any(g for g in st.tail_polys[st.d:])
    if not d_ok:
        failures.append("(d) a tail polynomial beyond d is nonzero")
    return KeyLemmaReport(a_ok, b_ok, c_ok, d_ok, P_height, tuple(failures))
