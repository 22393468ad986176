"""Certificates that forms of degree <= 2 lie in a small subalgebra generated by a regular sequence.

:func:`small_subalgebra` runs the recursion on the height h of the
quadrics modulo the linear forms. Each level normalizes into standard
form and inspects the height h' of the tail polynomials modulo the
secondary extension variables:

* h' < h (``Case1``): recurse on the tails and the secondaries;
* h' = h: normalize the tails again with g_1..g_h held fixed and look at
  the new tails' height h''. If h'' < h (``Case2a``) recurse one level
  deeper, otherwise (``Case2b``) d = h and F_1..F_h finish the job.

:func:`verify_certificate` re-derives every claim from Groebner-basis
primitives and trusts nothing produced by the pipeline.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .bounds import bound_B, bound_C, bound_C0
from .errors import InvariantViolation
from .groebner import (BudgetExceeded, Ideal, height, is_regular_sequence, normal_form,
                       subalgebra_membership)
from .linalg import LinearChange, complete_rows, independent_subset, rank
from .poly import Polynomial
from .resolution import DEFAULT_RESOLUTION_BUDGET, is_regular_on_quotient, projective_dimension
from .standard_form import DEFAULT_RETRY_BUDGET, StandardFormState, achieve_standard_form

CASES = ("AlreadyRegular", "BaseH0", "Case1", "Case2a", "Case2b")


@dataclass(frozen=True)
class Invariants:
    """m, n and h of a list of forms (zero forms are ignored)."""

    m: int
    n: int
    h: int


def invariants(F: Sequence[Polynomial]) -> Invariants:
    nz = [f for f in F if f]
    if not nz:
        return Invariants(0, 0, 0)
    lin = [f for f in nz if f.degree() == 1]
    m = rank([f.linear_coefficients() for f in lin], nz[0].field) if lin else 0
    n = len(nz) - len(lin)
    h = height(Ideal(nz)) - m
    return Invariants(m, n, h)


@dataclass(frozen=True)
class SubalgebraCertificate:
    variables: tuple        # linear forms, original coordinates
    quadrics: tuple         # quadratic forms in I
    case_trace: tuple       # (case, h) pairs in recursion order
    m: int
    n: int
    h: int
    nvars: int
    field: object = dc_field(compare=True)

    @property
    def b(self) -> int:
        return len(self.variables)

    @property
    def c(self) -> int:
        return len(self.quadrics)

    @property
    def bound_B(self) -> int:
        return bound_B(self.m, self.n, self.h)

    @property
    def bound_C(self) -> int | None:
        s = self.m + self.n
        return bound_C(s) if s >= 1 else None

    @property
    def bound_C0(self) -> int | None:
        s = self.m + self.n
        return bound_C0(s) if s >= 1 else None

    @property
    def generators(self) -> list:
        return list(self.variables) + list(self.quadrics)

    @property
    def cases(self) -> list:
        return [c for c, _ in self.case_trace]


# ---------------------------------------------------------------- recursion

def _tail_height(st: StandardFormState) -> int:
    """Height of the tail polynomials modulo the secondary variables, in the tail ring."""
    T = len(st.tail)
    keep = list(range(st.s, T))
    image = [g.restrict(keep) for g in st.tail_polys]
    image = [g for g in image if g]
    if not image:
        return 0
    return height(Ideal(image, len(keep), st.field))


def _tail_inputs(st: StandardFormState) -> list:
    T = len(st.tail)
    ws = [Polynomial.variable(j, T, st.field) for j in range(st.s)]
    return list(st.tail_polys) + ws


def _embed_all(polys, positions, nvars):
    return [p.embed(positions, nvars) for p in polys]


def _dedupe_linear(forms: list) -> list:
    if not forms:
        return []
    rows = [f.linear_coefficients() for f in forms]
    return [forms[i] for i in independent_subset(rows, forms[0].field)]


def _certify(F: list, rng: random.Random, retry_budget: int, trace: list) -> tuple:
    """(variables, quadrics) for the forms F, in F's own coordinates."""
    nz = [f for f in F if f]
    if not nz:
        trace.append(("AlreadyRegular", 0))
        return [], []
    N, field = nz[0].nvars, nz[0].field
    nz = _prune_dependent(nz)
    inv = invariants(nz)
    if is_regular_sequence(nz).verdict:
        trace.append(("AlreadyRegular", inv.h))
        return ([f for f in nz if f.degree() == 1], [f for f in nz if f.degree() == 2])
    if inv.h == 0:
        trace.append(("BaseH0", 0))
        return _base_case(nz), []

    h = inv.h
    st = achieve_standard_form(nz, rng=rng, retry_budget=retry_budget)
    if st.h != h:
        raise InvariantViolation(f"standard form found h={st.h}, expected {h}")
    y_basic = [st.variable(i) for i in st.leading + st.front + st.primary]
    h1 = _tail_height(st)
    if h1 < h:
        trace.append(("Case1", h))
        sub = _tail_inputs(st)
        _check_descent(sub, h, st)
        v2, q2 = _certify(sub, rng, retry_budget, trace)
        vs = y_basic + _embed_all(v2, st.tail, N)
        qs = _embed_all(q2, st.tail, N)
        return _dedupe_linear([st.lift(v) for v in vs]), [st.lift(q) for q in qs]
    if h1 != h:
        raise InvariantViolation(f"tail height {h1} exceeds h={h}")

    # Case 2: renormalize the tails with g_1..g_h pinned
    sub = _tail_inputs(st)
    T = len(st.tail)
    st2 = achieve_standard_form(sub, rng=rng, retry_budget=retry_budget, pinned=h)
    if st2.m != st.s or st2.h != h:
        raise InvariantViolation(f"second standard form has m={st2.m}, h={st2.h}; "
                                 f"expected m={st.s}, h={h}")
    h2 = _tail_height(st2)
    if h2 < h:
        trace.append(("Case2a", h))
        sub2 = _tail_inputs(st2)
        _check_descent(sub2, h, st2)
        v3, q3 = _certify(sub2, rng, retry_budget, trace)
        inner = [st2.variable(i) for i in st2.leading + st2.front + st2.primary]
        inner += _embed_all(v3, st2.tail, T)
        inner_q = _embed_all(q3, st2.tail, T)
        # st2 coordinates -> tail ring -> st coordinates
        inner = _embed_all([st2.lift(v) for v in inner], st.tail, N)
        inner_q = _embed_all([st2.lift(q) for q in inner_q], st.tail, N)
        vs = y_basic + inner
        return _dedupe_linear([st.lift(v) for v in vs]), [st.lift(q) for q in inner_q]
    if h2 != h:
        raise InvariantViolation(f"second tail height {h2} exceeds h={h}")
    trace.append(("Case2b", h))
    if st.d != h:
        raise InvariantViolation(f"Case 2b requires d = h, found d={st.d}, h={h}")
    vs = y_basic + [st.variable(i) for i in st.secondary]
    # F_i and g_i differ by elements of K[x, u, v, w], so F_1..F_h serve as the quadrics
    qs = list(st.quadrics[:h])
    return _dedupe_linear([st.lift(v) for v in vs]), [st.lift(q) for q in qs]


def _prune_dependent(nz: list) -> list:
    """Drop forms that are K-linear combinations of other forms of the same degree.

    Neither the ideal nor the subalgebra generated changes.
    """
    field = nz[0].field
    out = []
    for d in (1, 2):
        forms = [f for f in nz if f.degree() == d]
        if not forms:
            continue
        monos = sorted({mo for f in forms for mo in f.terms})
        rows = [[f.coefficient(mo) for mo in monos] for f in forms]
        out += [forms[i] for i in independent_subset(rows, field)]
    return out


def _check_descent(sub: list, h: int, outer: StandardFormState):
    """The sub-instance must have smaller h and fit the budget B((m+h)n^2, n, h-1)."""
    inner = invariants([f for f in sub if f]) if any(sub) else Invariants(0, 0, 0)
    if inner.h >= h:
        raise InvariantViolation(f"recursion does not lower h ({inner.h} >= {h})")
    n = outer.n
    m_cap = (outer.m + h) * n * n
    if inner.m > m_cap or inner.n > n:
        raise InvariantViolation(f"sub-instance (m,n)=({inner.m},{inner.n}) exceeds "
                                 f"({m_cap},{n})")
    if bound_B(inner.m, n, inner.h) > bound_B(m_cap, n, h - 1):
        raise InvariantViolation("B is not monotone along the recursion")


def _base_case(nz: list) -> list:
    """h = 0: the leading variables and the linear multipliers of the quadrics."""
    N, field = nz[0].nvars, nz[0].field
    lin = [f for f in nz if f.degree() == 1]
    quads = [f for f in nz if f.degree() == 2]
    keep = independent_subset([f.linear_coefficients() for f in lin], field)
    lin = [lin[i] for i in keep]
    m = len(lin)
    rows, _ = complete_rows([f.linear_coefficients() for f in lin], N, field)
    change = LinearChange.new_coordinates(rows, field)
    quads = change.apply_all(quads)
    forms = [Polynomial.variable(i, N, field) for i in range(m)]
    for q in quads:
        multipliers: dict = {}
        for mono, c in q.terms.items():
            a = next((i for i in range(m) if mono[i]), None)
            if a is None:
                raise InvariantViolation("h = 0 but a quadric survives modulo the linear forms")
            rest = list(mono)
            rest[a] -= 1
            multipliers.setdefault(a, {})[tuple(rest)] = c
        for a in sorted(multipliers):
            forms.append(Polynomial(multipliers[a], N, field, _clean=True))
    back = change.inverse()
    return _dedupe_linear([back.apply(f) for f in forms])


def _quadrics_from_input(F: list, ys: list, quads: list) -> list:
    """Replace the certificate quadrics by input quadrics spanning the same space modulo K[y]_2."""
    inputs = [f for f in F if f and f.degree() == 2]
    if not inputs:
        return []
    N, field = inputs[0].nvars, inputs[0].field
    monos = sorted({mo for f in inputs + quads for mo in f.terms}
                   | {mo for a in ys for b in ys for mo in (a * b).terms})

    def vec(f):
        return [f.coefficient(mo) for mo in monos]

    base = [vec(a * b) for i, a in enumerate(ys) for b in ys[i:]]
    r0 = rank(base, field) if base else 0
    chosen, rows, r = [], list(base), r0
    for f in inputs:
        trial = rows + [vec(f)]
        rt = rank(trial, field)
        if rt > r:
            chosen.append(f)
            rows, r = trial, rt
    return chosen


def small_subalgebra(F: Sequence[Polynomial], seed: int = 0,
                     retry_budget: int = DEFAULT_RETRY_BUDGET) -> SubalgebraCertificate:
    """Certificate: b linear forms and c <= h quadrics in I, a regular sequence, whose algebra contains F."""
    F = list(F)
    if not F:
        raise ValueError("need at least one form")
    N, field = F[0].nvars, F[0].field
    for f in F:
        if f and (not f.is_homogeneous() or f.degree() > 2 or f.degree() == 0):
            raise ValueError(f"{f} is not a form of degree 1 or 2")
    nz = [f for f in F if f]
    inv = invariants(nz) if nz else Invariants(0, 0, 0)
    rng = random.Random(seed)
    trace: list = []
    ys, qs = _certify(nz, rng, retry_budget, trace)
    ys = _dedupe_linear(ys)
    if qs:
        qs = _quadrics_from_input(nz, ys, qs)
    return SubalgebraCertificate(tuple(ys), tuple(qs), tuple(trace), inv.m, inv.n, inv.h,
                                 N, field)


# ---------------------------------------------------------------- verification

@dataclass
class Verification:
    ok: bool = True
    reasons: list = dc_field(default_factory=list)
    regular_sequence: bool = True
    containment: bool = True
    condition3: bool = True
    bounds: bool = True
    expressions: list = dc_field(default_factory=list)

    def fail(self, what: str, reason: str):
        setattr(self, what, False)
        self.ok = False
        self.reasons.append(reason)

    def __bool__(self):
        return self.ok


def verify_certificate(F: Sequence[Polynomial], cert: SubalgebraCertificate,
                       check_bounds: bool = True) -> Verification:
    """Independent check of a certificate against the forms F."""
    out = Verification()
    F = [f for f in F if f]
    ys, qs = list(cert.variables), list(cert.quadrics)
    gens = ys + qs
    if not F:
        if gens:
            out.fail("bounds", "nonempty certificate for the zero ideal")
        return out
    N, field = F[0].nvars, F[0].field
    for y in ys:
        if not y.is_homogeneous(1) or y.is_zero():
            out.fail("regular_sequence", f"certificate variable {y} is not a linear form")
    for q in qs:
        if not q.is_homogeneous(2) or q.is_zero():
            out.fail("regular_sequence", f"certificate quadric {q} is not a quadratic form")
    if not out.ok:
        return out
    I = Ideal(F)
    for q in qs:
        if not I.contains(q):
            out.fail("containment", f"quadric {q} is not in I")

    # (1) regular sequence
    if gens and not is_regular_sequence(gens).verdict:
        out.fail("regular_sequence", "variables and quadrics are not a regular sequence")

    # (2) containment, with substitution back
    for f in F:
        mem = subalgebra_membership(f, gens)
        if not mem.member:
            out.fail("containment", f"{f} is not in the certificate subalgebra")
            out.expressions.append(None)
            continue
        back = mem.expression.compose(gens) if gens else mem.expression
        if back != f:
            out.fail("containment", f"expression for {f} does not substitute back")
        out.expressions.append(mem.expression)

    # (3) quadrics regular modulo the generators of I lying in K[y]
    in_y = [f for f in F if subalgebra_membership(f, ys).member] if ys else []
    if qs:
        if not is_regular_on_quotient(in_y, qs, N, field):
            out.fail("condition3", "quadrics are not regular modulo the generators in K[y]")
        else:
            hj = height(Ideal(in_y, N, field)) if in_y else 0
            if height(Ideal(in_y + qs, N, field)) != hj + len(qs):
                out.fail("condition3", "height does not rise by c modulo the generators in K[y]")

    if check_bounds:
        m, n, h = cert.m, cert.n, cert.h
        inv = invariants(F)
        if (inv.m, inv.n, inv.h) != (m, n, h):
            out.fail("bounds", f"certificate records (m,n,h)={(m, n, h)}, "
                               f"recomputed {(inv.m, inv.n, inv.h)}")
        B = bound_B(m, n, h)
        if cert.b > B:
            out.fail("bounds", f"b={cert.b} exceeds B({m},{n},{h})={B}")
        if cert.c > h:
            out.fail("bounds", f"c={cert.c} exceeds h={h}")
        if cert.b + cert.c > B + h:
            out.fail("bounds", f"b+c={cert.b + cert.c} exceeds B+h={B + h}")
        if h <= n - 1:
            C = bound_C(m + n)
            if B + h > C:
                out.fail("bounds", f"B+h={B + h} exceeds C({m + n})={C}")
        elif cert.b + cert.c != m + n:
            # h = n: the forms are already a regular sequence
            out.fail("bounds", f"h = n but b+c={cert.b + cert.c} differs from m+n={m + n}")
    return out


@dataclass(frozen=True)
class PdCheck:
    pd: int | None
    bound: int              # B(0,n,h) + m + h
    regseq_bound: int       # b + c of the certificate
    c0: int | None          # C0(m+n) when h <= n - 1
    ok: bool | None
    status: str
    betti: tuple = ()


def pd_bound_check(F: Sequence[Polynomial], cert: SubalgebraCertificate,
                   budget: int | None = DEFAULT_RESOLUTION_BUDGET) -> PdCheck:
    """pd(R/(F)) against b + c, B(0,n,h) + m + h and, when defined, C0(m+n)."""
    F = [f for f in F if f]
    m, n, h = cert.m, cert.n, cert.h
    bound = bound_B(0, n, h) + m + h
    c0 = bound_C0(m + n) if h <= n - 1 and m + n >= 1 else None
    regseq = cert.b + cert.c
    if not F:
        return PdCheck(0, bound, regseq, c0, True, "zero ideal")
    try:
        res = projective_dimension(Ideal(F), budget=budget)
    except BudgetExceeded as exc:
        return PdCheck(None, bound, regseq, c0, None, f"skipped: {exc}")
    pd = res.length
    ok = pd <= regseq and pd <= bound and (c0 is None or pd <= c0)
    return PdCheck(pd, bound, regseq, c0, ok, "computed", res.betti_ranks)
