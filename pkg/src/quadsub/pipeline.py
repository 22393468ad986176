"""From a problem file to a verified certificate document."""
from __future__ import annotations

import time
from dataclasses import replace
from typing import Sequence

from .bounds import bound_B, bound_C, bound_C0
from .io import CertificateDocument, ProblemFile, tag_names
from .poly import Polynomial
from .resolution import DEFAULT_RESOLUTION_BUDGET
from .standard_form import DEFAULT_RETRY_BUDGET
from .subalgebra import pd_bound_check, small_subalgebra, verify_certificate


def homogenize_split(F: Sequence[Polynomial]) -> tuple:
    """Split inputs of degree <= 2 into nonzero homogeneous parts of degree 1 and 2.

    Returns ``(forms, unit)``; ``unit`` is True when some input is a nonzero
    constant, so that the ideal is the whole ring.
    """
    forms = []
    unit = False
    for f in F:
        if f.degree() > 2:
            raise ValueError(f"{f} has degree above 2")
        if f.degree() == 0:
            unit = True
            continue
        for d in (2, 1):
            part = f.homogeneous_part(d)
            if part and part not in forms:
                forms.append(part)
    return forms, unit


def _bounds(m, n, h):
    s = m + n
    admissible = h <= n - 1 and s >= 1
    return (("B", bound_B(m, n, h)), ("C", bound_C(s) if admissible else None),
            ("C0", bound_C0(s) if admissible else None))


def run_pipeline(problem: ProblemFile, seed: int | None = None, retries: int | None = None,
                 verify_level: int | None = None, resolution_budget: int | None = None,
                 timing: bool = False) -> CertificateDocument:
    """Certify and verify ``problem``; explicit arguments override the file's options.

    Genericity exhaustion and invariant violations propagate as exceptions.
    A failed check is recorded in the document with verdict ``fail``.
    """
    t0 = time.perf_counter()
    seed = seed if seed is not None else (problem.seed or 0)
    retries = retries if retries is not None else (problem.retries or DEFAULT_RETRY_BUDGET)
    level = verify_level if verify_level is not None else problem.verify_level
    if resolution_budget is None:
        resolution_budget = problem.resolution_budget or DEFAULT_RESOLUTION_BUDGET
    forms, unit = homogenize_split(problem.forms)
    doc = CertificateDocument(field=problem.field, names=problem.names, seed=seed,
                              retries=retries, resolution_budget=resolution_budget,
                              verify_level=level, inputs=problem.forms, forms=tuple(forms),
                              unit_ideal=unit)
    if unit:
        doc = replace(doc, forms=(), pd=0, pd_status="unit ideal",
                      checks=(("pipeline", "skipped"),), verdict="unit-ideal")
        return _stamp(doc, t0, timing)
    if not forms:
        zero = Polynomial.zero(problem.nvars, problem.field)
        forms = [zero]
    cert = small_subalgebra(forms, seed=seed, retry_budget=retries)
    gens = cert.generators
    tags = tag_names(len(gens), problem.names)
    ver = verify_certificate(forms, cert, check_bounds=level >= 2)
    checks = [("regular-sequence", _status(ver.regular_sequence)),
              ("containment", _status(ver.containment)),
              ("condition3", _status(ver.condition3)),
              ("bounds", _status(ver.bounds) if level >= 2 else "not-run")]
    reasons = list(ver.reasons)
    pd, pd_status = None, "not-run"
    if level >= 3:
        chk = pd_bound_check(forms, cert, budget=resolution_budget)
        pd = chk.pd
        if chk.ok is None:
            pd_status = chk.status
            checks.append(("pd", "skipped"))
        else:
            pd_status = "betti " + " ".join(map(str, chk.betti)) if chk.betti else chk.status
            checks.append(("pd", _status(chk.ok)))
            if not chk.ok:
                reasons.append(f"pd={chk.pd} exceeds a bound (b+c={chk.regseq_bound}, "
                               f"B(0,n,h)+m+h={chk.bound}, C0={chk.c0})")
    ok = all(v in ("pass", "skipped", "not-run") for _, v in checks)
    nz = [f for f in forms if f]
    exprs = tuple(e for e in ver.expressions) if nz else ()
    doc = replace(doc, forms=tuple(nz), m=cert.m, n=cert.n, h=cert.h,
                  variables=cert.variables, quadrics=cert.quadrics, trace=cert.case_trace,
                  tags=tags, expressions=exprs, bounds=_bounds(cert.m, cert.n, cert.h),
                  checks=tuple(checks), pd=pd, pd_status=pd_status, reasons=tuple(reasons),
                  verdict="pass" if ok else "fail")
    return _stamp(doc, t0, timing)


def _status(flag: bool) -> str:
    return "pass" if flag else "fail"


def _stamp(doc, t0, timing):
    if timing:
        return replace(doc, timing=round(time.perf_counter() - t0, 6))
    return doc


def verify_document(doc: CertificateDocument) -> list:
    """Re-check a document from its own contents; returns the list of problems found."""
    problems = []
    if doc.unit_ideal:
        if not any(f.degree() == 0 for f in doc.inputs):
            problems.append("unit-ideal flag without a constant input")
        return problems
    forms, _ = homogenize_split(doc.inputs)
    if tuple(forms) != doc.forms:
        problems.append("forms are not the homogeneous parts of the inputs")
    if not doc.forms:
        return problems
    cert = doc.certificate()
    ver = verify_certificate(list(doc.forms), cert, check_bounds=doc.verify_level >= 2)
    problems.extend(ver.reasons)
    gens = list(doc.generators)
    if len(doc.tags) != len(gens):
        problems.append(f"{len(doc.tags)} tag names for {len(gens)} generators")
    elif len(doc.expressions) != len(doc.forms):
        problems.append("one expression per form expected")
    else:
        for f, e in zip(doc.forms, doc.expressions):
            if e is None or (e.compose(gens) if gens else e) != f:
                problems.append(f"recorded expression does not give {f.to_str(doc.names)}")
    if doc.bounds != _bounds(doc.m, doc.n, doc.h):
        problems.append("recorded bounds disagree with the bounds module")
    if doc.verdict != "pass":
        problems.append(f"verdict is {doc.verdict}")
    return problems
