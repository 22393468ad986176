"""Problem files, polynomial parsing and certificate documents.

Problem file (one directive per line, ``#`` starts a comment)::

    field 32003            # or: field Q
    vars x1 x2 x3 y
    seed 42                # optional
    form x1^2 + 2*x2*y
    form x1*x3 - y^2

Optional directives ``retries``, ``resolution-budget`` and
``verify-level`` set the remaining run options.

A certificate document is a list of ``key value`` lines; list-valued keys
are written as the bare key followed by indented ``- item`` lines. The
printer is canonical, so parsing a printed document and printing it again
reproduces the same text.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .field import Field, is_prime
from .poly import Polynomial

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^/()]))")
MAX_DEGREE = 2
DEFAULT_VERIFY_LEVEL = 2
FORMAT_HEADER = "quadsub-certificate 1"


class ParseError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based (column may be None)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" at line {line}"
            if column is not None:
                where += f", column {column}"
        super().__init__(message + where)


# ---------------------------------------------------------------- polynomials

def _tokenize(text: str, line: int, col0: int) -> list:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        mt = _TOKEN_RE.match(text, pos)
        if mt is None or mt.end() == pos:
            col = col0 + len(text[:pos]) + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", line, col)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), col0 + mt.start(kind)))
        pos = mt.end()
    return tokens


class _PolyParser:
    """Recursive descent over + - * ^, integer or a/b coefficients and parentheses."""

    def __init__(self, tokens, names, field, line, end_col):
        self.toks = tokens
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.N = len(names)
        self.field = field
        self.line = line
        self.end_col = end_col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end_col)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def parse(self) -> Polynomial:
        if not self.toks:
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] is not None:
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        p = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("exponent must be a nonnegative integer", tok)
            e = int(tok[1])
            if e > MAX_DEGREE * 4:
                self.error(f"exponent {e} is too large", tok)
            p = p ** e
        return p

    def atom(self):
        tok = self.take()
        kind, text, _ = tok
        if kind == "num":
            c = Fraction(int(text))
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.error("expected an integer denominator", den)
                if int(den[1]) == 0:
                    self.error("zero denominator", den)
                c = Fraction(int(text), int(den[1]))
            if self.field.p is not None and c.denominator % self.field.p == 0:
                self.error(f"denominator divisible by {self.field.p}", tok)
            return Polynomial.constant(c, self.N, self.field)
        if kind == "name":
            if text not in self.index:
                self.error(f"unknown variable {text!r}", tok)
            return Polynomial.variable(self.index[text], self.N, self.field)
        if kind == "op" and text == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                self.error("expected ')'", close)
            return p
        if kind is None:
            self.error("unexpected end of polynomial", tok)
        self.error(f"unexpected {text!r}", tok)


def parse_polynomial(text: str, names, field: Field, line: int = 1, column: int = 1,
                     max_degree: int | None = MAX_DEGREE) -> Polynomial:
    """Parse one polynomial in the declared variables ``names``."""
    tokens = _tokenize(text, line, column)
    end = column + len(text.rstrip())
    p = _PolyParser(tokens, list(names), field, line, end).parse()
    if max_degree is not None and p.degree() > max_degree:
        raise ParseError(f"degree {p.degree()} exceeds {max_degree}", line, column)
    return p


def parse_field(spec: str) -> Field:
    spec = spec.strip()
    if spec in ("Q", "QQ"):
        return Field(None)
    if not spec.isdigit() or not is_prime(int(spec)):
        raise ValueError(f"bad field spec {spec!r}: expected a prime or Q")
    return Field(int(spec))


def _check_names(names, line=None, column=None):
    seen = set()
    for nm in names:
        if not NAME_RE.fullmatch(nm):
            raise ParseError(f"invalid variable name {nm!r}", line, column)
        if nm in seen:
            raise ParseError(f"duplicate variable {nm!r}", line, column)
        seen.add(nm)


# ---------------------------------------------------------------- problems

@dataclass(frozen=True)
class ProblemFile:
    field: Field
    names: tuple
    forms: tuple
    seed: int | None = None
    retries: int | None = None
    resolution_budget: int | None = None
    verify_level: int = DEFAULT_VERIFY_LEVEL

    @property
    def nvars(self) -> int:
        return len(self.names)


_INT_OPTIONS = {"seed": "seed", "retries": "retries",
                "resolution-budget": "resolution_budget", "verify-level": "verify_level"}


def _strip_comment(raw: str) -> str:
    k = raw.find("#")
    return raw if k < 0 else raw[:k]


def parse_problem(text: str) -> ProblemFile:
    """Parse and validate a problem file."""
    field = None
    names = None
    forms = []
    opts: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = _strip_comment(raw)
        if not body.strip():
            continue
        indent = len(body) - len(body.lstrip())
        key, _, rest = body.strip().partition(" ")
        rest_col = indent + len(key) + 2 + (len(rest) - len(rest.lstrip()))
        rest = rest.strip()
        if key == "field":
            if field is not None:
                raise ParseError("field declared twice", lineno, indent + 1)
            if names is not None:
                raise ParseError("field must come before vars", lineno, indent + 1)
            try:
                field = parse_field(rest)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, rest_col) from None
        elif key == "vars":
            if names is not None:
                raise ParseError("vars declared twice", lineno, indent + 1)
            names = tuple(rest.split())
            if not names:
                raise ParseError("vars needs at least one name", lineno, rest_col)
            _check_names(names, lineno, rest_col)
        elif key == "form":
            if names is None:
                raise ParseError("form before vars", lineno, indent + 1)
            if field is None:
                field = Field()
            forms.append(parse_polynomial(rest, names, field, lineno, rest_col))
        elif key in _INT_OPTIONS:
            if not re.fullmatch(r"\d+", rest):
                raise ParseError(f"{key} needs a nonnegative integer", lineno, rest_col)
            opts[_INT_OPTIONS[key]] = int(rest)
        else:
            raise ParseError(f"unknown directive {key!r}", lineno, indent + 1)
    if names is None:
        raise ParseError("missing vars line")
    if field is None:
        field = Field()
    if not forms:
        raise ParseError("no forms given")
    level = opts.get("verify_level", DEFAULT_VERIFY_LEVEL)
    if level not in (1, 2, 3):
        raise ParseError(f"verify-level must be 1, 2 or 3, got {level}")
    opts["verify_level"] = level
    return ProblemFile(field, names, tuple(forms), **opts)


def format_problem(problem: ProblemFile) -> str:
    lines = [f"field {problem.field}", "vars " + " ".join(problem.names)]
    for key, attr in _INT_OPTIONS.items():
        v = getattr(problem, attr)
        if v is not None and not (attr == "verify_level" and v == DEFAULT_VERIFY_LEVEL):
            lines.append(f"{key} {v}")
    for f in problem.forms:
        lines.append("form " + f.to_str(problem.names))
    return "\n".join(lines) + "\n"


def tag_names(k: int, taken) -> tuple:
    """``k`` tag variable names that avoid every name in ``taken``."""
    taken = set(taken)
    prefix = "t"
    while any(f"{prefix}{i}" in taken for i in range(1, k + 1)):
        prefix += "_"
    return tuple(f"{prefix}{i}" for i in range(1, k + 1))


# ---------------------------------------------------------------- certificate documents

@dataclass(frozen=True)
class CertificateDocument:
    field: Field
    names: tuple
    seed: int
    retries: int
    resolution_budget: int
    verify_level: int
    inputs: tuple                 # as given (degree <= 2, maybe inhomogeneous)
    forms: tuple                  # homogeneous parts actually certified
    unit_ideal: bool
    m: int = 0
    n: int = 0
    h: int = 0
    variables: tuple = ()
    quadrics: tuple = ()
    trace: tuple = ()             # (case, h) pairs
    tags: tuple = ()
    expressions: tuple = ()       # one per form, polynomials in the tags
    bounds: tuple = ()            # (name, int or None) pairs
    checks: tuple = ()            # (name, status) pairs
    pd: int | None = None
    pd_status: str = "not-run"
    reasons: tuple = ()
    timing: float | None = None
    verdict: str = "pass"
    extras: dict = dc_field(default_factory=dict, compare=False)

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def generators(self) -> tuple:
        return self.variables + self.quadrics

    def certificate(self):
        from .subalgebra import SubalgebraCertificate
        return SubalgebraCertificate(self.variables, self.quadrics, self.trace,
                                     self.m, self.n, self.h, self.nvars, self.field)

    # -- serialization

    def _pairs(self) -> list:
        nm = self.names
        out = [("seed", str(self.seed)), ("field", str(self.field)),
               ("vars", " ".join(nm)), ("retries", str(self.retries)),
               ("resolution-budget", str(self.resolution_budget)),
               ("verify-level", str(self.verify_level)),
               ("inputs", [f.to_str(nm) for f in self.inputs]),
               ("forms", [f.to_str(nm) for f in self.forms]),
               ("unit-ideal", "yes" if self.unit_ideal else "no"),
               ("invariants", f"m={self.m} n={self.n} h={self.h}"),
               ("variables", [f.to_str(nm) for f in self.variables]),
               ("quadrics", [f.to_str(nm) for f in self.quadrics]),
               ("trace", [f"{c} h={k}" for c, k in self.trace]),
               ("tags", " ".join(self.tags)),
               ("expressions", ["none" if e is None else e.to_str(self.tags)
                                for e in self.expressions]),
               ("bounds", " ".join(f"{k}={'-' if v is None else v}" for k, v in self.bounds)),
               ("checks", [f"{k} {v}" for k, v in self.checks]),
               ("pd", "-" if self.pd is None else str(self.pd)),
               ("pd-status", self.pd_status),
               ("reasons", list(self.reasons))]
        if self.timing is not None:
            out.append(("timing", repr(self.timing)))
        out.append(("verdict", self.verdict))
        return out

    def to_text(self) -> str:
        lines = [FORMAT_HEADER]
        for key, val in self._pairs():
            if isinstance(val, list):
                lines.append(key)
                lines.extend(f"  - {item}" for item in val)
            else:
                lines.append(f"{key} {val}".rstrip())
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dict(self) -> dict:
        d: dict = {}
        for key, val in self._pairs():
            d[key] = val
        return d

    @classmethod
    def from_text(cls, text: str) -> "CertificateDocument":
        return document_from_pairs(_read_pairs(text))


def _read_pairs(text: str) -> dict:
    lines = text.splitlines()
    if not lines or lines[0].strip() != FORMAT_HEADER:
        raise ParseError(f"expected header {FORMAT_HEADER!r}", 1, 1)
    pairs: dict = {}
    current = None
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        if raw.startswith("  - "):
            if current is None:
                raise ParseError("list item outside a list", lineno, 3)
            pairs[current].append(raw[4:])
            continue
        key, sep, val = raw.partition(" ")
        if key in pairs:
            raise ParseError(f"duplicate key {key!r}", lineno, 1)
        if key in _LIST_KEYS:
            if sep:
                raise ParseError(f"{key} is a list", lineno, len(key) + 2)
            pairs[key] = []
            current = key
        else:
            pairs[key] = val
            current = None
    return pairs


_LIST_KEYS = {"inputs", "forms", "variables", "quadrics", "trace", "expressions", "checks",
              "reasons"}


def _kv(text: str) -> list:
    out = []
    for item in text.split():
        k, _, v = item.partition("=")
        out.append((k, v))
    return out


def document_from_pairs(d: dict) -> CertificateDocument:
    def need(key):
        if key not in d:
            raise ParseError(f"missing key {key!r}")
        return d[key]

    field = parse_field(need("field"))
    names = tuple(need("vars").split())
    _check_names(names)
    tags = tuple(d.get("tags", "").split())

    def polys(key, vars_, max_degree=MAX_DEGREE):
        return tuple(parse_polynomial(s, vars_, field, max_degree=max_degree)
                     for s in need(key))

    inv = dict(_kv(need("invariants")))
    trace = []
    for item in need("trace"):
        case, _, hk = item.partition(" ")
        trace.append((case, int(hk.partition("=")[2])))
    exprs = tuple(None if s == "none" else parse_polynomial(s, tags, field, max_degree=None)
                  for s in need("expressions"))
    bounds = tuple((k, None if v == "-" else int(v)) for k, v in _kv(need("bounds")))
    checks = tuple(tuple(item.split(" ", 1)) for item in need("checks"))
    pd = need("pd")
    timing = d.get("timing")
    return CertificateDocument(
        field=field, names=names, seed=int(need("seed")), retries=int(need("retries")),
        resolution_budget=int(need("resolution-budget")),
        verify_level=int(need("verify-level")),
        inputs=polys("inputs", names), forms=polys("forms", names),
        unit_ideal=need("unit-ideal") == "yes",
        m=int(inv["m"]), n=int(inv["n"]), h=int(inv["h"]),
        variables=polys("variables", names), quadrics=polys("quadrics", names),
        trace=tuple(trace), tags=tags, expressions=exprs, bounds=bounds, checks=checks,
        pd=None if pd == "-" else int(pd), pd_status=need("pd-status"),
        reasons=tuple(need("reasons")), timing=None if timing is None else float(timing),
        verdict=need("verdict"))


def parse_document(text: str) -> CertificateDocument:
    return CertificateDocument.from_text(text)


def print_document(doc: CertificateDocument) -> str:
    return doc.to_text()
