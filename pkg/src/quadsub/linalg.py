"""Dense exact linear algebra over a :class:`~quadsub.field.Field`.

Matrices are lists of rows. Nothing here ever uses floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .field import Field
from .poly import Polynomial


def row_reduce(rows: Sequence[Sequence], field: Field, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(rref, pivots)`` where ``rref`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of row ``i``. The pivot is the first
    nonzero entry in its column, scanning rows top to bottom.
    """
    p = field.p
    mat = [[field(c) for c in r] for r in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        inv = field.inv(mat[top][col])
        row = [c * inv for c in mat[top]]
        if p is not None:
            row = [c % p for c in row]
        mat[top] = row
        for i in range(len(mat)):
            if i != top and mat[i][col]:
                f = mat[i][col]
                if p is None:
                    mat[i] = [a - f * b for a, b in zip(mat[i], row)]
                else:
                    mat[i] = [(a - f * b) % p for a, b in zip(mat[i], row)]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


def rank(rows: Sequence[Sequence], field: Field) -> int:
    if not rows:
        return 0
    return len(row_reduce(rows, field)[1])


def mat_mul(a, b, field: Field):
    p = field.p
    bt = list(zip(*b))
    out = []
    for row in a:
        r = [sum(x * y for x, y in zip(row, col)) for col in bt]
        out.append([c % p for c in r] if p is not None else r)
    return out


def identity(n: int, field: Field):
    one, zero = field(1), field(0)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def inverse(mat, field: Field):
    """Inverse of a square matrix; raises ``ValueError`` when singular."""
    n = len(mat)
    aug = [list(r) + e for r, e in zip(mat, identity(n, field))]
    red, piv = row_reduce(aug, field, ncols=n)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return [r[n:] for r in red]


def independent_subset(rows: Sequence[Sequence], field: Field) -> list:
    """Indices of a maximal linearly independent subset, chosen first-come."""
    chosen: list = []
    basis: list = []
    for i, r in enumerate(rows):
        trial = basis + [list(r)]
        if rank(trial, field) > len(basis):
            basis = trial
            chosen.append(i)
    return chosen


def express(vec: Sequence, basis: Sequence[Sequence], field: Field):
    """Coefficients ``lam`` with ``sum(lam[i] * basis[i]) == vec``, or None."""
    k = len(basis)
    if k == 0:
        return [] if not any(field(c) for c in vec) else None
    ncols = len(vec)
    # columns are the basis vectors; augment with vec
    aug = [[field(basis[i][j]) for i in range(k)] + [field(vec[j])] for j in range(ncols)]
    red, piv = row_reduce(aug, field, ncols=k + 1)
    if k in piv:
        return None
    lam = [field(0)] * k
    for r, c in zip(red, piv):
        lam[c] = r[k]
    return lam


def complete_rows(rows: Sequence[Sequence], n: int, field: Field):
    """Extend independent rows to an invertible n x n matrix with unit rows.

    Returns ``(matrix, added)`` where ``added`` lists the unit-vector columns
    appended after the given rows, in increasing order.
    """
    rows = [[field(c) for c in r] for r in rows]
    _, piv = row_reduce(rows, field, ncols=n) if rows else ([], [])
    if len(piv) != len(rows):
        raise ValueError("rows are linearly dependent")
    added = [j for j in range(n) if j not in set(piv)]
    one, zero = field(1), field(0)
    units = [[one if k == j else zero for k in range(n)] for j in added]
    return rows + units, added


@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution x_i -> sum_j matrix[i][j] * x_j."""

    matrix: tuple
    inverse_matrix: tuple
    field: Field

    @classmethod
    def from_matrix(cls, matrix, field: Field) -> "LinearChange":
        m = tuple(tuple(field(c) for c in r) for r in matrix)
        inv = tuple(tuple(r) for r in inverse([list(r) for r in m], field))
        return cls(m, inv, field)

    @classmethod
    def identity(cls, n: int, field: Field) -> "LinearChange":
        m = tuple(tuple(r) for r in identity(n, field))
        return cls(m, m, field)

    @classmethod
    def new_coordinates(cls, rows, field: Field) -> "LinearChange":
        """Change after which the linear form with coefficients ``rows[i]`` is x_i."""
        a = [list(r) for r in rows]
        inv = inverse(a, field)
        return cls(tuple(tuple(r) for r in inv), tuple(tuple(field(c) for c in r) for r in a), field)

    @property
    def n(self) -> int:
        return len(self.matrix)

    def inverse(self) -> "LinearChange":
        return LinearChange(self.inverse_matrix, self.matrix, self.field)

    def then(self, other: "LinearChange") -> "LinearChange":
        """Apply ``self`` first, then ``other``: f(x) -> f(M1 M2 x)."""
        m = mat_mul([list(r) for r in self.matrix], [list(r) for r in other.matrix], self.field)
        inv = mat_mul([list(r) for r in other.inverse_matrix],
                      [list(r) for r in self.inverse_matrix], self.field)
        return LinearChange(tuple(map(tuple, m)), tuple(map(tuple, inv)), self.field)

    def apply(self, f: Polynomial) -> Polynomial:
        if f.nvars != self.n:
            raise ValueError(f"change acts on {self.n} variables, polynomial has {f.nvars}")
        images = [Polynomial.linear(row, self.field) for row in self.matrix]
        return f.compose(images)

    def apply_all(self, fs):
        images = [Polynomial.linear(row, self.field) for row in self.matrix]
        return [f.compose(images) for f in fs]

    @classmethod
    def on_block(cls, n: int, block: Sequence[int], sub, field: Field) -> "LinearChange":
        """Embed a change on the variables ``block`` into n variables."""
        full = identity(n, field)
        sub = [list(r) for r in sub]
        for a, i in enumerate(block):
            for b, j in enumerate(block):
                full[i][j] = field(sub[a][b])
        return cls.from_matrix(full, field)


def apply_linear_change(f: Polynomial, change: LinearChange) -> Polynomial:
    return change.apply(f)


def span_basis(linear_forms: Sequence[Polynomial], block: Sequence[int] | None = None,
               nvars: int | None = None, field: Field | None = None):
    """Rank of the span of ``linear_forms`` and a change putting it on the block's first coordinates.

    Every form must be linear and supported in ``block`` (default: all
    variables). After applying the returned change each input form is a
    combination of the first ``rank`` variables of the block.
    """
    if linear_forms:
        nvars = linear_forms[0].nvars
        field = linear_forms[0].field
    if nvars is None or field is None:
        raise ValueError("need nvars and field when no forms are given")
    block = list(range(nvars)) if block is None else list(block)
    bs = set(block)
    rows = []
    for f in linear_forms:
        if not f.is_homogeneous(1) and not f.is_zero():
            raise ValueError("span_basis needs linear forms")
        if f.support() - bs:
            raise ValueError("linear form involves variables outside the block")
        coeffs = f.linear_coefficients()
        rows.append([coeffs[i] for i in block])
    basis, _ = row_reduce(rows, field, ncols=len(block)) if rows else ([], [])
    full, _ = complete_rows(basis, len(block), field)
    sub = inverse(full, field) if block else []
    return len(basis), LinearChange.on_block(nvars, block, sub, field)
