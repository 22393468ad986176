"""Random problem instances: forms of degree <= 2 with controllable structure."""
from __future__ import annotations

import random

from .field import Field, GF32003
from .poly import Polynomial

STYLES = ("dense", "pooled", "sparse", "layered", "split")


def random_linear(rng: random.Random, N: int, field: Field, support: int | None = None) -> Polynomial:
    idx = list(range(N))
    if support is not None:
        idx = rng.sample(idx, min(support, N))
    coeffs = [field(0)] * N
    for i in idx:
        coeffs[i] = field.random_element(rng, nonzero=True)
    return Polynomial.linear(coeffs, field)


def random_quadric(rng: random.Random, N: int, field: Field, terms: int | None = None) -> Polynomial:
    monos = [(i, j) for i in range(N) for j in range(i, N)]
    if terms is not None:
        monos = rng.sample(monos, min(terms, len(monos)))
    t = {}
    for i, j in monos:
        e = [0] * N
        e[i] += 1
        e[j] += 1
        t[tuple(e)] = field.random_element(rng, nonzero=True)
    return Polynomial(t, N, field)


def random_instance(rng: random.Random, N: int, n: int, m: int, field: Field = GF32003,
                    style: str = "pooled") -> list:
    """n quadrics followed by m linear forms in N variables.

    ``pooled`` quadrics are short sums of products of linear forms drawn
    from a small shared pool, and the linear inputs come from the same
    pool, which makes low heights (and hence the deeper recursion cases)
    common. ``sparse`` uses few monomials, ``dense`` is generic.
    """
    if style == "dense":
        quads = [random_quadric(rng, N, field) for _ in range(n)]
        lins = [random_linear(rng, N, field) for _ in range(m)]
        return quads + lins
    if style == "sparse":
        quads = [random_quadric(rng, N, field, terms=rng.randint(1, 3)) for _ in range(n)]
        lins = [random_linear(rng, N, field, support=rng.randint(1, 2)) for _ in range(m)]
        return quads + lins
    if style not in STYLES:
        raise ValueError(f"unknown style {style!r}")
    if style == "layered":
        return _layered(rng, N, n, m, field)
    if style == "split":
        return _split(rng, N, n, m, field)
    pool_size = rng.randint(2, max(2, N))
    pool = [random_linear(rng, N, field, support=rng.randint(1, 3)) for _ in range(pool_size)]
    quads = []
    for _ in range(n):
        q = Polynomial.zero(N, field)
        for _ in range(rng.randint(1, 3)):
            q = q + rng.choice(pool) * rng.choice(pool)
        quads.append(q)
    lins = [rng.choice(pool) for _ in range(m)]
    return quads + lins


def _layered(rng, N, n, m, field):
    """Quadrics = (short sum of squares/products) + (linear inputs times linear forms).

    Some quadrics are built only from the linear inputs, so they vanish
    modulo them and the height h drops below n.
    """
    lins = [random_linear(rng, N, field, support=rng.randint(1, 2)) for _ in range(m)]
    quads = []
    for i in range(n):
        q = Polynomial.zero(N, field)
        only_linear_part = lins and rng.random() < 0.4
        if not only_linear_part:
            for j in rng.sample(range(N), rng.randint(1, min(3, N))):
                a = Polynomial.variable(j, N, field).scale(field.random_element(rng, nonzero=True))
                b = a if rng.random() < 0.6 else random_linear(rng, N, field, support=1)
                q = q + a * b
        for x in lins:
            if rng.random() < 0.7:
                q = q + x * random_linear(rng, N, field, support=1)
        if not q:
            q = random_quadric(rng, N, field, terms=1)
        quads.append(q)
    return quads + lins


def _split(rng, N, n, m, field):
    """A high-rank quadric sharing a product x*v with a second one, x linear input.

    Modulo x the first quadric keeps its rank while the products with x
    disappear; such inputs reach the two-stage branches of the recursion.
    A random sparse change of coordinates hides the structure.
    """
    from .linalg import LinearChange
    if N < 4 or n < 2 or m < 1:
        return _layered(rng, N, n, m, field)
    var = [Polynomial.variable(i, N, field) for i in range(N)]
    x, v, rest = var[0], var[1], var[2:]
    k = rng.randint(2, len(rest))
    squares = Polynomial.zero(N, field)
    for y in rng.sample(rest, k):
        squares = squares + y * y.scale(field.random_element(rng, nonzero=True))
    quads = [squares + x * v]
    for _ in range(n - 1):
        partner = v if rng.random() < 0.5 else rng.choice(rest)
        quads.append(x * partner.scale(field.random_element(rng, nonzero=True)))
    lins = [x] + [random_linear(rng, N, field, support=1) for _ in range(m - 1)]
    if rng.random() < 0.5:
        return quads + lins
    while True:
        mat = [[field(int(i == j)) for j in range(N)] for i in range(N)]
        for _ in range(rng.randint(1, N)):
            i, j = rng.sample(range(N), 2)
            mat[i][j] = field.random_element(rng)
        try:
            change = LinearChange.from_matrix(mat, field)
        except ValueError:
            continue
        return change.apply_all(quads + lins)
