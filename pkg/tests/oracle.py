"""Independent dense reference computations.

Everything here starts from the JSON export of an object and works with
sympy matrices, so it shares no elimination or tensor code with the
library.  Tests compare library results against these.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy as sp

from hopfcat.io import hopf_to_json


def _q(x) -> sp.Rational:
    f = Fraction(str(x))
    return sp.Rational(f.numerator, f.denominator)


class Dense:
    """Dense structure tensors read back from JSON."""

    def __init__(self, h):
        d = hopf_to_json(h)
        n = self.n = d["dim"]
        self.mul = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in d["mul"]:
            self.mul[i][j][k] = _q(c)
        self.comul = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, c in d["comul"]:
            self.comul[i][j][k] = _q(c)
        self.unit = [_q(c) for c in d["unit"]]
        self.counit = [_q(c) for c in d["counit"]]
        self.antipode = sp.Matrix([[_q(c) for c in row] for row in d["antipode"]])


def dense_matrix(f) -> sp.Matrix:
    return sp.Matrix([[_q(c) for c in row] for row in f.matrix.to_json()])


def rank(rows) -> int:
    return sp.Matrix(rows).rank() if rows else 0


def hker_dim(f) -> int:
    """dim {x : x1 (x) f(x2) = x (x) 1} by a dense nullspace."""
    a, b = Dense(f.dom), Dense(f.cod)
    m = dense_matrix(f)
    n, k = a.n, b.n
    cols = []
    for i in range(n):
        v = [0] * (n * k)
        for j, l in product(range(n), range(n)):
            c = a.comul[i][j][l]
            if c:
                for r in range(k):
                    v[j * k + r] += c * m[r, l]
        for r in range(k):
            v[i * k + r] -= b.unit[r]
        cols.append(v)
    return n - sp.Matrix(cols).T.rank()


def equalizer_dim(f, g) -> int:
    """dim {x : f(x1) (x) x2 = g(x1) (x) x2}."""
    a = Dense(f.dom)
    d = dense_matrix(f) - dense_matrix(g)
    n, k = a.n, d.rows
    cols = []
    for i in range(n):
        v = [0] * (k * n)
        for j, l in product(range(n), range(n)):
            c = a.comul[i][j][l]
            if c:
                for r in range(k):
                    v[r * n + l] += c * d[r, j]
        cols.append(v)
    return n - sp.Matrix(cols).T.rank()


def two_sided_ideal_dim(h, gens) -> int:
    """Dimension of H gens H, closed under S, by dense iteration."""
    d = Dense(h)
    n = d.n

    def mul(u, v):
        out = [0] * n
        for i, j in product(range(n), range(n)):
            if u[i] and v[j]:
                for k in range(n):
                    out[k] += u[i] * v[j] * d.mul[i][j][k]
        return out

    basis = [[1 if t == i else 0 for t in range(n)] for i in range(n)]
    rows = [list(v) for v in gens]
    r = rank(rows)
    while True:
        new = list(rows)
        for v in rows:
            new.append(list(d.antipode * sp.Matrix(v)))
            for e in basis:
                new.append(mul(e, v))
                new.append(mul(v, e))
        r2 = rank(new)
        if r2 == r:
            return r
        m = sp.Matrix(new).rref()[0]
        rows = [list(m.row(t)) for t in range(r2)]
        r = r2


def is_commutative(h) -> bool:
    d = Dense(h)
    return all(d.mul[i][j] == d.mul[j][i] for i in range(d.n) for j in range(d.n))


def grouplike_count_diagonal(h) -> int:
    """Count basis elements e with Delta(e) = e (x) e and eps(e) = 1."""
    d = Dense(h)
    n = d.n
    count = 0
    for i in range(n):
        ok = d.counit[i] == 1 and all(
            d.comul[i][j][k] == (1 if j == k == i else 0) for j in range(n) for k in range(n))
        count += ok
    return count
