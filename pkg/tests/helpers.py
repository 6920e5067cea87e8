"""Non-group-shaped test objects: basis changes and function algebras."""

from __future__ import annotations

from fractions import Fraction

import sympy as sp

from hopfcat.groups import GroupTable
from hopfcat.hopf_model import HopfAlgebra, _acc
from hopfcat.linear_core import ONE, ZERO, lincomb, to_scalar, unit_vec


def change_basis(h: HopfAlgebra, new_basis: list[list]) -> HopfAlgebra:
    """Transport the structure of h to the basis given by the rows of ``new_basis``."""
    n = h.dim
    inv = sp.Matrix(new_basis).T.inv()
    old = [{k: to_scalar(Fraction(x)) for k, x in enumerate(row) if x} for row in new_basis]
    # coordinates of each old basis vector in the new basis
    back = [{i: to_scalar(Fraction(str(inv[i, k]))) for i in range(n) if inv[i, k]} for k in range(n)]

    def new(v):
        return lincomb((c, back[k]) for k, c in v.items())

    mul = {(i, j): new(h.mult(old[i], old[j])) for i in range(n) for j in range(n)}
    comul = []
    for i in range(n):
        t: dict = {}
        for (a, b), c in h.delta(old[i]).items():
            for x, u in back[a].items():
                for y, w in back[b].items():
                    _acc(t, (x, y), c * u * w)
        comul.append(t)
    counit = [h.eps(old[i]) for i in range(n)]
    antipode = [new(h.anti(old[i])) for i in range(n)]
    return HopfAlgebra([f"b{i}" for i in range(n)], mul, comul, new(h.unit), counit, antipode)


def function_algebra(g: GroupTable) -> HopfAlgebra:
    """k^G: pointwise product, Delta(d_x) = sum over ab = x of d_a (x) d_b."""
    n = g.order
    mul = {(i, i): unit_vec(i) for i in range(n)}
    comul: list[dict] = [{} for _ in range(n)]
    for a in range(n):
        for b in range(n):
            comul[g.mul(a, b)][(a, b)] = ONE
    counit = [ONE if i == g.identity else ZERO for i in range(n)]
    antipode = [unit_vec(g.inverse(i)) for i in range(n)]
    return HopfAlgebra([f"d{i}" for i in range(n)], mul, comul, {i: ONE for i in range(n)},
                       counit, antipode, name=f"k^{g.name}")
