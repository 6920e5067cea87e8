"""Actions, smash products K#Y and split epimorphisms.

Also hosts the instance checkers for the semi-abelian axioms and the
abelian-object test, since each reduces to a smash-product, kernel or
normality computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, NamedTuple, Sequence

from .colimits import hopf_cokernel
from .errors import DimensionError, InvariantViolation, PreconditionError
from .groups import GroupTable
from .hopf_model import (
    HopfAlgebra,
    Morphism,
    Tensor,
    _acc,
    adjoint_action,
    flatten,
    is_normal_sub_hopf,
    is_sub_hopf,
    is_surjective,
    projection_columns,
    sub_hopf_algebra,
    tensor_map,
    tensor_product,
)
from .limits import LimitCone, hopf_kernel_space, pullback
from .linear_core import ONE, Matrix, Subspace, Vec, add_into, as_vec, unit_vec
from .newman import verify_normal_kernel_lemma


class Action:
    """A left action Y (x) K -> K making K a Y-module Hopf algebra.

    ``table[(y, k)]`` is e_y |> e_k.  Construction verifies the module
    algebra axioms and compatibility with the coalgebra structure.
    """

    AXIOMS = ("multiplicative", "unital_actor", "associative", "unit_fixed", "coalgebra")

    def __init__(self, actor: HopfAlgebra, target: HopfAlgebra,
                 matrix: Matrix | Sequence[Sequence[object]], *, check: bool = True):
        if not isinstance(matrix, Matrix):
            matrix = Matrix.from_rows(matrix, actor.dim * target.dim)
        if (matrix.rows, matrix.cols) != (target.dim, actor.dim * target.dim):
            raise DimensionError(
                f"action matrix is {matrix.rows}x{matrix.cols}, "
                f"expected {target.dim}x{actor.dim * target.dim}")
        cols = matrix.sparse_columns()
        n = target.dim
        self._init(actor, target, {(c // n, c % n): v for c, v in enumerate(cols) if v}, check)

    @classmethod
    def from_function(cls, actor: HopfAlgebra, target: HopfAlgebra,
                      fn: Callable[[int, int], Mapping], *, check: bool = True) -> Action:
        self = cls.__new__(cls)
        table = {}
        for y in range(actor.dim):
            for k in range(target.dim):
                v = as_vec(fn(y, k))
                if v:
                    table[(y, k)] = v
        self._init(actor, target, table, check)
        return self

    def _init(self, actor, target, table, check):
        self.actor = actor
        self.target = target
        self.table: dict[tuple[int, int], Vec] = table
        if check:
            bad = [k for k, v in self.verify().items() if not v]
            if bad:
                raise PreconditionError(f"invalid action: fails {', '.join(bad)}")

    def act(self, y: Mapping, k: Mapping) -> Vec:
        out: Vec = {}
        for i, a in y.items():
            for j, b in k.items():
                v = self.table.get((i, j))
                if v:
                    add_into(out, v, a * b)
        return out

    @property
    def matrix(self) -> Matrix:
        n = self.target.dim
        cols = [self.table.get((c // n, c % n), {}) for c in range(self.actor.dim * n)]
        return Matrix.from_columns(cols, n)

    def verify(self) -> dict[str, bool]:
        y_alg, k_alg = self.actor, self.target
        ny, nk = y_alg.dim, k_alg.dim
        e = unit_vec
        multiplicative = True
        for y in range(ny):
            for a in range(nk):
                for b in range(nk):
                    lhs = self.act(e(y), k_alg.mul.get((a, b), {}))
                    rhs: Vec = {}
                    for (y1, y2), c in y_alg.comul[y].items():
                        add_into(rhs, k_alg.mult(self.act(e(y1), e(a)), self.act(e(y2), e(b))), c)
                    if lhs != rhs:
                        multiplicative = False
                        break
        unital_actor = all(self.act(y_alg.unit, e(a)) == e(a) for a in range(nk))
        associative = all(
            self.act(y_alg.mul.get((y, z), {}), e(a)) == self.act(e(y), self.act(e(z), e(a)))
            for y in range(ny) for z in range(ny) for a in range(nk))
        unit_fixed = all(
            self.act(e(y), k_alg.unit) == {k: y_alg.counit[y] * x for k, x in k_alg.unit.items()
                                           if y_alg.counit[y]}
            for y in range(ny))
        coalgebra = True
        for y in range(ny):
            for a in range(nk):
                v = self.act(e(y), e(a))
                expected: Tensor = {}
                for (y1, y2), c in y_alg.comul[y].items():
                    for (a1, a2), d in k_alg.comul[a].items():
                        left = self.act(e(y1), e(a1))
                        right = self.act(e(y2), e(a2))
                        for p, u in left.items():
                            for q, w in right.items():
                                _acc(expected, (p, q), c * d * u * w)
                if k_alg.delta(v) != expected or k_alg.eps(v) != y_alg.counit[y] * k_alg.counit[a]:
                    coalgebra = False
                    break
        return {"multiplicative": multiplicative, "unital_actor": unital_actor,
                "associative": associative, "unit_fixed": unit_fixed, "coalgebra": coalgebra}

    def same_action(self, other: Action) -> bool:
        return self.table == other.table


def trivial_action(actor: HopfAlgebra, target: HopfAlgebra) -> Action:
    """y |> a = eps(y) a."""
    return Action.from_function(actor, target,
                                lambda y, k: {k: actor.counit[y]} if actor.counit[y] else {})


def group_action(y_group: GroupTable, k_group: GroupTable, rho: Sequence[Sequence[int]],
                 actor: HopfAlgebra, target: HopfAlgebra) -> Action:
    """Linearization of an action by automorphisms; ``rho[y]`` is an image list."""
    return Action.from_function(actor, target, lambda y, k: {rho[y][k]: ONE})


@dataclass(frozen=True)
class PointedObject:
    """A split epimorphism p: X -> Y with section s."""

    p: Morphism
    s: Morphism

    def __post_init__(self):
        if self.s.cod != self.p.dom or self.s.dom != self.p.cod:
            raise PreconditionError("section has the wrong domain or codomain")
        y = self.p.cod
        if (self.p @ self.s).cols != tuple(unit_vec(i) for i in range(y.dim)):
            raise PreconditionError("p o s is not the identity")


class SmashProduct(NamedTuple):
    hopf: HopfAlgebra
    p: Morphism
    s: Morphism


def smash_product(act: Action) -> SmashProduct:
    """K # Y on K (x) Y (basis index a * dim Y + y) with its projection and section."""
    k_alg, y_alg = act.target, act.actor
    nk, ny = k_alg.dim, y_alg.dim
    e = unit_vec

    def idx(a, y):
        return a * ny + y

    basis = [f"{a}#{y}" for a in k_alg.basis for y in y_alg.basis]
    mul = {}
    for a in range(nk):
        for y in range(ny):
            for b in range(nk):
                for y2_ in range(ny):
                    out: Vec = {}
                    for (y1, y2), c in y_alg.comul[y].items():
                        left = k_alg.mult(e(a), act.act(e(y1), e(b)))
                        right = y_alg.mul.get((y2, y2_), {})
                        for p, u in left.items():
                            for q, w in right.items():
                                _acc(out, idx(p, q), c * u * w)
                    if out:
                        mul[(idx(a, y), idx(b, y2_))] = out
    comul = []
    for a in range(nk):
        for y in range(ny):
            t: Tensor = {}
            for (a1, a2), c in k_alg.comul[a].items():
                for (y1, y2), d in y_alg.comul[y].items():
                    _acc(t, (idx(a1, y1), idx(a2, y2)), c * d)
            comul.append(t)
    unit = {idx(p, q): u * w for p, u in k_alg.unit.items() for q, w in y_alg.unit.items()}
    counit = [k_alg.counit[a] * y_alg.counit[y] for a in range(nk) for y in range(ny)]
    antipode = []
    for a in range(nk):
        for y in range(ny):
            out = {}
            for (y1, y2), c in y_alg.comul[y].items():
                left = act.act(y_alg.antipode[y1], k_alg.antipode[a])
                for p, u in left.items():
                    for q, w in y_alg.antipode[y2].items():
                        _acc(out, idx(p, q), c * u * w)
            antipode.append(out)
    name = f"{k_alg.name}#{y_alg.name}" if k_alg.name and y_alg.name else ""
    h = HopfAlgebra(basis, mul, comul, unit, counit, antipode, name=name)
    try:
        p = Morphism.from_columns(h, y_alg, [{y: k_alg.counit[a]} if k_alg.counit[a] else {}
                                             for a in range(nk) for y in range(ny)])
        s = Morphism.from_columns(y_alg, h, [{idx(a, y): c for a, c in k_alg.unit.items()}
                                             for y in range(ny)])
    except PreconditionError as exc:
        raise InvariantViolation(f"smash product structure maps are not morphisms: {exc}") from exc
    return SmashProduct(h, p, s)


class KernelAction(NamedTuple):
    kernel: HopfAlgebra
    inclusion: Morphism
    space: Subspace
    action: Action


def kernel_with_action(po: PointedObject) -> KernelAction:
    """K = Hker(p) with y |> k = s(y1) k s(S(y2))."""
    x_alg, y_alg = po.p.dom, po.p.cod
    space = hopf_kernel_space(po.p)
    k_alg, kappa = sub_hopf_algebra(x_alg, space, error=InvariantViolation)
    s = po.s

    def conj(y: int, k: int) -> Vec:
        v: Vec = {}
        for (y1, y2), c in y_alg.comul[y].items():
            left = x_alg.mult(s.cols[y1], kappa.cols[k])
            add_into(v, x_alg.mult(left, s(y_alg.antipode[y2])), c)
        red = space.reduce(v)
        if red:
            raise InvariantViolation("conjugate of a kernel element leaves the kernel",
                                     {"y": y, "k": k})
        return space.coords(v)

    try:
        act = Action.from_function(y_alg, k_alg, conj)
    except PreconditionError as exc:
        raise InvariantViolation(f"conjugation is not an action: {exc}") from exc
    return KernelAction(k_alg, kappa, space, act)


def conjugation_action(po: PointedObject) -> Action:
    return kernel_with_action(po).action


class Decomposition(NamedTuple):
    F: Morphism
    G: Morphism
    smash: SmashProduct
    kernel: KernelAction


def split_epi_decompose(po: PointedObject) -> Decomposition:
    """X ~ K # Y via F(x) = x1 s(S p(x2)) # p(x3) and G(k # y) = k s(y)."""
    x_alg, y_alg = po.p.dom, po.p.cod
    ka = kernel_with_action(po)
    sp = smash_product(ka.action)
    ny = y_alg.dim
    space = ka.space
    q = projection_columns(space)
    pos = {p: t for t, p in enumerate(space.pivot_cols)}
    p, s = po.p, po.s
    f_cols = []
    for i in range(x_alg.dim):
        t: Tensor = {}
        for (j, k), c in x_alg.comul[i].items():
            for (k1, k2), d in x_alg.comul[k].items():
                left = x_alg.mult(unit_vec(j), s(y_alg.anti(p.cols[k1])))
                for a, u in left.items():
                    for b, w in p.cols[k2].items():
                        _acc(t, (a, b), c * d * u * w)
        if tensor_map(t, left=q):
            raise InvariantViolation("F does not land in K # Y", {"x": i})
        f_cols.append({pos[a] * ny + b: c for (a, b), c in t.items()})
    g_cols = [x_alg.mult(ka.inclusion.cols[a], s.cols[y])
              for a in range(ka.kernel.dim) for y in range(ny)]
    try:
        F = Morphism.from_columns(x_alg, sp.hopf, f_cols)
        G = Morphism.from_columns(sp.hopf, x_alg, g_cols)
    except PreconditionError as exc:
        raise InvariantViolation(f"decomposition maps are not morphisms: {exc}") from exc
    if (F @ G).cols != tuple(unit_vec(i) for i in range(sp.hopf.dim)):
        raise InvariantViolation("F o G is not the identity")
    if (G @ F).cols != tuple(unit_vec(i) for i in range(x_alg.dim)):
        raise InvariantViolation("G o F is not the identity")
    return Decomposition(F, G, sp, ka)


# -- axiom instance checkers -------------------------------------------------

def verify_A2_instance(po: PointedObject) -> bool:
    """K (x) Y carries a smash structure isomorphic to X through F and G."""
    try:
        split_epi_decompose(po)
    except InvariantViolation:
        return False
    return True


def a3_pullback(q: Morphism, g: Morphism) -> tuple[LimitCone, bool]:
    """Pullback of the surjection q along g, and whether its leg onto dom(g) is surjective."""
    if not is_surjective(q):
        raise PreconditionError("q is not surjective")
    cone = pullback(q, g)
    return cone, is_surjective(cone.legs[1])


def verify_A3_instance(q: Morphism, g: Morphism) -> bool:
    """The pullback of the surjection q along g has a surjective leg onto dom(g)."""
    return a3_pullback(q, g)[1]


def verify_A4_instance(f: Morphism, g: Morphism) -> bool:
    """The image of Hker(g) under hcoker(f) is a normal sub-Hopf algebra and a kernel."""
    if f.cod != g.dom:
        raise PreconditionError("morphisms are not composable")
    kspace = hopf_kernel_space(g)
    coker = hopf_cokernel(f)
    image = Subspace(coker.quotient.dim, [coker.projection(r) for r in kspace.rows])
    q = coker.quotient
    if not is_sub_hopf(q, image):
        return False
    return is_normal_sub_hopf(q, image) and verify_normal_kernel_lemma(q, image)


def diagonal_image(c: HopfAlgebra) -> tuple[HopfAlgebra, Subspace]:
    cc = tensor_product(c, c)
    return cc, Subspace(cc.dim, [flatten(c.comul[i], c.dim) for i in range(c.dim)])


def abelian_object_test(c: HopfAlgebra) -> bool:
    """Whether im(Delta_C) is a normal sub-Hopf algebra of C (x) C."""
    cc, im = diagonal_image(c)
    if not is_sub_hopf(cc, im):
        raise InvariantViolation("image of the comultiplication is not a sub-Hopf algebra")
    return is_normal_sub_hopf(cc, im)


def abelian_obstruction(c: HopfAlgebra) -> dict | None:
    """A pair (y, a) with y1 a S(y2) outside im(Delta), or None."""
    cc, im = diagonal_image(c)
    for i in range(cc.dim):
        for t, a in enumerate(im.rows):
            if not im.contains(adjoint_action(cc, unit_vec(i), a)):
                return {"y": cc.basis[i], "a_index": t}
    return None
