"""Finite limits: equalizers, Hopf kernels, products and pullbacks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DimensionError, InvariantViolation, PreconditionError
from .hopf_model import (
    HopfAlgebra,
    Morphism,
    _acc,
    flatten,
    identity_morphism,
    sub_hopf_algebra,
    tensor_map,
    tensor_product,
)
from .linear_core import Subspace, Vec, kernel_from_columns, sub


@dataclass(frozen=True)
class LimitCone:
    """Apex with its legs; ``embedding`` maps the apex into the ambient
    tensor product the construction lives in (identity for products)."""

    apex: HopfAlgebra
    legs: tuple[Morphism, ...]
    mediator_builder: Callable[..., Morphism]
    embedding: Morphism

    def mediator(self, *maps: Morphism) -> Morphism:
        return self.mediator_builder(*maps)


def _parallel(f: Morphism, g: Morphism) -> None:
    if f.dom != g.dom or f.cod != g.cod:
        raise PreconditionError("morphisms are not parallel")


def equalizer_space(f: Morphism, g: Morphism, mirrored: bool = False) -> Subspace:
    """{x : f(x1) (x) x2 = g(x1) (x) x2}, or the mirrored x1 (x) f(x2) form."""
    _parallel(f, g)
    a, b = f.dom, f.cod
    diff = [sub(f.cols[j], g.cols[j]) for j in range(a.dim)]
    cols = []
    for i in range(a.dim):
        if mirrored:
            t = tensor_map(a.comul[i], right=diff)
            cols.append(flatten(t, b.dim))
        else:
            t = tensor_map(a.comul[i], left=diff)
            cols.append(flatten(t, a.dim))
    return kernel_from_columns(cols, a.dim)


def equalizer(f: Morphism, g: Morphism) -> tuple[Subspace, Morphism]:
    """Equalizer subspace of a parallel pair and the inclusion of its Hopf structure."""
    s = equalizer_space(f, g)
    _, incl = sub_hopf_algebra(f.dom, s, error=InvariantViolation)
    return s, incl


def hopf_kernel_space(f: Morphism, mirrored: bool = False) -> Subspace:
    """{x : x1 (x) f(x2) = x (x) 1}; ``mirrored`` uses f(x1) (x) x2 = 1 (x) x."""
    a, b = f.dom, f.cod
    one = b.unit
    cols = []
    for i in range(a.dim):
        if mirrored:
            t = tensor_map(a.comul[i], left=f.cols)
            for k, c in one.items():
                _acc(t, (k, i), -c)
            cols.append(flatten(t, a.dim))
        else:
            t = tensor_map(a.comul[i], right=f.cols)
            for k, c in one.items():
                _acc(t, (i, k), -c)
            cols.append(flatten(t, b.dim))
    return kernel_from_columns(cols, a.dim)


def hopf_kernel(f: Morphism) -> tuple[HopfAlgebra, Morphism]:
    """Hopf kernel object K and its inclusion into dom(f)."""
    return sub_hopf_algebra(f.dom, hopf_kernel_space(f), error=InvariantViolation)


def _mediator_columns(f: Morphism, g: Morphism) -> list[Vec]:
    """Columns of x -> f(x1) (x) g(x2) in the flattened product."""
    m = g.cod.dim
    return [flatten(tensor_map(f.dom.comul[i], f.cols, g.cols), m) for i in range(f.dom.dim)]


def product(a: HopfAlgebra, b: HopfAlgebra) -> LimitCone:
    ab = tensor_product(a, b)
    m = b.dim
    pi_a = Morphism.from_columns(ab, a, [{i: b.counit[j]} if b.counit[j] else {}
                                         for i in range(a.dim) for j in range(m)], check=False)
    pi_b = Morphism.from_columns(ab, b, [{j: a.counit[i]} if a.counit[i] else {}
                                         for i in range(a.dim) for j in range(m)], check=False)

    def mediator(f: Morphism, g: Morphism) -> Morphism:
        if f.dom != g.dom or f.cod != a or g.cod != b:
            raise PreconditionError("mediator needs f: H -> A and g: H -> B")
        try:
            phi = Morphism.from_columns(f.dom, ab, _mediator_columns(f, g))
        except PreconditionError as exc:
            raise InvariantViolation(f"product mediator is not a morphism: {exc}") from exc
        if (pi_a @ phi).cols != f.cols or (pi_b @ phi).cols != g.cols:
            raise InvariantViolation("product mediator does not commute with the projections")
        return phi

    return LimitCone(ab, (pi_a, pi_b), mediator, identity_morphism(ab))


def pullback_space(f: Morphism, g: Morphism) -> Subspace:
    """{a (x) b : a1 (x) f(a2) (x) b = a (x) g(b1) (x) b2} inside A (x) B."""
    if f.cod != g.cod:
        raise PreconditionError("pullback needs morphisms with a common codomain")
    a, b, c = f.dom, g.dom, f.cod
    na, nb, nc = a.dim, b.dim, c.dim
    # flattened index in A (x) C (x) B: (i * nc + k) * nb + j
    cols = []
    for i in range(na):
        left: dict = {}
        for (i1, i2), x in a.comul[i].items():
            for k, y in f.cols[i2].items():
                _acc(left, (i1, k), x * y)
        for j in range(nb):
            col: Vec = {}
            for (i1, k), x in left.items():
                _acc(col, (i1 * nc + k) * nb + j, x)
            for (j1, j2), x in b.comul[j].items():
                for k, y in g.cols[j1].items():
                    _acc(col, (i * nc + k) * nb + j2, -x * y)
            cols.append(col)
    return kernel_from_columns(cols, na * nb)


def pullback(f: Morphism, g: Morphism) -> LimitCone:
    """Pullback of A -f-> C <-g- B as a sub-Hopf algebra of A (x) B."""
    space = pullback_space(f, g)
    prod = product(f.dom, g.dom)
    apex, incl = sub_hopf_algebra(prod.apex, space, error=InvariantViolation)
    pi_a = prod.legs[0] @ incl
    pi_b = prod.legs[1] @ incl
    if (f @ pi_a).cols != (g @ pi_b).cols:
        raise InvariantViolation("pullback square does not commute")

    def mediator(phi: Morphism, gamma: Morphism) -> Morphism:
        if (f @ phi).cols != (g @ gamma).cols:
            raise PreconditionError("phi and gamma do not form a cone over the cospan")
        big = prod.mediator(phi, gamma)
        try:
            cols = [space.coords(c) for c in big.cols]
        except DimensionError as exc:
            raise InvariantViolation("pullback mediator leaves the pullback") from exc
        return Morphism.from_columns(phi.dom, apex, cols)

    return LimitCone(apex, (pi_a, pi_b), mediator, incl)


def legs_determine_maps(cone: LimitCone) -> bool:
    """(leg_1 (x) leg_2) o Delta_apex equals the embedding into the ambient product.

    Any coalgebra map into the apex is then recovered from its two legs,
    so mediating morphisms are unique.
    """
    p1, p2 = cone.legs
    apex = cone.apex
    m = p2.cod.dim
    return all(flatten(tensor_map(apex.comul[i], p1.cols, p2.cols), m) == cone.embedding.cols[i]
               for i in range(apex.dim))


def kernel_pair(f: Morphism) -> LimitCone:
    return pullback(f, f)
