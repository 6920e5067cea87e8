"""Finite colimits: Hopf ideals, quotients, coequalizers, cokernels, images."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InvariantViolation, PreconditionError
from .hopf_model import (
    HopfAlgebra,
    Morphism,
    augmentation_ideal,
    is_hopf_ideal,
    is_two_sided_coideal,
    linear_image,
    linear_kernel,
    projection_columns,
    sub_hopf_algebra,
    tensor_map,
    zero_morphism,
)
from .limits import kernel_pair
from .linear_core import Subspace, VecLike, as_vec, sub, unit_vec


@dataclass(frozen=True)
class QuotientPresentation:
    source: HopfAlgebra
    ideal: Subspace
    quotient: HopfAlgebra
    projection: Morphism


def hopf_ideal_generated(h: HopfAlgebra, gens: Iterable[VecLike]) -> Subspace:
    """Smallest subspace containing ``gens`` closed under H . - . H and S.

    Raises when a generator has nonzero counit, or when the resulting
    two-sided ideal is not a coideal.
    """
    gens = [as_vec(v) for v in gens]
    for v in gens:
        if h.eps(v):
            raise PreconditionError("generator has nonzero counit; it lies in no Hopf ideal")
    basis = [unit_vec(i) for i in range(h.dim)]
    current = Subspace(h.dim, gens)
    while True:
        new = list(current.rows)
        for b in current.rows:
            new.append(h.anti(b))
            for e in basis:
                new.append(h.mult(e, b))
                new.append(h.mult(b, e))
        nxt = Subspace(h.dim, new)
        if nxt.dim == current.dim:
            break
        current = nxt
    if not is_two_sided_coideal(h, current):
        raise PreconditionError("generated two-sided ideal is not a coideal")
    return current


def quotient(h: HopfAlgebra, ideal: Subspace) -> QuotientPresentation:
    """H/I on the basis of non-pivot coordinates of I."""
    if not is_hopf_ideal(h, ideal):
        raise PreconditionError("not a Hopf ideal")
    q = projection_columns(ideal)
    reps = ideal.complement
    mul = {}
    for a, i in enumerate(reps):
        for b, j in enumerate(reps):
            v = ideal.quotient_coords(h.mul.get((i, j), {}))
            if v:
                mul[(a, b)] = v
    comul = [tensor_map(h.comul[i], q, q) for i in reps]
    unit = ideal.quotient_coords(h.unit)
    counit = [h.counit[i] for i in reps]
    antipode = [ideal.quotient_coords(h.antipode[i]) for i in reps]
    names = [h.basis[i] for i in reps]
    quo = HopfAlgebra(names, mul, comul, unit, counit, antipode)
    try:
        proj = Morphism.from_columns(h, quo, q)
    except PreconditionError as exc:
        raise InvariantViolation(f"quotient projection is not a morphism: {exc}") from exc
    return QuotientPresentation(h, ideal, quo, proj)


def coequalizer(f: Morphism, g: Morphism) -> QuotientPresentation:
    if f.dom != g.dom or f.cod != g.cod:
        raise PreconditionError("morphisms are not parallel")
    j = [sub(f.cols[i], g.cols[i]) for i in range(f.dom.dim)]
    try:
        ideal = hopf_ideal_generated(f.cod, j)
    except PreconditionError as exc:
        raise InvariantViolation(f"coequalizer generators are not coideal-compatible: {exc}") from exc
    pres = quotient(f.cod, ideal)
    p = pres.projection
    if (p @ f).cols != (p @ g).cols:
        raise InvariantViolation("projection does not coequalize the pair")
    return pres


def hopf_cokernel(f: Morphism) -> QuotientPresentation:
    """B -> B / <f(A+)>."""
    gens = [f(v) for v in augmentation_ideal(f.dom).rows]
    try:
        ideal = hopf_ideal_generated(f.cod, gens)
    except PreconditionError as exc:
        raise InvariantViolation(f"f(A+) does not generate a Hopf ideal: {exc}") from exc
    return quotient(f.cod, ideal)


def hopf_cokernel_via_coequalizer(f: Morphism) -> QuotientPresentation:
    return coequalizer(f, zero_morphism(f.dom, f.cod))


class Factorization(NamedTuple):
    pi: Morphism
    iota: Morphism
    mid: HopfAlgebra


def image_factorization(f: Morphism) -> Factorization:
    """f = iota o pi through the linear image with its induced Hopf structure."""
    im = linear_image(f)
    mid, iota = sub_hopf_algebra(f.cod, im, error=InvariantViolation)
    pi = Morphism.from_columns(f.dom, mid, [im.coords(c) for c in f.cols])
    if (iota @ pi).cols != f.cols:
        raise InvariantViolation("image factorization does not compose to f")
    return Factorization(pi, iota, mid)


def kernel_pair_ideal(f: Morphism) -> Subspace:
    """Span of eps(x')x - eps(x)x' over the kernel pair X x_Y X."""
    cone = kernel_pair(f)
    p1, p2 = cone.legs
    return Subspace(f.dom.dim, [sub(p1.cols[i], p2.cols[i]) for i in range(cone.apex.dim)])


def kernel_pair_agrees(f: Morphism) -> bool:
    """The coequalizer of the kernel pair is the linear image projection."""
    return kernel_pair_ideal(f) == linear_kernel(f)

