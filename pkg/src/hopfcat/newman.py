"""Sub-Hopf algebras versus left ideals that are two-sided coideals.

``tau(G) = H G+`` and ``sigma(I) = Hker(H -> H/I)`` are mutually inverse
for cocommutative H; the functions here compute both directions and the
normal-subalgebra lemmas that follow from the correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .hopf_model import (
    HopfAlgebra,
    _acc,
    augmentation_ideal,
    flatten,
    is_left_ideal,
    is_normal_sub_hopf,
    is_sub_hopf,
    is_two_sided_coideal,
    tensor_map,
)
from .colimits import quotient
from .limits import hopf_kernel_space
from .linear_core import Subspace, kernel_from_columns, unit_vec


@dataclass(frozen=True)
class LeftIdealCoideal:
    owner: HopfAlgebra
    space: Subspace

    def __post_init__(self):
        if not is_left_ideal(self.owner, self.space):
            raise PreconditionError("subspace is not a left ideal")
        if not is_two_sided_coideal(self.owner, self.space):
            raise PreconditionError("subspace is not a two-sided coideal")


def tau(h: HopfAlgebra, g: Subspace) -> LeftIdealCoideal:
    """H G+ for a sub-Hopf algebra G."""
    if not is_sub_hopf(h, g):
        raise PreconditionError("not a sub-Hopf algebra")
    g_plus = g.intersect(augmentation_ideal(h))
    products = [h.mult(unit_vec(i), a) for i in range(h.dim) for a in g_plus.rows]
    return LeftIdealCoideal(h, Subspace(h.dim, products))


def sigma(h: HopfAlgebra, i: LeftIdealCoideal | Subspace) -> Subspace:
    """{x : x1 (x) pi(x2) = x (x) pi(1)} for the coalgebra projection pi: H -> H/I."""
    if isinstance(i, Subspace):
        i = LeftIdealCoideal(h, i)
    space = i.space
    m = space.codim
    proj = [space.quotient_coords(unit_vec(j)) for j in range(h.dim)]
    pi_one = space.quotient_coords(h.unit)
    cols = []
    for x in range(h.dim):
        t = tensor_map(h.comul[x], right=proj)
        for k, c in pi_one.items():
            _acc(t, (x, k), -c)
        cols.append(flatten(t, m))
    return kernel_from_columns(cols, h.dim)


def verify_newman_roundtrip(h: HopfAlgebra, g: Subspace) -> bool:
    return sigma(h, tau(h, g)) == g


def verify_ideal_roundtrip(h: HopfAlgebra, i: LeftIdealCoideal) -> bool:
    return tau(h, sigma(h, i)).space == i.space


def two_sided_ideal_of(h: HopfAlgebra, g: Subspace) -> Subspace:
    """H G+ H."""
    g_plus = g.intersect(augmentation_ideal(h))
    vecs = []
    for a in g_plus.rows:
        for i in range(h.dim):
            left = h.mult(unit_vec(i), a)
            for j in range(h.dim):
                vecs.append(h.mult(left, unit_vec(j)))
    return Subspace(h.dim, vecs)


def verify_normal_kernel_lemma(h: HopfAlgebra, g: Subspace) -> bool:
    """For normal G: H G+ H = H G+, and G is the Hopf kernel of H -> H/HG+H."""
    if not is_normal_sub_hopf(h, g):
        raise PreconditionError("not a normal sub-Hopf algebra")
    ideal = two_sided_ideal_of(h, g)
    if ideal != tau(h, g).space:
        return False
    pres = quotient(h, ideal)
    return hopf_kernel_space(pres.projection) == g
