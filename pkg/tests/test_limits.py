from __future__ import annotations

import pytest

import oracle
from hopfcat.errors import PreconditionError
from hopfcat.groups import cyclic
from hopfcat.hopf_model import (
    Morphism,
    ground_field,
    group_algebra,
    group_likes,
    identity_morphism,
    initial_morphism,
    is_isomorphism,
    is_normal_sub_hopf,
    is_sub_hopf,
    terminal_morphism,
    verify_hopf,
)
from hopfcat.limits import (
    equalizer,
    equalizer_space,
    hopf_kernel,
    hopf_kernel_space,
    legs_determine_maps,
    product,
    pullback,
)
from hopfcat.linear_core import Subspace, unit_vec


def antipode_morphism(h):
    return Morphism.from_columns(h, h, h.antipode)


# -- equalizers ---------------------------------------------------------------

def test_equalizer_of_equal_maps_is_everything(sign):
    s, incl = equalizer(sign, sign)
    assert s == Subspace.full(6) and is_isomorphism(incl)


def test_equalizer_identity_vs_antipode_c4():
    h = group_algebra(cyclic(4))
    s, incl = equalizer(identity_morphism(h), antipode_morphism(h))
    assert s == Subspace(4, [unit_vec(0), unit_vec(2)])
    assert incl.dom.dim == 2 and len(group_likes(incl.dom)) == 2
    assert oracle.equalizer_dim(identity_morphism(h), antipode_morphism(h)) == 2


def test_equalizer_sign_vs_trivial(sign, a3):
    triv = initial_morphism(sign.cod) @ terminal_morphism(sign.dom)
    s, _ = equalizer(sign, triv)
    assert s.dim == 3 and s == a3 == hopf_kernel_space(sign)


def test_equalizer_rejects_non_parallel(sign):
    with pytest.raises(PreconditionError):
        equalizer(sign, identity_morphism(sign.dom))


def test_equalizer_matches_oracle_and_mirror(cat):
    # every pair of parallel homs between small catalog algebras
    by_pair: dict = {}
    for f in cat.homs:
        if f.morphism.dom.dim <= 6 and f.morphism.cod.dim <= 6:
            by_pair.setdefault((f.dom, f.cod), []).append(f.morphism)
    checked = 0
    for maps in by_pair.values():
        for f in maps:
            for g in maps:
                s = equalizer_space(f, g)
                assert s == equalizer_space(f, g, mirrored=True)
                assert s.dim == oracle.equalizer_dim(f, g)
                assert is_sub_hopf(f.dom, s)
                checked += 1
    assert checked > 100


# -- kernels ------------------------------------------------------------------

def test_kernel_of_identity_is_ground_field(cat):
    k, incl = hopf_kernel(identity_morphism(cat.algebra("S3")))
    assert k.dim == 1 and incl(unit_vec(0)) == unit_vec(0)


def test_kernel_of_terminal_is_everything(cat):
    h = cat.algebra("D4")
    assert hopf_kernel_space(terminal_morphism(h)) == Subspace.full(8)


def test_kernel_of_sign(sign, a3):
    k, incl = hopf_kernel(sign)
    assert k.dim == 3 and verify_hopf(k).ok
    assert hopf_kernel_space(sign) == a3
    assert len(group_likes(k)) == 3


def test_kernels_match_oracle_and_are_normal(cat):
    for f in cat.representatives:
        m = f.morphism
        s = hopf_kernel_space(m)
        assert s == hopf_kernel_space(m, mirrored=True)
        assert is_normal_sub_hopf(m.dom, s)
        if m.dom.dim <= 6:
            assert s.dim == oracle.hker_dim(m)


# -- products -----------------------------------------------------------------

def test_product_mediator_of_identities_is_comultiplication():
    c2 = group_algebra(cyclic(2))
    cone = product(c2, c2)
    phi = cone.mediator(identity_morphism(c2), identity_morphism(c2))
    # Delta(g_i) = g_i (x) g_i, flattened as i*2 + i
    assert list(phi.cols) == [unit_vec(0), unit_vec(3)]


def test_product_with_ground_field(cat):
    h = cat.algebra("S3")
    cone = product(h, ground_field())
    assert cone.apex.dim == 6 and is_isomorphism(cone.legs[0])
    assert verify_hopf(cone.apex).ok


def test_product_legs_and_mediator(sign, cat):
    c2 = cat.algebra("C2")
    cone = product(c2, c2)
    phi = cone.mediator(sign, sign)
    assert (cone.legs[0] @ phi).cols == sign.cols
    assert legs_determine_maps(cone)


# -- pullbacks ----------------------------------------------------------------

def test_pullback_over_ground_field_is_product(cat):
    a, b = cat.algebra("C2"), cat.algebra("C3")
    cone = pullback(terminal_morphism(a), terminal_morphism(b))
    assert cone.apex.dim == 6 and is_isomorphism(cone.embedding)


def test_pullback_of_sign_with_itself(sign):
    cone = pullback(sign, sign)
    assert cone.apex.dim == 18 and verify_hopf(cone.apex).ok
    assert len(group_likes(cone.apex)) == 18
    assert legs_determine_maps(cone)
    med = cone.mediator(identity_morphism(sign.dom), identity_morphism(sign.dom))
    assert (cone.legs[0] @ med).cols == identity_morphism(sign.dom).cols


def test_pullback_of_identities_is_diagonal(cat):
    h = cat.algebra("C3")
    ident = identity_morphism(h)
    cone = pullback(ident, ident)
    assert cone.apex.dim == 3
    assert is_isomorphism(cone.legs[0]) and is_isomorphism(cone.legs[1])


def test_pullback_rejects_codomain_mismatch(sign, cat):
    with pytest.raises(PreconditionError):
        pullback(sign, identity_morphism(cat.algebra("C3")))


def test_pullback_mediator_requires_cone(sign):
    s3 = sign.dom
    cone = pullback(sign, sign)
    trivial = initial_morphism(s3) @ terminal_morphism(s3)
    with pytest.raises(PreconditionError):
        cone.mediator(identity_morphism(s3), trivial)
