from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from hopfcat.catalog import Catalog
from hopfcat.errors import PreconditionError
from hopfcat.groups import cyclic
from hopfcat.hopf_model import (
    Morphism,
    ground_field,
    group_algebra,
    group_likes,
    identity_morphism,
    initial_morphism,
    is_commutative,
    is_isomorphism,
    tensor_product,
    terminal_morphism,
    verify_hopf,
)
from hopfcat.limits import hopf_kernel_space
from hopfcat.linear_core import unit_vec
from hopfcat.smash import (
    Action,
    PointedObject,
    abelian_obstruction,
    abelian_object_test,
    conjugation_action,
    kernel_with_action,
    smash_product,
    split_epi_decompose,
    trivial_action,
    verify_A2_instance,
    verify_A3_instance,
    verify_A4_instance,
)

_CAT = Catalog.standard()
SMALL_ACTIONS = [(y, k, rho) for y in ("C1", "C2", "C3", "C2xC2") for k in ("C2", "C3", "C4", "C2xC2")
                 if _CAT.groups[y].order * _CAT.groups[k].order <= 16
                 for rho, _ in _CAT.automorphism_actions(y, k)]


def _action(y, k, rho):
    return dict(_CAT.automorphism_actions(y, k))[rho]


# -- actions ------------------------------------------------------------------

def test_trivial_action_verifies(cat):
    act = trivial_action(cat.algebra("C3"), cat.algebra("C4"))
    assert all(act.verify().values())


def test_non_action_rejected(cat):
    y, k = cat.algebra("C2"), cat.algebra("C3")
    # sending every basis element to e is not unital in the actor unit
    with pytest.raises(PreconditionError):
        Action.from_function(y, k, lambda a, b: {0: 1})


def test_action_matrix_round_trip(inversion):
    again = Action(inversion.actor, inversion.target, inversion.matrix)
    assert again.same_action(inversion)


# -- smash products -----------------------------------------------------------

def test_trivial_action_gives_tensor_product(cat):
    y, k = cat.algebra("C2"), cat.algebra("C3")
    sp = smash_product(trivial_action(y, k))
    prod = tensor_product(k, y)
    assert sp.hopf.structure_key() == prod.structure_key()


def test_smash_over_ground_field_is_actor(cat):
    y = cat.algebra("S3")
    sp = smash_product(trivial_action(y, ground_field()))
    assert sp.hopf.dim == 6 and is_isomorphism(sp.p) and is_isomorphism(sp.s)


def test_inversion_smash_is_s3(inversion):
    sp = smash_product(inversion)
    h = sp.hopf
    assert h.dim == 6 and verify_hopf(h).ok and not is_commutative(h)
    assert len(group_likes(h)) == 6 == oracle.grouplike_count_diagonal(h)
    assert not oracle.is_commutative(h)
    assert h.basis[1] == "g0#g1"


def test_smash_product_pointing_maps(inversion):
    sp = smash_product(inversion)
    po = PointedObject(sp.p, sp.s)
    assert hopf_kernel_space(po.p).dim == 3


# -- conjugation --------------------------------------------------------------

@given(st.sampled_from(SMALL_ACTIONS))
def test_equivalence_loop(case):
    act = _action(*case)
    sp = smash_product(act)
    assert verify_hopf(sp.hopf).ok
    po = PointedObject(sp.p, sp.s)
    assert conjugation_action(po).same_action(act)
    dec = split_epi_decompose(po)
    assert is_isomorphism(dec.F)


def test_conjugation_recovers_trivial_action(cat):
    act = trivial_action(cat.algebra("C2"), cat.algebra("C2"))
    sp = smash_product(act)
    assert conjugation_action(PointedObject(sp.p, sp.s)).same_action(act)


def test_sign_section_conjugation_is_inversion(sign, transposition_section, s3_group):
    ka = kernel_with_action(PointedObject(sign, transposition_section))
    assert ka.kernel.dim == 3
    for k in range(3):
        x = ka.inclusion.cols[k]
        (elem,) = x
        expected = unit_vec(s3_group.inverse(elem))
        assert ka.inclusion(ka.action.act(unit_vec(1), unit_vec(k))) == expected


def test_identity_pointed_object_has_trivial_kernel(cat):
    h = cat.algebra("C4")
    ident = identity_morphism(h)
    ka = kernel_with_action(PointedObject(ident, ident))
    assert ka.kernel.dim == 1
    assert ka.action.same_action(trivial_action(h, ka.kernel))


def test_pointed_object_requires_section():
    c4, c2 = group_algebra(cyclic(4)), group_algebra(cyclic(2))
    p = Morphism.from_columns(c4, c2, [unit_vec(i % 2) for i in range(4)])
    s = Morphism.from_columns(c2, c4, [unit_vec(0), unit_vec(2)])
    with pytest.raises(PreconditionError):
        PointedObject(p, s)


# -- A2 -----------------------------------------------------------------------

def test_a2_terminal_initial(cat):
    h = cat.algebra("D4")
    po = PointedObject(terminal_morphism(h), initial_morphism(h))
    assert verify_A2_instance(po)
    dec = split_epi_decompose(po)
    assert dec.smash.hopf.dim == 8


def test_a2_sign(sign, transposition_section):
    po = PointedObject(sign, transposition_section)
    assert verify_A2_instance(po)
    dec = split_epi_decompose(po)
    assert dec.smash.hopf.dim == 6
    assert (dec.F @ dec.G).cols == identity_morphism(dec.smash.hopf).cols
    assert (dec.G @ dec.F).cols == identity_morphism(sign.dom).cols


def test_a2_smash_constructed(inversion):
    sp = smash_product(inversion)
    assert verify_A2_instance(PointedObject(sp.p, sp.s))


# -- A3 -----------------------------------------------------------------------

def test_a3_identity(sign):
    assert verify_A3_instance(sign, identity_morphism(sign.cod))


def test_a3_kernel_as_pullback(cat):
    c4, c2 = cat.algebra("C4"), cat.algebra("C2")
    q = Morphism.from_columns(c4, c2, [unit_vec(i % 2) for i in range(4)])
    assert verify_A3_instance(q, initial_morphism(c2))


def test_a3_requires_surjection(a3_inclusion, cat):
    with pytest.raises(PreconditionError):
        verify_A3_instance(a3_inclusion, identity_morphism(cat.algebra("S3")))


def test_a3_sweep_small(cat):
    small = [f for f in cat.representatives if f.morphism.dom.dim <= 4]
    checked = 0
    for q in small:
        if not q.surjective:
            continue
        for g in small:
            if g.cod == q.cod:
                assert verify_A3_instance(q.morphism, g.morphism), (q.label, g.label)
                checked += 1
    assert checked > 20


# -- A4 -----------------------------------------------------------------------

def test_a4_initial(sign):
    assert verify_A4_instance(initial_morphism(sign.dom), sign)


def test_a4_a3_inclusion_then_sign(a3_inclusion, sign):
    assert verify_A4_instance(a3_inclusion, sign)


def test_a4_initial_then_terminal(cat):
    h = cat.algebra("S3")
    assert verify_A4_instance(initial_morphism(h), terminal_morphism(h))


def test_a4_requires_composable(sign):
    with pytest.raises(PreconditionError):
        verify_A4_instance(sign, sign)


# -- abelian objects ----------------------------------------------------------

def test_abelian_examples(cat):
    assert not abelian_object_test(cat.algebra("S3"))
    assert abelian_obstruction(cat.algebra("S3")) is not None
    assert abelian_object_test(cat.algebra("C6"))
    c2 = cat.algebra("C2")
    assert abelian_object_test(tensor_product(c2, c2))
    assert abelian_object_test(ground_field())
    assert abelian_obstruction(cat.algebra("C6")) is None


def test_abelian_matches_commutativity_on_smash(inversion, cat):
    h = smash_product(inversion).hopf
    assert abelian_object_test(h) == is_commutative(h) is False
    h2 = smash_product(trivial_action(cat.algebra("C2"), cat.algebra("C3"))).hopf
    assert abelian_object_test(h2) == is_commutative(h2) is True
