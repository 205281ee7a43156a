import pytest
from hypothesis import given, settings

from spinquad import (
    SurgeryPresentation,
    act,
    charge_enumerate,
    charge_to_chern,
    chern_enumerate,
    chern_to_charge,
    homology_of,
    spinc_from_charge,
    spinc_from_chern,
)
from spinquad.errors import InvalidCharge, InvalidChernVector, UnknownSpinc
from spinquad.spinc import charge_normal_form, difference, resolve

from _gen import presentations

LENS7 = SurgeryPresentation(((7,),))
CHAIN7 = SurgeryPresentation(((4, 1), (1, 2)))
S3 = SurgeryPresentation(((1,),))


def test_chern_enumerate_examples():
    assert [s.chern for s in chern_enumerate(LENS7)] == [(x,) for x in range(1, 14, 2)]
    assert len(chern_enumerate(S3)) == 1
    classes = chern_enumerate(CHAIN7)
    assert len(classes) == 7
    assert all(a % 2 == 0 and b % 2 == 0 for a, b in (s.chern for s in classes))


def test_charge_enumerate_examples():
    assert charge_enumerate(LENS7) == [(x,) for x in range(1, 14, 2)]
    assert len(charge_enumerate(S3)) == 1
    ks = charge_enumerate(CHAIN7)
    assert len(ks) == 7 and all(a % 2 == 0 and b % 2 == 0 for a, b in ks)


def test_charge_to_chern_examples():
    assert charge_to_chern(LENS7, (1,)) == (7,)
    assert charge_to_chern(CHAIN7, (0, 0)) == (6, 4)
    assert charge_to_chern(S3, (1,)) == (1,)
    assert chern_to_charge(LENS7, (7,)) == (1,)
    assert chern_to_charge(CHAIN7, (6, 4)) == (0, 0)
    assert chern_to_charge(S3, (1,)) == (1,)


def test_parity_rejection():
    with pytest.raises(InvalidChernVector):
        spinc_from_chern(LENS7, (8,))
    with pytest.raises(InvalidChernVector):
        spinc_from_chern(CHAIN7, (1, 0))
    with pytest.raises(InvalidCharge):
        spinc_from_charge(LENS7, (2,))
    with pytest.raises(InvalidCharge):
        spinc_from_charge(CHAIN7, (1, 0))
    with pytest.raises(InvalidChernVector):
        spinc_from_chern(CHAIN7, (6,))


def test_normal_form_modulo_twice_image():
    assert spinc_from_chern(LENS7, (21,)) == spinc_from_chern(LENS7, (7,))
    assert spinc_from_chern(LENS7, (-1,)).chern == (13,)
    sigma = spinc_from_chern(CHAIN7, (6, 4))
    assert spinc_from_chern(CHAIN7, (6 + 8, 4 + 2)) == sigma
    assert spinc_from_chern(CHAIN7, sigma.chern).chern == sigma.chern


def test_act_examples():
    g = homology_of(LENS7)
    sigma = spinc_from_chern(LENS7, (7,))
    assert act(g.zero, sigma) == sigma
    assert act(g.project((1,)), sigma) == spinc_from_chern(LENS7, (9,))
    orbit = {act(h, sigma) for h in g.elements}
    assert orbit == set(chern_enumerate(LENS7))


def test_resolve():
    named = {"base": spinc_from_chern(LENS7, (7,))}
    assert resolve(LENS7, "base", named).chern == (7,)
    assert resolve(LENS7, "s=9").chern == (9,)
    assert resolve(LENS7, "k=1").chern == (7,)
    assert resolve(LENS7, "21").chern == (7,)
    with pytest.raises(UnknownSpinc):
        resolve(LENS7, "nonsense")


@settings(max_examples=60, deadline=None)
@given(presentations(n_max=5, max_order=200))
def test_enumerations_and_round_trips(p):
    order = abs(p.determinant)
    chern = chern_enumerate(p)
    charges = charge_enumerate(p)
    assert len(chern) == len(charges) == order
    assert chern == sorted(chern) and charges == sorted(charges)
    images = set()
    for k in charges:
        s = charge_to_chern(p, k)
        assert all((a - b) % 2 == 0 for a, b in zip(s, p.framings))
        assert chern_to_charge(p, s) == k
        images.add(spinc_from_chern(p, s))
    assert images == set(chern)
    for sigma in chern:
        assert charge_normal_form(p, sigma.charge) == sigma.charge
        assert spinc_from_charge(p, sigma.charge) == sigma


@settings(max_examples=30, deadline=None)
@given(presentations(n_max=4, max_order=200))
def test_action_free_transitive_and_composes(p):
    g = homology_of(p)
    classes = chern_enumerate(p)
    sigma = classes[0]
    orbit = [act(h, sigma) for h in g.elements]
    assert len(set(orbit)) == g.order and set(orbit) == set(classes)
    for h, tau in zip(g.elements, orbit):
        assert difference(sigma, tau) == h
    hs = g.elements[: min(g.order, 12)]
    for h in hs:
        for h2 in hs:
            assert act(h + h2, sigma) == act(h, act(h2, sigma))
