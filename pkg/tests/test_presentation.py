"""Collection, consistency checking, and the presentation text format."""

import itertools
import random

import pytest

import known
import oracle
from pgroups.presentation import (PcPresentation, PresentationError,
                                  check_consistency, format_presentation,
                                  parse_presentation)


def test_identity_and_generators():
    G = known.dihedral8()
    e = G.identity
    for i in range(G.n):
        g = G.generator(i)
        assert G.mul(e, g) == g
        assert G.mul(g, e) == g
        assert G.mul(g, G.inv(g)) == e


def test_dihedral8_relations():
    G = known.dihedral8()
    a, b = G.generator(0), G.generator(1)
    assert G.pow(a, 2) == G.identity
    assert G.pow(b, 4) == G.identity
    assert G.element_order(b) == 4
    # a b a = b^-1
    assert G.mul(G.mul(a, b), a) == G.inv(b)


def test_quaternion8_relations():
    G = known.quaternion8()
    a, b = G.generator(0), G.generator(1)
    assert G.element_order(a) == 4
    assert G.element_order(b) == 4
    # the unique involution is central
    z = G.pow(a, 2)
    assert z == G.pow(b, 2)
    assert all(G.mul(z, x) == G.mul(x, z) for x in G.elements())


@pytest.mark.parametrize("build,oracle_build", [
    (known.dihedral8, lambda: oracle.dihedral(4)),
    (known.quaternion8, oracle.quaternion8),
    (lambda: known.heisenberg(3), lambda: oracle.heisenberg(3)),
])
def test_collection_agrees_with_oracle(build, oracle_build):
    """[DERIVED] collected products match a brute-force multiplication table."""
    G = build()
    og = oracle_build()
    H = known.oracle_to_presentation(og, G.p)
    assert H.p == G.p and H.n == G.n
    assert sorted(map(G.element_order, G.elements())) == og.order_multiset()


def test_associativity_spot_check():
    G = known.quaternion8()
    elems = list(G.elements())
    rng = random.Random(7)
    for _ in range(200):
        x, y, z = (rng.choice(elems) for _ in range(3))
        assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))


def test_commutator_and_conjugation():
    G = known.dihedral8()
    for x, y in itertools.product(G.elements(), repeat=2):
        lhs = G.mul(G.inv(x), G.conj(x, y))         # x^-1 * (y^-1 x y)
        assert G.commutator(x, y) == lhs


def test_consistency_of_known_groups():
    for G in (known.dihedral8(), known.quaternion8(), known.cyclic(3, 3),
              known.heisenberg(5), known.extraspecial_p2(5),
              known.elementary_abelian(2, 4)):
        assert check_consistency(G)


def test_inconsistent_presentation_detected():
    # g1^2 = g2 makes g2 a power of g1, so [g2, g1] = g3 forces g3 = 1:
    # the relations cannot hold in a group of order 8.
    bad = PcPresentation(2, 3, {0: (0, 1, 0)}, {(1, 0): (0, 0, 1)})
    assert not check_consistency(bad)


def test_presentation_shape_validation():
    with pytest.raises(PresentationError):
        PcPresentation(1, 2)
    with pytest.raises(PresentationError):
        # power word may only use later generators
        PcPresentation(2, 2, {1: (1, 0)}, {})
    with pytest.raises(PresentationError):
        # commutator pair out of range
        PcPresentation(2, 2, {}, {(0, 1): (0, 1)})


def test_text_round_trip():
    for G in (known.dihedral8(), known.quaternion8(), known.cyclic(5, 2),
              PcPresentation(3, 0), known.heisenberg(7)):
        text = format_presentation(G)
        assert parse_presentation(text) == G


def test_parse_rejects_malformed():
    for text in ("", "2", "x y", "2 2 | pow 5: 0,1", "2 2 | comm 1 1: 0,1",
                 "2 2 | pow 1: 0,1,0"):
        with pytest.raises((PresentationError, ValueError)):
            parse_presentation(text)


def test_trivial_group():
    G = PcPresentation(2, 0)
    assert G.order == 1
    assert list(G.elements()) == [()]
    assert check_consistency(G)
