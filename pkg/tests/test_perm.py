import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from facetpair.perm import Perm, Perm3, Perm4, Perm5, conjugacy_class

from conftest import perm_sign

perms5 = st.permutations(range(5)).map(Perm5)


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Perm5([0, 0, 1, 2, 3])
    with pytest.raises(ValueError):
        Perm4([0, 1, 2, 3, 4])


def test_composition_is_function_notation():
    p = Perm4([1, 2, 3, 0])
    q = Perm4([0, 1, 3, 2])
    assert (p * q).images == tuple(p[q[i]] for i in range(4))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_sign_matches_inversion_parity(n):
    for images in itertools.permutations(range(n)):
        assert Perm(images).sign() == perm_sign(images)


@given(perms5, perms5)
def test_sign_is_multiplicative(p, q):
    assert (p * q).sign() == p.sign() * q.sign()


@given(perms5)
def test_inverse(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


def test_all_is_lexicographic():
    perms = Perm4.all()
    assert len(perms) == 24
    assert [p.images for p in perms] == sorted(p.images for p in perms)
    assert perms[0].is_identity()


def test_conjugacy_classes():
    assert conjugacy_class(Perm3([0, 1, 2])) == "identity"
    assert conjugacy_class(Perm3([1, 0, 2])) == "transposition"
    assert conjugacy_class(Perm3([1, 2, 0])) == "3-cycle"
    assert conjugacy_class(Perm([1, 0])) == "transposition"
    assert conjugacy_class(Perm5([1, 0, 3, 2, 4])) == "type(2,2)"


def test_transposition():
    assert Perm5.transposition(0, 1).images == (1, 0, 2, 3, 4)
