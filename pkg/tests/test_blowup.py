import random

import pytest

from dehnlie import corpus
from dehnlie import linalg as la
from dehnlie.algebra import is_1_tame, validate
from dehnlie.blowup import (blow_up, is_relatively_perfect_degree_zero, verify_blow_up)
from dehnlie.homology import h2_dim

from strategies import random_graded_basis_change


@pytest.mark.parametrize("name", corpus.names())
def test_blow_up_verifies(name):
    alg = corpus.load(name)
    res = blow_up(alg)
    ver = verify_blow_up(res)
    assert ver.ok, ver.failures()
    assert res.kernel_dim == h2_dim(alg)
    assert not validate(res.blown_up)


def test_heisenberg_blow_up_is_itself():
    h = corpus.heisenberg()
    res = blow_up(h)
    # H2 vanishes in degree 0, so the blow-up is the nonzero part plus [g,g]_0
    assert res.kernel_dim == 0
    assert res.blown_up.dim == h.dim


def test_sol_blow_up_adds_central_element():
    res = blow_up(corpus.sol(1))
    assert res.kernel_dim == 1
    assert res.blown_up.dim == 3
    k = res.kernel_basis[0]
    assert all(la.is_zero(res.blown_up.bracket(k, res.blown_up.unit(i)))
               for i in range(3))
    # second blow-up of a relatively perfect algebra adds nothing
    assert is_relatively_perfect_degree_zero(corpus.sol(1))
    assert blow_up(res.blown_up).kernel_dim == 0


def test_abels_bar_blow_up():
    res = blow_up(corpus.abels_a4_bar())
    assert res.kernel_dim == 1
    assert res.blown_up.name.endswith("~")


def test_mixed_fields_note():
    res = blow_up(corpus.sol_real_padic(3))
    assert res.notes
    assert [f.id for f in res.blown_up.fields] == ["Q"]


def test_one_tame_preserved():
    for name in corpus.names():
        alg = corpus.load(name)
        if is_1_tame(alg).holds:
            assert is_1_tame(blow_up(alg).blown_up).holds, name


@pytest.mark.parametrize("name", ["abels-a4-bar", "sol-1-1", "example-13dim", "abels-2"])
def test_kernel_dim_basis_invariant(name):
    alg = corpus.load(name)
    rng = random.Random(name)
    for _ in range(3):
        other = alg.change_basis(random_graded_basis_change(alg, rng))
        assert blow_up(other).kernel_dim == blow_up(alg).kernel_dim
