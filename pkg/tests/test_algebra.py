import random
from fractions import Fraction

import pytest

from dehnlie import corpus
from dehnlie import linalg as la
from dehnlie.algebra import (FieldComponent, GradedLieAlgebra, descending_central_series,
                             graded_component_basis, ideal_generated, is_1_tame,
                             is_doubly_1_tame, principal_weights, subalgebra_generated,
                             validate, wadd, weight_set)
from dehnlie.errors import InvalidInput
from strategies import random_graded_basis_change

R = FieldComponent("R")


def heis(z_weight=2):
    return GradedLieAlgebra.from_names(
        "h", 1, 1, [R], [("X", "R", (1,)), ("Y", "R", (1,)), ("Z", "R", (z_weight,))],
        {("X", "Y"): {"Z": 1}})


def w(*xs):
    return tuple(Fraction(x) for x in xs)


def test_validate_examples():
    assert validate(corpus.sol(1)) == []
    assert validate(heis()) == []
    bad = validate(heis(3))
    assert len(bad) == 1
    assert bad[0].kind == "grading" and bad[0].elements == ("X", "Y")


def test_validate_jacobi_and_fields():
    a = GradedLieAlgebra.from_names(
        "bad", 0, 1, [R], [("a", "R", ()), ("b", "R", ()), ("c", "R", ())],
        {("a", "b"): {"c": 1}, ("b", "c"): {"a": 1}, ("a", "c"): {"a": 1}})
    assert any(v.kind == "jacobi" and v.elements == ("a", "b", "c") for v in validate(a))
    qp = FieldComponent("Q5", "non-archimedean", 5)
    b = GradedLieAlgebra.from_names(
        "mixed", 1, 1, [R, qp], [("x", "R", (1,)), ("y", "Q5", (1,)), ("z", "R", (2,))],
        {("x", "y"): {"z": 1}})
    assert [v.kind for v in validate(b)] == ["field-separation"]


def test_structural_errors():
    with pytest.raises(InvalidInput):
        FieldComponent("Qp", "non-archimedean")
    with pytest.raises(InvalidInput):
        FieldComponent("R", "archimedean", 3)
    with pytest.raises(InvalidInput):
        GradedLieAlgebra.from_names("d", 1, 1, [R], [("x", "R", (1,)), ("x", "R", (1,))], {})
    with pytest.raises(InvalidInput):
        GradedLieAlgebra.from_names("d", 1, 1, [R], [("x", "R", (1,)), ("y", "R", (1,))],
                                    {("x", "y"): {}, ("y", "x"): {}})


def test_antisymmetric_input_order():
    a = GradedLieAlgebra.from_names(
        "h", 1, 1, [R], [("X", "R", (1,)), ("Y", "R", (1,)), ("Z", "R", (2,))],
        {("Y", "X"): {"Z": 1}})
    assert a.bracket_basis(0, 1) == {2: -1}
    assert a.bracket_basis(1, 0) == {2: 1}


def test_graded_component_basis():
    h = corpus.heisenberg()
    assert graded_component_basis(h, (2,)) == [h.index("Z")]
    assert graded_component_basis(h, (5,)) == []
    a4 = corpus.abels_a4()
    assert [a4.names[i] for i in graded_component_basis(a4, (0, 0))] == ["14"]


def test_central_series_examples():
    ab = corpus.sol(1)
    rep = descending_central_series(ab)
    assert rep.dims == [2, 0] and rep.nilpotency_length == 1
    rep = descending_central_series(corpus.heisenberg())
    assert rep.dims == [3, 1, 0] and rep.nilpotency_length == 2
    assert rep.terms[1] == [corpus.heisenberg().unit(2)]
    rep = descending_central_series(corpus.abels_a4())
    assert rep.is_nilpotent and rep.stable_term == []
    assert descending_central_series(corpus.filiform4()).nilpotency_length == 3


def test_central_series_not_nilpotent():
    rep = descending_central_series(corpus.example_13dim())
    assert not rep.is_nilpotent
    assert rep.stable_term == rep.terms[-1]
    dims = rep.dims
    assert all(a > b for a, b in zip(dims, dims[1:]))
    # the exponential radical is spanned by the off-diagonal part
    e = corpus.example_13dim()
    names = {e.names[i] for v in rep.stable_term for i, x in enumerate(v) if x}
    assert names <= {"13", "14", "15", "34", "35", "36", "45", "46"}


def test_principal_weights_examples():
    pw = principal_weights(corpus.abels_a4())
    a4 = corpus.abels_a4()
    expected = {a4.weight_of(a4.index(n)) for n in ("12", "23", "34")}
    assert set(pw.weights) == expected
    hs = corpus.higher_sol()
    assert set(principal_weights(hs).weights) == set(hs.degrees())
    ph = principal_weights(corpus.heisenberg())
    assert ph.weights == (w(1),) and ph.multiplicity[w(1)] == 2


def test_principal_flags_per_field():
    ws = weight_set(corpus.sol_real_padic(5))
    assert ws.principal_fields[w(1)] == {"R"}
    assert ws.principal_fields[w(-1)] == {"Q5"}


def test_one_tame_examples():
    assert is_1_tame(corpus.sol(1)).holds
    assert is_1_tame(corpus.abels_a4()).holds
    check = is_1_tame(corpus.example_13dim())
    assert not check.holds
    g = corpus.example_13dim()
    assert g.names[check.witness.index(1)] == "33"


def test_doubly_one_tame_examples():
    assert is_doubly_1_tame(corpus.sol(1)).holds
    assert is_doubly_1_tame(corpus.abels_2()).holds
    assert not is_doubly_1_tame(corpus.example_13dim()).holds


def test_doubly_one_tame_failure_names_a_weight():
    # [x, y] = z with z of weight 0 and only one opposite pair
    a = GradedLieAlgebra.from_names(
        "one-pair", 1, 1, [R], [("x", "R", (1,)), ("y", "R", (-1,)), ("z", "R", (0,))],
        {("x", "y"): {"z": 1}})
    assert is_1_tame(a).holds
    check = is_doubly_1_tame(a)
    assert not check.holds
    assert check.witness[0] in (w(0), w(1), w(-1))


def test_subalgebra_generated_examples():
    h = corpus.heisenberg()
    full = [h.unit(i) for i in range(3)]
    assert len(subalgebra_generated(h, full)) == 3
    assert subalgebra_generated(h, []) == []
    assert len(subalgebra_generated(h, [h.unit(0), h.unit(1)])) == 3


NILPOTENT = ["heisenberg", "filiform-4", "abels-a4", "abels-a4-bar", "abels-2", "sl3-v10",
             "sl3-v20", "sl3-v11", "e-13dim", "higher-sol", "sol-1-1"]


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_validates(name):
    assert validate(corpus.load(name)) == []


@pytest.mark.parametrize("name", corpus.names())
def test_central_series_monotone_and_closed(name):
    alg = corpus.load(name)
    rep = descending_central_series(alg)
    dims = rep.dims
    assert all(a >= b for a, b in zip(dims, dims[1:]))
    stable = rep.stable_term
    red = la.Reducer(stable, alg.dim)
    assert all(red.contains(alg.bracket(u, v)) for u in stable for v in stable)


@pytest.mark.parametrize("name", NILPOTENT)
def test_weights_are_sums_of_principal_weights(name):
    alg = corpus.load(name)
    ws = weight_set(alg)
    principal = ws.principal_weights
    reached = set(principal)
    while True:
        new = {wadd(s, p) for s in reached for p in principal} & set(ws.weights)
        if new <= reached:
            break
        reached |= new
    assert set(ws.weights) <= reached


@pytest.mark.parametrize("name", NILPOTENT)
def test_principal_weights_nonzero_for_nilpotent(name):
    ws = weight_set(corpus.load(name))
    assert all(any(x != 0 for x in p) for p in ws.principal_weights)


@pytest.mark.parametrize("name", corpus.names())
def test_subalgebra_of_nonzero_part_is_ideal(name):
    alg = corpus.load(name)
    seed = [alg.unit(i) for i in alg.nonzero_indices()]
    sub = subalgebra_generated(alg, seed)
    if is_1_tame(alg).holds:
        assert sub == ideal_generated(alg, seed)
    red = la.Reducer(sub, alg.dim)
    for v in sub:
        for u in seed:
            assert red.contains(alg.bracket(u, v))


@pytest.mark.parametrize("name", ["abels-2", "sl3-v11", "example-13dim"])
def test_graded_basis_change_keeps_validity(name):
    alg = corpus.load(name)
    rng = random.Random(7)
    p = random_graded_basis_change(alg, rng)
    new = alg.change_basis(p)
    assert validate(new) == []
    assert descending_central_series(new).dims == descending_central_series(alg).dims
