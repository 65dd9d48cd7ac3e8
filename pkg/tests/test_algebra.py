import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiralgebra import algebra as alg
from chiralgebra.algebra import Kind, compose, operator

from . import oracles

OPS = alg.all_operators()
op_strategy = st.sampled_from(OPS)


def test_identity_is_r1():
    assert operator(Kind.ROTATION, 1).matrix == tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def test_i1_swaps_first_and_last_slot():
    assert operator("I", 1).act(("a", "b", "c", "d")) == ("d", "b", "c", "a")


def test_r2_matches_its_action():
    assert operator("R", 2).act(("P1", "P2", "P3", "P4")) == ("P3", "P2", "P4", "P1")


@pytest.mark.parametrize("index", [0, 13, -1])
def test_index_out_of_range(index):
    with pytest.raises(ValueError):
        operator("R", index)


def test_unknown_kind():
    with pytest.raises(ValueError):
        operator("X", 1)


def test_by_name_round_trip():
    for op in OPS:
        assert alg.by_name(op.name) is op


def test_set_is_every_permutation_matrix():
    expected = {tuple(map(tuple, oracles.perm_matrix(p))) for p in oracles.ALL_PERMS}
    assert {op.matrix for op in OPS} == expected
    assert len({op.matrix for op in OPS}) == 24


@pytest.mark.parametrize("op", OPS, ids=str)
def test_determinant_matches_numpy_and_kind(op):
    assert alg.determinant(op) == oracles.int_det(op.matrix) == op.kind.sign


@pytest.mark.parametrize("op", OPS, ids=str)
def test_rotations_are_even_permutations(op):
    assert oracles.parity(op.perm) == op.kind.sign


def test_frozen_products():
    assert compose(operator("R", 8), operator("R", 9)).name == "R5"
    assert compose(operator("I", 10), operator("R", 10)).name == "I7"


def test_i5_i2_product():
    # oracle: plain integer matrix product
    a, b = operator("I", 5), operator("I", 2)
    prod = np.array(a.matrix) @ np.array(b.matrix)
    rev = np.array(b.matrix) @ np.array(a.matrix)
    assert compose(a, b).name == "R6"
    assert compose(b, a).name == "R10"
    assert compose(a, b).matrix == tuple(map(tuple, prod))
    assert compose(b, a).matrix == tuple(map(tuple, rev))


@given(op_strategy, op_strategy)
def test_compose_is_matrix_product(a, b):
    assert np.array_equal(compose(a, b).array, a.array @ b.array)


@given(op_strategy, op_strategy)
def test_determinant_is_multiplicative(a, b):
    assert alg.determinant(compose(a, b)) == alg.determinant(a) * alg.determinant(b)


@given(op_strategy)
def test_identity_acts_trivially(x):
    assert compose(alg.IDENTITY, x) is x
    assert compose(x, alg.IDENTITY) is x


@given(op_strategy)
def test_inverse(x):
    assert compose(x, alg.inverse(x)) is alg.IDENTITY


@given(op_strategy, op_strategy, op_strategy)
def test_associative(a, b, c):
    assert compose(compose(a, b), c) is compose(a, compose(b, c))


def test_cayley_table_shape_and_identity_row():
    table = alg.cayley_table()
    assert len(table) == 24 and all(len(row) == 24 for row in table)
    assert table[0] == list(OPS)
    assert table[7][8].name == "R5"  # R8 row, R9 column


def test_rotation_block_closed():
    table = alg.cayley_table()
    assert all(table[i][j].kind is Kind.ROTATION for i in range(12) for j in range(12))
    assert all(table[i][j].kind is Kind.ROTATION for i in range(12, 24) for j in range(12, 24))
    assert all(table[i][j].kind is Kind.INVERSION for i in range(12) for j in range(12, 24))


def test_latin_square():
    table = alg.cayley_table()
    for row in table:
        assert len(set(row)) == 24
    for col in zip(*table):
        assert len(set(col)) == 24


def test_subgroups():
    assert alg.is_subgroup(alg.rotations())
    assert not alg.is_subgroup(alg.inversions())
    klein = [operator("R", k) for k in (1, 5, 7, 11)]
    assert alg.is_subgroup(klein)
    assert all(compose(a, b) is compose(b, a) for a in klein for b in klein)


def test_isomorphic_to_s4_via_action():
    # acting on slot labels, compose must agree with permutation composition
    v = ("a", "b", "c", "d")
    for a, b in itertools.product(OPS, OPS):
        assert compose(a, b).act(v) == a.act(b.act(v))


# -- characteristic polynomials ---------------------------------------------

@pytest.mark.parametrize("op", OPS, ids=str)
def test_charpoly_matches_sympy(op):
    assert alg.char_poly(op).coefficients == oracles.sympy_charpoly(op.matrix)


@pytest.mark.parametrize("op", OPS, ids=str)
def test_charpoly_vanishes_at_one(op):
    assert alg.char_poly(op)(1) == 0


@pytest.mark.parametrize(
    "name, cls",
    [
        ("R1", alg.CharPolyClass.IDENTITY),
        ("R5", alg.CharPolyClass.DOUBLE_SWAP),
        ("I4", alg.CharPolyClass.FOUR_CYCLE),
        ("R2", alg.CharPolyClass.THREE_CYCLE),
        ("I1", alg.CharPolyClass.SWAP),
    ],
)
def test_charpoly_class_examples(name, cls):
    assert alg.char_poly(alg.by_name(name)).factored is cls


@given(op_strategy, op_strategy)
def test_charpoly_conjugation_invariant(g, a):
    conj = compose(compose(g, a), alg.inverse(g))
    assert alg.char_poly(conj) == alg.char_poly(a)


# -- eigenvalues ------------------------------------------------------------

def test_eigen_identity():
    assert alg.eigenvalues(alg.IDENTITY) == (alg.ONE,) * 4


def test_eigen_i4():
    assert sorted(alg.eigenvalues(operator("I", 4))) == sorted([alg.ONE, alg.MINUS_ONE, alg.I_UNIT, alg.MINUS_I])


def test_eigen_r2():
    assert sorted(alg.eigenvalues(operator("R", 2))) == sorted([alg.ONE, alg.ONE, alg.OMEGA, alg.OMEGA_BAR])


def test_root_values():
    assert alg.OMEGA.to_complex() == pytest.approx(complex(-0.5, np.sqrt(3) / 2), abs=1e-15)
    assert str(alg.OMEGA_BAR) == "(-1-i√3)/2"
    assert alg.I_UNIT * alg.I_UNIT == alg.MINUS_ONE


@pytest.mark.parametrize("op", OPS, ids=str)
def test_eigenvalues_match_numpy(op):
    ours = [v.to_complex() for v in alg.eigenvalues(op)]
    ref = np.linalg.eigvals(op.array.astype(float))
    key = lambda z: (round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0)
    assert sorted(map(key, ours)) == sorted(map(key, ref))


@pytest.mark.parametrize("op", OPS, ids=str)
def test_eigenpairs_exact_and_float(op):
    es = alg.eigen(op)
    assert len(es.pairs) == 4
    for pair in es.pairs:
        assert alg.eigen_residual_is_zero(op, pair)
        assert alg.eigen_residual_float(op, pair) < 1e-12
        first = next(e for e in pair.vector if e is not None)
        assert first == alg.ONE
    # the vectors span the whole space: permutation matrices are diagonalisable
    basis = np.array([p.numeric_vector() for p in es.pairs])
    assert np.linalg.matrix_rank(basis) == 4


@pytest.mark.parametrize("op", OPS, ids=str)
def test_eigen_invariants(op):
    values = alg.eigenvalues(op)
    assert set(values) <= alg.ALLOWED_EIGENVALUES
    assert all(v.order in (1, 2, 3, 4) for v in values)
    prod = alg.Root(sum(v.k for v in values))
    assert prod.to_complex() == pytest.approx(op.kind.sign)


def test_six_distinct_eigenvalues():
    seen = set().union(*(set(alg.eigenvalues(op)) for op in OPS))
    assert seen == alg.ALLOWED_EIGENVALUES and len(seen) == 6


def test_wrong_eigenpair_detected():
    op = operator("R", 2)
    pair = alg.eigen(op).pairs[-1]
    bogus = alg.EigenPair(alg.MINUS_ONE, pair.vector)
    assert not alg.eigen_residual_is_zero(op, bogus)


def test_cyclotomic_zero():
    # 1 + ω + ω² = 0 with ω = ζ^4
    assert alg.cyclotomic_is_zero([1, 0, 0, 0, 1, 0, 0, 0, 1])
    assert not alg.cyclotomic_is_zero([1])
    assert alg.cyclotomic_is_zero([1] + [0] * 5 + [1])  # 1 + (-1)


# -- commutators and dimension -----------------------------------------------

@pytest.mark.parametrize("s, m", list(itertools.product((5, 7, 11), repeat=2)))
def test_klein_commutators_vanish(s, m):
    assert alg.commutator(operator("R", s), operator("R", m)).is_zero


@given(op_strategy)
def test_identity_commutes(x):
    assert alg.commutator(alg.IDENTITY, x).is_zero


def test_i1_i2_commutator():
    dec = alg.commutator(operator("I", 1), operator("I", 2))
    assert not dec.is_zero
    assert dec.lhs.kind is Kind.ROTATION and dec.rhs.kind is Kind.ROTATION
    a, b = operator("I", 1).array, operator("I", 2).array
    assert np.array_equal(dec.matrix(), a @ b - b @ a)


def test_mixed_commutator_is_difference_of_inversions():
    for r in alg.rotations():
        for i in alg.inversions():
            dec = alg.commutator(r, i)
            assert dec.lhs.kind is Kind.INVERSION and dec.rhs.kind is Kind.INVERSION


@given(op_strategy, op_strategy)
def test_commutator_members_same_kind(a, b):
    dec = alg.commutator(a, b)
    assert dec.lhs in OPS and dec.rhs in OPS
    assert dec.lhs.kind is dec.rhs.kind
    assert dec.is_zero == (dec.lhs == dec.rhs)


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 3), (4, 6), (10, 45)])
def test_group_dimension(n, expected):
    assert alg.group_dimension(n) == expected


def test_group_dimension_rejects_small():
    with pytest.raises(ValueError):
        alg.group_dimension(1)


def test_lookup_rejects_non_member():
    with pytest.raises(alg.ConsistencyError):
        alg.lookup(((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)))
