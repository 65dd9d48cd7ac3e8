import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from chiralgebra import algebra as alg
from chiralgebra.exceptions import InvariantViolation
from chiralgebra.quantum import (
    PSI_L,
    PSI_R,
    AzimuthalProblem,
    ChiralState,
    RadialProblem,
    azimuthal_residual,
    chiral_action,
    energy_constant_on_cycles,
    hamiltonian_commutes,
    hund_commutator,
    hund_hamiltonian,
    observed_order,
    parity_eigenphase,
    parity_states,
    radial_residual,
)

OPS = alg.all_operators()


@pytest.mark.parametrize("l, alpha0", [(0, -2), (1, 0), (2, 4), (3, 10)])
def test_alpha0(l, alpha0):
    assert RadialProblem(l, 1.0).alpha0 == alpha0


@pytest.mark.parametrize("l", [0, 1, 2, 3])
@pytest.mark.parametrize("E", [-1.0, 0.0, 2.5])
def test_radial_residual_small(l, E):
    assert radial_residual(RadialProblem(l, E), 0.1, 10.0, 1001) <= 1e-6


def test_radial_l1_example():
    # α₀ = 0: V is constant and R = r solves the free equation
    assert radial_residual(RadialProblem(1, 1.0), 0.5, 5.0, 1001) <= 1e-6


def test_radial_l2_example():
    assert radial_residual(RadialProblem(2, 0.0), 0.1, 10.0, 4001) <= 1e-6


def test_radial_negative_control():
    res = radial_residual(RadialProblem(2, 0.0, alpha_shift=0.1), 0.1, 10.0, 1001)
    assert res > 1e-3


def test_radial_uniform_grid_is_exact_for_linear_r():
    # central differences reproduce a linear function exactly
    assert radial_residual(RadialProblem(2, 1.0), 0.1, 10.0, 101, order=2, grid="uniform") < 1e-9


@pytest.mark.parametrize("r_min", [0.0, -1.0])
def test_radial_rejects_nonpositive_rmin(r_min):
    with pytest.raises(ValueError):
        radial_residual(RadialProblem(1, 0.0), r_min, 10.0, 101)


def test_radial_rejects_bad_arguments():
    with pytest.raises(ValueError):
        radial_residual(RadialProblem(1, 0.0), 1.0, 0.5, 101)
    with pytest.raises(ValueError):
        radial_residual(RadialProblem(1, 0.0), 0.1, 1.0, 3)
    with pytest.raises(ValueError):
        radial_residual(RadialProblem(1, 0.0), 0.1, 1.0, 101, order=3)
    with pytest.raises(ValueError):
        RadialProblem(-1, 0.0)


@pytest.mark.parametrize("l", [2, 3])
def test_second_order_converges_sixteenfold(l):
    p = RadialProblem(l, 0.0)
    errs = [radial_residual(p, 0.1, 10.0, n, order=2) for n in (101, 401)]
    ratio = errs[0] / errs[1]
    assert 8 <= ratio <= 32


@pytest.mark.parametrize("l", [2, 3])
def test_fourth_order_converges_faster(l):
    p = RadialProblem(l, 0.0)
    errs = [radial_residual(p, 0.1, 10.0, n) for n in (33, 129)]
    assert errs[0] / errs[1] > 100


def test_observed_order():
    assert observed_order([1.0, 0.25, 0.0625], 2) == pytest.approx([2.0, 2.0])


def test_azimuthal_m0_exact():
    assert azimuthal_residual(0, 101) == 0.0


@pytest.mark.parametrize("m, samples", [(1, 1001), (2, 1001), (3, 4001), (-2, 1001)])
def test_azimuthal_small(m, samples):
    assert azimuthal_residual(AzimuthalProblem(m), samples) <= 1e-5


def test_azimuthal_second_order_option():
    assert azimuthal_residual(1, 1001, order=2) <= 1e-5
    assert azimuthal_residual(0, 101, order=2) == 0.0


def test_azimuthal_non_integer_m_breaks_periodicity():
    # a non-integer winding is not a periodic function on the grid
    theta = np.arange(1001) * 2 * np.pi / 1001
    assert abs(np.exp(1j * 2.5 * (theta[-1] + 2 * np.pi / 1001)) - 1) > 0.1


# -- bond Hamiltonian ------------------------------------------------------

def test_equal_energies_commute_with_everything():
    assert all(hamiltonian_commutes([1.0] * 4, op) for op in OPS)


def test_distinct_energies_commute_with_identity_only():
    e = [1.0, 2.0, 3.0, 4.0]
    assert [op.name for op in OPS if hamiltonian_commutes(e, op)] == ["R1"]


def test_i1_needs_equal_swapped_energies():
    i1 = alg.operator("I", 1)
    assert hamiltonian_commutes([1.0, 2.0, 3.0, 1.0], i1)
    assert not hamiltonian_commutes([1.0, 2.0, 3.0, 4.0], i1)


energies = st.lists(st.sampled_from([0.0, 1.0, 2.5]), min_size=4, max_size=4)


@given(energies, st.sampled_from(OPS))
def test_commutation_iff_constant_on_cycles(e, op):
    assert hamiltonian_commutes(e, op) == energy_constant_on_cycles(e, op)


def test_brute_force_cycle_condition():
    for e in itertools.product((0.0, 1.0), repeat=4):
        for op in OPS:
            h = np.diag(e)
            m = op.array.astype(float)
            assert hamiltonian_commutes(e, op) == np.array_equal(h @ m, m @ h)


def test_hamiltonian_rejects_bad_energies():
    with pytest.raises(ValueError):
        hamiltonian_commutes([1.0, 2.0], alg.IDENTITY)
    with pytest.raises(ValueError):
        hamiltonian_commutes([1.0, 2.0, float("nan"), 0.0], alg.IDENTITY)


# -- chiral and parity states ----------------------------------------------

@pytest.mark.parametrize("op", OPS, ids=str)
def test_chiral_action(op):
    if op.kind is alg.Kind.ROTATION:
        assert chiral_action(op, PSI_L) == PSI_L
    else:
        assert chiral_action(op, PSI_L) == PSI_R
        assert chiral_action(op, PSI_R) == PSI_L


@pytest.mark.parametrize("op", OPS, ids=str)
def test_parity_eigenphases(op):
    assert parity_eigenphase(op, "plus") == 1
    assert parity_eigenphase(op, "minus") == op.kind.sign


def test_parity_states_orthonormal():
    plus, minus = parity_states()
    assert abs(plus.inner(minus)) < 1e-12
    assert abs(plus.inner(plus) - 1) < 1e-12


def test_unnormalised_state_rejected():
    with pytest.raises(InvariantViolation):
        ChiralState(1, 1)


@given(st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi), st.floats(0, 1), st.sampled_from(OPS))
def test_action_is_unitary(a, b, w, op):
    s = ChiralState(math.sqrt(w) * complex(math.cos(a), math.sin(a)), math.sqrt(1 - w) * complex(math.cos(b), math.sin(b)))
    assert abs(chiral_action(op, s).norm2 - 1) < 1e-12


def test_hund_symmetric_commutes():
    assert np.array_equal(hund_commutator(1.0, 0.3, 0.0), np.zeros((2, 2)))


def test_hund_asymmetric_does_not_commute():
    c = hund_commutator(1.0, 0.3, 0.2)
    assert np.allclose(c, [[0, -0.4], [0.4, 0]])


def test_hund_eigenstates_are_parity_states():
    w, v = np.linalg.eigh(hund_hamiltonian(1.0, 0.3, 0.0))
    plus, minus = parity_states()
    assert w == pytest.approx([0.7, 1.3])
    assert abs(abs(np.vdot(v[:, 0], minus.vector)) - 1) < 1e-12
    assert abs(abs(np.vdot(v[:, 1], plus.vector)) - 1) < 1e-12
