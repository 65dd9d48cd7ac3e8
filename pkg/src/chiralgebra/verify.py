"""Self-verification suite behind ``chiralgebra verify``.

Each check returns ``(passed, detail)``; checks are grouped so the CLI can
run a subset.  Output is deterministic: no timestamps, fixed RNG seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import algebra as alg
from .algebra import Kind, all_operators, compose, inverse, operator
from .aufbau import add_centre, aufbau_sequence, verified_add_centre
from .classifier import (
    ChiralityIndex,
    Classification,
    chirality_index,
    enumerate_projections,
    orbit_summary,
)
from .molfile import parse_molecule
from .quantum import (
    AzimuthalProblem,
    RadialProblem,
    azimuthal_residual,
    chiral_action,
    energy_constant_on_cycles,
    hamiltonian_commutes,
    hund_commutator,
    parity_eigenphase,
    radial_residual,
)
from .tetra import Tetrahedron, apply_at

LACTIC = """\
molecule lactic
center c1: OH CO2H H CH3
end
"""

MESO_TARTARIC = """\
molecule meso-tartaric
center c1: OH CO2H H @c2
center c2: @c1 CO2H H OH
end
"""

# Memberships of the five characteristic-polynomial classes.
CHARPOLY_MEMBERS = {
    alg.CharPolyClass.IDENTITY: ["R1"],
    alg.CharPolyClass.THREE_CYCLE: ["R2", "R3", "R4", "R6", "R8", "R9", "R10", "R12"],
    alg.CharPolyClass.DOUBLE_SWAP: ["R5", "R7", "R11"],
    alg.CharPolyClass.SWAP: ["I1", "I2", "I3", "I6", "I8", "I11"],
    alg.CharPolyClass.FOUR_CYCLE: ["I4", "I5", "I7", "I9", "I10", "I12"],
}

RADIAL_TOL = 1e-6
AZIMUTHAL_TOL = 1e-5
EXACT_TOL = 1e-12

Result = tuple[bool, str]


@dataclass(frozen=True)
class Check:
    group: str
    name: str
    fn: Callable[[], Result]


_CHECKS: list[Check] = []


def check(group: str, name: str):
    def deco(fn):
        _CHECKS.append(Check(group, name, fn))
        return fn
    return deco


GROUPS = ("tables", "closure", "eigen", "commutators", "classify", "aufbau", "quantum")


# -- tables -----------------------------------------------------------------

@check("tables", "24 distinct 4x4 permutation matrices")
def _distinct() -> Result:
    mats = {op.matrix for op in all_operators()}
    every = {tuple(tuple(int(i == p[r]) for i in range(4)) for r in range(4))
             for p in itertools.permutations(range(4))}
    return mats == every, f"{len(mats)} distinct, {len(every)} permutations of 4 letters"


@check("tables", "determinant +1 for R1..R12, -1 for I1..I12")
def _dets() -> Result:
    bad = [op.name for op in all_operators() if alg.determinant(op) != op.kind.sign]
    return not bad, "mismatch: " + ",".join(bad) if bad else "12 rotations, 12 inversions"


@check("tables", "R1 identity, I1 swaps slots 1/4, R2 maps (1,2,3,4)->(3,2,4,1)")
def _anchors() -> Result:
    ok = (operator("R", 1).act((1, 2, 3, 4)) == (1, 2, 3, 4)
          and operator("I", 1).act((1, 2, 3, 4)) == (4, 2, 3, 1)
          and operator("R", 2).act((1, 2, 3, 4)) == (3, 2, 4, 1))
    return ok, "column-vector action"


# -- closure ----------------------------------------------------------------

@check("closure", "all 576 products lie in the set with kind = product of determinants")
def _closure() -> Result:
    ops = all_operators()
    for a, b in itertools.product(ops, ops):
        c = alg.lookup(alg.matmul(a.matrix, b.matrix))
        if c.kind.sign != a.kind.sign * b.kind.sign:
            return False, f"{a}*{b}={c}"
    return True, "576/576"


@check("closure", "R8*R9 = R5 and I10*R10 = I7")
def _eq17() -> Result:
    x = compose(operator("R", 8), operator("R", 9))
    y = compose(operator("I", 10), operator("R", 10))
    return (x.name, y.name) == ("R5", "I7"), f"R8*R9={x}, I10*R10={y}"


@check("closure", "I5*I2 is a rotation")
def _i5i2() -> Result:
    a, b = operator("I", 5), operator("I", 2)
    ab, ba = compose(a, b), compose(b, a)
    return ab.kind is Kind.ROTATION, f"I5*I2={ab}, I2*I5={ba}"


@check("closure", "rotations form a 12-element subgroup; {R1,R5,R7,R11} abelian subgroup")
def _subgroups() -> Result:
    rots = alg.rotations()
    klein = [operator("R", k) for k in (1, 5, 7, 11)]
    abelian = all(compose(a, b) == compose(b, a) for a in klein for b in klein)
    return alg.is_subgroup(rots) and alg.is_subgroup(klein) and abelian, "A4 and Klein four-group"


@check("closure", "product of two inversions is always a rotation")
def _inv_not_group() -> Result:
    invs = alg.inversions()
    ok = all(compose(a, b).kind is Kind.ROTATION for a in invs for b in invs)
    return ok, "144 inversion pairs"


# -- eigen ------------------------------------------------------------------

@check("eigen", "characteristic polynomial classes and memberships")
def _charpoly() -> Result:
    for cls, names in CHARPOLY_MEMBERS.items():
        got = sorted((op.name for op in all_operators() if alg.char_poly(op).factored is cls),
                     key=lambda s: (s[0], int(s[1:])))
        if got != names:
            return False, f"{cls.label}: {got}"
    return True, "5 classes, 24 operators"


@check("eigen", "exactly 6 distinct eigenvalues occur")
def _six() -> Result:
    seen = set().union(*(alg.eigen(op).distinct() for op in all_operators()))
    return seen == alg.ALLOWED_EIGENVALUES, "{" + ", ".join(map(str, sorted(seen))) + "}"


@check("eigen", "every eigenpair satisfies (M - λI)v = 0 exactly and to 1e-12 in floats")
def _residuals() -> Result:
    worst = 0.0
    for op in all_operators():
        es = alg.eigen(op)
        for pair in es.pairs:
            if not alg.eigen_residual_is_zero(op, pair):
                return False, f"{op}: λ={pair.value}"
            worst = max(worst, alg.eigen_residual_float(op, pair))
        if len(es.values) != 4:
            return False, f"{op}: {len(es.values)} eigenvalues"
    return worst <= EXACT_TOL, f"max float residual {worst:.1e}"


@check("eigen", "eigenvalues are roots of the characteristic polynomial; product = determinant")
def _roots() -> Result:
    for op in all_operators():
        cp = alg.char_poly(op)
        for lam in alg.eigen(op).values:
            coeffs = [0] * 12
            for k, c in enumerate(cp.coefficients):
                coeffs[(lam.k * k) % 12] += c
            if not alg.cyclotomic_is_zero(coeffs):
                return False, f"{op}: {lam} is not a root"
        prod = sum(v.k for v in alg.eigen(op).values) % 12
        if alg.Root(prod) != (alg.ONE if op.kind.sign == 1 else alg.MINUS_ONE):
            return False, f"{op}: eigenvalue product"
    return True, "exact cyclotomic arithmetic"


@check("eigen", "group dimension N(N-1)/2 = 6 for N = 4")
def _dim() -> Result:
    return alg.group_dimension(4) == 6, f"O(4): {alg.group_dimension(4)}"


# -- commutators ------------------------------------------------------------

@check("commutators", "[R_s, R_m] = 0 for s, m in {5, 7, 11}")
def _klein_comm() -> Result:
    ok = all(alg.commutator(operator("R", s), operator("R", m)).is_zero
             for s in (5, 7, 11) for m in (5, 7, 11))
    return ok, "9 pairs"


@check("commutators", "every commutator is a difference of two same-kind elements")
def _comm_kind() -> Result:
    ops = all_operators()
    nonzero = 0
    for a, b in itertools.product(ops, ops):
        d = alg.commutator(a, b)
        if d.lhs.kind is not d.rhs.kind or d.lhs.kind.sign != a.kind.sign * b.kind.sign:
            return False, f"[{a},{b}]"
        if not np.array_equal(d.matrix(), a.array @ b.array - b.array @ a.array):
            return False, f"[{a},{b}] matrix"
        nonzero += not d.is_zero
    return True, f"576 pairs, {nonzero} non-zero"


@check("commutators", "operators on different centres commute")
def _cross() -> Result:
    m = parse_molecule(MESO_TARTARIC)
    ops = all_operators()
    for a, b in itertools.product(ops, ops):
        x = apply_at(apply_at(m, "c1", a), "c2", b)
        y = apply_at(apply_at(m, "c2", b), "c1", a)
        if x != y:
            return False, f"{a}@c1, {b}@c2"
    return True, "576 pairs on a two-centre chain"


# -- classification ----------------------------------------------------------

@check("classify", "lactic acid -> {1, 1} enantiomer")
def _lactic() -> Result:
    idx = chirality_index(parse_molecule(LACTIC))
    return (idx == ChiralityIndex(1, 1) and idx.classification is Classification.ENANTIOMER), f"chi = {idx}"


@check("classify", "meso-tartaric acid -> {2, 0} achiral")
def _meso() -> Result:
    idx = chirality_index(parse_molecule(MESO_TARTARIC))
    return (idx == ChiralityIndex(2, 0) and idx.classification is Classification.ACHIRAL), f"chi = {idx}"


@check("classify", "index independent of the designated mirror inversion")
def _mirror_choice() -> Result:
    for text in (LACTIC, MESO_TARTARIC):
        m = parse_molecule(text)
        ps = {chirality_index(m, mirror).p for mirror in alg.inversions()}
        if len(ps) != 1:
            return False, f"{m.name}: p in {sorted(ps)}"
    return True, "12 inversions x 2 molecules"


@check("classify", "four distinct ligands: 24 projections in 2 orbits of 12")
def _orbits() -> Result:
    t = parse_molecule(LACTIC).centres[0]
    summary = orbit_summary(enumerate_projections(t))
    sizes = sorted(len(v) for v in summary.values())
    distinct = len({p.tetrahedron.slots for p in enumerate_projections(t)})
    return sizes == [12, 12] and distinct == 24, f"orbit sizes {sizes}"


# -- aufbau -----------------------------------------------------------------

@check("aufbau", "six single-centre transitions")
def _transitions() -> Result:
    n, p = 4, 2
    cases = [
        ((n, 0), 0, (n + 1, 0)),
        ((n, p), 0, (n + 1, p)),
        ((n, n), 0, (n + 1, n)),
        ((n, 0), 1, (n + 1, 1)),
        ((n, p), 1, (n + 1, p + 1)),
        ((n, n), 1, (n + 1, n + 1)),
    ]
    for (n0, p0), d, (n1, p1) in cases:
        if add_centre(ChiralityIndex(n0, p0), d) != ChiralityIndex(n1, p1):
            return False, f"{{{n0},{p0}}} + {d}"
    return True, "6/6"


@check("aufbau", "final p equals the sum of Δp over 1000 random sequences")
def _additivity() -> Result:
    rng = random.Random(20240601)
    for _ in range(1000):
        n = rng.randint(1, 6)
        start = ChiralityIndex(n, rng.randint(0, n))
        steps = [rng.randint(0, 1) for _ in range(rng.randint(0, 12))]
        tr = aufbau_sequence(start, steps)
        if tr.final != ChiralityIndex(n + len(steps), start.p + sum(steps)):
            return False, f"{start} {steps}"
    return True, "1000/1000"


@check("aufbau", "degenerate build: classifier {2, 0}, rule {2, 2}")
def _degenerate() -> Result:
    base = parse_molecule("molecule seed\ncenter c1: OH CO2H H X\nend\n")
    twin = Tetrahedron.of("c2", "@c1", "CO2H", "H", "OH")
    res = verified_add_centre(base, twin, 4)
    ok = res.index == ChiralityIndex(2, 0) and res.raw == ChiralityIndex(2, 2)
    return ok, f"classifier {res.index}, rule {res.raw}"


# -- quantum ----------------------------------------------------------------

@check("quantum", "radial residual <= 1e-6 (l 0..3, E 0.5/1/2, 1001 points on [0.5, 5])")
def _radial() -> Result:
    worst = max(radial_residual(RadialProblem(l, E), 0.5, 5.0, 1001)
                for l in range(4) for E in (0.5, 1.0, 2.0))
    return worst <= RADIAL_TOL, f"max {worst:.1e}"


@check("quantum", "radial residual shrinks >= 8x per 4x samples")
def _radial_conv() -> Result:
    ratios = []
    for l in (2, 3):
        errs = [radial_residual(RadialProblem(l, 0.5), 0.5, 5.0, n) for n in (33, 129)]
        ratios.append(errs[0] / errs[1])
    return min(ratios) >= 8, "ratios " + ", ".join(f"{r:.0f}" for r in ratios)


@check("quantum", "perturbed potential (α0 + 0.1) gives residual > 1e-3")
def _radial_neg() -> Result:
    r = radial_residual(RadialProblem(2, 0.5, alpha_shift=0.1), 0.5, 5.0, 1001)
    return r > 1e-3, f"{r:.3f}"


@check("quantum", "azimuthal residual <= 1e-5 (m 0..3, 4001 points)")
def _azimuthal() -> Result:
    worst = max(azimuthal_residual(AzimuthalProblem(m), 4001) for m in range(4))
    return worst <= AZIMUTHAL_TOL, f"max {worst:.1e}"


@check("quantum", "diag(E) commutes with an operator iff E is constant on its cycles")
def _hamiltonian() -> Result:
    rng = np.random.default_rng(7)
    vectors = [np.full(4, 1.5), np.array([1.0, 2.0, 3.0, 4.0])]
    vectors += [rng.integers(0, 3, size=4).astype(float) for _ in range(50)]
    for e in vectors:
        for op in all_operators():
            if hamiltonian_commutes(e, op) != energy_constant_on_cycles(e, op):
                return False, f"{op}, E={e}"
    ok = all(hamiltonian_commutes(vectors[0], op) for op in all_operators())
    return ok, f"{len(vectors)} energy vectors x 24"


@check("quantum", "chiral action factors through the determinant and is a homomorphism")
def _chiral() -> Result:
    from .quantum import PSI_L, PSI_R, ChiralState
    probe = ChiralState(0.6, 0.8j)
    for op in all_operators():
        for s in (PSI_L, PSI_R, probe):
            out = chiral_action(op, s)
            want = s if op.kind is Kind.ROTATION else ChiralState(s.right, s.left)
            if not out.isclose(want) or abs(out.norm2 - 1) > EXACT_TOL:
                return False, f"{op}"
    for a, b in itertools.product(all_operators(), repeat=2):
        if not chiral_action(compose(a, b), probe).isclose(chiral_action(a, chiral_action(b, probe))):
            return False, f"{a}*{b}"
    return True, "24 operators, 576 pairs"


@check("quantum", "parity eigenphases: rotations +1/+1, inversions +1/-1")
def _parity() -> Result:
    for op in all_operators():
        want = (1, 1) if op.kind is Kind.ROTATION else (1, -1)
        got = (parity_eigenphase(op, "plus"), parity_eigenphase(op, "minus"))
        if got != want:
            return False, f"{op}: {got}"
    return True, "24/24"


@check("quantum", "[P, H] = 0 iff the L/R asymmetry vanishes")
def _hund() -> Result:
    for even, odd in itertools.product((-1.0, 0.0, 1.0, 2.5), (0.0, 0.3, -0.7)):
        if np.max(np.abs(hund_commutator(even, odd, 0.0))) > EXACT_TOL:
            return False, f"({even}, {odd}, 0)"
        if np.max(np.abs(hund_commutator(even, odd, 0.05))) <= EXACT_TOL:
            return False, f"({even}, {odd}, 0.05)"
    return True, "12 symmetric, 12 asymmetric"


def checks(groups: list[str] | None = None) -> list[Check]:
    if not groups:
        return list(_CHECKS)
    unknown = set(groups) - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    return [c for c in _CHECKS if c.group in groups]


def run(groups: list[str] | None = None) -> list[tuple[Check, bool, str]]:
    out = []
    for c in checks(groups):
        try:
            ok, detail = c.fn()
        except Exception as exc:  # a crash is a failed check, not a crashed report
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((c, bool(ok), detail))
    return out


def report(results) -> str:
    lines = []
    for c, ok, detail in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  [{c.group}] {c.name}: {detail}")
    failed = sum(not ok for _, ok, _ in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
