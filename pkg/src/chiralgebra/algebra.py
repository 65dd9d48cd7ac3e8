"""The 24 Fischer-projection operators as exact 4x4 permutation matrices.

Rotations ``R1..R12`` have determinant +1 and form the alternating subgroup;
inversions ``I1..I12`` have determinant -1.  Composition follows the usual
matrix product acting on column vectors, so ``compose(a, b)`` applies ``b``
first.  Every group-level computation here is done in integer arithmetic;
eigenvalues are kept as exact 12th roots of unity.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cache
from typing import Iterable, Sequence

import numpy as np

from .exceptions import ConsistencyError


class Kind(enum.Enum):
    ROTATION = "R"
    INVERSION = "I"

    @property
    def sign(self) -> int:
        return 1 if self is Kind.ROTATION else -1


# Rows of each matrix as 4-character 0/1 strings.
_ROTATION_ROWS = {
    1: "1000 0100 0010 0001",
    2: "0010 0100 0001 1000",
    3: "0001 0100 1000 0010",
    4: "0100 0010 1000 0001",
    5: "0100 1000 0001 0010",
    6: "0100 0001 0010 1000",
    7: "0010 0001 1000 0100",
    8: "0001 1000 0010 0100",
    9: "1000 0010 0001 0100",
    10: "1000 0001 0100 0010",
    11: "0001 0010 0100 1000",
    12: "0010 1000 0100 0001",
}

_INVERSION_ROWS = {
    1: "0001 0100 0010 1000",
    2: "0010 0100 1000 0001",
    3: "1000 0100 0001 0010",
    4: "0100 0010 0001 1000",
    5: "0100 0001 1000 0010",
    6: "0100 1000 0010 0001",
    7: "0010 1000 0001 0100",
    8: "1000 0001 0010 0100",
    9: "0001 0010 1000 0100",
    10: "0001 1000 0100 0010",
    11: "1000 0010 0100 0001",
    12: "0010 0001 0100 1000",
}

Matrix = tuple[tuple[int, ...], ...]


def _parse_rows(text: str) -> Matrix:
    return tuple(tuple(int(c) for c in row) for row in text.split())


@dataclass(frozen=True)
class Operator:
    """One labelled permutation matrix.

    ``perm[i]`` is the column holding the 1 in row ``i``, so applying the
    operator to a column vector ``v`` gives ``(v[perm[0]], ..., v[perm[3]])``.
    """

    kind: Kind
    index: int
    matrix: Matrix

    def __post_init__(self):
        if len(self.matrix) != 4 or any(len(r) != 4 for r in self.matrix):
            raise ValueError("operator matrix must be 4x4")
        for row in self.matrix:
            if sorted(row) != [0, 0, 0, 1]:
                raise ValueError(f"not a permutation matrix: {self.matrix}")
        if sorted(self.perm) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation matrix: {self.matrix}")

    @property
    def name(self) -> str:
        return f"{self.kind.value}{self.index}"

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(row.index(1) for row in self.matrix)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=np.int64)

    def act(self, vector: Sequence) -> tuple:
        """Apply the matrix to a length-4 column vector of arbitrary items."""
        if len(vector) != 4:
            raise ValueError("operators act on 4-component vectors")
        return tuple(vector[j] for j in self.perm)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of ``perm`` (0-based), each starting at its smallest index."""
        perm, seen, out = self.perm, set(), []
        for start in range(4):
            if start in seen:
                continue
            cyc, i = [], start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = perm[i]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Operator({self.name})"


@cache
def _registry() -> dict[tuple[Kind, int], Operator]:
    ops = {}
    for kind, table in ((Kind.ROTATION, _ROTATION_ROWS), (Kind.INVERSION, _INVERSION_ROWS)):
        for k, rows in table.items():
            ops[kind, k] = Operator(kind, k, _parse_rows(rows))
    return ops


@cache
def _by_matrix() -> dict[Matrix, Operator]:
    return {op.matrix: op for op in _registry().values()}


def _coerce_kind(kind: Kind | str) -> Kind:
    if isinstance(kind, Kind):
        return kind
    key = str(kind).strip().lower()
    if key in ("r", "rot", "rotation"):
        return Kind.ROTATION
    if key in ("i", "inv", "inversion"):
        return Kind.INVERSION
    raise ValueError(f"unknown operator kind: {kind!r}")


def operator(kind: Kind | str, index: int) -> Operator:
    """Return the rotation or inversion with the given table index (1..12)."""
    kind = _coerce_kind(kind)
    if not isinstance(index, (int, np.integer)) or not 1 <= index <= 12:
        raise ValueError(f"operator index must be in 1..12, got {index!r}")
    return _registry()[kind, int(index)]


def by_name(name: str) -> Operator:
    """Look up ``"R5"``, ``"I12"`` and the like."""
    name = name.strip()
    if len(name) < 2 or name[0].upper() not in "RI" or not name[1:].isdigit():
        raise ValueError(f"bad operator name: {name!r}")
    return operator(name[0], int(name[1:]))


def rotations() -> tuple[Operator, ...]:
    return tuple(operator(Kind.ROTATION, k) for k in range(1, 13))


def inversions() -> tuple[Operator, ...]:
    return tuple(operator(Kind.INVERSION, k) for k in range(1, 13))


def all_operators() -> tuple[Operator, ...]:
    """R1..R12 followed by I1..I12; the canonical ordering used everywhere."""
    return rotations() + inversions()


IDENTITY = operator(Kind.ROTATION, 1)
MIRROR = operator(Kind.INVERSION, 1)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


def lookup(matrix: Matrix | np.ndarray) -> Operator:
    """Identify a 4x4 integer matrix as one of the 24 operators."""
    key = tuple(tuple(int(x) for x in row) for row in matrix)
    try:
        return _by_matrix()[key]
    except KeyError:
        raise ConsistencyError(f"matrix is not one of the 24 operators: {key}") from None


def compose(a: Operator, b: Operator) -> Operator:
    """Matrix product ``a @ b`` (``b`` acts first), identified in the table."""
    return _cayley_lookup()[a, b]


@cache
def _cayley_lookup() -> dict[tuple[Operator, Operator], Operator]:
    ops = all_operators()
    table = {}
    for a in ops:
        for b in ops:
            c = lookup(matmul(a.matrix, b.matrix))
            if c.kind.sign != a.kind.sign * b.kind.sign:
                raise ConsistencyError(f"{a}*{b}={c} breaks the determinant rule")
            table[a, b] = c
    return table


def inverse(op: Operator) -> Operator:
    # permutation matrices are orthogonal
    return lookup(tuple(zip(*op.matrix)))


def determinant(op: Operator | Matrix) -> int:
    """Exact determinant by Laplace (cofactor) expansion along the first row."""
    m = op.matrix if isinstance(op, Operator) else op
    return _det(tuple(tuple(int(x) for x in row) for row in m))


def _det(m: Matrix) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = tuple(row[:j] + row[j + 1:] for row in m[1:])
        total += (-1) ** j * m[0][j] * _det(minor)
    return total


def cayley_table() -> list[list[Operator]]:
    """24x24 table; cell ``[r][c]`` is ``compose(row_op, col_op)``."""
    ops = all_operators()
    return [[compose(a, b) for b in ops] for a in ops]


def group_dimension(n: int) -> int:
    """Number of independent parameters of O(N): N^2 - N(N+1)/2 = N(N-1)/2."""
    if n < 2:
        raise ValueError(f"N must be >= 2, got {n}")
    return n * (n - 1) // 2


# ---------------------------------------------------------------------------
# characteristic polynomials


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, i = 0, start
        while i not in seen:
            seen.add(i)
            i = perm[i]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _expand(*factors: Sequence[int]) -> tuple[int, ...]:
    out = [1]
    for f in factors:
        out = _poly_mul(out, f)
    return tuple(out)


class CharPolyClass(enum.Enum):
    """The five factorisations met by the 24 operators (coefficients low→high)."""

    IDENTITY = ("(1-λ)^4", _expand([1, -1], [1, -1], [1, -1], [1, -1]))
    THREE_CYCLE = ("(1-λ)^2(1+λ+λ^2)", _expand([1, -1], [1, -1], [1, 1, 1]))
    DOUBLE_SWAP = ("(1-λ)^2(1+λ)^2", _expand([1, -1], [1, -1], [1, 1], [1, 1]))
    SWAP = ("(1-λ)^3(1+λ)", _expand([1, -1], [1, -1], [1, -1], [1, 1]))
    FOUR_CYCLE = ("(1-λ)(1+λ)(λ^2+1)", _expand([1, -1], [1, 1], [1, 0, 1]))

    @property
    def label(self) -> str:
        return self.value[0]

    @property
    def expanded(self) -> tuple[int, ...]:
        return self.value[1]


@dataclass(frozen=True)
class CharPoly:
    """det(M - λI) with integer coefficients of λ^0..λ^4."""

    coefficients: tuple[int, ...]

    def __call__(self, x):
        return sum(c * x**k for k, c in enumerate(self.coefficients))

    @property
    def factored(self) -> CharPolyClass:
        for cls in CharPolyClass:
            if self.coefficients == cls.expanded or self.coefficients == tuple(-c for c in cls.expanded):
                return cls
        raise ConsistencyError(f"unexpected characteristic polynomial {self.coefficients}")

    def __str__(self):
        return self.factored.label


def char_poly(op: Operator) -> CharPoly:
    """Leibniz expansion of det(M - λI) over all 24 permutations of the columns."""
    m = op.matrix
    entries = [[[m[i][j], -1] if i == j else [m[i][j]] for j in range(4)] for i in range(4)]
    total = [0] * 5
    for sigma in itertools.permutations(range(4)):
        term = [_perm_sign(sigma)]
        for i in range(4):
            term = _poly_mul(term, entries[i][sigma[i]])
        for k, c in enumerate(term):
            total[k] += c
    return CharPoly(tuple(total))


# ---------------------------------------------------------------------------
# exact eigenvalues and eigenvectors


@dataclass(frozen=True, order=True)
class Root:
    """The 12th root of unity exp(2πi·k/12), ``k`` taken mod 12.

    Every eigenvalue of a 4x4 permutation matrix, and every entry of the
    canonical eigenvectors built below, is such a root (or zero).
    """

    k: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % 12)

    def __mul__(self, other: Root) -> Root:
        return Root(self.k + other.k)

    def __pow__(self, n: int) -> Root:
        return Root(self.k * n)

    @property
    def order(self) -> int:
        from math import gcd
        return 12 // gcd(self.k, 12)

    def to_complex(self) -> complex:
        return _ROOT_VALUES[self.k]

    def __str__(self):
        return _ROOT_NAMES.get(self.k, f"exp(2πi·{self.k}/12)")

    __repr__ = __str__


_ROOT_VALUES = {k: complex(np.cos(np.pi * k / 6), np.sin(np.pi * k / 6)) for k in range(12)}
# snap the exactly representable ones
_ROOT_VALUES.update({0: 1 + 0j, 3: 1j, 6: -1 + 0j, 9: -1j})
_ROOT_NAMES = {0: "1", 3: "i", 6: "-1", 9: "-i", 4: "(-1+i√3)/2", 8: "(-1-i√3)/2"}

ONE, I_UNIT, MINUS_ONE, MINUS_I = Root(0), Root(3), Root(6), Root(9)
OMEGA, OMEGA_BAR = Root(4), Root(8)
ALLOWED_EIGENVALUES = frozenset({ONE, MINUS_ONE, I_UNIT, MINUS_I, OMEGA, OMEGA_BAR})


def cyclotomic_is_zero(coeffs: Sequence[int]) -> bool:
    """Exact test that Σ coeffs[k]·ζ^k = 0 for ζ = exp(2πi/12).

    Reduces modulo the 12th cyclotomic polynomial x^4 - x^2 + 1.
    """
    c = [0] * 12
    for k, a in enumerate(coeffs):
        c[k % 12] += a
    for deg in range(11, 3, -1):
        lead = c[deg]
        if lead:
            # x^deg = x^(deg-4) * (x^4 - x^2 + 1) + x^(deg-2) - x^(deg-4)
            c[deg] = 0
            c[deg - 2] += lead
            c[deg - 4] -= lead
    return not any(c[:4])


Entry = Root | None  # None stands for an exact zero


@dataclass(frozen=True)
class EigenPair:
    value: Root
    vector: tuple[Entry, ...]

    def numeric_vector(self) -> np.ndarray:
        return np.array([0j if e is None else e.to_complex() for e in self.vector])


@dataclass(frozen=True)
class EigenSet:
    values: tuple[Root, ...]
    pairs: tuple[EigenPair, ...]

    def distinct(self) -> frozenset[Root]:
        return frozenset(self.values)


def eigen(op: Operator) -> EigenSet:
    """Exact spectrum of ``op`` from its cycle decomposition.

    A cycle of length L contributes every L-th root of unity λ, with the
    eigenvector supported on the cycle: 1 at the cycle's smallest slot and
    λ^j at the slot reached after j steps.  Vectors are sorted by eigenvalue
    and then by leading slot, which makes the output canonical.
    """
    pairs = []
    for cyc in op.cycles():
        length = len(cyc)
        for j in range(length):
            lam = Root(12 // length * j)
            vec: list[Entry] = [None] * 4
            for step, slot in enumerate(cyc):
                vec[slot] = lam**step
            pairs.append(EigenPair(lam, tuple(vec)))
    pairs.sort(key=lambda p: (p.value.k, [4 if e is None else -1 for e in p.vector]))
    return EigenSet(tuple(p.value for p in pairs), tuple(pairs))


def eigenvalues(op: Operator) -> tuple[Root, ...]:
    return eigen(op).values


def eigen_residual_is_zero(op: Operator, pair: EigenPair) -> bool:
    """Exact check of (M - λI)v = 0, i.e. v[perm[i]] == λ·v[i] for every row."""
    v = pair.vector
    if all(e is None for e in v):
        return False
    for i, j in enumerate(op.perm):
        lhs = v[j]
        rhs = None if v[i] is None else pair.value * v[i]
        if lhs != rhs:
            return False
    return True


def eigen_residual_float(op: Operator, pair: EigenPair) -> float:
    m = op.array.astype(complex)
    v = pair.numeric_vector()
    return float(np.max(np.abs(m @ v - pair.value.to_complex() * v)))


# ---------------------------------------------------------------------------
# commutators


@dataclass(frozen=True)
class CommutatorDecomposition:
    """[a, b] = ab - ba written as the difference of two group elements."""

    lhs: Operator
    rhs: Operator

    @property
    def is_zero(self) -> bool:
        return self.lhs == self.rhs

    @property
    def kind(self) -> Kind:
        return self.lhs.kind

    def matrix(self) -> np.ndarray:
        return self.lhs.array - self.rhs.array

    def __str__(self):
        return "0" if self.is_zero else f"{self.lhs} - {self.rhs}"


def commutator(a: Operator, b: Operator) -> CommutatorDecomposition:
    """Same-centre commutator; cross-centre operators act on disjoint slots and always commute."""
    dec = CommutatorDecomposition(compose(a, b), compose(b, a))
    if dec.lhs.kind is not dec.rhs.kind:
        raise ConsistencyError(f"[{a},{b}] mixes kinds")
    return dec


def is_subgroup(elements: Iterable[Operator]) -> bool:
    elems = set(elements)
    if IDENTITY not in elems:
        return False
    return all(compose(a, b) in elems for a in elems for b in elems) and all(
        inverse(a) in elems for a in elems
    )
