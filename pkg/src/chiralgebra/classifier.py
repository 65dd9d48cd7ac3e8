"""Superimposability, the chirality index {n, p} and projection orbits."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .algebra import MIRROR, Operator, all_operators, rotations
from .exceptions import InvariantViolation, StructureError
from .tetra import ChainMolecule, Link, Tetrahedron, apply_operator


class Classification(enum.Enum):
    ACHIRAL = "achiral"
    DIASTEREOISOMER = "diastereoisomer"
    ENANTIOMER = "enantiomer"


@dataclass(frozen=True)
class ChiralityIndex:
    n: int
    p: int

    def __post_init__(self):
        if self.n < 1:
            raise InvariantViolation(f"n must be >= 1, got {self.n}")
        if not 0 <= self.p <= self.n:
            raise InvariantViolation(f"need 0 <= p <= n, got {{{self.n}, {self.p}}}")

    @property
    def classification(self) -> Classification:
        return classify(self)

    def __str__(self):
        return f"{{{self.n}, {self.p}}}"


def classify(idx: ChiralityIndex) -> Classification:
    n, p = idx.n, idx.p
    if not 0 <= p <= n:
        raise InvariantViolation(f"need 0 <= p <= n, got {{{n}, {p}}}")
    if p == 0:
        return Classification.ACHIRAL
    if p == n:
        return Classification.ENANTIOMER
    return Classification.DIASTEREOISOMER


def mirror_tetra(t: Tetrahedron, mirror: Operator = MIRROR) -> Tetrahedron:
    """Mirror image of one centre; by default I1 (swap slots 1 and 4)."""
    if mirror.kind.sign != -1:
        raise ValueError(f"{mirror} is not an inversion")
    return apply_operator(mirror, t)


def rotationally_superimposable(
    a: Tetrahedron, b: Tetrahedron, link_map: Mapping[str, str] | None = None
) -> Operator | None:
    """First rotation R_k (by index) carrying ``a``'s slots onto ``b``'s, else None.

    ``link_map`` renames link targets of ``a`` before comparison, so that a
    link may be required to land on the link to the *corresponding* centre.
    """
    src = a.slots
    if link_map:
        src = tuple(Link(link_map.get(s.target, s.target)) if isinstance(s, Link) else s for s in src)
    if sorted(map(_slot_key, src)) != sorted(map(_slot_key, b.slots)):
        return None
    for rot in rotations():
        if rot.act(src) == b.slots:
            return rot
    return None


def _slot_key(slot) -> tuple:
    return (type(slot).__name__, str(slot))


def _slot_multiset(t: Tetrahedron, auto: Mapping[str, str]) -> list[str]:
    return sorted(f"@{auto[s.target]}" if isinstance(s, Link) else str(s) for s in t.slots)


def _automorphisms(m: ChainMolecule) -> list[dict[str, str]]:
    """Identity, plus end-to-end reversal when it maps every centre onto one with the same ligands."""
    path = m.path()
    ident = {c: c for c in path}
    if len(path) < 2:
        return [ident]
    rev = dict(zip(path, reversed(path)))
    if all(_slot_multiset(t, rev) == _slot_multiset(m.centre(rev[t.centre_id]), ident) for t in m.centres):
        return [ident, rev]
    return [ident]


def mirror_chain(m: ChainMolecule, mirror: Operator = MIRROR) -> ChainMolecule:
    return m.map_centres(lambda t: mirror_tetra(t, mirror))


def mismatches(m: ChainMolecule, auto: Mapping[str, str], mirror: Operator = MIRROR) -> list[str]:
    """Centres of ``m`` whose mirror image cannot be rotated onto the matching original centre."""
    bad = []
    for t in m.centres:
        image = mirror_tetra(t, mirror)
        target = m.centre(auto[t.centre_id])
        if rotationally_superimposable(image, target, auto) is None:
            bad.append(t.centre_id)
    return bad


def chirality_index(m: ChainMolecule, mirror: Operator = MIRROR) -> ChiralityIndex:
    """{n, p} with p the fewest inverted centres over every whole-chain superimposition.

    Candidate superimpositions are the chain automorphisms (identity and,
    for two or more centres, end-to-end reversal) combined with independent
    per-centre rotations that send each link onto the link to the
    corresponding centre.
    """
    if not m.path():
        raise StructureError(f"{m.name}: inconsistent links")
    p = min(len(mismatches(m, auto, mirror)) for auto in _automorphisms(m))
    return ChiralityIndex(m.n, p)


@dataclass(frozen=True)
class Projection:
    operator: Operator
    tetrahedron: Tetrahedron
    orbit: int


def enumerate_projections(t: Tetrahedron) -> list[Projection]:
    """All 24 operator images of one centre, labelled by rotation orbit.

    Orbit 0 holds the images equivalent to ``t`` itself; further orbits are
    numbered in order of first appearance along R1..R12, I1..I12.  Images
    that coincide (repeated ligands) share an orbit.
    """
    if t.has_links:
        raise StructureError("projection enumeration needs a centre with four ligand slots")
    images = [(op, apply_operator(op, t)) for op in all_operators()]
    orbit_of: dict[tuple, int] = {}
    for _, img in images:
        if img.slots in orbit_of:
            continue
        label = len(set(orbit_of.values()))
        for rot in rotations():
            orbit_of.setdefault(rot.act(img.slots), label)
    return [Projection(op, img, orbit_of[img.slots]) for op, img in images]


def orbit_summary(projections: list[Projection]) -> dict[int, set[tuple]]:
    """Distinct slot vectors per orbit label."""
    out: dict[int, set[tuple]] = {}
    for pr in projections:
        out.setdefault(pr.orbit, set()).add(pr.tetrahedron.slots)
    return out
