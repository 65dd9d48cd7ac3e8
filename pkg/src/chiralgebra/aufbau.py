"""Building up chains one stereogenic centre at a time."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .classifier import (
    ChiralityIndex,
    Classification,
    chirality_index,
    mirror_tetra,
    rotationally_superimposable,
)
from .exceptions import InvariantViolation, StructureError
from .tetra import ChainMolecule, Link, Tetrahedron


def _check_step(delta_p: int) -> int:
    if delta_p not in (0, 1):
        raise InvariantViolation(f"Δp must be 0 or 1, got {delta_p!r}")
    return int(delta_p)


def add_centre(idx: ChiralityIndex, delta_p: int) -> ChiralityIndex:
    """{n, p} -> {n+1, p+Δp}."""
    if not isinstance(idx, ChiralityIndex):
        raise TypeError("expected a ChiralityIndex")
    if not 0 <= idx.p <= idx.n:
        raise InvariantViolation(f"invalid index {idx}")
    return ChiralityIndex(idx.n + 1, idx.p + _check_step(delta_p))


@dataclass(frozen=True)
class AufbauTrace:
    start: ChiralityIndex
    steps: tuple[int, ...]
    states: tuple[ChiralityIndex, ...]

    @property
    def final(self) -> ChiralityIndex:
        return self.states[-1] if self.states else self.start

    @property
    def classifications(self) -> tuple[Classification, ...]:
        return tuple(s.classification for s in self.states)


def aufbau_sequence(start: ChiralityIndex, steps: Sequence[int]) -> AufbauTrace:
    steps = tuple(_check_step(d) for d in steps)
    states, cur = [], start
    for d in steps:
        cur = add_centre(cur, d)
        states.append(cur)
    return AufbauTrace(start, steps, tuple(states))


def centre_delta_p(t: Tetrahedron) -> int:
    """1 if the centre on its own is not superimposable on its mirror image."""
    return int(rotationally_superimposable(mirror_tetra(t), t) is None)


@dataclass(frozen=True)
class VerifiedAddition:
    molecule: ChainMolecule
    index: ChiralityIndex
    raw: ChiralityIndex

    @property
    def degenerate(self) -> bool:
        return self.index != self.raw

    def __iter__(self):
        return iter((self.molecule, self.index, self.raw))


def verified_add_centre(m: ChainMolecule, new_centre: Tetrahedron, attach_slot: int) -> VerifiedAddition:
    """Attach ``new_centre`` to the last centre of ``m`` at ``attach_slot`` (1..4).

    Returns the extended chain, the index the classifier computes for it,
    and the index the bare rule predicts from ``chirality_index(m)`` and the
    new centre's own Δp.  The classifier index is authoritative; the two
    differ when the addition creates internal (meso) symmetry.
    """
    if not 1 <= attach_slot <= 4:
        raise ValueError(f"attach slot must be in 1..4, got {attach_slot}")
    last = m.centres[-1]
    if m.n > 1 and len(last.links) != 1:
        raise StructureError(f"centre {last.centre_id} is not a chain end")
    if isinstance(last.slots[attach_slot - 1], Link):
        raise StructureError(f"slot {attach_slot} of {last.centre_id} is already a link")
    if new_centre.centre_id in m.ids:
        raise StructureError(f"centre id {new_centre.centre_id!r} already used")
    back = [s.target for s in new_centre.links]
    if back != [last.centre_id]:
        raise StructureError(f"new centre must carry exactly one link back to {last.centre_id}")

    slots = list(last.slots)
    slots[attach_slot - 1] = Link(new_centre.centre_id)
    extended = replace(m, centres=m.centres[:-1] + (replace(last, slots=tuple(slots)), new_centre))
    raw = add_centre(chirality_index(m), centre_delta_p(new_centre))
    return VerifiedAddition(extended, chirality_index(extended), raw)
