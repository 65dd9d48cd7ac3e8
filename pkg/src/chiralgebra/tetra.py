"""Bonds, tetrahedra and linear chains of linked tetrahedra.

Slot order follows the fundamental Fischer convention: slot 1 is the left
arm of the cross, then clockwise (top, right, bottom).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .algebra import Operator
from .exceptions import StateError, StructureError

TWO_PI = 2.0 * math.pi
BOND_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Bond:
    """A projected bond ρ·e^{iθ}; θ is normalised into [0, 2π)."""

    rho: float
    theta: float = 0.0

    def __post_init__(self):
        if not self.rho >= 0:
            raise ValueError(f"bond length must be >= 0, got {self.rho}")
        theta = math.fmod(float(self.theta), TWO_PI)
        if theta < 0:
            theta += TWO_PI
        if theta >= TWO_PI - BOND_TOL:
            theta = 0.0
        object.__setattr__(self, "rho", float(self.rho))
        object.__setattr__(self, "theta", theta)

    @property
    def value(self) -> complex:
        return bond_value(self)

    def __eq__(self, other):
        if not isinstance(other, Bond):
            return NotImplemented
        return abs(self.value - other.value) <= BOND_TOL

    __hash__ = None


def bond_value(b: Bond) -> complex:
    return b.rho * complex(math.cos(b.theta), math.sin(b.theta))


@dataclass(frozen=True)
class Ligand:
    label: str

    def __post_init__(self):
        if not self.label or any(c.isspace() for c in self.label):
            raise ValueError(f"ligand label must be nonempty without whitespace: {self.label!r}")

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class Link:
    target: str

    def __str__(self):
        return f"@{self.target}"


Slot = Ligand | Link


def as_slot(item: Slot | str) -> Slot:
    if isinstance(item, (Ligand, Link)):
        return item
    item = str(item)
    return Link(item[1:]) if item.startswith("@") else Ligand(item)


@dataclass(frozen=True, eq=False)
class Tetrahedron:
    centre_id: str
    slots: tuple[Slot, ...]
    bonds: tuple[Bond, ...] | None = None

    def __post_init__(self):
        slots = tuple(as_slot(s) for s in self.slots)
        if len(slots) != 4:
            raise StructureError(f"centre {self.centre_id}: expected 4 slots, got {len(slots)}")
        links = [s for s in slots if isinstance(s, Link)]
        if len(links) > 2:
            raise StructureError(f"centre {self.centre_id}: at most 2 links allowed in a linear chain")
        if any(s.target == self.centre_id for s in links):
            raise StructureError(f"centre {self.centre_id} links to itself")
        object.__setattr__(self, "slots", slots)
        if self.bonds is not None:
            bonds = tuple(self.bonds)
            if len(bonds) != 4:
                raise StructureError(f"centre {self.centre_id}: expected 4 bonds")
            object.__setattr__(self, "bonds", bonds)

    @classmethod
    def of(cls, centre_id: str, *slots: Slot | str, bonds: Sequence[Bond] | None = None) -> Tetrahedron:
        return cls(centre_id, tuple(slots), None if bonds is None else tuple(bonds))

    @property
    def links(self) -> tuple[Link, ...]:
        return tuple(s for s in self.slots if isinstance(s, Link))

    @property
    def has_links(self) -> bool:
        return bool(self.links)

    def __eq__(self, other):
        if not isinstance(other, Tetrahedron):
            return NotImplemented
        return (self.centre_id, self.slots, self.bonds) == (other.centre_id, other.slots, other.bonds)

    def __hash__(self):
        return hash((self.centre_id, self.slots))

    def __str__(self):
        return f"{self.centre_id}: " + " ".join(str(s) for s in self.slots)


def sum_vector(t: Tetrahedron) -> complex:
    if t.bonds is None:
        raise StateError(f"centre {t.centre_id} carries no bond geometry")
    return sum((bond_value(b) for b in t.bonds), 0j)


def apply_operator(op: Operator, t: Tetrahedron) -> Tetrahedron:
    """Permute slots (and bonds) exactly as the matrix acts on the column vector."""
    bonds = None if t.bonds is None else op.act(t.bonds)
    return replace(t, slots=op.act(t.slots), bonds=bonds)


def bond_count(n: int, spacers: bool = False) -> int:
    """3n+1 bonds for directly linked centres, 4n when spacer atoms sit between them."""
    if n < 1:
        raise ValueError(f"need at least one centre, got {n}")
    return 4 * n if spacers else 3 * n + 1


@dataclass(frozen=True)
class ChainMolecule:
    name: str
    centres: tuple[Tetrahedron, ...]
    spacers: bool = False
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        centres = tuple(self.centres)
        object.__setattr__(self, "centres", centres)
        if not centres:
            raise StructureError("a chain needs at least one centre")
        index = {}
        for t in centres:
            if t.centre_id in index:
                raise StructureError(f"duplicate centre id {t.centre_id!r}")
            index[t.centre_id] = t
        object.__setattr__(self, "_index", index)
        for t in centres:
            targets = [s.target for s in t.links]
            if len(set(targets)) != len(targets):
                raise StructureError(f"centre {t.centre_id} links twice to the same centre")
            for target in targets:
                if target not in index:
                    raise StructureError(f"centre {t.centre_id} links to unknown centre {target!r}")
                if t.centre_id not in {s.target for s in index[target].links}:
                    raise StructureError(f"link {t.centre_id}->{target} is not reciprocated")
        if len(self.path()) != len(centres):
            raise StructureError("centres do not form a single linear chain")

    @property
    def n(self) -> int:
        return len(self.centres)

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(t.centre_id for t in self.centres)

    def centre(self, centre_id: str) -> Tetrahedron:
        try:
            return self._index[centre_id]
        except KeyError:
            raise KeyError(f"no centre {centre_id!r} in {self.name}") from None

    def path(self) -> tuple[str, ...]:
        """Centre ids in chain order, starting from the first listed chain end."""
        if len(self.centres) == 1:
            return (self.centres[0].centre_id,)
        ends = [t.centre_id for t in self.centres if len(t.links) == 1]
        if len(ends) != 2:
            return ()
        order, prev, cur = [ends[0]], None, ends[0]
        while True:
            nxt = [s.target for s in self._index[cur].links if s.target != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            if cur in order:
                return ()
            order.append(cur)
        return tuple(order)

    @property
    def n_links(self) -> int:
        return sum(len(t.links) for t in self.centres) // 2

    @property
    def bond_count(self) -> int:
        # a spacer atom turns each shared bond into two
        shared = self.n_links
        total = 4 * self.n - shared + (shared if self.spacers else 0)
        assert total == bond_count(self.n, self.spacers)
        return total

    def with_centre(self, t: Tetrahedron) -> ChainMolecule:
        """Copy with the centre of the same id replaced."""
        return replace(self, centres=tuple(t if c.centre_id == t.centre_id else c for c in self.centres))

    def map_centres(self, fn) -> ChainMolecule:
        return replace(self, centres=tuple(fn(t) for t in self.centres))


def apply_at(m: ChainMolecule, centre_id: str, op: Operator) -> ChainMolecule:
    """Act with ``op`` on one centre only, leaving the rest of the chain untouched."""
    return m.with_centre(apply_operator(op, m.centre(centre_id)))


def chain(name: str, centres: Iterable[Tetrahedron], spacers: bool = False) -> ChainMolecule:
    return ChainMolecule(name, tuple(centres), spacers)
