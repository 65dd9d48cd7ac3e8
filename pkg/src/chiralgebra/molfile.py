"""Line-oriented molecule files.

::

    # comment
    molecule meso-tartaric
    center c1: OH CO2H H @c2
    center c2: @c1 CO2H H OH
    end

Slot tokens are ligand labels or ``@<id>`` links, in Fischer order
left, top, right, bottom.  An optional ``spacers`` line marks chains whose
centres are separated by spacer atoms.
"""

from __future__ import annotations

import re
from pathlib import Path

from .exceptions import ParseError, StructureError
from .tetra import ChainMolecule, Ligand, Link, Tetrahedron

_CENTER = re.compile(r"^center\s+(\S+?)\s*:\s*(.*)$")


def parse_molecule(text: str) -> ChainMolecule:
    name = None
    spacers = False
    centres: list[Tetrahedron] = []
    seen: dict[str, int] = {}
    links: list[tuple[str, str, int]] = []
    closed = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if closed:
            raise ParseError("content after 'end'", lineno)
        head = line.split(None, 1)[0]
        if head == "molecule":
            if name is not None:
                raise ParseError("second 'molecule' line", lineno)
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("expected 'molecule <name>'", lineno)
            name = parts[1]
        elif head == "spacers":
            if name is None:
                raise ParseError("'spacers' before 'molecule'", lineno)
            spacers = True
        elif head == "center":
            if name is None:
                raise ParseError("'center' before 'molecule'", lineno)
            m = _CENTER.match(line)
            if not m:
                raise ParseError("expected 'center <id>: <t1> <t2> <t3> <t4>'", lineno)
            cid, tokens = m.group(1), m.group(2).split()
            if cid.startswith("@"):
                raise ParseError(f"centre id may not start with '@': {cid!r}", lineno)
            if cid in seen:
                raise ParseError(f"duplicate centre id {cid!r} (first on line {seen[cid]})", lineno)
            if len(tokens) != 4:
                raise ParseError(f"centre {cid} has {len(tokens)} slot tokens, expected 4", lineno)
            slots = []
            for tok in tokens:
                if tok.startswith("@"):
                    if len(tok) == 1:
                        raise ParseError("empty link target", lineno)
                    slots.append(Link(tok[1:]))
                    links.append((cid, tok[1:], lineno))
                else:
                    slots.append(Ligand(tok))
            seen[cid] = lineno
            try:
                centres.append(Tetrahedron(cid, tuple(slots)))
            except StructureError as exc:
                raise ParseError(str(exc), lineno) from None
        elif head == "end":
            if name is None:
                raise ParseError("'end' before 'molecule'", lineno)
            closed = True
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)

    if name is None:
        raise ParseError("missing 'molecule <name>' line")
    if not closed:
        raise ParseError("missing 'end'")
    for owner, target, lineno in links:
        if target not in seen:
            raise ParseError(f"dangling link @{target} from centre {owner}", lineno)
    try:
        return ChainMolecule(name, tuple(centres), spacers)
    except StructureError as exc:
        raise ParseError(str(exc)) from None


def serialize_molecule(m: ChainMolecule) -> str:
    lines = [f"molecule {m.name}"]
    if m.spacers:
        lines.append("spacers")
    for t in m.centres:
        lines.append(f"center {t.centre_id}: " + " ".join(str(s) for s in t.slots))
    lines.append("end")
    return "\n".join(lines) + "\n"


def read_molecule(path: str | Path) -> ChainMolecule:
    return parse_molecule(Path(path).read_text(encoding="utf-8"))
