"""ASCII and CSV renderings of the operator matrices and the Cayley table."""

from __future__ import annotations

from typing import Iterable

from .algebra import Operator, all_operators, cayley_table


def matrix_csv(op: Operator) -> str:
    return "\n".join(",".join(str(x) for x in row) for row in op.matrix)


def matrices_csv(ops: Iterable[Operator]) -> str:
    blocks = [f"{op.name}\n{matrix_csv(op)}" for op in ops]
    return "\n\n".join(blocks) + "\n"


def matrix_ascii(op: Operator) -> str:
    rows = [" ".join(str(x) for x in row) for row in op.matrix]
    return "\n".join([f"{op.name} (det {op.kind.sign:+d})"] + [f"  | {r} |" for r in rows])


def matrices_ascii(ops: Iterable[Operator]) -> str:
    return "\n\n".join(matrix_ascii(op) for op in ops) + "\n"


def cayley_csv() -> str:
    ops = all_operators()
    lines = ["," + ",".join(op.name for op in ops)]
    for a, row in zip(ops, cayley_table()):
        lines.append(a.name + "," + ",".join(c.name for c in row))
    return "\n".join(lines) + "\n"


def cayley_ascii() -> str:
    ops = all_operators()
    width = 4
    head = " " * width + "".join(op.name.rjust(width) for op in ops)
    lines = [head, " " * width + "-" * (width * len(ops))]
    for a, row in zip(ops, cayley_table()):
        lines.append(a.name.ljust(width) + "".join(c.name.rjust(width) for c in row))
    return "\n".join(lines) + "\n"
