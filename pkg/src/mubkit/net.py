"""Net designs induced by augmented MOLS families.

Points are the d^2 integers m*d + n.  A design row partitions the points into
d cells of d points: row 0 groups by m, row 1 by n, and each Latin square S
contributes the row of permutation graphs cell_k = {(j, S[k][j])}.  The cell
of each row containing point 0 is its *representative cell*; read as exponent
pairs these feed the operator construction.

The classical net property — cells from different rows meet in exactly one
point — holds for the finite-field and MacNeish families but is NOT implied
by orthogonality alone under this cell encoding; ``validate_net`` reports it
honestly, while ``net_from_mols`` enforces only what the downstream pipeline
relies on (partitions per row, representative cells meeting pairwise in
point 0 alone).
"""

from __future__ import annotations

from dataclasses import dataclass

from .squares import MolsFamily
from .weyl import ExponentPair

Cell = frozenset[int]
Row = tuple[Cell, ...]


@dataclass(frozen=True)
class NetDesign:
    order: int
    rows: tuple[Row, ...]


@dataclass(frozen=True)
class NetReport:
    valid: bool
    message: str | None = None
    witness: tuple[tuple[int, int], tuple[int, int]] | None = None  # (row, cell) pairs

    def __bool__(self) -> bool:
        return self.valid


class NetError(ValueError):
    pass


def net_from_mols(family: MolsFamily) -> NetDesign:
    """Build the (L+2)-row design of an augmented family.

    Raises NetError if a row fails to partition the points or if two
    representative cells share any point besides 0.
    """
    d = family.order
    rows: list[Row] = []
    rows.append(tuple(frozenset(m * d + n for n in range(d)) for m in range(d)))
    rows.append(tuple(frozenset(m * d + n for m in range(d)) for n in range(d)))
    for square in family:
        rows.append(
            tuple(
                frozenset(j * d + square.grid[k][j] for j in range(d))
                for k in range(d)
            )
        )
    design = NetDesign(d, tuple(rows))

    everything = frozenset(range(d * d))
    for r, row in enumerate(design.rows):
        union = set()
        for cell in row:
            if len(cell) != d:
                raise NetError(f"row {r} has a cell of size {len(cell)}")
            union |= cell
        if union != everything:
            raise NetError(f"row {r} does not partition the {d * d} points")
    reps = representative_cells(design)
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            common = {(p.m, p.n) for p in reps[i]} & {(p.m, p.n) for p in reps[j]}
            if common != {(0, 0)}:
                raise NetError(
                    f"representative cells of rows {i} and {j} share {sorted(common)}"
                )
    return design


def validate_net(design: NetDesign) -> NetReport:
    """Full invariant check: partitions, and every cross-row cell pair meets once."""
    d = design.order
    everything = set(range(d * d))
    for r, row in enumerate(design.rows):
        union: set[int] = set()
        for c, cell in enumerate(row):
            if len(cell) != d:
                return NetReport(False, f"row {r} cell {c} has {len(cell)} points")
            union |= cell
        if union != everything:
            return NetReport(False, f"row {r} does not partition the points")
    nrows = len(design.rows)
    for r1 in range(nrows):
        for r2 in range(r1 + 1, nrows):
            for c1, cell1 in enumerate(design.rows[r1]):
                for c2, cell2 in enumerate(design.rows[r2]):
                    k = len(cell1 & cell2)
                    if k != 1:
                        return NetReport(
                            False,
                            f"cells ({r1},{c1}) and ({r2},{c2}) share {k} points",
                            ((r1, c1), (r2, c2)),
                        )
    return NetReport(True)


def representative_cells(design: NetDesign) -> list[tuple[ExponentPair, ...]]:
    """One cell per row — the cell containing point 0 — as sorted exponent pairs."""
    d = design.order
    out = []
    for row in design.rows:
        cell = next(c for c in row if 0 in c)
        pairs = sorted(divmod(point, d) for point in cell)
        out.append(tuple(ExponentPair(m, n, d) for m, n in pairs))
    return out


def format_cell(cell: tuple[ExponentPair, ...]) -> str:
    """Render a cell as space-separated pairs, '00 12 24 ...' for d <= 10."""
    if cell[0].d <= 10:
        return " ".join(f"{p.m}{p.n}" for p in cell)
    return " ".join(f"{p.m},{p.n}" for p in cell)


def design_to_json_dict(design: NetDesign) -> dict:
    return {
        "order": design.order,
        "rows": [
            [sorted(cell) for cell in row]
            for row in design.rows
        ],
    }
