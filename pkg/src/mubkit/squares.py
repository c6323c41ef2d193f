"""Latin squares, mutually orthogonal families, and MacNeish products.

A Latin square of order d is a d x d grid over symbols {0, ..., d-1} with
each symbol exactly once per row and per column.  Two squares are orthogonal
when superimposing them yields every ordered symbol pair exactly once.  A
MolsFamily is a pairwise-orthogonal set of squares of one order (at most d-1
of them can exist).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import gf

Grid = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LatinReport:
    valid: bool
    kind: str | None = None  # "row" or "column"
    index: int | None = None
    symbol: int | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_latin(grid: Sequence[Sequence[int]]) -> LatinReport:
    """Check the Latin property of a square grid.

    Raises ValueError for malformed input (non-square grid, symbols outside
    {0,...,d-1}); duplicate symbols are reported, not raised.
    """
    d = len(grid)
    if d == 0 or any(len(row) != d for row in grid):
        raise ValueError("grid is not a d x d square")
    for row in grid:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < d:
                raise ValueError(f"symbol {v!r} outside 0..{d - 1}")
    full = set(range(d))
    for i, row in enumerate(grid):
        if set(row) != full:
            dup = next(s for s in row if list(row).count(s) > 1)
            return LatinReport(False, "row", i, dup)
    for j in range(d):
        col = [grid[i][j] for i in range(d)]
        if set(col) != full:
            dup = next(s for s in col if col.count(s) > 1)
            return LatinReport(False, "column", j, dup)
    return LatinReport(True)


@dataclass(frozen=True)
class LatinSquare:
    order: int
    grid: Grid

    @classmethod
    def from_grid(cls, grid: Sequence[Sequence[int]]) -> "LatinSquare":
        report = validate_latin(grid)
        if not report:
            raise ValueError(
                f"not a Latin square: {report.kind} {report.index} "
                f"repeats symbol {report.symbol}"
            )
        return cls(len(grid), tuple(tuple(row) for row in grid))

    @classmethod
    def cyclic(cls, d: int) -> "LatinSquare":
        """The addition-table square L[i][j] = (i + j) mod d."""
        return cls.from_grid([[(i + j) % d for j in range(d)] for i in range(d)])

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.grid[i]


@dataclass(frozen=True)
class OrthogonalityReport:
    orthogonal: bool
    pair: tuple[int, int] | None = None  # the repeated ordered symbol pair
    first: tuple[int, int] | None = None  # grid positions where it repeats
    second: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.orthogonal


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> OrthogonalityReport:
    """Orthogonality check; on failure reports the first colliding cell pair."""
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    d = a.order
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for i in range(d):
        for j in range(d):
            key = (a.grid[i][j], b.grid[i][j])
            if key in seen:
                return OrthogonalityReport(False, key, seen[key], (i, j))
            seen[key] = (i, j)
    return OrthogonalityReport(True)


@dataclass(frozen=True)
class MolsFamily:
    """A set of pairwise orthogonal Latin squares of a common order.

    The order is stored explicitly so the empty family (grid rows/columns
    only) still knows its dimension.
    """

    order: int
    squares: tuple[LatinSquare, ...]

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if len(self.squares) > self.order - 1:
            raise ValueError(
                f"{len(self.squares)} squares exceed the maximum {self.order - 1}"
            )
        for s in self.squares:
            if s.order != self.order:
                raise ValueError(f"square of order {s.order} in order-{self.order} family")
        for i in range(len(self.squares)):
            for j in range(i + 1, len(self.squares)):
                rep = are_orthogonal(self.squares[i], self.squares[j])
                if not rep:
                    raise ValueError(
                        f"squares {i} and {j} are not orthogonal: pair {rep.pair} "
                        f"repeats at {rep.first} and {rep.second}"
                    )

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)


# --- bundled order-10 pair ----------------------------------------------------

_MOLS10_A = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9),
    (1, 2, 6, 5, 8, 0, 9, 3, 4, 7),
    (2, 9, 4, 0, 5, 7, 3, 8, 6, 1),
    (3, 4, 9, 7, 6, 8, 5, 1, 0, 2),
    (4, 3, 7, 8, 1, 6, 0, 2, 9, 5),
    (5, 8, 3, 6, 2, 9, 7, 0, 1, 4),
    (6, 5, 1, 9, 7, 3, 8, 4, 2, 0),
    (7, 0, 5, 2, 9, 1, 4, 6, 3, 8),
    (8, 7, 0, 4, 3, 2, 1, 9, 5, 6),
    (9, 6, 8, 1, 0, 4, 2, 5, 7, 3),
)

_MOLS10_B = (
    (0, 2, 4, 9, 1, 8, 7, 5, 3, 6),
    (1, 7, 3, 4, 5, 9, 2, 6, 0, 8),
    (2, 3, 8, 7, 6, 4, 1, 9, 5, 0),
    (3, 9, 5, 2, 4, 7, 0, 8, 6, 1),
    (4, 5, 6, 1, 9, 2, 8, 0, 7, 3),
    (5, 6, 2, 0, 8, 1, 9, 3, 4, 7),
    (6, 1, 7, 8, 3, 0, 4, 2, 9, 5),
    (7, 4, 9, 3, 0, 5, 6, 1, 8, 2),
    (8, 0, 1, 5, 7, 6, 3, 4, 2, 9),
    (9, 8, 0, 6, 2, 3, 5, 7, 1, 4),
)


def builtin_mols10() -> MolsFamily:
    """The bundled pair of orthogonal order-10 Latin squares."""
    return MolsFamily(
        10, (LatinSquare.from_grid(_MOLS10_A), LatinSquare.from_grid(_MOLS10_B))
    )


# --- finite-field complete families -------------------------------------------


def ff_complete_mols(q: int, field: gf.FieldSpec | None = None) -> MolsFamily:
    """Complete family of q-1 MOLS of prime-power order q.

    Square for nonzero field element a: L_a(i, j) = a*j + i in GF(q), with
    field elements identified with integers by base-p digits.  Any pair is
    orthogonal: L_a(i,j) = s and L_b(i,j) = t force (a-b)*j = s-t, which has
    exactly one solution j, then i is determined.
    """
    fld = field if field is not None else gf.FieldSpec.for_order(q)
    if fld.order != q:
        raise ValueError(f"field of order {fld.order} does not match q={q}")
    elems = fld.elements()
    squares = []
    for a_int in range(1, q):
        a = elems[a_int]
        grid = [
            [fld.to_int(fld.add(fld.mul(a, elems[j]), elems[i])) for j in range(q)]
            for i in range(q)
        ]
        squares.append(LatinSquare.from_grid(grid))
    return MolsFamily(q, tuple(squares))


# --- MacNeish products ----------------------------------------------------------


def macneish_product(a: LatinSquare, c: LatinSquare) -> LatinSquare:
    """Order-(ab) square with entry A[i][j]*b + C[k][l] at row (i,k), column (j,l)."""
    b = c.order
    grid = [
        [a.grid[i][j] * b + c.grid[k][l] for j in range(a.order) for l in range(b)]
        for i in range(a.order)
        for k in range(b)
    ]
    return LatinSquare.from_grid(grid)


def macneish_family(f1: MolsFamily, f2: MolsFamily) -> MolsFamily:
    """Pairwise product family: square t is the product of the t-th squares."""
    n = min(len(f1), len(f2))
    squares = tuple(
        macneish_product(f1.squares[t], f2.squares[t]) for t in range(n)
    )
    return MolsFamily(f1.order * f2.order, squares)


def macneish_bound(d: int) -> int:
    """Lower bound on the number of MOLS of order d: min over p^r || d of p^r - 1."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return min(p**r - 1 for p, r in gf.factorize(d))


def quantum_macneish_bound(d: int) -> int:
    """Lower bound on the number of MUBs in dimension d: min of p^r + 1."""
    if d < 2:
        raise ValueError("d must be >= 2")
    return min(p**r + 1 for p, r in gf.factorize(d))


# --- text format ------------------------------------------------------------------
#
# One square: a line with d, then d lines of d space-separated integers.
# A family: squares separated by a single blank line.


def parse_squares_text(text: str) -> list[list[list[int]]]:
    """Parse the square text format into raw grids (no validation)."""
    blocks = [blk for blk in text.strip().split("\n\n") if blk.strip()]
    grids = []
    for blk in blocks:
        lines = [ln for ln in blk.splitlines() if ln.strip()]
        try:
            d = int(lines[0])
        except (ValueError, IndexError) as exc:
            raise ValueError(f"bad order line in block: {lines[:1]}") from exc
        if len(lines) != d + 1:
            raise ValueError(f"expected {d} rows after order line, got {len(lines) - 1}")
        grid = []
        for ln in lines[1:]:
            row = [int(tok) for tok in ln.split()]
            if len(row) != d:
                raise ValueError(f"row {ln!r} does not have {d} entries")
            grid.append(row)
        grids.append(grid)
    if not grids:
        raise ValueError("no squares found")
    return grids


def format_squares_text(squares: Iterable[LatinSquare]) -> str:
    blocks = []
    for s in squares:
        rows = [" ".join(str(v) for v in row) for row in s.grid]
        blocks.append("\n".join([str(s.order)] + rows))
    return "\n\n".join(blocks) + "\n"
