"""Exponent-label algebra for the operators X^m Z^n in dimension d.

A label is the pair (m, n) of exponents of the shift and clock matrices; the
operator it names is built in :mod:`mubkit.spectra`.  Everything commutation-
related reduces to the symplectic form

    symplectic((m, n), (m', n')) = (m*n' - n*m') mod d,

which vanishes exactly when the two operators commute.  A commuting class is
an order-d subgroup of Z_d x Z_d on which the form vanishes identically; its
joint eigenbasis is a MUB candidate.

For prime-power d = p^r a label can be split into r tensor factors by writing
m in a field basis B and n in the trace-dual basis of B; for coprime products
d = d1*d2 it splits through the Chinese remainder theorem.  Both splits are
implemented here; the matrices they act on live in spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from . import gf

MAX_CLASS_DIM = 35


class ExponentPair(NamedTuple):
    m: int
    n: int
    d: int


def make_pair(m: int, n: int, d: int) -> ExponentPair:
    if d < 1:
        raise ValueError("dimension must be >= 1")
    return ExponentPair(m % d, n % d, d)


def symplectic(a: ExponentPair, b: ExponentPair) -> int:
    """(m_a n_b - n_a m_b) mod d; zero iff the labelled operators commute."""
    if a.d != b.d:
        raise ValueError(f"dimension mismatch: {a.d} vs {b.d}")
    return (a.m * b.n - a.n * b.m) % a.d


class CommutationReport(NamedTuple):
    commutes: bool
    witness: tuple | None  # first violating pair of labels, or None
    value: int | None  # its symplectic value

    def __bool__(self) -> bool:
        return self.commutes


def cell_commutes(cell: Sequence[ExponentPair]) -> CommutationReport:
    """Pairwise commutation of a cell of labels; first violation is reported."""
    for i in range(len(cell)):
        for j in range(i + 1, len(cell)):
            s = symplectic(cell[i], cell[j])
            if s != 0:
                return CommutationReport(False, (cell[i], cell[j]), s)
    return CommutationReport(True, None, None)


@dataclass(frozen=True)
class CommutingClass:
    """Order-d isotropic subgroup of Z_d x Z_d (contains (0,0), closed, commuting)."""

    dimension: int
    elements: tuple[tuple[int, int], ...]

    def __post_init__(self):
        d = self.dimension
        elems = tuple(sorted((m % d, n % d) for m, n in self.elements))
        object.__setattr__(self, "elements", elems)
        if len(set(elems)) != d:
            raise ValueError(f"class must have exactly {d} distinct elements")
        eset = set(elems)
        if (0, 0) not in eset:
            raise ValueError("class must contain the identity label (0,0)")
        for a in elems:
            for b in elems:
                if ((a[0] + b[0]) % d, (a[1] + b[1]) % d) not in eset:
                    raise ValueError(f"class not closed under addition: {a} + {b}")
        rep = cell_commutes([ExponentPair(m, n, d) for m, n in elems])
        if not rep:
            raise ValueError(
                f"class is not commuting: witness {rep.witness}, symplectic {rep.value}"
            )

    def pairs(self) -> list[ExponentPair]:
        return [ExponentPair(m, n, self.dimension) for m, n in self.elements]


def enumerate_classes(d: int) -> list[CommutingClass]:
    """All commuting classes in dimension d, canonically ordered.

    Order-d subgroups of Z_d x Z_d correspond to index-d sublattices of Z^2
    (every index-d sublattice contains d*Z^2), parametrized in Hermite normal
    form by generators (a, b), (0, c) with a*c = d and 0 <= b < c.  Every such
    subgroup is isotropic (the form on the generators is a*c = d = 0 mod d),
    so the count is the divisor sum of d: 18 for d=10, 48 for d=35, p+1 for
    prime p.
    """
    if not 2 <= d <= MAX_CLASS_DIM:
        raise ValueError(f"dimension {d} outside supported range 2..{MAX_CLASS_DIM}")
    classes = []
    for a in range(1, d + 1):
        if d % a:
            continue
        c = d // a
        for b in range(c):
            elems = {
                ((i * a) % d, (i * b + j * c) % d)
                for i in range(d // a)
                for j in range(d // c)
            }
            classes.append(CommutingClass(d, tuple(elems)))
    classes.sort(key=lambda cls: cls.elements)
    return classes


# --- prime-power digit decomposition -----------------------------------------


class TensorLabel(NamedTuple):
    """Exponents of a tensor product of Weyl operators: factors (p_i, m_i, n_i)."""

    factors: tuple[tuple[int, int, int], ...]


def decompose_prime_power(
    pair: ExponentPair,
    field: gf.FieldSpec,
    basis: gf.Basis | None = None,
) -> TensorLabel:
    """Split (m, n) at d = p^r into r factor labels over GF(p).

    m is expanded in the basis B (default: polynomial basis 1, x, ..., x^(r-1))
    and n in the trace-dual basis of B.  With that pairing the summed factor
    form equals Tr(m_a*n_b - n_a*m_b), so cells built from field lines
    {(j, a*j)} decompose into tensor-commuting labels.
    """
    if field.order != pair.d:
        raise ValueError(f"field order {field.order} does not match d={pair.d}")
    b = basis if basis is not None else field.polynomial_basis()
    dual = field.dual_basis(b)
    m_coords = field.coords(field.element(pair.m), b)
    n_coords = field.coords(field.element(pair.n), dual)
    return TensorLabel(
        tuple((field.p, mi, ni) for mi, ni in zip(m_coords, n_coords))
    )


def tensor_symplectic(x: TensorLabel, y: TensorLabel) -> int:
    """Sum of factor symplectic forms mod the common characteristic p."""
    if len(x.factors) != len(y.factors):
        raise ValueError("factor count mismatch")
    ps = {f[0] for f in x.factors} | {f[0] for f in y.factors}
    if len(ps) != 1:
        raise ValueError(f"mixed characteristics {sorted(ps)}")
    p = ps.pop()
    total = 0
    for (_, m1, n1), (_, m2, n2) in zip(x.factors, y.factors):
        total += m1 * n2 - n1 * m2
    return total % p


def tensor_cell_commutes(labels: Sequence[TensorLabel]) -> CommutationReport:
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            s = tensor_symplectic(labels[i], labels[j])
            if s != 0:
                return CommutationReport(False, (labels[i], labels[j]), s)
    return CommutationReport(True, None, None)


def search_decomposition_basis(
    field: gf.FieldSpec, cells: Sequence[Sequence[ExponentPair]]
) -> gf.Basis | None:
    """Exhaustive fallback: find a field basis making all cells tensor-commute.

    Tries every ordered basis of GF(p^r) (m in B, n in the trace-dual of B)
    and returns the first that works, or None — never guesses.
    """
    import itertools

    nonzero = [e for e in field.elements() if e != field.zero]
    for cand in itertools.permutations(nonzero, field.r):
        try:
            field.dual_basis(cand)
        except ValueError:
            continue
        ok = True
        for cell in cells:
            labels = [decompose_prime_power(p, field, cand) for p in cell]
            if not tensor_cell_commutes(labels):
                ok = False
                break
        if ok:
            return cand
    return None


# --- CRT split ---------------------------------------------------------------


def crt_split(pair: ExponentPair, d1: int, d2: int) -> tuple[ExponentPair, ExponentPair]:
    """Split (m, n) at d = d1*d2 (coprime) into factor labels.

    The factor exponents are m_i = m mod d_i and n_i = (s*n) mod d_i with
    s = (d1+d2)^(-1) mod d; this matches conjugation by the CRT permutation
    (see spectra.permutation_T / lemma_verify).  Symplectic-zero at d holds
    iff it holds in both factors.
    """
    import math

    if d1 < 1 or d2 < 1 or math.gcd(d1, d2) != 1:
        raise ValueError(f"factors {d1}, {d2} must be positive and coprime")
    d = d1 * d2
    if pair.d != d:
        raise ValueError(f"label dimension {pair.d} is not {d1}*{d2}")
    s = pow(d1 + d2, -1, d)
    return (
        ExponentPair(pair.m % d1, (s * pair.n) % d1, d1),
        ExponentPair(pair.m % d2, (s * pair.n) % d2, d2),
    )
