"""Mutual unbiasedness: pairwise checks, clique search, and the two pipelines.

Two orthonormal bases are mutually unbiased when every cross overlap has
|<a|b>|^2 = 1/d.  Candidate bases come either from all commuting classes in a
dimension (``ws_mub_number``) or from the representative cells of a design
(``design_mubs``); the largest pairwise-unbiased subset is found by an exact
branch-and-bound maximum-clique search on the unbiasedness graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import gf
from .net import net_from_mols, representative_cells
from .spectra import (
    Basis,
    Degenerate,
    ResidualFailure,
    joint_eigenbasis,
    tensor_weyl,
    weyl_matrix,
)
from .squares import MolsFamily
from .weyl import (
    cell_commutes,
    decompose_prime_power,
    enumerate_classes,
    tensor_cell_commutes,
)

UNBIASED_TOL = 1e-8
MAX_CLIQUE_VERTICES = 64


def is_unbiased(b1: Basis, b2: Basis, tol: float = UNBIASED_TOL) -> tuple[bool, float]:
    """(verdict, worst deviation of |<a|b>|^2 from 1/d over all pairs)."""
    if b1.dimension != b2.dimension:
        raise ValueError(f"dimension mismatch: {b1.dimension} vs {b2.dimension}")
    d = b1.dimension
    overlaps = np.abs(b1.matrix.conj().T @ b2.matrix) ** 2
    worst = float(np.abs(overlaps - 1.0 / d).max())
    return worst <= tol, worst


@dataclass(frozen=True)
class UnbiasedGraph:
    ids: tuple[str, ...]
    adjacency: np.ndarray  # boolean, symmetric, hollow
    deviations: np.ndarray  # worst deviation per pair

    def __post_init__(self):
        n = len(self.ids)
        a = self.adjacency
        if a.shape != (n, n) or not np.array_equal(a, a.T) or a.diagonal().any():
            raise ValueError("adjacency must be symmetric and hollow")


def unbiased_graph(
    bases: Sequence[Basis], ids: Sequence[str], tol: float = UNBIASED_TOL
) -> UnbiasedGraph:
    n = len(bases)
    adj = np.zeros((n, n), dtype=bool)
    dev = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            ok, worst = is_unbiased(bases[i], bases[j], tol)
            adj[i, j] = adj[j, i] = ok
            dev[i, j] = dev[j, i] = worst
    return UnbiasedGraph(tuple(ids), adj, dev)


def max_clique(adjacency: np.ndarray) -> tuple[int, list[int]]:
    """Exact maximum clique via branch and bound with a greedy colouring bound.

    Deterministic; intended for graphs of at most 64 vertices.
    """
    n = adjacency.shape[0]
    if n > MAX_CLIQUE_VERTICES:
        raise ValueError(f"{n} vertices exceed the supported {MAX_CLIQUE_VERTICES}")
    if n == 0:
        return 0, []
    adj = [set(np.flatnonzero(adjacency[v]).tolist()) for v in range(n)]
    best: list[int] = []

    def colour(cand: list[int]) -> list[tuple[int, int]]:
        # greedy colouring; returns (vertex, colour) with colours >= 1,
        # ordered so the highest colour comes last
        colours: dict[int, int] = {}
        classes: list[set[int]] = []
        for v in cand:
            for ci, cls in enumerate(classes):
                if not (cls & adj[v]):
                    cls.add(v)
                    colours[v] = ci + 1
                    break
            else:
                classes.append({v})
                colours[v] = len(classes)
        return sorted(colours.items(), key=lambda vc: vc[1])

    def expand(current: list[int], cand: list[int]):
        nonlocal best
        coloured = colour(cand)
        while coloured:
            v, c = coloured.pop()
            if len(current) + c <= len(best):
                return
            current.append(v)
            new_cand = [u for u, _ in coloured if u in adj[v]]
            if not new_cand:
                if len(current) > len(best):
                    best = current.copy()
            else:
                expand(current, new_cand)
            current.pop()

    expand([], list(range(n)))
    return len(best), sorted(best)


@dataclass(frozen=True)
class MubReport:
    """Outcome of a candidate-basis pipeline run."""

    dimension: int
    basis_ids: tuple[str, ...]
    bases: tuple[Basis, ...]
    row_verdicts: tuple[dict, ...]
    unbiased: np.ndarray
    deviations: np.ndarray
    worst_deviation: float
    clique_size: int
    clique_vertices: tuple[int, ...]
    excluded: tuple[dict, ...] = field(default=())

    @property
    def n_bases(self) -> int:
        return len(self.bases)

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "n_bases": self.n_bases,
            "row_verdicts": [dict(v) for v in self.row_verdicts],
            "unbiased_matrix": [
                [bool(v) for v in row] for row in self.unbiased
            ],
            "worst_deviation": float(self.worst_deviation),
            "max_clique": {
                "size": self.clique_size,
                "vertices": [self.basis_ids[v] for v in self.clique_vertices],
            },
            "excluded": [dict(e) for e in self.excluded],
        }


def _finish_report(dimension, ids, bases, row_verdicts, excluded, tol) -> MubReport:
    graph = unbiased_graph(bases, ids, tol)
    size, verts = max_clique(graph.adjacency)
    for i in range(size):
        for j in range(i + 1, size):
            if not graph.adjacency[verts[i], verts[j]]:
                raise AssertionError("clique verification failed")
    worst = 0.0
    if size >= 2:
        members = np.array(verts)
        worst = float(graph.deviations[np.ix_(members, members)].max())
    return MubReport(
        dimension=dimension,
        basis_ids=tuple(ids),
        bases=tuple(bases),
        row_verdicts=tuple(row_verdicts),
        unbiased=graph.adjacency,
        deviations=graph.deviations,
        worst_deviation=worst,
        clique_size=size,
        clique_vertices=tuple(verts),
        excluded=tuple(excluded),
    )


def ws_mub_number(d: int, seed: int = 0, tol: float = UNBIASED_TOL) -> MubReport:
    """Candidate bases from every commuting class in dimension d.

    The clique size is the largest number of pairwise unbiased bases the
    flat (undecomposed) operator classes can provide: 3 at d=10, 6 at d=35,
    p+1 at primes.
    """
    classes = enumerate_classes(d)
    ids, bases, excluded = [], [], []
    for idx, cls in enumerate(classes):
        try:
            basis = _class_basis(cls, idx, seed)
        except (Degenerate, ResidualFailure) as exc:
            excluded.append({"class": f"class{idx}", "reason": str(exc)})
            continue
        ids.append(f"class{idx}")
        bases.append(basis)
    return _finish_report(d, ids, bases, [], excluded, tol)


def _class_basis(cls, idx: int, seed: int) -> Basis:
    ops = [weyl_matrix(p) for p in cls.pairs() if (p.m, p.n) != (0, 0)]
    return joint_eigenbasis(ops, [1, cls.dimension, idx], seed=seed)


@dataclass(frozen=True)
class PrimePowerDecomposition:
    """Digit decomposition config: the field, and an optional m-basis override."""

    field: gf.FieldSpec
    basis: gf.Basis | None = None


def design_mubs(
    family: MolsFamily,
    decomposition: PrimePowerDecomposition | None = None,
    seed: int = 0,
    tol: float = UNBIASED_TOL,
) -> MubReport:
    """Bases from the representative cells of the family's design.

    Each row's cell is tested for pairwise commutation (flat symplectic form,
    or the summed factor form when a prime-power decomposition is supplied);
    commuting rows contribute their joint eigenbasis.  Degenerate or
    unverifiable rows are excluded and noted.
    """
    design = net_from_mols(family)
    cells = representative_cells(design)
    d = design.order
    ids, bases, verdicts, excluded = [], [], [], []
    for i, cell in enumerate(cells):
        if decomposition is None:
            verdict = cell_commutes(cell)
            ops = [weyl_matrix(p) for p in cell if (p.m, p.n) != (0, 0)]
        else:
            labels = [
                decompose_prime_power(p, decomposition.field, decomposition.basis)
                for p in cell
            ]
            verdict = tensor_cell_commutes(labels)
            ops = [
                tensor_weyl(lab)
                for lab, p in zip(labels, cell)
                if (p.m, p.n) != (0, 0)
            ]
        entry = {"row": i, "commutes": bool(verdict)}
        if not verdict:
            a, b = verdict.witness
            entry["witness"] = [_witness_json(a), _witness_json(b)]
            entry["symplectic"] = int(verdict.value)
            verdicts.append(entry)
            continue
        verdicts.append(entry)
        try:
            basis = joint_eigenbasis(ops, [2, d, i], seed=seed)
        except (Degenerate, ResidualFailure) as exc:
            excluded.append({"class": f"row{i}", "reason": str(exc)})
            continue
        ids.append(f"row{i}")
        bases.append(basis)
    return _finish_report(d, ids, bases, verdicts, excluded, tol)


def _witness_json(label):
    if hasattr(label, "factors"):
        return [list(f) for f in label.factors]
    return [label.m, label.n]


def tensor_mub(bases1: Sequence[Basis], bases2: Sequence[Basis]) -> list[Basis]:
    """Pair bases positionally and tensor them; yields min(len1, len2) bases.

    If both input sets are pairwise unbiased, so is the output (in dimension
    d1*d2) — the quantum side of the MacNeish bound.
    """
    n = min(len(bases1), len(bases2))
    return [
        Basis(np.kron(bases1[t].matrix, bases2[t].matrix)) for t in range(n)
    ]
