"""End-to-end acceptance checks, one per headline result.

Each test prints a single PASS line with the observed numbers; the suite as
a whole is the reproduction gate for the package.  One check
(test_criterion_11d_klein_degenerate) asserts an expectation that is
mathematically unattainable and is expected to fail; its docstring and the
neighbouring tests in test_spectra.py document the actual behaviour.
"""

import itertools
import time

import numpy as np
import pytest

from mubkit import mub, squares, weyl
from mubkit.gf import FieldSpec
from mubkit.mub import PrimePowerDecomposition, design_mubs, is_unbiased, ws_mub_number
from mubkit.net import net_from_mols, representative_cells, format_cell
from mubkit.spectra import (
    Degenerate,
    common_eigenbasis,
    lemma_verify,
    permutation_T,
    weyl_matrix,
)
from mubkit.squares import (
    LatinSquare,
    MolsFamily,
    are_orthogonal,
    builtin_mols10,
    ff_complete_mols,
    macneish_family,
    validate_latin,
)
from mubkit.weyl import ExponentPair, crt_split, enumerate_classes, symplectic

D10_TABLE = [
    "00 01 02 03 04 05 06 07 08 09",
    "00 10 20 30 40 50 60 70 80 90",
    "00 11 22 33 44 55 66 77 88 99",
    "00 12 24 39 41 58 67 75 83 96",
]


def test_criterion_1_builtin_squares_latin_and_orthogonal():
    fam = builtin_mols10()
    for s in fam:
        assert validate_latin(s.grid).valid
    rep = are_orthogonal(fam.squares[0], fam.squares[1])
    assert rep.orthogonal
    print("criterion 1: PASS - order-10 pair is Latin and orthogonal (exact)")


def test_criterion_2_design_rows_match_reference_table():
    cells = representative_cells(net_from_mols(builtin_mols10()))
    rendered = [format_cell(c) for c in cells]
    assert rendered == D10_TABLE
    print("criterion 2: PASS - representative cells reproduce the d=10 table")


def test_criterion_3_commutation_verdicts():
    cells = representative_cells(net_from_mols(builtin_mols10()))
    verdicts = [weyl.cell_commutes(c) for c in cells]
    assert [bool(v) for v in verdicts] == [True, True, True, False]
    pair_a, pair_b = ExponentPair(2, 4, 10), ExponentPair(3, 9, 10)
    labels = {(p.m, p.n) for p in cells[3]}
    assert {(2, 4), (3, 9)} <= labels
    assert symplectic(pair_a, pair_b) == 6
    print("criterion 3: PASS - rows 0-2 commute, row 3 fails; (2,4)x(3,9) -> 6")


def _subgroup_count_oracle(d):
    found = set()
    pts = [(m, n) for m in range(d) for n in range(d)]
    for g1, g2 in itertools.combinations_with_replacement(pts, 2):
        elems = {(0, 0)}
        frontier = [g1, g2]
        while frontier:
            e = frontier.pop()
            if e in elems:
                continue
            elems.add(e)
            if len(elems) > d:
                break
            for f in list(elems):
                frontier.append(((e[0] + f[0]) % d, (e[1] + f[1]) % d))
        if len(elems) == d:
            found.add(frozenset(elems))
    return len(found)


def test_criterion_4_d10_class_search():
    t0 = time.perf_counter()
    rep = ws_mub_number(10)
    elapsed = time.perf_counter() - t0
    assert rep.n_bases == 18
    assert _subgroup_count_oracle(10) == 18
    assert rep.clique_size == 3
    assert elapsed < 60
    print(f"criterion 4: PASS - 3 of 18 classes at d=10 in {elapsed:.1f}s")


def test_criterion_5_d35_class_search():
    t0 = time.perf_counter()
    rep = ws_mub_number(35)
    elapsed = time.perf_counter() - t0
    assert rep.n_bases == 48
    assert rep.clique_size == 6
    assert elapsed < 600
    print(f"criterion 5: PASS - 6 of 48 classes at d=35 in {elapsed:.1f}s")


def test_criterion_6_complete_sets():
    results = {}
    for d in (2, 3, 5, 7):
        rep = design_mubs(ff_complete_mols(d))
        assert rep.clique_size == d + 1
        assert rep.worst_deviation < 1e-8
        results[d] = rep.clique_size
    for d in (4, 8, 9):
        rep = design_mubs(
            ff_complete_mols(d),
            decomposition=PrimePowerDecomposition(FieldSpec.for_order(d)),
        )
        assert rep.clique_size == d + 1
        assert rep.worst_deviation < 1e-8
        results[d] = rep.clique_size
    print(f"criterion 6: PASS - complete sets {results}")


def test_criterion_7_dimension_six():
    fam = MolsFamily(6, (LatinSquare.cyclic(6),))
    rep = design_mubs(fam)
    assert rep.n_bases == 3 and rep.clique_size == 3
    cls_rep = ws_mub_number(6)
    assert cls_rep.clique_size == 3
    print("criterion 7: PASS - 3 pairwise unbiased bases at d=6, both pipelines")


def test_criterion_8_permutation_lemma():
    for d1, d2 in [(2, 5), (3, 5), (2, 7), (3, 4)]:
        rep = lemma_verify(d1, d2)
        assert rep.passed
        assert max(rep.x_deviation, rep.z_deviation) < 1e-12
    with pytest.raises(ValueError):
        lemma_verify(2, 4)
    print("criterion 8: PASS - splitting identity holds for all coprime cases")


def test_criterion_9_crt_split_matches_conjugation():
    t = permutation_T(2, 5)
    worst = 0.0
    for m in range(10):
        for n in range(10):
            pair = ExponentPair(m, n, 10)
            left = t @ weyl_matrix(pair) @ t.T
            p1, p2 = crt_split(pair, 2, 5)
            right = np.kron(weyl_matrix(p1), weyl_matrix(p2))
            idx = np.unravel_index(np.argmax(np.abs(right)), right.shape)
            phase = left[idx] / right[idx]
            phase /= abs(phase)
            worst = max(worst, float(np.abs(left - phase * right).max()))
    assert worst < 1e-9
    print(f"criterion 9: PASS - all 100 labels split exactly (worst {worst:.1e})")


def test_criterion_10_product_constructions():
    # every buildable product of order <= 9 stays Latin; the one two-square
    # case, 3 x 3, stays pairwise orthogonal
    for a, c in [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)]:
        prod = squares.macneish_product(LatinSquare.cyclic(a), LatinSquare.cyclic(c))
        assert validate_latin(prod.grid).valid
    fam9 = macneish_family(ff_complete_mols(3), ff_complete_mols(3))
    assert are_orthogonal(fam9.squares[0], fam9.squares[1]).orthogonal

    b2, b3, b5 = ws_mub_number(2), ws_mub_number(3), ws_mub_number(5)
    for factor, dim in ((b3, 6), (b5, 10)):
        out = mub.tensor_mub(
            [b2.bases[v] for v in b2.clique_vertices],
            [factor.bases[v] for v in factor.clique_vertices],
        )
        assert len(out) == 3
        for x, y in itertools.combinations(out, 2):
            ok, _ = is_unbiased(x, y)
            assert ok and x.dimension == dim
    print("criterion 10: PASS - products stay orthogonal, tensor sets stay unbiased")


def test_criterion_11a_symplectic_properties():
    for d in range(2, 11):
        vals = np.arange(d)
        m, n = [a.ravel() for a in np.meshgrid(vals, vals, indexing="ij")]
        s = (np.outer(m, n) - np.outer(n, m)) % d
        assert np.array_equal(s, (-s.T) % d)
        msum = (m[:, None, None] + m[None, :, None]) % d
        nsum = (n[:, None, None] + n[None, :, None]) % d
        left = (msum * n[None, None, :] - nsum * m[None, None, :]) % d
        right = (s[:, None, :] + s[None, :, :]) % d
        assert np.array_equal(left, right)
    print("criterion 11a: PASS - symplectic antisymmetry/bilinearity, d <= 10")


def test_criterion_11b_trace_orthogonality():
    worst = 0.0
    for d in range(2, 7):
        ws = [
            weyl_matrix(ExponentPair(m, n, d)) for m in range(d) for n in range(d)
        ]
        stack = np.stack(ws)
        gram = np.einsum("aij,bij->ab", stack.conj(), stack)
        worst = max(worst, float(np.abs(gram - d * np.eye(d * d)).max()))
    assert worst < 1e-10
    print(f"criterion 11b: PASS - trace orthogonality, worst {worst:.1e}")


def test_criterion_11c_eigenresiduals_on_all_bases():
    worst = 0.0
    for d in (6, 10):
        for cls in enumerate_classes(d):
            basis = common_eigenbasis(cls)
            v = basis.matrix
            for p in cls.pairs():
                if (p.m, p.n) == (0, 0):
                    continue
                u = weyl_matrix(p)
                lam = np.einsum("ij,ij->j", v.conj(), u @ v)
                worst = max(worst, float(np.abs(u @ v - v * lam).max()))
    assert worst < 1e-9
    print(f"criterion 11c: PASS - eigenresiduals on every basis, worst {worst:.1e}")


def test_criterion_11d_klein_degenerate():
    """Expects Degenerate for the d=4 class {(0,0),(2,0),(0,2),(2,2)}.

    This check fails by design: no commuting class of this kind can be
    degenerate.  All members except the identity are traceless, so each of
    the d characters of the class occurs in the joint spectrum with
    multiplicity exactly one and the common eigenbasis is unique.
    test_spectra.py::test_klein_class_is_nondegenerate verifies the actual
    behaviour (four distinct eigenvalue tuples, rank-one joint projectors).
    """
    klein = weyl.CommutingClass(4, ((0, 0), (2, 0), (0, 2), (2, 2)))
    with pytest.raises(Degenerate):
        common_eigenbasis(klein)
    print("criterion 11d: PASS - Klein class reported degenerate")
