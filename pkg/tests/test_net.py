import pytest

from mubkit import net
from mubkit.net import (
    NetError,
    design_to_json_dict,
    format_cell,
    net_from_mols,
    representative_cells,
    validate_net,
)
from mubkit.squares import (
    LatinSquare,
    MolsFamily,
    builtin_mols10,
    ff_complete_mols,
    macneish_family,
)

D10_CELL_ROWS = [
    "00 01 02 03 04 05 06 07 08 09",
    "00 10 20 30 40 50 60 70 80 90",
    "00 11 22 33 44 55 66 77 88 99",
    "00 12 24 39 41 58 67 75 83 96",
]


def test_builtin10_representative_cells_exact():
    design = net_from_mols(builtin_mols10())
    cells = representative_cells(design)
    assert [format_cell(c) for c in cells] == D10_CELL_ROWS


def test_builtin10_cross_row_property_fails():
    """The bundled order-10 pair gives partitions whose representative cells
    pairwise meet only at point 0, but the full any-two-cells property does
    not hold for this encoding; validate_net reports the first violation."""
    design = net_from_mols(builtin_mols10())
    report = validate_net(design)
    assert not report
    assert report.witness is not None
    (r1, _), (r2, _) = report.witness
    assert r1 != r2
    assert "share" in report.message


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_ff_designs_are_nets(q):
    design = net_from_mols(ff_complete_mols(q))
    assert len(design.rows) == q + 1
    assert validate_net(design)


def test_macneish_design_is_net():
    fam = macneish_family(ff_complete_mols(3), ff_complete_mols(5))
    design = net_from_mols(fam)
    assert design.order == 15 and len(design.rows) == 4
    assert validate_net(design)


def test_empty_family_rows():
    design = net_from_mols(MolsFamily(2, ()))
    assert len(design.rows) == 2
    assert set(design.rows[0]) == {frozenset({0, 1}), frozenset({2, 3})}
    assert set(design.rows[1]) == {frozenset({0, 2}), frozenset({1, 3})}
    assert validate_net(design)


def test_coinciding_representative_cells_raise():
    # (i + j) and (2i + j) are orthogonal, but both their first rows read
    # 0 1 2, so the two squares contribute the same cell through point 0
    a = LatinSquare.from_grid([[(i + j) % 3 for j in range(3)] for i in range(3)])
    b = LatinSquare.from_grid([[(2 * i + j) % 3 for j in range(3)] for i in range(3)])
    fam = MolsFamily(3, (a, b))
    with pytest.raises(NetError, match="share"):
        net_from_mols(fam)


def test_representative_cells_structure():
    design = net_from_mols(ff_complete_mols(5))
    cells = representative_cells(design)
    for cell in cells:
        assert len(cell) == 5
        assert (cell[0].m, cell[0].n) == (0, 0)  # sorted, so point 0 leads
        assert all(p.d == 5 for p in cell)
    # pairwise intersection is exactly the zero pair
    for i in range(len(cells)):
        for j in range(i + 1, len(cells)):
            common = {(p.m, p.n) for p in cells[i]} & {(p.m, p.n) for p in cells[j]}
            assert common == {(0, 0)}


def test_format_cell_wide_order_uses_commas():
    fam = macneish_family(ff_complete_mols(3), ff_complete_mols(5))
    cells = representative_cells(net_from_mols(fam))
    assert "," in format_cell(cells[0])
    assert format_cell(cells[0]).startswith("0,0")


def test_design_json_shape():
    design = net_from_mols(ff_complete_mols(3))
    doc = design_to_json_dict(design)
    assert set(doc) == {"order", "rows"}
    assert doc["order"] == 3
    assert len(doc["rows"]) == 4
    for row in doc["rows"]:
        assert len(row) == 3
        for cell in row:
            assert cell == sorted(cell)
            assert all(isinstance(p, int) for p in cell)
    # every row lists each point exactly once
    for row in doc["rows"]:
        flat = sorted(p for cell in row for p in cell)
        assert flat == list(range(9))
