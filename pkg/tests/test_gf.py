import itertools

import numpy as np
import pytest

from mubkit import gf
from mubkit.gf import FieldSpec

FIELDS = [FieldSpec.for_order(q) for q in (2, 3, 4, 5, 7, 8, 9)]


# --- integer helpers ----------------------------------------------------------


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}
    for n in range(-3, 31):
        assert gf.is_prime(n) == (n in primes)


@pytest.mark.parametrize(
    "n, factors",
    [
        (2, [(2, 1)]),
        (8, [(2, 3)]),
        (10, [(2, 1), (5, 1)]),
        (35, [(5, 1), (7, 1)]),
        (360, [(2, 3), (3, 2), (5, 1)]),
        (97, [(97, 1)]),
    ],
)
def test_factorize(n, factors):
    assert gf.factorize(n) == factors
    # reconstruction
    prod = 1
    for p, e in factors:
        prod *= p**e
    assert prod == n


@pytest.mark.parametrize(
    "n, expected",
    [(2, (2, 1)), (4, (2, 2)), (8, (2, 3)), (9, (3, 2)), (27, (3, 3)),
     (6, None), (10, None), (12, None), (1, None)],
)
def test_prime_power(n, expected):
    assert gf.prime_power(n) == expected


# --- field axioms ---------------------------------------------------------------


def mult_matrix(fld: FieldSpec, y) -> list[list[int]]:
    """Matrix of multiplication-by-y in the monomial basis (independent of trace)."""
    cols = []
    for e in fld.polynomial_basis():
        cols.append(list(fld.mul(y, e)))
    return [[cols[j][i] for j in range(fld.r)] for i in range(fld.r)]


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f"GF{f.order}")
def test_field_axioms_exhaustive(fld):
    els = fld.elements()
    q = fld.order
    assert len(els) == q
    assert len(set(els)) == q
    for x in els:
        assert fld.add(x, fld.zero) == x
        assert fld.mul(x, fld.one) == x
        assert fld.add(x, fld.neg(x)) == fld.zero
    for x, y in itertools.product(els, repeat=2):
        assert fld.add(x, y) == fld.add(y, x)
        assert fld.mul(x, y) == fld.mul(y, x)
    for x, y, z in itertools.product(els, repeat=3):
        assert fld.mul(x, fld.mul(y, z)) == fld.mul(fld.mul(x, y), z)
        assert fld.mul(x, fld.add(y, z)) == fld.add(fld.mul(x, y), fld.mul(x, z))


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f"GF{f.order}")
def test_inverses(fld):
    for x in fld.elements()[1:]:
        assert fld.mul(x, fld.inv(x)) == fld.one
    with pytest.raises(ZeroDivisionError):
        fld.inv(fld.zero)


def test_gf4_multiplication_table():
    # x * x = x + 1 under the modulus x^2 + x + 1
    f4 = FieldSpec.for_order(4)
    x = f4.element(2)
    assert f4.mul(x, x) == f4.element(3)
    assert f4.mul(f4.element(3), x) == f4.one  # (x+1)*x = x^2+x = 1


def test_gf5_inverse_example():
    f5 = FieldSpec.for_order(5)
    assert f5.inv(f5.element(2)) == f5.element(3)


def test_int_encoding_round_trip():
    for fld in FIELDS:
        for k in range(fld.order):
            assert fld.to_int(fld.element(k)) == k
    f9 = FieldSpec.for_order(9)
    assert f9.element(5) == (2, 1)  # 5 = 2 + 1*3


# --- trace ------------------------------------------------------------------------


@pytest.mark.parametrize("fld", FIELDS, ids=lambda f: f"GF{f.order}")
def test_trace_matches_multiplication_matrix_trace(fld):
    """Field trace equals the trace of the multiplication-by-y matrix mod p."""
    for y in fld.elements():
        mat = mult_matrix(fld, y)
        expected = sum(mat[i][i] for i in range(fld.r)) % fld.p
        assert fld.trace(y) == expected


def test_trace_gf4_values():
    f4 = FieldSpec.for_order(4)
    assert [f4.trace(f4.element(k)) for k in range(4)] == [0, 0, 1, 1]


def test_trace_is_additive():
    f8 = FieldSpec.for_order(8)
    for x, y in itertools.product(f8.elements(), repeat=2):
        assert f8.trace(f8.add(x, y)) == (f8.trace(x) + f8.trace(y)) % 2


# --- bases and duals -----------------------------------------------------------


def test_coords_round_trip():
    f9 = FieldSpec.for_order(9)
    basis = (f9.element(1), f9.element(3))  # (1, x)
    for k in range(9):
        x = f9.element(k)
        c = f9.coords(x, basis)
        acc = f9.zero
        for ci, e in zip(c, basis):
            scaled = f9.mul(f9.element(ci), e)
            acc = f9.add(acc, scaled)
        assert acc == x


@pytest.mark.parametrize("q", [4, 8, 9])
def test_dual_basis_is_trace_dual(q):
    fld = FieldSpec.for_order(q)
    basis = fld.polynomial_basis()
    dual = fld.dual_basis(basis)
    for i, e in enumerate(basis):
        for j, f in enumerate(dual):
            assert fld.trace(fld.mul(e, f)) == (1 if i == j else 0)


def test_dual_basis_known_values():
    f4 = FieldSpec.for_order(4)
    # dual of (1, x) is (x+1, 1)
    assert f4.dual_basis(f4.polynomial_basis()) == ((1, 1), (1, 0))
    f9 = FieldSpec.for_order(9)
    # dual of (1, x) is (2, x) under the modulus x^2 + 1
    assert f9.dual_basis(f9.polynomial_basis()) == ((2, 0), (0, 1))


def test_dual_of_dual_is_original():
    for q in (4, 8, 9):
        fld = FieldSpec.for_order(q)
        b = fld.polynomial_basis()
        assert fld.dual_basis(fld.dual_basis(b)) == b


def test_dependent_set_rejected():
    f4 = FieldSpec.for_order(4)
    with pytest.raises(ValueError):
        f4.dual_basis((f4.element(2), f4.element(2)))
    with pytest.raises(ValueError):
        f4.coords(f4.one, (f4.element(1), f4.element(1)))


# --- construction errors -----------------------------------------------------


def test_bad_fields():
    with pytest.raises(ValueError):
        FieldSpec(4, 1)  # characteristic not prime
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2+1 = (x+1)^2 over GF(2)
    with pytest.raises(ValueError):
        FieldSpec.for_order(6)
    with pytest.raises(ValueError):
        FieldSpec.for_order(25)  # no default modulus for GF(25)
    with pytest.raises(ValueError):
        FieldSpec(2, 3, (1, 1, 1))  # wrong degree


def test_explicit_modulus_field():
    # GF(25) with x^2 + 2 (3 is a non-square mod 5)
    f25 = FieldSpec.for_order(25, (2, 0, 1))
    assert f25.order == 25
    x = f25.element(5)
    assert f25.mul(x, x) == f25.element(3)  # x^2 = -2 = 3
    for k in range(1, 25):
        e = f25.element(k)
        assert f25.mul(e, f25.inv(e)) == f25.one


def test_element_range_checks():
    f4 = FieldSpec.for_order(4)
    with pytest.raises(ValueError):
        f4.element(4)
    with pytest.raises(ValueError):
        f4.element(-1)
    with pytest.raises(ValueError):
        f4.add((0, 0, 0), f4.one)  # wrong length
