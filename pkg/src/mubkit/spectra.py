"""Dense matrices for the shift/clock operators and their joint eigenbases.

Conventions (eta = exp(2*pi*i/d)):

    Z |k> = eta^k |k>          clock, build_z
    X |k> = |k+1 mod d>        shift, build_x
    W(m, n) = X^m Z^n          weyl_matrix — no extra phase factor

so Z X = eta X Z and two labels commute exactly when their symplectic form
vanishes.  Joint eigenbases of commuting classes are computed by diagonalizing
a random Hermitian combination of the class operators with a cyclic complex
Jacobi sweep, then verifying every class operator against every eigenvector;
numerical shortcuts are never trusted without that verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .weyl import CommutingClass, ExponentPair, TensorLabel

MAX_MATRIX_DIM = 49
STRUCTURE_TOL = 1e-12  # exact combinatorial/permutation identities
UNITARY_TOL = 1e-10  # unitarity, Gram matrices, eigensystem residuals
VECTOR_TOL = 1e-9  # per-eigenvector verification against class operators
_JACOBI_TOL = 1e-12
_JACOBI_MAX_SWEEPS = 100
_COLLISION_TOL = 1e-4  # eigenvalue tuples closer than this count as colliding
_MAX_REDRAWS = 5


class Degenerate(Exception):
    """A joint eigenspace has dimension > 1: no unique common eigenbasis."""


class ResidualFailure(Exception):
    """Verification tolerance exceeded after retries."""


def build_z(d: int) -> np.ndarray:
    _check_dim(d)
    return np.diag(np.exp(2j * np.pi * np.arange(d) / d))


def build_x(d: int) -> np.ndarray:
    _check_dim(d)
    return np.roll(np.eye(d, dtype=complex), 1, axis=0)


def _check_dim(d: int):
    if not 1 <= d <= MAX_MATRIX_DIM:
        raise ValueError(f"dimension {d} outside supported range 1..{MAX_MATRIX_DIM}")


def weyl_matrix(pair: ExponentPair) -> np.ndarray:
    """X^m Z^n as a dense array: entry (k+m mod d, k) is eta^(n k)."""
    _check_dim(pair.d)
    d = pair.d
    phases = np.exp(2j * np.pi * (pair.n % d) * np.arange(d) / d)
    return np.roll(np.diag(phases), pair.m % d, axis=0)


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def tensor_weyl(label: TensorLabel) -> np.ndarray:
    """Tensor product of the factor operators, first factor most significant."""
    out = np.array([[1.0 + 0j]])
    for p, m, n in label.factors:
        out = np.kron(out, weyl_matrix(ExponentPair(m % p, n % p, p)))
    return out


def permutation_T(d1: int, d2: int) -> np.ndarray:
    """CRT permutation T|j> = |(j mod d1) d2 + (j mod d2)> for coprime d1, d2."""
    import math

    if d1 < 1 or d2 < 1 or math.gcd(d1, d2) != 1:
        raise ValueError(f"factors {d1}, {d2} must be positive and coprime")
    d = d1 * d2
    t = np.zeros((d, d))
    for j in range(d):
        t[(j % d1) * d2 + (j % d2), j] = 1.0
    return t


@dataclass(frozen=True)
class LemmaReport:
    d1: int
    d2: int
    x_deviation: float
    z_deviation: float
    passed: bool


def lemma_verify(d1: int, d2: int, tol: float = STRUCTURE_TOL) -> LemmaReport:
    """Check T X_d T^-1 = X_d1 (x) X_d2 and T Z_d^(d1+d2) T^-1 = Z_d1 (x) Z_d2."""
    t = permutation_T(d1, d2)
    d = d1 * d2
    x = build_x(d)
    z = build_z(d)
    zpow = np.linalg.matrix_power(z, d1 + d2)
    x_dev = float(np.abs(t @ x @ t.T - np.kron(build_x(d1), build_x(d2))).max())
    z_dev = float(np.abs(t @ zpow @ t.T - np.kron(build_z(d1), build_z(d2))).max())
    return LemmaReport(d1, d2, x_dev, z_dev, x_dev < tol and z_dev < tol)


# --- bases ---------------------------------------------------------------------


@dataclass(frozen=True)
class Basis:
    """Orthonormal basis, one state per column."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", m)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"basis matrix must be square, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("basis matrix has non-finite entries")
        gram = m.conj().T @ m
        dev = np.abs(gram - np.eye(m.shape[0])).max()
        if dev > UNITARY_TOL:
            raise ValueError(f"columns not orthonormal: Gram deviation {dev:.3e}")

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def column(self, j: int) -> np.ndarray:
        return self.matrix[:, j]


def basis_to_json(basis: Basis) -> list:
    """Row-major nested lists of [re, im] pairs."""
    return [
        [[float(v.real), float(v.imag)] for v in row] for row in basis.matrix
    ]


# --- complex Hermitian Jacobi -----------------------------------------------


def hermitian_eigensystem(h: np.ndarray) -> tuple[np.ndarray, Basis]:
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix.

    Cyclic complex Jacobi sweeps; converged when the largest off-diagonal
    modulus drops below 1e-12, capped at 100 sweeps.  The result satisfies
    max |H v - lambda v| < 1e-10 for matrices of moderate norm.
    """
    h = np.asarray(h, dtype=complex)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"matrix must be square, got {h.shape}")
    if np.abs(h - h.conj().T).max() > UNITARY_TOL:
        raise ValueError("matrix is not Hermitian")
    vals, vecs = _jacobi(h.copy())
    order = np.argsort(vals)
    return vals[order], Basis(vecs[:, order])


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if n == 1:
        return a.real.diagonal().copy(), v
    for _ in range(_JACOBI_MAX_SWEEPS):
        off = np.abs(a - np.diag(a.diagonal())).max()
        if off < _JACOBI_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-15:
                    continue
                phase = apq / abs(apq)
                tau = (a[p, p].real - a[q, q].real) / (2.0 * abs(apq))
                if tau >= 0:
                    t = 1.0 / (tau + np.sqrt(tau * tau + 1.0))
                else:
                    t = -1.0 / (-tau + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^H A J with J = I except J[pp]=c, J[pq]=-s*phase,
                # J[qp]=s*conj(phase), J[qq]=c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(phase) * col_q
                a[:, q] = -s * phase * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * phase * row_q
                a[q, :] = -s * np.conj(phase) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp + s * np.conj(phase) * vq
                v[:, q] = -s * phase * vp + c * vq
    else:
        raise ResidualFailure(
            f"Jacobi did not converge in {_JACOBI_MAX_SWEEPS} sweeps"
        )
    return a.diagonal().real.copy(), v


# --- joint eigenbases -----------------------------------------------------------


def joint_eigenbasis(
    ops: Sequence[np.ndarray],
    stream_key: Sequence[int],
    seed: int = 0,
) -> Basis:
    """Common eigenbasis of a family of commuting unitaries.

    Draws pseudorandom complex coefficients c_k (stream determined by
    ``(seed, *stream_key)``), diagonalizes H = sum_k c_k U_k + conj(c_k) U_k^H,
    then verifies each eigenvector against every operator (residual < 1e-9)
    and checks the eigenvalue tuples are pairwise distinct.  Unlucky
    coefficient collisions are redrawn up to 5 times; a persistent collision
    with clean residuals means the family genuinely has a joint eigenspace of
    dimension > 1, reported as Degenerate.
    """
    ops = [np.asarray(u, dtype=complex) for u in ops]
    if not ops:
        raise ValueError("need at least one operator")
    d = ops[0].shape[0]
    for u in ops:
        if u.shape != (d, d):
            raise ValueError("operators must share one square shape")
    rng = np.random.default_rng(
        [seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF, *[k & 0xFFFFFFFF for k in stream_key]]
    )
    degenerate_seen = False
    last_residual = None
    for _ in range(_MAX_REDRAWS):
        coeff = rng.standard_normal(len(ops)) + 1j * rng.standard_normal(len(ops))
        h = np.zeros((d, d), dtype=complex)
        for ck, u in zip(coeff, ops):
            h += ck * u + np.conj(ck) * u.conj().T
        _, basis = hermitian_eigensystem(h)
        vecs = basis.matrix
        lambdas = np.empty((len(ops), d), dtype=complex)
        residual = 0.0
        for k, u in enumerate(ops):
            w = u @ vecs
            lambdas[k] = np.einsum("ij,ij->j", vecs.conj(), w)
            residual = max(residual, float(np.abs(w - vecs * lambdas[k]).max()))
        if residual > VECTOR_TOL:
            last_residual = residual
            continue
        collision = False
        for i in range(d):
            for j in range(i + 1, d):
                if np.abs(lambdas[:, i] - lambdas[:, j]).max() < _COLLISION_TOL:
                    collision = True
                    break
            if collision:
                break
        if collision:
            degenerate_seen = True
            continue
        return _canonicalize(vecs, lambdas)
    if degenerate_seen:
        raise Degenerate(
            "operators share an eigenspace of dimension > 1 "
            f"(collisions persisted through {_MAX_REDRAWS} coefficient draws)"
        )
    raise ResidualFailure(
        f"eigenvector residual {last_residual:.3e} exceeded {VECTOR_TOL} "
        f"after {_MAX_REDRAWS} draws"
    )


def _canonicalize(vecs: np.ndarray, lambdas: np.ndarray) -> Basis:
    """Sort columns by eigenvalue-angle tuples and fix each column's phase."""
    d = vecs.shape[0]
    keys = []
    for j in range(d):
        keys.append(tuple(np.round(np.angle(lambdas[:, j]), 6)))
    order = sorted(range(d), key=lambda j: keys[j])
    out = vecs[:, order].copy()
    for j in range(d):
        col = out[:, j]
        mags = np.abs(col)
        anchor = int(np.argmax(mags > mags.max() - 1e-9))
        ph = col[anchor] / abs(col[anchor])
        out[:, j] = col * np.conj(ph)
    return Basis(out)


def common_eigenbasis(cls: CommutingClass, seed: int = 0) -> Basis:
    """Joint eigenbasis of a commuting class (identity label excluded)."""
    ops = [
        weyl_matrix(p) for p in cls.pairs() if (p.m, p.n) != (0, 0)
    ]
    key = [1, cls.dimension] + [v for mn in cls.elements for v in mn]
    return joint_eigenbasis(ops, key, seed=seed)
