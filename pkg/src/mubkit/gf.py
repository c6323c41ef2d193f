"""Arithmetic in small finite fields GF(p^r).

Field elements are coefficient tuples ``(c0, ..., c_{r-1})`` with entries in
``{0, ..., p-1}``: the polynomial ``c0 + c1*x + ... + c_{r-1}*x^(r-1)`` taken
modulo a monic irreducible polynomial of degree r.  Throughout the package an
element is identified with the integer ``sum(c_i * p**i)``, i.e. its base-p
digit string read least-significant first.

Only tiny fields are needed (q <= 49 in practice), so everything here favours
exactness and clarity over speed.  Default moduli are fixed for GF(4), GF(8)
and GF(9); any other extension field requires an explicit modulus, which is
validated for irreducibility but never searched for.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

Element = tuple[int, ...]
Basis = tuple[Element, ...]

# Fixed moduli, ascending coefficients (constant term first, monic leading 1):
#   GF(4): x^2 + x + 1,  GF(8): x^3 + x + 1,  GF(9): x^2 + 1
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (1, 0, 1),
}


def is_prime(n: int) -> bool:
    """Trial-division primality test (intended for n <= ~10^6)."""
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization by trial division, as sorted (prime, exponent) pairs."""
    if n < 2:
        raise ValueError(f"cannot factorize {n}: need an integer >= 2")
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            e = 0
            while n % k == 0:
                n //= k
                e += 1
            out.append((k, e))
        k += 1
    if n > 1:
        out.append((n, 1))
    return out


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, r) with n = p**r if n is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    if len(fac) == 1:
        return fac[0]
    return None


# --- polynomial helpers over GF(p), coefficient tuples ascending ------------


def _poly_trim(u):
    i = len(u)
    while i > 0 and u[i - 1] == 0:
        i -= 1
    return tuple(u[:i])


def _poly_mul(u, v, p):
    if not u or not v:
        return ()
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                out[i + j] = (out[i + j] + a * b) % p
    return _poly_trim(out)


def _poly_mod(u, m, p):
    """Remainder of u modulo the monic polynomial m, over GF(p)."""
    u = list(u)
    deg_m = len(m) - 1
    for i in range(len(u) - 1, deg_m - 1, -1):
        c = u[i] % p
        if c:
            for j in range(deg_m + 1):
                u[i - deg_m + j] = (u[i - deg_m + j] - c * m[j]) % p
    return _poly_trim(u[:deg_m])


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Check irreducibility of a monic polynomial by trial division."""
    r = len(m) - 1
    if r < 1:
        return False
    for deg in range(1, r // 2 + 1):
        for tail in itertools.product(range(p), repeat=deg):
            g = tuple(tail) + (1,)  # monic candidate divisor of degree `deg`
            rem = _poly_mod(m, g, p) if deg < r else ()
            if not rem:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(p^r) with a fixed modulus; all arithmetic lives here."""

    p: int
    r: int
    modulus: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.r < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.r}")
        if not self.modulus:
            if self.r == 1:
                object.__setattr__(self, "modulus", (0, 1))
            elif (self.p, self.r) in DEFAULT_MODULI:
                object.__setattr__(self, "modulus", DEFAULT_MODULI[(self.p, self.r)])
            else:
                raise ValueError(
                    f"no default modulus for GF({self.p}^{self.r}); pass one explicitly"
                )
        m = tuple(c % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", m)
        if len(m) != self.r + 1 or m[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {self.r}, got {m}")
        if self.r > 1 and not _is_irreducible(m, self.p):
            raise ValueError(f"modulus {m} is reducible over GF({self.p})")

    @classmethod
    def for_order(cls, q: int, modulus: tuple[int, ...] | None = None) -> "FieldSpec":
        pr = prime_power(q)
        if pr is None:
            raise ValueError(f"{q} is not a prime power")
        return cls(pr[0], pr[1], tuple(modulus) if modulus else ())

    @property
    def order(self) -> int:
        return self.p**self.r

    # --- element encoding ---------------------------------------------------

    def element(self, k: int) -> Element:
        """Field element for integer k in {0,...,q-1} (base-p digits of k)."""
        if not 0 <= k < self.order:
            raise ValueError(f"integer {k} outside field of order {self.order}")
        digits = []
        for _ in range(self.r):
            digits.append(k % self.p)
            k //= self.p
        return tuple(digits)

    def to_int(self, x: Element) -> int:
        self._check(x)
        return sum(c * self.p**i for i, c in enumerate(x))

    def elements(self):
        """All q elements, in integer order."""
        return [self.element(k) for k in range(self.order)]

    @property
    def zero(self) -> Element:
        return (0,) * self.r

    @property
    def one(self) -> Element:
        return (1,) + (0,) * (self.r - 1)

    def _check(self, x: Element):
        if len(x) != self.r or any(not 0 <= c < self.p for c in x):
            raise ValueError(f"{x} is not an element of GF({self.p}^{self.r})")

    # --- arithmetic ----------------------------------------------------------

    def add(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        return tuple((a + b) % self.p for a, b in zip(x, y))

    def neg(self, x: Element) -> Element:
        self._check(x)
        return tuple((-a) % self.p for a in x)

    def sub(self, x: Element, y: Element) -> Element:
        return self.add(x, self.neg(y))

    def mul(self, x: Element, y: Element) -> Element:
        self._check(x)
        self._check(y)
        prod = _poly_mod(_poly_mul(x, y, self.p), self.modulus, self.p)
        return prod + (0,) * (self.r - len(prod))

    def pow(self, x: Element, e: int) -> Element:
        if e < 0:
            return self.pow(self.inv(x), -e)
        out, base = self.one, x
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, x: Element) -> Element:
        """Multiplicative inverse via x^(q-2); raises on zero."""
        self._check(x)
        if x == self.zero:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.pow(x, self.order - 2)

    # --- trace and bases ------------------------------------------------------

    def trace(self, x: Element) -> int:
        """Field trace Tr(x) = sum of x^(p^i), returned as an integer in GF(p)."""
        acc = self.zero
        y = x
        for _ in range(self.r):
            acc = self.add(acc, y)
            y = self.pow(y, self.p)
        if any(acc[1:]):
            raise AssertionError(f"trace of {x} left the prime subfield: {acc}")
        return acc[0]

    def polynomial_basis(self) -> Basis:
        """The basis (1, x, x^2, ..., x^(r-1))."""
        return tuple(
            tuple(1 if j == i else 0 for j in range(self.r)) for i in range(self.r)
        )

    def coords(self, x: Element, basis: Basis) -> tuple[int, ...]:
        """Coordinates of x in the given GF(p)-basis (solves a linear system)."""
        self._check(x)
        cols = [list(b) for b in basis]
        if len(cols) != self.r:
            raise ValueError(f"basis must have {self.r} elements")
        # augmented matrix rows indexed by polynomial coefficient
        mat = [[cols[j][i] for j in range(self.r)] + [x[i]] for i in range(self.r)]
        sol = _solve_mod_p(mat, self.p)
        if sol is None:
            raise ValueError(f"{basis} is not a basis (linearly dependent)")
        return tuple(sol)

    def dual_basis(self, basis: Basis) -> Basis:
        """Trace-dual basis: Tr(e_i * dual_j) = delta_ij.

        Solved coefficient-wise from the Gram matrix Tr(e_i * x^k); inverting it
        also certifies that `basis` really is a basis.
        """
        for b in basis:
            self._check(b)
        if len(basis) != self.r:
            raise ValueError(f"basis must have {self.r} elements")
        mono = self.polynomial_basis()
        gram = [[self.trace(self.mul(e, m)) for m in mono] for e in basis]
        dual = []
        for j in range(self.r):
            rhs = [1 if i == j else 0 for i in range(self.r)]
            aug = [gram[i] + [rhs[i]] for i in range(self.r)]
            sol = _solve_mod_p(aug, self.p)
            if sol is None:
                raise ValueError(f"{basis} is not a basis (trace form singular)")
            dual.append(tuple(sol))
        return tuple(dual)


def _solve_mod_p(aug: list[list[int]], p: int) -> tuple[int, ...] | None:
    """Solve a square linear system from an augmented matrix over GF(p)."""
    n = len(aug)
    m = [[v % p for v in row] for row in aug]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = pow(m[col][col], -1, p)
        m[col] = [(v * inv) % p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))
