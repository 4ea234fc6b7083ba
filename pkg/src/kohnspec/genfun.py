"""Generating-function machinery for invariant dimensions.

The bivariate series F(z, w) = sum dim z^p w^q of invariant dimensions equals
a finite average of rational functions (1 - zw) / (det(z - g) det(w - conj g))
over the group.  Expanding each determinant factor as a product of geometric
series in the eigenvalues gives the coefficients as integer combinations of
roots of unity whose order divides the group exponent e; the combination
collapses exactly to an integer through Galois averaging (Ramanujan sums).
Multiplying the series by (z^e - 1)^n (w^e - 1)^n / (1 - zw) produces an
integer polynomial of degree at most n(e - 1) in each variable, from which a
closed polynomial formula for the dimensions at bidegree (0, m*e) follows.

All series arithmetic runs over exact integers; matrix products use float64
only as an exact container for integers below 2^53 (asserted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonIntegralDimension, TruncationError
from .group_catalog import QuotientGroup

_FLOAT_EXACT_LIMIT = 2.0**52


def exponent(group: QuotientGroup) -> int:
    """Exponent of the group: lcm of element orders, read off the angle
    denominators."""
    return math.lcm(*(a.denominator for c in group.classes for a in c.angles))


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _totient(n: int) -> int:
    out = n
    for p in _factorize(n):
        out = out // p * (p - 1)
    return out


def _mobius(n: int) -> int:
    fac = _factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def _ramanujan_row(E: int) -> np.ndarray:
    """c_E(r) for r = 0..E-1: the trace of the r-th power of a primitive E-th
    root of unity down to the rationals."""
    phi_E = _totient(E)
    row = np.empty(E, dtype=np.int64)
    for r in range(E):
        g = math.gcd(r, E)
        d = E // g
        mu = _mobius(d)
        row[r] = 0 if mu == 0 else mu * (phi_E // _totient(d))
    return row


def _h_vectors(angles_int: list[int], E: int, degree: int) -> np.ndarray:
    """Rows p = 0..degree: the complete homogeneous sum h_p of the roots of
    unity with the given integer angles, as exponent-count vectors mod E."""
    h = np.zeros((degree + 1, E), dtype=np.int64)
    h[0, 0] = 1
    for a in angles_int:
        shift = a % E
        for d in range(1, degree + 1):
            h[d] += np.roll(h[d - 1], shift)
    return h


def _exact_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Integer matrix product through float64 (exact below 2^53, asserted)."""
    prod = a.astype(np.float64) @ b.astype(np.float64)
    if np.abs(prod).max(initial=0.0) >= _FLOAT_EXACT_LIMIT:
        raise OverflowError("generating-function intermediate exceeded exact float range")
    out = np.rint(prod)
    if not np.array_equal(out, prod):
        raise AssertionError("non-integer residue in exact matrix product")
    return out.astype(np.int64)


def fg_coefficients(group: QuotientGroup, ceiling: int) -> np.ndarray:
    """Series coefficients of F(z, w) for p, q <= ceiling, from the
    geometric-series side.  Must equal the character-averaged dimensions."""
    if ceiling < 0:
        raise ValueError("ceiling must be nonnegative")
    cached = group._fg_cache.get("table")
    if cached is not None and cached.shape[0] > ceiling:
        return cached[: ceiling + 1, : ceiling + 1].copy()

    E = exponent(group)
    phi_E = _totient(E)
    ram = _ramanujan_row(E)
    # CE[r1, r2] = c_E(r1 + r2): contracts a product of exponent vectors
    CE = ram[(np.arange(E)[:, None] + np.arange(E)[None, :]) % E]

    total = np.zeros((ceiling + 1, ceiling + 1), dtype=np.int64)
    for cls in group.classes:
        ks = [int(a * E) % E for a in cls.angles]
        A = _h_vectors([(-k) % E for k in ks], E, ceiling)   # h_p of conjugates
        B = _h_vectors(ks, E, ceiling)                        # h_q
        X = _exact_matmul(_exact_matmul(A, CE), B.T)
        X_full = X.copy()
        X_full[1:, 1:] -= X[:-1, :-1]   # harmonic part: minus bidegree (p-1, q-1)
        total += cls.mult * X_full

    denom = phi_E * group.order
    if np.any(total % denom):
        raise NonIntegralDimension(
            f"{group.name}: generating-function coefficients not divisible by {denom}"
        )
    table = total // denom
    if cached is None or table.shape[0] > cached.shape[0]:
        group._fg_cache["table"] = table
    return table.copy()


@dataclass
class PGPolynomial:
    """Integer polynomial P(z, w) with F * (z^e - 1)^n (w^e - 1)^n / (1 - zw)
    = P; degree at most n(e - 1) in each variable."""

    group: QuotientGroup
    e: int
    degree: int
    coeffs: np.ndarray  # shape (degree+1, degree+1), int64

    def c(self, a: int, b: int) -> int:
        if 0 <= a <= self.degree and 0 <= b <= self.degree:
            return int(self.coeffs[a, b])
        return 0


def pg_polynomial(group: QuotientGroup, ceiling: int | None = None) -> PGPolynomial:
    """Compute P by truncated series arithmetic and verify the degree bound:
    any nonzero coefficient beyond n(e - 1) raises TruncationError."""
    default_ceiling = ceiling is None
    if group._pg_cache is not None and default_ceiling:
        return group._pg_cache
    n = group.n
    e = exponent(group)
    degree = n * (e - 1)
    if ceiling is None:
        ceiling = max(2 * n * e, 24)
    ceiling = max(ceiling, degree + n + 1)
    F = fg_coefficients(group, ceiling)
    size = ceiling + 1

    # multiply by (z^e - 1)^n (w^e - 1)^n
    G1 = np.zeros((size, size), dtype=np.int64)
    shifts = [(j, math.comb(n, j) * (-1) ** (n - j)) for j in range(n + 1)]
    for jz, cz in shifts:
        for jw, cw in shifts:
            dz, dw = jz * e, jw * e
            if dz >= size or dw >= size:
                continue
            G1[dz:, dw:] += cz * cw * F[: size - dz, : size - dw]

    # divide by (1 - zw): running sums down the diagonals
    P = G1.copy()
    for a in range(1, size):
        P[a, 1:] += P[a - 1, :-1]

    beyond = P.copy()
    beyond[: degree + 1, : degree + 1] = 0
    if np.any(beyond):
        bad = np.argwhere(beyond)
        raise TruncationError(
            f"{group.name}: nonzero coefficient at {tuple(bad[0])} beyond degree {degree}"
        )
    poly = PGPolynomial(group, e, degree, P[: degree + 1, : degree + 1].copy())
    if poly.c(0, 0) != 1:
        raise NonIntegralDimension(f"{group.name}: P(0,0) = {poly.c(0, 0)}, expected 1")
    if default_ceiling or group._pg_cache is None:
        group._pg_cache = poly
    return poly


def reconstruct_dims(poly: PGPolynomial, ceiling: int) -> np.ndarray:
    """Round trip: recover the F series from P by multiplying back with
    (1 - zw) / ((z^e - 1)^n (w^e - 1)^n).  The two sign flips cancel, leaving
    products of nonnegative binomial series."""
    n = poly.group.n
    e = poly.e
    size = ceiling + 1
    padded = np.zeros((size, size), dtype=np.int64)
    d = min(size, poly.degree + 1)
    padded[:d, :d] = poly.coeffs[:d, :d]
    U = padded.copy()
    U[1:, 1:] -= padded[:-1, :-1]

    F = np.zeros((size, size), dtype=np.int64)
    coeff = [math.comb(k + n - 1, n - 1) for k in range(size // e + 1)]
    for jz, cz in enumerate(coeff):
        for jw, cw in enumerate(coeff):
            dz, dw = jz * e, jw * e
            if dz >= size or dw >= size:
                continue
            F[dz:, dw:] += cz * cw * U[: size - dz, : size - dw]
    return F


def dim_h0_polynomial(group: QuotientGroup, m: int) -> int:
    """Invariant dimension at bidegree (0, m*e) through the polynomial-in-m
    formula read off the c(0, j*e) column of P."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    poly = pg_polynomial(group)
    n = group.n
    e = poly.e
    total = 0
    for j in range(n):
        total += math.comb(m - j + n - 1, n - 1) * poly.c(0, j * e)
    return total
