"""Sobolev constants for the complex Green's operator on sphere quotients.

For a nonvanishing invariant bidegree (p, q) the relevant constant is
sqrt(1 + mu) / (D q (p + n - 1)) with mu = (p+q)(p+q+2n-2) the
Laplace-Beltrami eigenvalue of degree p+q; the group constant is the
supremum over nonvanishing cells.  The default convention D = 2 makes the
denominator exactly the Kohn Laplacian eigenvalue; D = 4 reproduces the
literal display some references use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .genfun import dim_h0_polynomial, exponent
from .group_catalog import QuotientGroup
from .invariant_dims import dim_invariant

_SLACK = 1e-12


def laplace_eigenvalue(s: int, n: int) -> int:
    """Laplace-Beltrami eigenvalue of spherical harmonics of degree s."""
    return s * (s + 2 * n - 2)


def c_pq(p: int, q: int, n: int, convention: int = 2) -> float:
    """Cell constant sqrt(1 + mu)/(D q (p + n - 1)), q >= 1."""
    if q < 1:
        raise ValueError("q must be at least 1")
    if convention not in (2, 4):
        raise ValueError("convention must be 2 or 4")
    mu = laplace_eigenvalue(p + q, n)
    return math.sqrt(1 + mu) / (convention * q * (p + n - 1))


def c_pq_squared(p: int, q: int, n: int, convention: int = 2) -> Fraction:
    """Exact square of the cell constant, for order comparisons."""
    if q < 1:
        raise ValueError("q must be at least 1")
    mu = laplace_eigenvalue(p + q, n)
    return Fraction(1 + mu, (convention * q * (p + n - 1)) ** 2)


def envelope(s: int, n: int, convention: int = 2) -> float:
    """Largest possible cell constant on the line p + q = s: the denominator
    q(p + n - 1) is concave in q, so its minimum sits at an endpoint."""
    if s < 1:
        raise ValueError("s must be at least 1")
    denom = min(s + n - 2, s * (n - 1))
    return math.sqrt(1 + laplace_eigenvalue(s, n)) / (convention * denom)


@dataclass
class SobolevConstant:
    value: float
    p: int
    q: int
    convention: int
    ceiling: int
    certified: bool
    envelope_at_ceiling: float
    plateau: float          # limit of the envelope: 1/(D(n-1))
    value_squared: Fraction

    def __iter__(self):
        yield from (self.value, (self.p, self.q), self.certified)


def c_group(group: QuotientGroup, ceiling: int, convention: int = 2) -> SobolevConstant:
    """Maximum cell constant over nonvanishing invariant bidegrees with
    p + q <= ceiling, ties broken toward the lexicographically smallest cell.

    Certified means the whole-line envelope at the ceiling already lies below
    the found maximum, so no deeper cell can beat it; when the envelope
    plateau sits above the found maximum the result stays uncertified no
    matter the ceiling.
    """
    if ceiling < 2:
        raise ValueError("ceiling must be at least 2")
    n = group.n
    best: tuple[float, tuple[int, int]] | None = None
    best_sq: Fraction | None = None
    for s in range(1, ceiling + 1):
        for p in range(0, s):
            q = s - p
            if dim_invariant(group, p, q) == 0:
                continue
            sq = c_pq_squared(p, q, n, convention)
            if best_sq is None or sq > best_sq or (sq == best_sq and (p, q) < best[1]):
                best_sq = sq
                best = (c_pq(p, q, n, convention), (p, q))
    if best is None:
        raise ValueError(f"{group.name}: no nonvanishing bidegree with q >= 1 below ceiling {ceiling}")
    value, (p, q) = best
    env = envelope(ceiling, n, convention)
    plateau = 1.0 / (convention * (n - 1))
    certified = env < value - _SLACK
    return SobolevConstant(value, p, q, convention, ceiling, certified, env, plateau, best_sq)


def greens_lower_witness(group: QuotientGroup, m_max: int, convention: int = 2) -> list[tuple[int, float]]:
    """Witness sequence (m, C at bidegree (0, m e)) over the multiples of the
    exponent with nonvanishing invariant dimension; decreases to the plateau
    1/(D(n-1)) from above."""
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    e = exponent(group)
    out = []
    for m in range(1, m_max + 1):
        if dim_h0_polynomial(group, m) >= 1:
            out.append((m, c_pq(0, m * e, group.n, convention)))
    return out
