"""Eigenvalue multiplicities, counting functions, and Weyl-law verification.

The positive spectrum on a quotient consists of the eigenvalues 2q(p + n - 1)
for q >= 1, each with multiplicity the sum of the invariant dimensions of the
contributing bidegree spaces.  The counting function N(lam) is compared
against the sphere count divided by the group order, with the exact
binomial-sum tail bound, and against the quadrature value of the Weyl
constant.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import quad as _adaptive_quad

from .characters import sphere_dim
from .group_catalog import QuotientGroup
from .invariant_dims import dim_invariant


def box_eigenvalue(p: int, q: int, n: int) -> int:
    """Eigenvalue of the bidegree-(p, q) harmonic space, 2q(p + n - 1)."""
    return 2 * q * (p + n - 1)


def eigenvalue_bidegrees(lam: int, n: int) -> list[tuple[int, int]]:
    """All (p, q), q >= 1, with 2q(p + n - 1) = lam, ordered by ascending q.

    Empty for odd or non-realizable lam."""
    if lam <= 0 or lam % 2 != 0:
        return []
    half = lam // 2
    out = []
    q = 1
    while q * (n - 1) <= half:
        if half % q == 0:
            p = half // q - (n - 1)
            if p >= 0:
                out.append((p, q))
        q += 1
    return out


def multiplicity(group: QuotientGroup, lam: int) -> tuple[int, list[tuple[int, int]]]:
    """Multiplicity of lam in the positive spectrum, with the sphere-level
    contributor list.  Zero (with no contributors) for odd or unrealizable lam."""
    contributors = eigenvalue_bidegrees(lam, group.n)
    total = sum(dim_invariant(group, p, q) for p, q in contributors)
    return total, contributors


@dataclass
class SpectrumEntry:
    eigenvalue: int
    mult: int
    contributors: list[tuple[int, int]]


@dataclass
class SpectrumTable:
    """Sorted positive spectrum up to a cutoff, with cumulative counts.

    Entries with multiplicity zero are kept whenever the sphere has a
    contributing bidegree space: explicit zeros matter for comparisons.
    A ``group`` of None marks the sphere's own table.
    """

    group: QuotientGroup | None
    lambda_max: int
    entries: list[SpectrumEntry]

    def __post_init__(self):
        self._eigenvalues = [e.eigenvalue for e in self.entries]
        self._cumulative = []
        total = 0
        for e in self.entries:
            total += e.mult
            self._cumulative.append(total)

    def count(self, lam: float) -> int:
        """N(lam): number of positive eigenvalues <= lam, with multiplicity."""
        i = bisect_right(self._eigenvalues, lam)
        return self._cumulative[i - 1] if i else 0


def counting_function(group: QuotientGroup, lambda_max: int) -> SpectrumTable:
    """Assemble the spectrum table for all eigenvalues <= lambda_max."""
    n = group.n
    half_max = int(lambda_max) // 2
    buckets: dict[int, int] = {}
    contribs: dict[int, list[tuple[int, int]]] = {}
    for q in range(1, half_max // (n - 1) + 1):
        p = 0
        while q * (p + n - 1) <= half_max:
            half = q * (p + n - 1)
            buckets[half] = buckets.get(half, 0) + dim_invariant(group, p, q)
            contribs.setdefault(half, []).append((p, q))
            p += 1
    entries = [
        SpectrumEntry(2 * h, buckets[h], sorted(contribs[h], key=lambda pq: pq[1]))
        for h in sorted(buckets)
    ]
    return SpectrumTable(group, int(lambda_max), entries)


def invariant_count_direct(group: QuotientGroup, half_cutoff: int) -> int:
    """Independent double-loop evaluation of the dimension of the span of all
    invariant bidegree spaces with 0 < q(p + n - 1) <= half_cutoff.

    Equals counting_function(group, 2*half_cutoff).count(2*half_cutoff); used
    as a cross-check of the bucketed enumeration."""
    n = group.n
    total = 0
    p = 0
    while (p + n - 1) <= half_cutoff:
        for q in range(1, half_cutoff // (p + n - 1) + 1):
            total += dim_invariant(group, p, q)
        p += 1
    return total


def sphere_counting_table(n: int, lambda_max: int) -> SpectrumTable:
    """Spectrum table of the sphere itself (trivial group path not needed:
    dimensions are the closed-form sphere dimensions)."""
    half_max = int(lambda_max) // 2
    buckets: dict[int, int] = {}
    contribs: dict[int, list[tuple[int, int]]] = {}
    for q in range(1, half_max // (n - 1) + 1):
        p = 0
        while q * (p + n - 1) <= half_max:
            half = q * (p + n - 1)
            buckets[half] = buckets.get(half, 0) + sphere_dim(p, q, n)
            contribs.setdefault(half, []).append((p, q))
            p += 1
    entries = [
        SpectrumEntry(2 * h, buckets[h], sorted(contribs[h], key=lambda pq: pq[1]))
        for h in sorted(buckets)
    ]
    return SpectrumTable(None, int(lambda_max), entries)


# ---------------------------------------------------------------------------
# Exact tail bound


def _as_fraction(lam) -> Fraction:
    # Fraction(float) is the exact binary value, so floors stay exact
    return lam if isinstance(lam, Fraction) else Fraction(lam)


def xi_bound(lam, n: int) -> int:
    """Exact big-integer tail bound controlling |N_G - N_S/|G|| at cutoff 2*lam.

    Both index ranges empty gives 0 (the bound is only used asymptotically).
    """
    lam = _as_fraction(lam)
    if n < 2:
        raise ValueError("ambient dimension must be at least 2")
    total = 0
    k_top = math.floor(lam) - n + 1
    for k in range(0, k_top + 1):
        inner = math.floor(lam / (k + n - 1))
        total += math.comb(k + n - 2, n - 2) * math.comb(inner + n - 2, n - 1)
    k_top2 = math.floor(lam / (n - 1))
    for k in range(1, k_top2 + 1):
        inner = math.floor(lam / k)
        total += math.comb(k + n - 2, n - 2) * math.comb(inner, n - 1)
    return total


def tail_bound_holds(group: QuotientGroup, half_cutoff: int,
                     n_quotient: int, n_sphere: int) -> bool:
    """Exact integer check of |N_G(2 lam) - N_S(2 lam)/|G|| <= (|G|-1) Xi_lam."""
    g = group.order
    return abs(g * n_quotient - n_sphere) <= g * (g - 1) * xi_bound(half_cutoff, group.n)


# ---------------------------------------------------------------------------
# Weyl constant and report


def sphere_volume(n: int) -> float:
    """Volume of the unit sphere in C^n (real dimension 2n - 1)."""
    return 2 * math.pi**n / math.factorial(n - 1)


def _weyl_integrand(tau: float, n: int) -> float:
    if tau == 0.0:
        return 1.0
    return (tau / math.sinh(tau)) ** n * math.exp(-(n - 2) * tau)


def weyl_integral(n: int, scheme: str = "adaptive") -> float:
    """The convergence-factor integral over the real line, by one of two
    independent quadratures ('adaptive' Gauss-Kronrod or composite
    fixed-order 'legendre').  Integrand decays like |tau|^n e^{-2|tau|}."""
    T = 60.0
    if scheme == "adaptive":
        left, _ = _adaptive_quad(_weyl_integrand, -T, 0.0, args=(n,), epsabs=1e-13, epsrel=1e-13, limit=400)
        right, _ = _adaptive_quad(_weyl_integrand, 0.0, T, args=(n,), epsabs=1e-13, epsrel=1e-13, limit=400)
        return left + right
    if scheme == "legendre":
        nodes, weights = np.polynomial.legendre.leggauss(40)
        total = 0.0
        for k in range(-int(T), int(T)):
            mid = k + 0.5
            x = mid + 0.5 * nodes
            vals = [_weyl_integrand(float(t), n) for t in x]
            total += 0.5 * float(np.dot(weights, vals))
        return total
    raise ValueError(f"unknown quadrature scheme {scheme!r}")


def weyl_constant(n: int, scheme: str = "adaptive") -> float:
    """Constant C with N(lam)/lam^n -> C * Vol(quotient)."""
    return (n - 1) / (n * (2 * math.pi) ** n * math.factorial(n)) * weyl_integral(n, scheme)


@dataclass
class WeylReport:
    group: QuotientGroup
    grid: list[int]
    n_quotient: list[int]
    n_sphere: list[int]
    ratios: list[float]
    xi: list[int]
    bound_ok: list[bool]
    weyl_constant: float
    expected_limit: float      # C * Vol(sphere) / |G|
    empirical_limit: float     # N(lam_max) / lam_max^n
    richardson_limit: float    # two-point fit assuming an O(1/lam) error term


def weyl_report(group: QuotientGroup, grid) -> WeylReport:
    """Counting-function comparison against the sphere over an ascending grid
    of eigenvalue cutoffs."""
    grid = [int(x) for x in grid]
    if grid != sorted(grid):
        raise ValueError("grid must be ascending")
    n = group.n
    lam_max = grid[-1]
    table = counting_function(group, lam_max)
    sphere = sphere_counting_table(n, lam_max)
    n_quot = [table.count(lam) for lam in grid]
    n_sph = [sphere.count(lam) for lam in grid]
    ratios = [ns / ng if ng else math.inf for ns, ng in zip(n_sph, n_quot)]
    xi = [xi_bound(Fraction(lam, 2), n) for lam in grid]
    ok = [
        tail_bound_holds(group, Fraction(lam, 2), ng, ns)
        for lam, ng, ns in zip(grid, n_quot, n_sph)
    ]
    const = weyl_constant(n)
    expected = const * sphere_volume(n) / group.order
    empirical = n_quot[-1] / lam_max**n
    if len(grid) >= 2 and grid[-2] != lam_max:
        l1, l2 = grid[-2], grid[-1]
        v1 = n_quot[-2] / l1**n
        v2 = n_quot[-1] / l2**n
        richardson = (v2 * l2 - v1 * l1) / (l2 - l1)
    else:
        richardson = empirical
    return WeylReport(group, grid, n_quot, n_sph, ratios, xi, ok, const, expected, empirical, richardson)


# ---------------------------------------------------------------------------
# Isospectrality comparison


@dataclass
class SpectrumComparison:
    group_a: QuotientGroup
    group_b: QuotientGroup
    lambda_max: int
    eigenvalue: int | None     # least distinguishing eigenvalue, None if isospectral
    mult_a: int | None
    mult_b: int | None

    @property
    def isospectral(self) -> bool:
        return self.eigenvalue is None


def compare_spectra(a: QuotientGroup, b: QuotientGroup, lambda_max: int) -> SpectrumComparison:
    """Least eigenvalue <= lambda_max whose multiplicities differ, scanning
    realized eigenvalues only."""
    if a.n != b.n:
        raise ValueError("groups must act on the same sphere")
    n = a.n
    half_max = int(lambda_max) // 2
    realized = sorted(
        {q * (p + n - 1) for q in range(1, half_max // (n - 1) + 1)
         for p in range(0, half_max // q - (n - 1) + 1)
         if q * (p + n - 1) <= half_max}
    )
    for half in realized:
        lam = 2 * half
        ma, _ = multiplicity(a, lam)
        mb, _ = multiplicity(b, lam)
        if ma != mb:
            return SpectrumComparison(a, b, int(lambda_max), lam, ma, mb)
    return SpectrumComparison(a, b, int(lambda_max), None, None, None)
