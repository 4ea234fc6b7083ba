"""Invariant-subspace dimensions: character averaging and closed forms.

dim_invariant averages exact characters over the group and collapses the
resulting root-of-unity combination to an integer (hard error if the value
is farther than 1e-6 from one).  dim_closed_form evaluates the per-family
piecewise formulas; reconcile checks the two paths against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .characters import admissible_pairs, sphere_dim
from .errors import NonIntegralDimension, UnsupportedFamily
from .group_catalog import QuotientGroup

_INT_TOL = 1e-6

# sphere dimension above which the general-n path switches from exact
# admissible-pair summation to a complete-homogeneous recurrence in floats
_EXACT_TERM_LIMIT = 200_000


class _SpectralData:
    """Per-group integer-angle tables for vectorized character sums."""

    def __init__(self, group: QuotientGroup):
        dens = [a.denominator for c in group.classes for a in c.angles]
        self.modulus = math.lcm(*dens)
        L = self.modulus
        self.kmat = np.array(
            [[int(a * L) % L for a in c.angles] for c in group.classes], dtype=np.int64
        )
        self.mult = np.array([c.mult for c in group.classes], dtype=np.float64)
        grid = 2 * np.pi * np.arange(L) / L
        self.cos = np.cos(grid)
        self.sin = np.sin(grid)
        self.eigs = np.exp(2j * np.pi * self.kmat.astype(np.float64) / L)


def _spectral(group: QuotientGroup) -> _SpectralData:
    if group._spectral_data is None:
        group._spectral_data = _SpectralData(group)
    return group._spectral_data


def _collapse(group: QuotientGroup, p: int, q: int, re: float, im: float) -> int:
    val = re / group.order
    if abs(im) / group.order > _INT_TOL:
        raise NonIntegralDimension(
            f"{group.name} at (p,q)=({p},{q}): imaginary residue {im / group.order:.3e}"
        )
    dim = round(val)
    if abs(val - dim) > _INT_TOL:
        raise NonIntegralDimension(
            f"{group.name} at (p,q)=({p},{q}): averaged value {val!r} is not an integer"
        )
    if dim < 0 or dim > sphere_dim(p, q, group.n):
        raise NonIntegralDimension(
            f"{group.name} at (p,q)=({p},{q}): dimension {dim} outside [0, sphere dim]"
        )
    return dim


def _dim_su2_path(group: QuotientGroup, p: int, q: int) -> int:
    # geometric-sum character: angles base + j*step, j = 0..p+q, per class
    data = _spectral(group)
    L = data.modulus
    k1 = data.kmat[:, 0]
    k2 = data.kmat[:, 1]
    j = np.arange(p + q + 1, dtype=np.int64)
    base = (q * k2 - p * k1) % L
    step = (k1 - k2) % L
    idx = (base[:, None] + j[None, :] * step[:, None]) % L
    re = float(data.mult @ data.cos[idx].sum(axis=1))
    im = float(data.mult @ data.sin[idx].sum(axis=1))
    return _collapse(group, p, q, re, im)


_DIFF_CACHE: dict[tuple[int, int, int], np.ndarray] = {}


def _diff_matrix(p: int, q: int, n: int) -> np.ndarray:
    key = (p, q, n)
    if key not in _DIFF_CACHE:
        rows = [
            [b - a for a, b in zip(alpha, beta)]
            for alpha, beta in admissible_pairs(p, q, n)
        ]
        _DIFF_CACHE[key] = np.array(rows, dtype=np.int64)
    return _DIFF_CACHE[key]


def _dim_admissible_path(group: QuotientGroup, p: int, q: int) -> int:
    data = _spectral(group)
    L = data.modulus
    diffs = _diff_matrix(p, q, group.n)
    idx = (data.kmat @ diffs.T) % L
    re = float(data.mult @ data.cos[idx].sum(axis=1))
    im = float(data.mult @ data.sin[idx].sum(axis=1))
    return _collapse(group, p, q, re, im)


def _complete_homogeneous(eigs: np.ndarray, degree: int) -> np.ndarray:
    """Complete homogeneous sums h_0..h_degree of each eigenvalue row,
    folding in one variable at a time (ascending degree makes the update
    include all powers of the new variable).  eigs has shape (classes, n)."""
    classes, n = eigs.shape
    h = np.zeros((degree + 1, classes), dtype=complex)
    h[0] = 1.0
    for i in range(n):
        x = eigs[:, i]
        for d in range(1, degree + 1):
            h[d] += x * h[d - 1]
    return h


def _dim_homogeneous_path(group: QuotientGroup, p: int, q: int) -> int:
    # character = h_p(conj eigs) h_q(eigs) - h_{p-1}(conj eigs) h_{q-1}(eigs)
    data = _spectral(group)
    eigs = data.eigs
    hbar = _complete_homogeneous(eigs.conj(), p)
    h = _complete_homogeneous(eigs, q)
    chi = hbar[p] * h[q]
    if p >= 1 and q >= 1:
        chi -= hbar[p - 1] * h[q - 1]
    total = complex(data.mult @ chi)
    return _collapse(group, p, q, total.real, total.imag)


def dim_invariant(group: QuotientGroup, p: int, q: int) -> int:
    """Dimension of the group-invariant subspace of the bidegree-(p, q)
    harmonic space, by multiplicity-weighted character averaging."""
    key = (p, q)
    cached = group._dim_cache.get(key)
    if cached is not None:
        return cached
    if p < 0 or q < 0:
        return 0
    if group.n == 2:
        dim = _dim_su2_path(group, p, q)
    elif sphere_dim(p, q, group.n) <= _EXACT_TERM_LIMIT:
        dim = _dim_admissible_path(group, p, q)
    else:
        dim = _dim_homogeneous_path(group, p, q)
    group._dim_cache[key] = dim
    return dim


# ---------------------------------------------------------------------------
# Closed forms, per family


def closed_form_cyclic(m: int, p: int, q: int) -> int:
    s = p + q
    if m % 2 == 0:
        return 2 * (s // m) + 1 if s % 2 == 0 else 0
    if s % 2 == 0:
        return 2 * (s // (2 * m)) + 1
    return 2 * ((s + m) // (2 * m))


def _sign_mod4(s: int) -> int:
    return 1 if s % 4 == 0 else (-1 if s % 4 == 2 else 0)


def closed_form_binary_dihedral(m: int, p: int, q: int) -> int:
    return (closed_form_cyclic(2 * m, p, q) + _sign_mod4(p + q)) // 2


def closed_form_tetrahedral(p: int, q: int) -> int:
    s = p + q
    bump = 2 if s % 6 == 0 else (-2 if s % 6 == 4 else 0)
    return (closed_form_binary_dihedral(2, p, q) + bump) // 3


def closed_form_octahedral(p: int, q: int) -> int:
    s = p + q
    bump = 1 if s % 8 == 0 else (-1 if s % 8 == 6 else 0)
    return (closed_form_tetrahedral(p, q) + bump) // 2


def closed_form_icosahedral(p: int, q: int) -> int:
    s = p + q
    c6 = 1 if s % 6 == 0 else (-1 if s % 6 == 4 else 0)
    c10 = {0: 2, 2: 1, 6: -1, 8: -2}.get(s % 10, 0)
    return (closed_form_tetrahedral(p, q) + _sign_mod4(s) + c6 + c10) // 5


def closed_form_q_semidirect(l: int, p: int, q: int) -> int:
    d = q - p
    first = Fraction(closed_form_binary_dihedral(2, p, q), 3) if d % (6 * l) == 0 else Fraction(0)
    r = d % (18 * l)
    twist = 2 if r == 0 else (-1 if r in (6 * l, 12 * l) else 0)
    s = p + q
    bump = 2 if s % 6 == 0 else (-2 if s % 6 == 4 else 0)
    total = first + Fraction(twist * bump, 6)
    assert total.denominator == 1
    return int(total)


def closed_form_cyclic_semidirect(m: int, l: int, p: int, q: int) -> int:
    d = q - p
    first = Fraction(closed_form_cyclic(2 * m, p, q), 2) if d % (2 * l) == 0 else Fraction(0)
    r = d % (4 * l)
    twist = 1 if r == 0 else (-1 if r == 2 * l else 0)
    total = first + Fraction(twist * _sign_mod4(p + q), 2)
    assert total.denominator == 1
    return int(total)


def dim_closed_form(group: QuotientGroup, p: int, q: int) -> int:
    """Closed-form invariant dimension for the seven covered families.

    Raises UnsupportedFamily for general lens groups (no closed form)."""
    fam = group.family
    if fam == "cyclic":
        return closed_form_cyclic(group.params["m"], p, q)
    if fam == "bindih":
        return closed_form_binary_dihedral(group.params["m"], p, q)
    if fam == "2T":
        return closed_form_tetrahedral(p, q)
    if fam == "2O":
        return closed_form_octahedral(p, q)
    if fam == "2I":
        return closed_form_icosahedral(p, q)
    if fam == "product":
        l = group.params["l"]
        if (q - p) % l != 0:
            return 0
        return dim_closed_form(group.base, p, q)
    if fam == "qsemi":
        return closed_form_q_semidirect(group.params["l"], p, q)
    if fam == "cycsemi":
        return closed_form_cyclic_semidirect(group.params["m"], group.params["l"], p, q)
    raise UnsupportedFamily(f"no closed-form dimensions for family {fam!r} ({group.name})")


@dataclass
class ReconcileReport:
    group: QuotientGroup
    pq_ceiling: int
    mismatches: list[tuple[int, int, int, int]]  # (p, q, averaged, closed_form)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def reconcile(group: QuotientGroup, pq_ceiling: int) -> ReconcileReport:
    """Compare averaged and closed-form dimensions on p + q <= pq_ceiling."""
    mismatches = []
    for s in range(pq_ceiling + 1):
        for p in range(s + 1):
            q = s - p
            averaged = dim_invariant(group, p, q)
            closed = dim_closed_form(group, p, q)
            if averaged != closed:
                mismatches.append((p, q, averaged, closed))
    return ReconcileReport(group, pq_ceiling, mismatches)
