"""Catalog of finite unitary groups acting on odd spheres.

Every group is stored as a list of conjugacy-compressed classes: pairs of an
eigenvalue-angle tuple and a multiplicity.  An angle is a ``Fraction`` t in
[0, 1) standing for the unit complex number exp(2*pi*i*t); this is the only
piece of data the character machinery ever needs.

Families covered, with their canonical spec strings:

    cyclic:m        cyclic subgroup of SU(2), order m
    lens:m:q1,..,qn diagonal cyclic subgroup of U(n), order m
    bindih:2m       binary dihedral group of order 4m   (m >= 2)
    2T / 2O / 2I    binary tetrahedral / octahedral / icosahedral groups
    <base>xC:l      central product of an SU(2) family with scalars of order l
    qsemi:l         image in U(2) of the quaternion-by-cyclic semidirect
                    product with twist order 18l       (l odd)
    cycsemi:m:l     image in U(2) of the cyclic-by-cyclic semidirect product
                    of Z/2mZ with twist order 4l       (m odd, l even, coprime)

The two semidirect families are enumerated by exact worklist closure of their
generators inside SU(2) x U(1), then pushed down along the multiplication
double cover to U(2).
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ConstraintError, NonFreeAction, TraceLookupError

Angle = Fraction

ZERO = Fraction(0)
HALF = Fraction(1, 2)


def angle(numerator: int, denominator: int = 1) -> Angle:
    """Exact angle numerator/denominator, reduced mod one full turn."""
    return Fraction(numerator, denominator) % 1


def angle_str(a: Angle) -> str:
    return f"{a.numerator}/{a.denominator}"


def unit_value(a: Angle) -> complex:
    """The unit complex number exp(2*pi*i*a)."""
    return complex(math.cos(2 * math.pi * float(a)), math.sin(2 * math.pi * float(a)))


class ConjugacyClass(NamedTuple):
    angles: tuple[Angle, ...]
    mult: int


class FreeActionReport(NamedTuple):
    free: bool
    witness: ConjugacyClass | None


def _merge_classes(classes: Iterable[tuple[Sequence[Angle], int]]) -> tuple[ConjugacyClass, ...]:
    counts: Counter[tuple[Angle, ...]] = Counter()
    for angles, mult in classes:
        counts[tuple(angles)] += int(mult)
    return tuple(ConjugacyClass(a, m) for a, m in sorted(counts.items()))


class QuotientGroup:
    """A finite subgroup of U(n) given by eigenvalue-angle classes.

    Instances are immutable by convention and safe to share; all derived data
    (spectral caches, dimension memo tables) is monotone and attached lazily.
    Equality and hashing are by identity; use :meth:`class_multiset` for
    structural comparison.
    """

    def __init__(
        self,
        name: str,
        family: str,
        n: int,
        classes: Iterable[tuple[Sequence[Angle], int]],
        *,
        params: dict | None = None,
        base: "QuotientGroup | None" = None,
        generators: Sequence[np.ndarray] | None = None,
        expect_free: bool = True,
    ):
        self.name = name
        self.family = family
        self.n = int(n)
        self.classes = _merge_classes(classes)
        self.order = sum(c.mult for c in self.classes)
        self.params = dict(params or {})
        self.base = base
        self.generators = tuple(np.asarray(g, dtype=complex) for g in generators) if generators else ()
        self._dim_cache: dict[tuple[int, int], int] = {}
        self._spectral_data = None
        self._fg_cache: dict = {}
        self._pg_cache = None

        if self.n < 2:
            raise ConstraintError("ambient dimension must be at least 2")
        if self.order < 1:
            raise ConstraintError("group must contain at least the identity")
        for c in self.classes:
            if len(c.angles) != self.n:
                raise ConstraintError(f"class {c} has {len(c.angles)} angles, expected {self.n}")
        ident = tuple([ZERO] * self.n)
        id_mult = sum(c.mult for c in self.classes if c.angles == ident)
        if id_mult != 1:
            raise ConstraintError(f"identity class must appear with multiplicity 1, got {id_mult}")
        if expect_free:
            report = check_free_action(self)
            if not report.free:
                raise NonFreeAction(
                    f"group {name} does not act freely: class {report.witness} has eigenvalue 1",
                    witness=report.witness,
                )

    def __repr__(self) -> str:
        return f"QuotientGroup({self.name!r}, n={self.n}, order={self.order}, classes={len(self.classes)})"

    def class_multiset(self) -> Counter:
        """Multiset of eigenvalue-angle tuples, each sorted within the tuple.

        Canonical structural fingerprint: two groups with equal multisets have
        identical characters on every bidegree space.
        """
        out: Counter = Counter()
        for c in self.classes:
            out[tuple(sorted(c.angles))] += c.mult
        return out

    def element_orders(self) -> Counter:
        out: Counter = Counter()
        for c in self.classes:
            out[math.lcm(*(a.denominator for a in c.angles))] += c.mult
        return out


def check_free_action(group: QuotientGroup) -> FreeActionReport:
    """True iff no non-identity class has an eigenvalue equal to 1.

    Fixed points of a unitary matrix on the sphere are exactly its
    eigenvalue-1 eigenvectors, so this is the free-action criterion.
    """
    ident = tuple([ZERO] * group.n)
    for c in group.classes:
        if c.angles == ident:
            continue
        if any(a == ZERO for a in c.angles):
            return FreeActionReport(False, c)
    return FreeActionReport(True, None)


def from_classes(
    name: str,
    n: int,
    classes: Iterable[tuple[Sequence[Angle], int]],
    *,
    expect_free: bool = False,
) -> QuotientGroup:
    """Escape-hatch constructor from a raw class list (used by tests to build
    groups that fail the free-action criterion)."""
    return QuotientGroup(name, "custom", n, classes, expect_free=expect_free)


# ---------------------------------------------------------------------------
# SU(2) families


def _quat_matrix(a: complex, b: complex, c: complex, d: complex) -> np.ndarray:
    """2x2 unitary matrix of the unit quaternion a+bi+cj+dk."""
    return np.array([[a + 1j * b, -c + 1j * d], [c + 1j * d, a - 1j * b]], dtype=complex)


_J_MATRIX = _quat_matrix(0, 0, 1, 0)


@cache
def make_cyclic(m: int) -> QuotientGroup:
    """Cyclic subgroup of SU(2) of order m, generated by diag(z, z^-1) with
    z a primitive m-th root of unity."""
    if m < 1:
        raise ConstraintError("cyclic order m must be >= 1")
    classes = [((angle(j, m), angle(m - j, m)), 1) for j in range(m)]
    gen = np.diag([np.exp(2j * np.pi / m), np.exp(-2j * np.pi / m)])
    return QuotientGroup(f"cyclic:{m}", "cyclic", 2, classes, params={"m": m}, generators=[gen])


def make_lens(m: int, rotations: Sequence[int]) -> QuotientGroup:
    """Diagonal cyclic group in U(n) generated by diag(z^q1, ..., z^qn).

    Acts freely iff every rotation is coprime to m.
    """
    return _make_lens(int(m), tuple(int(q) for q in rotations))


@cache
def _make_lens(m: int, rotations: tuple[int, ...]) -> QuotientGroup:
    if m < 1:
        raise ConstraintError("lens order m must be >= 1")
    n = len(rotations)
    if n < 2:
        raise ConstraintError("lens groups need at least 2 rotation exponents")
    for q in rotations:
        if math.gcd(q, m) != 1:
            raise NonFreeAction(
                f"rotation exponent {q} shares the factor {math.gcd(q, m)} with {m}; "
                f"the generator has a fixed point on the sphere"
            )
    classes = [(tuple(angle(j * q, m) for q in rotations), 1) for j in range(m)]
    gen = np.diag([np.exp(2j * np.pi * q / m) for q in rotations])
    name = f"lens:{m}:{','.join(str(q) for q in rotations)}"
    return QuotientGroup(name, "lens", n, classes, params={"m": m, "rotations": rotations}, generators=[gen])


@cache
def make_binary_dihedral(m: int) -> QuotientGroup:
    """Binary dihedral group of order 4m: the cyclic group of order 2m plus
    2m elements of trace zero.  Requires m >= 2 (m = 1 is cyclic of order 4)."""
    if m < 2:
        raise ConstraintError("binary dihedral requires m >= 2")
    classes: list[tuple[tuple[Angle, Angle], int]] = [
        ((angle(j, 2 * m), angle(2 * m - j, 2 * m)), 1) for j in range(2 * m)
    ]
    classes.append(((Fraction(1, 4), Fraction(3, 4)), 2 * m))
    gens = [np.diag([np.exp(1j * np.pi / m), np.exp(-1j * np.pi / m)]), _J_MATRIX]
    return QuotientGroup(f"bindih:{2 * m}", "bindih", 2, classes, params={"m": m}, generators=gens)


_GOLDEN = (1 + math.sqrt(5)) / 2


@cache
def make_binary_tetrahedral() -> QuotientGroup:
    """Binary tetrahedral group: the quaternion group plus the sixteen
    half-integer unit quaternions (traces +-1)."""
    classes = [(c.angles, c.mult) for c in make_binary_dihedral(2).classes]
    classes += [
        ((Fraction(1, 6), Fraction(5, 6)), 8),
        ((Fraction(1, 3), Fraction(2, 3)), 8),
    ]
    gens = [
        _quat_matrix(0, 1, 0, 0),
        _quat_matrix(0.5, 0.5, 0.5, 0.5),
    ]
    return QuotientGroup("2T", "2T", 2, classes, generators=gens)


@cache
def make_binary_octahedral() -> QuotientGroup:
    """Binary octahedral group: binary tetrahedral plus 24 elements with
    traces 0 and +-sqrt(2)."""
    classes = [(c.angles, c.mult) for c in make_binary_tetrahedral().classes]
    classes += [
        ((Fraction(1, 4), Fraction(3, 4)), 12),
        ((Fraction(1, 8), Fraction(7, 8)), 6),
        ((Fraction(3, 8), Fraction(5, 8)), 6),
    ]
    s = 1 / math.sqrt(2)
    gens = [g for g in make_binary_tetrahedral().generators] + [_quat_matrix(s, s, 0, 0)]
    return QuotientGroup("2O", "2O", 2, classes, generators=gens)


@cache
def make_binary_icosahedral() -> QuotientGroup:
    """Binary icosahedral group: binary tetrahedral plus the 96 even
    permutations of (0, +-1, +-1/phi, +-phi)/2, phi the golden ratio."""
    classes = [(c.angles, c.mult) for c in make_binary_tetrahedral().classes]
    classes += [
        ((Fraction(1, 4), Fraction(3, 4)), 24),   # real part 0
        ((Fraction(1, 6), Fraction(5, 6)), 12),   # real part +1/2
        ((Fraction(1, 3), Fraction(2, 3)), 12),   # real part -1/2
        ((Fraction(1, 5), Fraction(4, 5)), 12),   # real part +1/(2 phi)
        ((Fraction(3, 10), Fraction(7, 10)), 12),  # real part -1/(2 phi)
        ((Fraction(1, 10), Fraction(9, 10)), 12),  # real part +phi/2
        ((Fraction(2, 5), Fraction(3, 5)), 12),   # real part -phi/2
    ]
    gens = [g for g in make_binary_tetrahedral().generators] + [
        _quat_matrix(_GOLDEN / 2, 1 / (2 * _GOLDEN), 0.5, 0)
    ]
    return QuotientGroup("2I", "2I", 2, classes, generators=gens)


_SU2_FAMILIES = {"cyclic", "bindih", "2T", "2O", "2I"}


def _product_constraint(base: QuotientGroup) -> int:
    if base.family == "bindih":
        return 2 * base.params["m"]
    if base.family in ("2T", "2O"):
        return 6
    if base.family == "2I":
        return 30
    raise ConstraintError(
        f"central products are defined for the binary families, not {base.family!r}"
    )


def make_product_with_center(base: QuotientGroup, l: int) -> QuotientGroup:
    """Group generated by an SU(2) binary family and the scalar matrix of
    order l.  Free action requires l odd and coprime to the base constraint
    (2m for binary dihedral, 6 for tetra/octahedral, 30 for icosahedral)."""
    constraint = _product_constraint(base)
    if l < 1 or l % 2 == 0:
        raise ConstraintError(f"scalar order l must be odd and positive, got {l}")
    classes = []
    for c in base.classes:
        for j in range(l):
            shift = angle(j, l)
            classes.append((tuple((a + shift) % 1 for a in c.angles), c.mult))
    name = f"{base.name}xC:{l}"
    gens = list(base.generators) + [np.exp(2j * np.pi / l) * np.eye(2)]
    group = QuotientGroup(
        name, "product", 2, classes,
        params={"l": l, "constraint": constraint},
        base=base, generators=gens, expect_free=False,
    )
    report = check_free_action(group)
    if not report.free:
        raise NonFreeAction(
            f"{name}: scalar order l={l} must be coprime to {constraint}; "
            f"class {report.witness} has eigenvalue 1",
            witness=report.witness,
        )
    return group


# ---------------------------------------------------------------------------
# Exact arithmetic for the semidirect families


class FieldElement(NamedTuple):
    """Element x + y*sqrt(2) + z*sqrt(5) + w*sqrt(10) of Q(sqrt2, sqrt5)."""

    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction

    def __add__(self, other):
        return FieldElement(self.x + other.x, self.y + other.y, self.z + other.z, self.w + other.w)

    def __sub__(self, other):
        return FieldElement(self.x - other.x, self.y - other.y, self.z - other.z, self.w - other.w)

    def __neg__(self):
        return FieldElement(-self.x, -self.y, -self.z, -self.w)

    def mul(self, other: "FieldElement") -> "FieldElement":
        x1, y1, z1, w1 = self
        x2, y2, z2, w2 = other
        return FieldElement(
            x1 * x2 + 2 * y1 * y2 + 5 * z1 * z2 + 10 * w1 * w2,
            x1 * y2 + y1 * x2 + 5 * (z1 * w2 + w1 * z2),
            x1 * z2 + z1 * x2 + 2 * (y1 * w2 + w1 * y2),
            x1 * w2 + w1 * x2 + y1 * z2 + z1 * y2,
        )

    def to_float(self) -> float:
        return float(self.x) + float(self.y) * math.sqrt(2) + float(self.z) * math.sqrt(5) + float(self.w) * math.sqrt(10)


def _field(x=0, y=0, z=0, w=0) -> FieldElement:
    return FieldElement(Fraction(x), Fraction(y), Fraction(z), Fraction(w))


# trace = 2*Re(q) of a finite-order unit quaternion determines its eigenvalue
# angle; only these eleven traces occur in the binary families.
_TRACE_TABLE: dict[FieldElement, Angle] = {
    _field(2): ZERO,
    _field(-2): HALF,
    _field(0): Fraction(1, 4),
    _field(1): Fraction(1, 6),
    _field(-1): Fraction(1, 3),
    _field(0, 1): Fraction(1, 8),
    _field(0, -1): Fraction(3, 8),
    _field(Fraction(1, 2), 0, Fraction(1, 2)): Fraction(1, 10),    # phi
    _field(Fraction(-1, 2), 0, Fraction(-1, 2)): Fraction(2, 5),   # -phi
    _field(Fraction(-1, 2), 0, Fraction(1, 2)): Fraction(1, 5),    # 1/phi
    _field(Fraction(1, 2), 0, Fraction(-1, 2)): Fraction(3, 10),   # -1/phi
}


class QuaternionExact(NamedTuple):
    """Unit quaternion with components in Q(sqrt2, sqrt5)."""

    a: FieldElement
    b: FieldElement
    c: FieldElement
    d: FieldElement

    def mul(self, o: "QuaternionExact") -> "QuaternionExact":
        a1, b1, c1, d1 = self
        a2, b2, c2, d2 = o
        return QuaternionExact(
            a1.mul(a2) - b1.mul(b2) - c1.mul(c2) - d1.mul(d2),
            a1.mul(b2) + b1.mul(a2) + c1.mul(d2) - d1.mul(c2),
            a1.mul(c2) - b1.mul(d2) + c1.mul(a2) + d1.mul(b2),
            a1.mul(d2) + b1.mul(c2) - c1.mul(b2) + d1.mul(a2),
        )

    def neg(self) -> "QuaternionExact":
        return QuaternionExact(-self.a, -self.b, -self.c, -self.d)

    def norm_squared(self) -> FieldElement:
        return self.a.mul(self.a) + self.b.mul(self.b) + self.c.mul(self.c) + self.d.mul(self.d)

    def eigen_angle(self) -> Angle:
        trace = self.a + self.a
        try:
            return _TRACE_TABLE[trace]
        except KeyError:
            raise TraceLookupError(f"quaternion trace {trace} outside the finite trace table") from None

    def matrix(self) -> np.ndarray:
        return _quat_matrix(self.a.to_float(), self.b.to_float(), self.c.to_float(), self.d.to_float())


def quat(a, b, c, d) -> QuaternionExact:
    return QuaternionExact(
        a if isinstance(a, FieldElement) else _field(a),
        b if isinstance(b, FieldElement) else _field(b),
        c if isinstance(c, FieldElement) else _field(c),
        d if isinstance(d, FieldElement) else _field(d),
    )


QUAT_ONE = quat(1, 0, 0, 0)
QUAT_I = quat(0, 1, 0, 0)
QUAT_J = quat(0, 0, 1, 0)


class DihedralElement(NamedTuple):
    """Element exp(2*pi*i*t) * j^flag of the binary dihedral subalgebra.

    Keeps the cyclic part as an exact angle so that semidirect closures with
    arbitrary odd m need no field extension.
    """

    t: Angle
    flag: int

    def mul(self, o: "DihedralElement") -> "DihedralElement":
        if not self.flag:
            return DihedralElement((self.t + o.t) % 1, o.flag)
        if not o.flag:
            return DihedralElement((self.t - o.t) % 1, 1)
        return DihedralElement((self.t - o.t + HALF) % 1, 0)

    def neg(self) -> "DihedralElement":
        return DihedralElement((self.t + HALF) % 1, self.flag)

    def eigen_angle(self) -> Angle:
        if self.flag:
            return Fraction(1, 4)
        return min(self.t, (1 - self.t) % 1)


def _canon_pair(elem, phase: Angle):
    # the double-cover kernel identifies (g, phase) with (-g, phase + 1/2)
    alt = (elem.neg(), (phase + HALF) % 1)
    cur = (elem, phase)
    return min(cur, alt)


def close_in_su2_x_u1(generators: Sequence[tuple], identity) -> list[tuple]:
    """Worklist closure of generator pairs (element, phase) in SU(2) x U(1),
    taken modulo the order-two center of the covering map.

    Returns one canonical representative per element of the image in U(2).
    """
    start = _canon_pair(identity, ZERO)
    seen = {start}
    work = [start]
    while work:
        elem, phase = work.pop()
        for g, gphase in generators:
            nxt = _canon_pair(elem.mul(g), (phase + gphase) % 1)
            if nxt not in seen:
                seen.add(nxt)
                work.append(nxt)
    return sorted(seen)


def _classes_from_pairs(pairs: Iterable[tuple]) -> list[tuple[tuple[Angle, Angle], int]]:
    classes = []
    for elem, phase in pairs:
        theta = elem.eigen_angle()
        classes.append((((phase + theta) % 1, (phase - theta) % 1), 1))
    return classes


@cache
def make_q_semidirect(l: int) -> QuotientGroup:
    """Image in U(2) of the group generated by the quaternion group and an
    order-6 half-integer quaternion carrying a scalar phase of order 18l.

    The enumerated image order is 72l; see the decisions notes for why this
    is the ground truth rather than any smaller reading.
    """
    if l < 1 or l % 2 == 0:
        raise ConstraintError(f"twist parameter l must be odd and positive, got {l}")
    h = quat(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))
    gens = [(QUAT_I, ZERO), (QUAT_J, ZERO), (h, Fraction(1, 18 * l))]
    pairs = close_in_su2_x_u1(gens, QUAT_ONE)
    group = QuotientGroup(
        f"qsemi:{l}", "qsemi", 2, _classes_from_pairs(pairs),
        params={"l": l},
        generators=[
            QUAT_I.matrix(),
            QUAT_J.matrix(),
            np.exp(1j * np.pi / (9 * l)) * h.matrix(),
        ],
    )
    assert group.order == 72 * l, (group.order, l)
    return group


@cache
def make_cyclic_semidirect(m: int, l: int) -> QuotientGroup:
    """Image in U(2) of the group generated by the cyclic group of order 2m
    and the trace-zero quaternion j carrying a scalar phase of order 4l.

    Free action requires m odd (>= 3), l even, and gcd(m, l) = 1; invalid
    parameters are rejected through the fixed-point criterion.
    """
    if m < 3:
        raise ConstraintError(f"cyclic part must have m >= 3 (m=1 is abelian), got m={m}")
    if l < 1:
        raise ConstraintError(f"twist parameter l must be positive, got {l}")
    a = DihedralElement(Fraction(1, 2 * m) % 1, 0)
    x = DihedralElement(ZERO, 1)
    gens = [(a, ZERO), (x, Fraction(1, 4 * l))]
    pairs = close_in_su2_x_u1(gens, DihedralElement(ZERO, 0))
    classes = _classes_from_pairs(pairs)
    name = f"cycsemi:{m}:{l}"
    group = QuotientGroup(
        name, "cycsemi", 2, classes,
        params={"m": m, "l": l},
        generators=[
            np.diag([np.exp(1j * np.pi / m), np.exp(-1j * np.pi / m)]),
            np.exp(1j * np.pi / (2 * l)) * _J_MATRIX,
        ],
        expect_free=False,
    )
    report = check_free_action(group)
    if not report.free:
        raise NonFreeAction(
            f"{name}: requires m odd, l even, gcd(m, l)=1; class {report.witness} has eigenvalue 1",
            witness=report.witness,
        )
    assert group.order == 4 * m * l, (group.order, m, l)
    return group


def make_trivial(n: int = 2) -> QuotientGroup:
    return make_cyclic(1) if n == 2 else make_lens(1, tuple([1] * n))


CATALOG_FAMILIES = [
    ("cyclic:m", "m >= 1", "m"),
    ("lens:m:q1,...,qn", "gcd(qk, m) = 1 for all k", "m"),
    ("bindih:2m", "m >= 2", "4m"),
    ("2T", "-", "24"),
    ("2O", "-", "48"),
    ("2I", "-", "120"),
    ("<base>xC:l", "l odd, coprime to 2m / 6 / 6 / 30 per base", "|base| * l"),
    ("qsemi:l", "l odd", "72l"),
    ("cycsemi:m:l", "m odd >= 3, l even, gcd(m, l) = 1", "4ml"),
]
