"""Spectrum assembly: multiplicities, counting, tail bound, Weyl checks."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from kohnspec import (
    box_eigenvalue,
    compare_spectra,
    counting_function,
    make_binary_dihedral,
    make_binary_icosahedral,
    make_binary_octahedral,
    make_binary_tetrahedral,
    make_cyclic,
    make_cyclic_semidirect,
    make_lens,
    make_product_with_center,
    make_q_semidirect,
    make_trivial,
    multiplicity,
    sphere_counting_table,
    weyl_constant,
    weyl_report,
    xi_bound,
)
from kohnspec.spectrum import (
    eigenvalue_bidegrees,
    invariant_count_direct,
    sphere_volume,
    tail_bound_holds,
    weyl_integral,
)

F = Fraction


class TestMultiplicity:
    def test_eigenvalue_contributors(self):
        assert eigenvalue_bidegrees(4, 2) == [(1, 1), (0, 2)]
        assert eigenvalue_bidegrees(24, 2) == [(11, 1), (5, 2), (3, 3), (2, 4), (1, 6), (0, 12)]
        assert eigenvalue_bidegrees(7, 2) == []
        for p, q in eigenvalue_bidegrees(40, 3):
            assert box_eigenvalue(p, q, 3) == 40

    def test_mult4_separates_cyclic_from_dihedral(self):
        for m in range(2, 7):
            assert multiplicity(make_cyclic(4 * m), 4)[0] == 2
            assert multiplicity(make_binary_dihedral(m), 4)[0] == 0

    def test_mult8(self):
        for k in range(3, 7):
            assert multiplicity(make_binary_dihedral(k), 8)[0] == 2
        for g in (make_binary_tetrahedral(), make_binary_octahedral(), make_binary_icosahedral()):
            assert multiplicity(g, 8)[0] == 0

    def test_mult12(self):
        assert multiplicity(make_binary_tetrahedral(), 12)[0] == 2
        assert multiplicity(make_product_with_center(make_binary_dihedral(2), 3), 12)[0] == 3
        assert multiplicity(make_binary_octahedral(), 12)[0] == 0
        assert multiplicity(make_q_semidirect(1), 12)[0] == 0

    def test_mult24(self):
        assert multiplicity(make_binary_tetrahedral(), 24)[0] == 6
        assert multiplicity(make_binary_icosahedral(), 24)[0] == 2
        assert multiplicity(make_product_with_center(make_binary_tetrahedral(), 5), 24)[0] == 3
        assert multiplicity(make_cyclic_semidirect(3, 2), 24)[0] == 3

    def test_odd_and_unrealizable(self):
        g = make_cyclic(4)
        assert multiplicity(g, 7) == (0, [])
        assert multiplicity(g, -2) == (0, [])
        g3 = make_lens(2, (1, 1, 1))
        assert multiplicity(g3, 2) == (0, [])  # 2q(p+2) >= 4 in C^3


class TestCountingFunction:
    def test_trivial_entries(self):
        table = counting_function(make_trivial(), 4)
        assert [e.eigenvalue for e in table.entries] == [2, 4]
        assert table.entries[0].mult == 2          # bidegree (0,1)
        assert table.entries[1].mult == 6          # bidegrees (1,1) and (0,2)
        assert table.entries[1].contributors == [(1, 1), (0, 2)]
        assert table.count(4) == 8

    def test_monotone(self):
        table = counting_function(make_binary_tetrahedral(), 100)
        counts = [table.count(lam) for lam in range(0, 101, 2)]
        assert all(a <= b for a, b in zip(counts, counts[1:]))

    def test_direct_double_loop_agrees(self, all_n2_groups):
        for g in all_n2_groups[:8]:
            table = counting_function(g, 60)
            assert table.count(60) == invariant_count_direct(g, 30), g.name

    def test_quotient_below_sphere(self):
        sphere = sphere_counting_table(2, 200)
        for g in (make_cyclic(5), make_binary_dihedral(3)):
            table = counting_function(g, 200)
            for lam in range(2, 201, 2):
                assert table.count(lam) <= sphere.count(lam)

    def test_zero_multiplicity_entries_retained(self):
        table = counting_function(make_binary_tetrahedral(), 10)
        assert [e.eigenvalue for e in table.entries] == [2, 4, 6, 8, 10]
        assert all(e.mult == 0 for e in table.entries)


class TestXiBound:
    def test_hand_value_n2(self):
        # both inner binomials degenerate to floors: (2+1) + (2+1) = 6
        assert xi_bound(2, 2) == 6

    def test_empty_sums(self):
        assert xi_bound(F(1, 2), 2) == 0
        assert xi_bound(0, 3) == 0
        assert xi_bound(1, 3) == xi_bound(1, 3)  # total, no error

    def test_nonnegative_and_growth(self):
        prev = None
        for k in range(4, 13):
            lam = 2**k
            val = xi_bound(lam, 2)
            assert val >= 0
            ratio = val / lam**2
            if prev is not None:
                assert ratio < prev
            prev = ratio
        assert prev < 0.02  # o(lambda^2) in practice by lambda = 4096

    def test_fraction_input(self):
        assert xi_bound(F(5, 2), 2) == xi_bound(2.5, 2)


class TestTailBound:
    def test_exact_bound_all_groups(self, all_n2_groups):
        sphere = sphere_counting_table(2, 400)
        for g in all_n2_groups:
            table = counting_function(g, 400)
            for lam_half in range(10, 201, 10):
                ng = table.count(2 * lam_half)
                ns = sphere.count(2 * lam_half)
                assert tail_bound_holds(g, lam_half, ng, ns), (g.name, lam_half)

    def test_exact_bound_n3_lens(self, lens3_groups):
        sphere = sphere_counting_table(3, 80)
        for g in lens3_groups:
            table = counting_function(g, 80)
            for lam_half in range(4, 41, 4):
                ng = table.count(2 * lam_half)
                ns = sphere.count(2 * lam_half)
                assert tail_bound_holds(g, lam_half, ng, ns), (g.name, lam_half)

    def test_half_integer_cutoffs(self):
        g = make_cyclic(4)
        table = counting_function(g, 200)
        sphere = sphere_counting_table(2, 200)
        for lam in (25, 75, 133):   # odd cutoffs: counts step at even values only
            assert table.count(lam) == table.count(lam - 1)
            assert tail_bound_holds(g, F(lam, 2), table.count(lam), sphere.count(lam))


class TestWeylConstant:
    def test_quadrature_schemes_agree(self):
        for n in (2, 3):
            a = weyl_integral(n, "adaptive")
            b = weyl_integral(n, "legendre")
            assert abs(a - b) / abs(a) < 1e-9

    def test_n2_integral_analytic(self):
        # the n = 2 convergence integral evaluates to pi^2 / 3
        assert weyl_integral(2) == pytest.approx(math.pi**2 / 3, rel=1e-12)

    def test_n2_limit_value(self):
        # sphere limit N(lam)/lam^2 -> pi^2 / 24
        assert weyl_constant(2) * sphere_volume(2) == pytest.approx(math.pi**2 / 24, rel=1e-12)

    def test_pinned_constants(self):
        # published regression constants; numerically these agree with the
        # closed forms 1/48 and 1/(144 pi) to full precision
        assert weyl_constant(2) == pytest.approx(1 / 48, rel=1e-12)
        assert weyl_constant(3) == pytest.approx(1 / (144 * math.pi), rel=1e-12)


class TestWeylReport:
    def test_cyclic4_ratio(self):
        rep = weyl_report(make_cyclic(4), [500, 1000, 2000])
        assert abs(rep.ratios[-1] - 4) / 4 < 0.02
        assert all(rep.bound_ok)
        assert rep.empirical_limit == pytest.approx(rep.expected_limit, rel=0.02)

    def test_trivial_ratio_is_one(self):
        rep = weyl_report(make_trivial(), [100, 200])
        assert rep.ratios == [1.0, 1.0]

    def test_richardson_improves(self):
        rep = weyl_report(make_cyclic(3), [1000, 2000])
        raw_err = abs(rep.empirical_limit - rep.expected_limit)
        rich_err = abs(rep.richardson_limit - rep.expected_limit)
        assert rich_err <= raw_err


class TestCompareSpectra:
    def test_cyclic8_vs_quaternion(self):
        res = compare_spectra(make_cyclic(8), make_binary_dihedral(2), 48)
        assert res.eigenvalue == 4 and (res.mult_a, res.mult_b) == (2, 0)

    def test_dihedral12_vs_tetrahedral(self):
        res = compare_spectra(make_binary_dihedral(6), make_binary_tetrahedral(), 48)
        assert res.eigenvalue == 8 and (res.mult_a, res.mult_b) == (2, 0)

    def test_self_isospectral(self):
        res = compare_spectra(make_binary_octahedral(), make_binary_octahedral(), 100)
        assert res.isospectral

    def test_product_vs_semidirect_scan(self):
        # equal-order pair from the two twisted families (2 * 3 = 3 * 2):
        # first distinguishing eigenvalue found by scanning
        a = make_product_with_center(make_binary_dihedral(2), 3)
        b = make_cyclic_semidirect(3, 2)
        res = compare_spectra(a, b, 300)
        assert res.eigenvalue == 16
        assert (res.mult_a, res.mult_b) == (3, 2)

    def test_prime_eigenvalue_criterion(self):
        # for twists l=3, l'=2 the smallest prime r = 1 mod 4ll' with
        # r > 2/|1/m - 1/m'| is 73; the multiplicity of 4r = 292 must differ
        # and by the floor formulas equals 54 vs 36
        a = make_product_with_center(make_binary_dihedral(2), 3)
        b = make_cyclic_semidirect(3, 2)
        r = 73
        assert r % (4 * 3 * 2) == 1
        ma, _ = multiplicity(a, 4 * r)
        mb, _ = multiplicity(b, 4 * r)
        assert (ma, mb) == (54, 36)
        assert ma == (2 * r - 1) // 4 + r // 4
        assert mb == (2 * r - 1) // 6 + r // 6
