"""
Unit tests for scroll intersection arithmetic, cohomology counts and bounds
"""

from fractions import Fraction

import pytest

from src.scrolls.scrollcalc import (
    F,
    H,
    ChowClass,
    DivisorClass,
    Scroll,
    VanishingClass,
    canonical_class,
    canonical_curve_on_scroll_invariants,
    chow_product,
    ci_invariants,
    compositions,
    d2_genus_poly,
    ell_range_ok,
    first_chern_class,
    h0_closed,
    h0_enum,
    h1_count,
    hi_vanishes,
    m1_lower_bound,
    pencil_scroll_stats,
    scroll_bounds,
)
from src.utils.error_handler import InvalidScrollError, PreconditionError


@pytest.fixture
def surface():
    return Scroll.of([3, 1])


@pytest.fixture
def nearly_gorenstein_bounds():
    """Genus 8 curve with eta = 1 + 1 at the origin and mu = 1, on a threefold scroll"""
    return scroll_bounds(g=8, eta=2, mu=1, d=3, ell=4, a=4, b=-4, g_prime=6)


class TestScroll:
    """Test cases for Scroll"""

    def test_of(self, surface):
        assert surface.m == (1, 3)
        assert surface.d == 2
        assert surface.e == 4
        assert surface.N == 5
        assert surface.ambient_dimension == 5
        assert surface.degree == 4
        assert surface.smooth
        assert surface.label() == "S_{1,3}"

    def test_cone(self):
        assert not Scroll.of([0, 2]).smooth

    def test_parse(self):
        assert Scroll.parse("1, 1,3") == Scroll.of([1, 1, 3])

    @pytest.mark.parametrize("text", ["", "1,x", "-1,2"])
    def test_parse_invalid(self, text):
        with pytest.raises(InvalidScrollError):
            Scroll.parse(text)

    def test_of_invalid(self):
        with pytest.raises(InvalidScrollError):
            Scroll.of([])


class TestChowRing:
    """Test cases for the Chow ring of a scroll"""

    def test_surface_intersections(self, surface):
        assert chow_product(surface, [H, H]) == 4
        assert chow_product(surface, [H, F]) == 1
        assert chow_product(surface, [F, F]) == 0

    def test_below_top_codimension(self, surface):
        assert chow_product(surface, [H]) == ChowClass(codim=1, h=1, hf=0)
        assert chow_product(surface, []) == ChowClass(codim=0, h=1, hf=0)

    def test_above_top_codimension(self, surface):
        assert chow_product(surface, [H, H, H]) == VanishingClass(codim=3)

    def test_threefold(self):
        scroll = Scroll.of([1, 1, 3])
        assert chow_product(scroll, [H, H, H]) == 5
        assert chow_product(scroll, [H, H, F]) == 1
        assert chow_product(scroll, [H, F, F]) == 0

    def test_divisor_classes(self, surface):
        assert chow_product(surface, [DivisorClass(1, 2), DivisorClass(1, 0)]) == 6

    def test_add_mismatched_codimension(self):
        with pytest.raises(PreconditionError):
            H + (H * H)

    def test_add(self):
        assert H + F == ChowClass(codim=1, h=1, hf=1)


class TestDivisorClass:
    """Test cases for DivisorClass arithmetic and parsing"""

    def test_arithmetic(self):
        assert DivisorClass(1, 2) + DivisorClass(2, -2) == DivisorClass(3, 0)
        assert DivisorClass(1, 2) - DivisorClass(2, -2) == DivisorClass(-1, 4)
        assert -DivisorClass(1, 2) == DivisorClass(-1, -2)
        assert 2 * DivisorClass(1, 2) == DivisorClass(2, 4)

    def test_parse_list(self):
        assert DivisorClass.parse_list("1,2; 2,-2") == [DivisorClass(1, 2), DivisorClass(2, -2)]
        assert DivisorClass.parse_list("") == []

    @pytest.mark.parametrize("text", ["1;2", "1,2,3", "a,b"])
    def test_parse_list_invalid(self, text):
        with pytest.raises(InvalidScrollError):
            DivisorClass.parse_list(text)

    def test_canonical_and_chern(self, surface):
        assert canonical_class(surface) == DivisorClass(-2, 2)
        assert first_chern_class(surface) == DivisorClass(2, -2)


class TestCompleteIntersection:
    """Test cases for ci_invariants"""

    def test_surface_curve(self, surface):
        ci = ci_invariants(surface, [DivisorClass(3, -2)])
        assert ci.ell == 3
        assert ci.degree == 10
        assert ci.genus_closed == 6
        assert ci.genus_koszul == 6
        assert ci.consistent
        assert ci.effective

    def test_threefold_curve(self):
        ci = ci_invariants(Scroll.of([1, 1, 1]), [DivisorClass(1, 2), DivisorClass(2, -2)])
        assert ci.ell == 2
        assert ci.degree == 8
        assert ci.genus_closed == 2
        assert ci.consistent

    def test_canonical_model_on_threefold(self):
        ci = ci_invariants(Scroll.of([1, 1, 3]), [DivisorClass(2, -1), DivisorClass(2, -3)])
        assert ci.ell == 4
        assert ci.degree == 12
        assert ci.genus_closed == 5
        assert ci.consistent
        invariants = canonical_curve_on_scroll_invariants(g=8, eta=2, mu=1, d=3)
        assert (invariants.e, invariants.degree, invariants.arithmetic_genus) == (5, 12, 5)

    def test_rational_normal_curve(self):
        ci = ci_invariants(Scroll.of([4]), [])
        assert ci.ell == 1
        assert ci.degree == 4
        assert ci.genus_closed == 0
        assert ci.genus_koszul == 0

    def test_not_effective(self, surface):
        assert not ci_invariants(surface, [DivisorClass(-1, 5)]).effective

    def test_wrong_number_of_classes(self, surface):
        with pytest.raises(PreconditionError):
            ci_invariants(surface, [DivisorClass(1, 0), DivisorClass(1, 0)])

    def test_to_dict(self, surface):
        assert ci_invariants(surface, [DivisorClass(3, -2)]).to_dict() == {
            'ell': 3, 'degree': 10, 'genus_closed': 6, 'genus_koszul': 6, 'effective': True,
        }

    def test_genus_is_exact(self, surface):
        ci = ci_invariants(surface, [DivisorClass(2, 1)])
        assert ci.degree == 9
        assert ci.genus_closed == 4
        assert isinstance(ci.genus_koszul, Fraction)
        assert ci.consistent


class TestCohomology:
    """Test cases for h0, h1 and vanishing"""

    def test_compositions(self):
        assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
        assert list(compositions(0, 3)) == [(0, 0, 0)]
        assert len(list(compositions(3, 3))) == 10

    @pytest.mark.parametrize("m, a, b, expected", [
        ((2, 3), 1, 0, 7),
        ((1, 3), 1, 0, 6),
        ((1, 1, 1), 2, 0, 6 + 3 * 4),
    ])
    def test_h0_agree_in_regime(self, m, a, b, expected):
        scroll = Scroll.of(m)
        closed = h0_closed(scroll, a, b)
        assert closed.in_regime
        assert closed.value == expected
        assert h0_enum(scroll, a, b) == expected

    def test_h0_outside_regime(self, surface):
        closed = h0_closed(surface, 1, -2)
        assert closed.value == 0
        assert not closed.in_regime
        assert h0_enum(surface, 1, -2) == 2

    def test_h0_negative_a(self, surface):
        assert h0_enum(surface, -1, 10) == 0
        assert not h0_closed(surface, -1, 10).in_regime

    def test_h1_count(self, surface):
        assert h1_count(surface, 1, -3) == 1
        assert h1_count(surface, 1, 0) == 0

    def test_h1_negative_a(self, surface):
        with pytest.raises(PreconditionError):
            h1_count(surface, -1, 0)

    def test_hi_vanishes(self, surface):
        assert hi_vanishes(surface, 1, 1, -2)
        assert not hi_vanishes(surface, 1, 1, -3)
        assert not hi_vanishes(surface, 0, 1, 0)
        assert not hi_vanishes(surface, 1, -1, 0)


class TestScrollBounds:
    """Test cases for the consistency relation and derived bounds"""

    def test_residual_and_bounds(self, nearly_gorenstein_bounds):
        bounds = nearly_gorenstein_bounds
        assert bounds.pacan_residual == 0
        assert bounds.consistent
        assert bounds.ell_from_formula == 4
        assert not bounds.special_b_branch
        assert bounds.gonality_upper == 6
        assert bounds.md_upper == 3
        assert bounds.m1_lower == Fraction(1)

    def test_b_candidates(self, nearly_gorenstein_bounds):
        assert list(nearly_gorenstein_bounds.tau_range()) == [0, 1]
        assert nearly_gorenstein_bounds.b_candidate(0) == -4
        assert nearly_gorenstein_bounds.b_candidates() == {0: -4, 1: -7}

    def test_b_candidate_out_of_range(self, nearly_gorenstein_bounds):
        with pytest.raises(PreconditionError):
            nearly_gorenstein_bounds.b_candidate(2)

    def test_tau_range_ell_equals_d(self):
        bounds = scroll_bounds(g=8, eta=2, mu=1, d=3, ell=3, a=4, b=-4, g_prime=6)
        assert list(bounds.tau_range()) == [-1, 0]

    def test_tau_range_outside(self):
        bounds = scroll_bounds(g=8, eta=2, mu=1, d=3, ell=7, a=4, b=-4, g_prime=6)
        assert list(bounds.tau_range()) == []
        assert bounds.b_candidates() == {}

    def test_admits(self, nearly_gorenstein_bounds):
        assert nearly_gorenstein_bounds.admits_m1(1)
        assert not nearly_gorenstein_bounds.admits_m1(0)
        assert nearly_gorenstein_bounds.admits_md(3)
        assert not nearly_gorenstein_bounds.admits_md(4)

    def test_special_branch(self):
        bounds = scroll_bounds(g=8, eta=2, mu=1, d=3, ell=4, a=4, b=-3, g_prime=6)
        assert bounds.special_b_branch
        assert bounds.ell_from_formula is None
        assert bounds.pacan_residual == 4
        assert not bounds.consistent

    def test_m1_lower_real_root(self):
        value = m1_lower_bound(g=8, d=3, ell=4, a=3)
        assert isinstance(value, float)
        assert value == pytest.approx(0.75)

    def test_to_dict(self, nearly_gorenstein_bounds):
        assert nearly_gorenstein_bounds.to_dict() == {
            'pacan_residual': 0,
            'ell_from_formula': 4,
            'gonality_upper': 6,
            'm1_lower': 1,
            'md_upper': 3,
            'b_candidates': {'0': -4, '1': -7},
        }

    @pytest.mark.parametrize("g, d, ell", [(1, 3, 4), (8, 1, 4), (8, 3, 0)])
    def test_preconditions(self, g, d, ell):
        with pytest.raises(PreconditionError):
            scroll_bounds(g=g, eta=0, mu=0, d=d, ell=ell, a=3, b=0, g_prime=g)


class TestSmallFormulas:
    """Test cases for the remaining closed formulas"""

    def test_d2_genus_poly(self):
        assert d2_genus_poly(6, 10, 3) == 12

    @pytest.mark.parametrize("d, ell, expected", [(3, 2, False), (3, 3, True), (3, 4, True), (3, 5, False)])
    def test_ell_range_ok(self, d, ell, expected):
        assert ell_range_ok(d, ell) is expected

    def test_pencil_scroll_stats(self):
        stats = pencil_scroll_stats(deg=5, h0=2, deg_intersection=3, d=4)
        assert stats.scroll_dim == 4
        assert stats.sing_dim_strict_bound == Fraction(5, 2)
