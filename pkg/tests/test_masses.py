import math
from fractions import Fraction

import pytest

from toda_spectrum import classical
from toda_spectrum.masses import (
    E8_GOLDEN_PAIRS,
    E8_MASS_QUARTICS,
    E8_QUARTIC_LABELS,
    GOLDEN_RATIO,
    ConsistencyError,
    MassMethod,
    closed_form_mass_scale,
    consistency_check,
    e8_identity_suite,
    mass_char_poly,
    mass_matrix,
    mass_matrix_embedded,
    mass_ratio_spread,
    perron_components,
    spectrum_method1,
    spectrum_method2,
)
from toda_spectrum.root_systems import root_system
from toda_spectrum.spectral import jacobi_eigen

ADE = classical.simply_laced_algebras(8)

# heaviest E8 squared mass, frozen from evaluating the closed-form scale
# 2 sqrt(3) sin(6 pi/30)/sin(pi/30)
E8_HEAVIEST_MASS_SQUARE = 19.479362636440847


# ---------------------------------------------------------------------------
# exact mass matrix carrier
# ---------------------------------------------------------------------------


def test_e8_mass_charpoly_exact():
    poly = mass_char_poly("E8")
    assert [int(c) for c in poly.coefficients] == [
        518400,
        -1296000,
        1166400,
        -518400,
        127440,
        -18000,
        1440,
        -60,
        1,
    ]


def test_e8_mass_trace_is_twice_coxeter():
    assert mass_matrix("E8").kg.trace() == 60


@pytest.mark.parametrize("name", ADE)
def test_ade_mass_trace_is_twice_coxeter(name):
    rs = root_system(name)
    assert mass_matrix(name).kg.trace() == 2 * rs.coxeter_number


@pytest.mark.parametrize("name", classical.all_algebras(8))
def test_mass_matrix_eigenvalues_positive(name):
    eigs = jacobi_eigen(mass_matrix_embedded(name)).eigenvalues
    assert min(eigs) > 0.0


@pytest.mark.parametrize("name", ["A3", "B3", "C4", "D4", "F4", "G2", "E6"])
def test_embedded_matrix_matches_exact_carrier(name):
    # the symmetric embedded matrix and the exact rational carrier must share
    # their spectrum: compare eigenvalues to the exact charpoly's roots by
    # evaluating the polynomial at each eigenvalue
    poly = mass_char_poly(name)
    for eig in jacobi_eigen(mass_matrix_embedded(name)).eigenvalues:
        assert abs(poly.evaluate(eig)) / poly.magnitude_at(eig) <= 1e-12


def test_a1_mass_matrix_is_four():
    mm = mass_matrix("A1")
    assert mm.kg.entries == ((Fraction(4),),)
    spec = spectrum_method2("A1")
    assert abs(spec.masses[0] - 2.0) <= 1e-14


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


def test_a1_both_methods_give_mass_two():
    s1 = spectrum_method1("A1")
    s2 = spectrum_method2("A1")
    assert abs(s1.masses[0] - 2.0) <= 1e-12
    assert abs(s2.masses[0] - 2.0) <= 1e-12


def test_a2_masses_equal():
    spec = spectrum_method2("A2")
    assert abs(spec.masses[0] - spec.masses[1]) <= 1e-12


def test_methods_tagged():
    assert spectrum_method1("A2").method is MassMethod.PERRON_FROBENIUS
    assert spectrum_method2("A2").method is MassMethod.MASS_MATRIX


def test_e8_heaviest_mass_square():
    s2 = spectrum_method2("E8")
    assert abs(max(s2.mass_squares) - E8_HEAVIEST_MASS_SQUARE) <= 1e-9
    # node 5 carries the heaviest particle
    assert s2.mass_squares[4] == max(s2.mass_squares)


def test_e8_spectrum_sum_and_product_match_exact_coefficients():
    poly = mass_char_poly("E8")
    assert poly.coefficients[7] == -60  # sum of the squared masses, exactly
    assert poly.coefficients[0] == 518400  # product, exactly
    squares = spectrum_method2("E8").mass_squares
    assert abs(sum(squares) - 60.0) <= 1e-9
    product = 1.0
    for s in squares:
        product *= s
    assert abs(product - 518400.0) / 518400.0 <= 1e-9


def test_e8_method1_matches_method2_node_by_node():
    s1 = spectrum_method1("E8")
    s2 = spectrum_method2("E8")
    for a, b in zip(s1.mass_squares, s2.mass_squares):
        assert abs(a - b) / b <= 1e-9


def test_e8_mass_scale_closed_form():
    assert abs(closed_form_mass_scale() - E8_HEAVIEST_MASS_SQUARE) <= 1e-12


def test_rescaling_changes_only_global_factor():
    base = spectrum_method1("E8")
    for kind in ("max", "first", "unit", "absolute"):
        scaled = base.rescaled(kind)
        for i in range(1, 8):
            want = base.masses[i] / base.masses[0]
            got = scaled.masses[i] / scaled.masses[0]
            assert abs(got - want) <= 1e-12 * want
    assert abs(max(base.rescaled("max").masses) - 1.0) <= 1e-15
    h = root_system("E8").coxeter_number
    assert abs(min(base.rescaled("first").masses) - 2 * math.sin(math.pi / h)) <= 1e-12


def test_rescaled_rejects_unknown_kind():
    with pytest.raises(ValueError):
        spectrum_method1("A2").rescaled("nope")


# ---------------------------------------------------------------------------
# cross-method consistency
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("name", ADE)
def test_consistency_simply_laced(name):
    assert consistency_check(name) <= 1e-9


def test_consistency_a1_zero():
    assert consistency_check("A1") <= 1e-13


def test_consistency_d4():
    assert consistency_check("D4") <= 1e-9


def test_consistency_reports_without_asserting_for_b3():
    spread = consistency_check("B3")  # must not raise
    assert spread > 0.1  # the two routes genuinely disagree here


def test_consistency_error_is_consistency_specific():
    assert issubclass(ConsistencyError, RuntimeError)


# ---------------------------------------------------------------------------
# E8 identity suite
# ---------------------------------------------------------------------------


def test_e8_identity_suite_all_pass():
    report = e8_identity_suite()
    assert report.all_passed
    names = [c.name for c in report]
    assert names == [
        "golden-ratio-mass-ratios",
        "cross-product-identity",
        "mass-scale-constant-term",
        "mass-scale-closed-form",
        "quartic-root-partition",
    ]


def test_golden_ratio_pairs():
    u = perron_components("E8")
    for heavy, light in E8_GOLDEN_PAIRS:
        ratio = u[heavy - 1] / u[light - 1]
        assert abs(ratio - GOLDEN_RATIO) / GOLDEN_RATIO <= 1e-10
    assert abs(GOLDEN_RATIO - (1 + math.sqrt(5)) / 2) == 0.0


def test_cross_product_identity_value():
    # the common value of u2*u5*u7*u8 and u1*u3*u4*u6; multiplying the
    # four-decimal reference row gives 0.07073 (rounding noise included)
    u = perron_components("E8")
    prod_a = u[1] * u[4] * u[6] * u[7]
    prod_b = u[0] * u[2] * u[3] * u[5]
    assert abs(prod_a - prod_b) / prod_b <= 1e-10
    assert abs(prod_a - 0.0707158494968715) <= 1e-12
    assert abs(prod_a - 0.07073) <= 2e-5


def test_scale_constant_term_with_720():
    u = perron_components("E8")
    scale = closed_form_mass_scale()
    prod = u[1] * u[4] * u[6] * u[7]
    assert abs(scale**4 * prod**2 - 720.0) / 720.0 <= 1e-8


def test_quartic_root_partition_matches_method1_labels():
    # every particle's squared mass is a root of its designated quartic, and
    # the swapped designation fails decisively
    s1 = spectrum_method1("E8")
    for quartic, labels in zip(E8_MASS_QUARTICS, E8_QUARTIC_LABELS):
        for label in labels:
            msq = s1.mass_squares[label - 1]
            assert abs(quartic.evaluate(msq)) / quartic.magnitude_at(msq) <= 1e-6
    swapped_residual = min(
        abs(quartic.evaluate(s1.mass_squares[label - 1]))
        for quartic, labels in zip(E8_MASS_QUARTICS, reversed(E8_QUARTIC_LABELS))
        for label in labels
    )
    assert swapped_residual > 100.0


@pytest.mark.parametrize("name", ["A3", "D4", "E6", "E7"])
def test_mass_ratio_spread_small_everywhere_simply_laced(name):
    assert mass_ratio_spread(name) <= 1e-11
