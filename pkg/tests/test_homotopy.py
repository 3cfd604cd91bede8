from __future__ import annotations

import math

import pytest

from gaugecalc.abelian import AbGroupDescriptor as D
from gaugecalc.homotopy import (
    GaugeQuery,
    OutOfRange,
    Rejected,
    bott_samelson_multiple,
    decomposition_sphere_pi,
    gauge_components,
    gauge_pi,
    gcd_only_form,
    group_pi,
    moduli_pi,
    moduli_range,
    sphere_gauge_pi,
    sphere_gauge_pi_sun,
)
from gaugecalc.lie_catalog import SU, SimpleType
from gaugecalc.presentation import circle_quotient, circle_times, unitary


def test_bott_multiple():
    # <alpha_1, alpha_{2n-1}> has order n! / (n-1)! = n
    for n in range(2, 9):
        assert math.factorial(n) // bott_samelson_multiple(n) == n


def test_group_pi():
    assert group_pi(unitary(3), 1) == D.integers()
    assert group_pi(unitary(3), 2) == D.zero()
    assert group_pi(unitary(3), 6) == D.cyclic(6)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("k", [1, 2, 3, 5, 6, 12, 20])
def test_pi_2n_minus_2(n, k):
    d = sphere_gauge_pi(unitary(n), k, 2 * n - 2)
    assert d == D.cyclic(math.factorial(n - 1) * math.gcd(k, n))


def test_gcd_only_form_disagrees_at_s_divides_k():
    # for U(3), k = 3: decomposition gives pi_4(G) + pi_6(G) = Z/6, the gcd-only form Z/3
    assert sphere_gauge_pi(unitary(3), 3, 4) == D.cyclic(6)
    assert gcd_only_form(unitary(3), 3) == D.cyclic(3)


def test_les_branch_low_degrees():
    # i = 1: coker(pi_2 G -> pi_3 G) = Z extended by ker(pi_1 G -> pi_2 G) = Z
    assert sphere_gauge_pi_sun(unitary(3), 1, 1) == D.integers(2)
    assert sphere_gauge_pi_sun(unitary(3), 1, 2) == D.zero()
    assert sphere_gauge_pi_sun(unitary(3), 1, 3) == D.integers(2)
    assert sphere_gauge_pi_sun(unitary(3), 1, 4) == D.cyclic(2)


def test_genus_two_unitary_three():
    # pi_2(G)^4 = 0 plus pi_1(G) + pi_3(G) from the sphere part
    q = GaugeQuery(unitary(3), 2, 3, 1)
    assert gauge_pi(q) == D.integers(2)
    assert gauge_pi(q).render() == "Z^2"


def test_surface_loops():
    q = GaugeQuery(unitary(4), 2, 4, 2)
    # pi_3(G)^4 + pi_2(G) + pi_4(G)
    assert gauge_pi(q) == D.integers(4)


def test_unknown_outside_su():
    p = circle_quotient(SimpleType("E7"), "c")
    d = sphere_gauge_pi(p, 1, 3)
    assert d.is_unknown


def test_components():
    assert gauge_components(unitary(3), 0, 1) == D.zero()
    assert gauge_components(unitary(3), 3, 1) == D.integers(6)


def test_moduli():
    assert moduli_pi(4, 1, 10, 3) == D.integers(20)
    assert moduli_pi(4, 4, 10, 7) == D.integers(20) + D.cyclic(24)
    assert moduli_range(4, 10) == (3, 52)
    with pytest.raises(Rejected):
        moduli_pi(2, 2, 10, 3)
    with pytest.raises(OutOfRange):
        moduli_pi(4, 1, 10, 2)
    with pytest.raises(OutOfRange):
        moduli_pi(4, 1, 10, 53)


def test_trivial_c_uses_decomposition():
    p = circle_times(SU(3))
    assert sphere_gauge_pi(p, 7, 3) == decomposition_sphere_pi(p, 3)


def test_sphere_base_ignores_genus():
    q = GaugeQuery(unitary(3), 5, 1, 2, "sphere")
    assert gauge_pi(q) == sphere_gauge_pi(unitary(3), 1, 2)
    with pytest.raises(ValueError):
        GaugeQuery(unitary(3), 1, 1, 1, "projective")
