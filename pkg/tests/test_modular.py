from fractions import Fraction

import pytest

from wittenzeta.constants import zeta_neg_int
from wittenzeta.modular import (QSeries, conjecture_check, conjecture_report, eisenstein, identity_terms,
                                lifted_sides, romik_A_check, scalar_sides)
from wittenzeta.specials import vanishing_identity

F = Fraction


def test_E4_coefficients():
    E4 = eisenstein(4, 5)
    assert E4.coeffs[:4] == (1, 240, 2160, 6720)
    assert E4.weight == 4


def test_E6_coefficients():
    assert eisenstein(6, 3).coeffs == (1, -504, -16632, -122976)


def test_odd_weight_is_zero():
    assert eisenstein(5, 10).is_zero()
    assert eisenstein(7, 10).weight == 7


def test_weight_two_rejected():
    with pytest.raises(ValueError):
        eisenstein(2, 5)


def test_E4_squared_is_E8():
    assert (eisenstein(4, 30) * eisenstein(4, 30)).coeffs == eisenstein(8, 30).coeffs


def test_E4_E6_is_E10():
    assert (eisenstein(4, 20) * eisenstein(6, 20)).coeffs == eisenstein(10, 20).coeffs


def test_E12_is_not_E6_squared():
    # weight 12 has a cusp form, so the engine must see a difference
    assert (eisenstein(6, 5) * eisenstein(6, 5)).coeffs != eisenstein(12, 5).coeffs


def test_series_add_weight_guard():
    with pytest.raises(ValueError):
        eisenstein(4, 3) + eisenstein(6, 3)


def test_truncation_closed():
    a, b = eisenstein(4, 10), eisenstein(6, 6)
    assert (a * b).order == 6


@pytest.mark.parametrize("n", [1, 2])
def test_romik(n):
    assert romik_A_check(n, 30)
    assert conjecture_report("A", n).status == "PROVED"


@pytest.mark.parametrize("n", [1, 2, 3])
def test_conjecture_B(n):
    r = conjecture_report("B", n, 20)
    assert r.holds and r.status == f"CONJECTURE-TESTED(n={n}, Q=20)"


@pytest.mark.parametrize("n", [1, 2])
def test_conjecture_G(n):
    assert conjecture_check("G", n, 12)


def test_conjecture_G_order_15():
    assert conjecture_check("G", 1, 15)


@pytest.mark.parametrize("case,n", [("A", 1), ("A", 2), ("B", 1), ("B", 3), ("G", 1), ("G", 2)])
def test_weights(case, n):
    ident = identity_terms(case, n)
    d = {"A": 1, "B": 2, "G": 4}[case]
    assert ident.weight == (d + 2) * 2 * n + 2
    assert all(k1 + k2 == ident.weight for _, k1, k2 in ident.rhs)


@pytest.mark.parametrize("case,n", [("A", 1), ("A", 2), ("B", 1), ("B", 2), ("B", 3), ("G", 1), ("G", 2)])
def test_constant_term_is_scalar_identity(case, n):
    ident = identity_terms(case, n)
    lhs, rhs = lifted_sides(ident, 0)
    slhs, srhs = scalar_sides(ident)
    assert (lhs.coeffs[0], rhs.coeffs[0]) == (slhs, srhs)
    assert (slhs, srhs) == vanishing_identity(case, n)


def _perturbed(target):
    def zeta(k):
        v = zeta_neg_int(k)
        return v * F(1000001, 1000000) if k == target else v
    return zeta


@pytest.mark.parametrize("case,n,target", [("B", 1, 5), ("G", 1, 9), ("A", 1, 3)])
def test_mutation_detected(case, n, target):
    r = conjecture_report(case, n, 8, zeta=_perturbed(target))
    assert not r.holds
    assert r.first_mismatch is not None
    assert r.status in ("COUNTEREXAMPLE", "FAILED")


def test_report_json():
    j = conjecture_report("G", 2, 12).to_json()
    assert j == {"case": "G", "n": 2, "q_order": 12, "holds": True, "first_mismatch": None,
                 "status": "CONJECTURE-TESTED(n=2, Q=12)"}


def test_no_floats():
    lhs, rhs = lifted_sides(identity_terms("B", 1), 5)
    assert all(isinstance(c, Fraction) for c in lhs.coeffs + rhs.coeffs)
