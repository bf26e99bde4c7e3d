"""Closed formulas vs the recursion oracle, the fast KL path, and the
identity reports."""

import pytest

from bruhat_forge import closedform, hecke, regions, weyl
from bruhat_forge.closedform import (
    appendix_identity_check,
    kl_basis_theta,
    kl_basis_theta1,
    kl_basis_theta2,
    kl_basis_x,
    kl_fast,
    product_identity_check,
)
from bruhat_forge.hecke import N_element, kl_basis, standard_basis
from bruhat_forge.laurent import LaurentPoly, QPoly
from bruhat_forge.regions import theta, theta1, theta2, x_chain
from bruhat_forge.weyl import RHO, SYMMETRY_GROUP, from_word, identity

V = LaurentPoly({1: 1})
V2 = LaurentPoly({2: 1})
RHO2 = RHO * RHO


def test_x_formula_structure():
    assert kl_basis_x(2) == N_element(x_chain(2))
    assert kl_basis_x(4) == N_element(x_chain(4)) + N_element(x_chain(1)).scale(V)
    tail = x_chain(1)
    assert kl_basis_x(6) == (
        N_element(x_chain(6))
        + N_element(x_chain(3)).scale(V)
        + standard_basis(tail.left_mult(0).left_mult(1)).scale(V)
        + standard_basis(tail.left_mult(0)).scale(V2)
    )
    assert kl_basis_x(7) == N_element(x_chain(7)) + N_element(x_chain(4)).scale(V)
    with pytest.raises(ValueError):
        kl_basis_x(0)


def test_theta_formula_structure():
    assert kl_basis_theta((0, 0)) == N_element(theta((0, 0)))
    assert kl_basis_theta((1, 1)) == N_element(theta((1, 1))) + N_element(
        theta((0, 0))
    ).scale(V2)
    assert kl_basis_theta((2, 1)) == N_element(theta((2, 1))) + N_element(
        theta((1, 0))
    ).scale(V2)


def test_theta1_formula_structure():
    assert kl_basis_theta1((0, 0)) == N_element(theta1((0, 0)))
    assert kl_basis_theta1((1, 0)) == N_element(theta1((1, 0))) + N_element(
        theta((0, 0))
    ).scale(V)
    assert kl_basis_theta1((1, 1)) == (
        N_element(theta1((1, 1)))
        + kl_basis_theta((0, 1)).scale(V)
        + kl_basis_theta((1, 0)).scale(V)
    )


def test_theta2_formula_structure():
    expected00 = N_element(theta2((0, 0))) + N_element(weyl.generator(0)).scale(V2)
    assert kl_basis_theta2((0, 0), 1) == expected00
    assert kl_basis_theta2((0, 0), 2) == expected00
    v1 = kl_basis_theta2((1, 0), 1)
    expected10 = (
        N_element(theta2((1, 0)))
        + hecke.M_element(theta((0, 0)).left_mult(0), RHO.apply(theta((0, 0)))).scale(V)
        + hecke.apply_symmetry(RHO2, kl_basis_theta1((0, 0))).scale(V)
    )
    assert v1 == expected10
    with pytest.raises(ValueError):
        kl_basis_theta2((1, 1), 3)


@pytest.mark.parametrize("n", range(1, 12))
def test_x_family_matches_oracle(n):
    assert kl_basis_x(n) == kl_basis(x_chain(n))


@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("n", range(4))
def test_theta_families_match_oracle_small(m, n):
    if 2 * m + 2 * n + 5 <= 13:
        assert kl_basis_theta((m, n)) == kl_basis(theta((m, n)))
        assert kl_basis_theta1((m, n)) == kl_basis(theta1((m, n)))
        oracle = kl_basis(theta2((m, n)))
        assert kl_basis_theta2((m, n), 1) == oracle
        assert kl_basis_theta2((m, n), 2) == oracle


def test_theta2_versions_agree():
    for m in range(4):
        for n in range(4):
            assert kl_basis_theta2((m, n), 1) == kl_basis_theta2((m, n), 2)


def test_coefficients_positive_below_top():
    for build, idx in (
        (kl_basis_x, 9),
        (kl_basis_theta, (1, 2)),
        (kl_basis_theta1, (2, 1)),
        (kl_basis_theta2, (1, 1)),
    ):
        h = build(idx)
        top = max(h.support(), key=lambda w: w.length)
        for x, p in h.items():
            if x != top:
                assert p.is_nonneg() and p.min_exp() >= 1


def test_kl_fast_examples():
    assert str(kl_fast(identity(), from_word("1234"))) == "1 + q"
    assert str(kl_fast(theta((0, 0)), theta((1, 1)))) == "1 + q"
    w = from_word("2101")
    assert kl_fast(w, w) == QPoly.one()
    assert kl_fast(from_word("0"), theta((0, 0))).is_zero


def test_kl_fast_matches_oracle_to_length_12():
    for y in weyl.enumerate_up_to_length(12):
        for x in weyl.lower_interval(y):
            assert kl_fast(x, y) == hecke.kl_polynomial(x, y)[1]
    assert closedform.fallback_log() == ()


def test_kl_fast_symmetry_invariance():
    ball = weyl.enumerate_up_to_length(7)
    for i, y in enumerate(ball):
        lower = weyl.lower_interval(y)
        x = lower[(3 * i) % len(lower)]
        p = kl_fast(x, y)
        for tau in SYMMETRY_GROUP:
            assert kl_fast(tau.apply(x), tau.apply(y)) == p


def test_inversion_identity():
    def rho_pow(j):
        out = weyl.IDENTITY_SYMMETRY
        for _ in range(j % 3):
            out = RHO * out
        return out

    for m in range(5):
        for n in range(5):
            for j in range(3):
                lhs = rho_pow(j).apply(theta((m, n))).inverse()
                rhs = rho_pow(j + n - m).apply(theta((n, m)))
                assert lhs == rhs, (m, n, j)


def test_appendix_identity_report():
    rep = appendix_identity_check(1, 1)
    assert rep["holds"] and rep["equal"]
    assert rep["content_left"] == rep["content_right"] == 96
    assert rep["content_formula"] == 96
    assert rep["left_monotonic"] and rep["coefficientwise_geq"]
    anchors = rep["anchors"]
    assert anchors["theta(m,n)s"]["left"] == "1"
    assert anchors["theta(m-1,n)"]["left"] == "v^3 + v"
    assert anchors["theta(m,n-1)"]["left"] == "v^3 + v"
    assert anchors["theta(m-1,n-1)s"]["left"] == "v^4 + 2v^2"
    assert rep["witnesses"] == []
    for m in range(1, 4):
        for n in range(1, 4):
            assert appendix_identity_check(m, n)["holds"]
    with pytest.raises(ValueError):
        appendix_identity_check(0, 1)


def test_product_identity_reports():
    for idx in ((0, 0), (1, 0), (0, 1), (1, 1)):
        rep = product_identity_check(idx)
        assert rep["holds"], rep
        assert set(rep["checks"]) == {"s0 * theta", "theta * s", "s0 * theta * s"}


def test_left_product_with_N_splits_off_M_term():
    # the step behind the second theta2 formula: multiplying the
    # lower-interval sum of theta(m,n)s by the canonical generator of s0
    # on the left yields the bigger lower-interval sum plus v times the
    # union sum over the two flanking family elements
    rho2 = RHO * RHO
    for m in range(1, 4):
        for n in range(1, 4):
            left = hecke.mult_kl_s(N_element(theta1((m, n))), 0, "left")
            right = N_element(theta2((m, n))) + hecke.M_element(
                RHO.apply(theta1((m, n - 1))), rho2.apply(theta1((m - 1, n)))
            ).scale(V)
            assert left == right, (m, n)


def test_theta1_content_equation():
    # content bookkeeping from the single-index case: multiplying by a
    # canonical generator doubles content, and the split-off pieces add
    # up to the same total 2(3m^2 + 9m + 6)
    for m in range(1, 5):
        lhs = hecke.mult_kl_s(N_element(theta((m, 0))), regions.s_mn((m, 0)), "right")
        assert hecke.content(lhs) == 2 * (3 * m * m + 9 * m + 6)
        assert lhs == N_element(theta1((m, 0))) + N_element(theta((m - 1, 0))).scale(V)
