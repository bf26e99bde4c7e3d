"""Hecke algebra: bases, the canonical recursion, N/M sums, the
coefficient apparatus, and the positivity/duality invariants."""

import pytest

from bruhat_forge import hecke, regions, weyl
from bruhat_forge.hecke import (
    G_coefficient,
    HeckeElement,
    M_element,
    N_element,
    bar_involution,
    content,
    hecke_geq,
    is_monotonic,
    kl_basis,
    kl_polynomial,
    mult_kl_s,
    mult_std,
    standard_basis,
)
from bruhat_forge.laurent import ONE, V, LaurentPoly, QPoly
from bruhat_forge.weyl import ResourceLimitError, from_word, generator, identity

ID = identity()
S1 = generator(1)
T00 = from_word("121")
X4 = from_word("1234")
T11 = from_word("1234321")


def test_standard_basis():
    for w in (ID, S1, T00):
        h = standard_basis(w)
        assert h.support() == (w,)
        assert h.coefficient(w) == ONE


def test_mult_std_examples():
    assert mult_std(standard_basis(ID), 1) == standard_basis(S1)
    sq = mult_std(standard_basis(S1), 1)
    assert sq.coefficient(ID) == ONE
    assert sq.coefficient(S1) == LaurentPoly({-1: 1, 1: -1})
    assert mult_std(standard_basis(S1), 2) == standard_basis(from_word("12"))


def test_mult_kl_s_examples():
    for side in ("left", "right"):
        b = mult_kl_s(standard_basis(ID), 1, side)
        assert b == kl_basis(S1)
    twice = mult_kl_s(kl_basis(S1), 1)
    assert twice == kl_basis(S1).scale(LaurentPoly({1: 1, -1: 1}))
    t00s = mult_kl_s(kl_basis(T00), 0)
    assert t00s == kl_basis(from_word("1210"))


def test_mult_sides_differ():
    h = standard_basis(from_word("12"))
    assert mult_std(h, 1, "left") != mult_std(h, 1, "right")
    with pytest.raises(ValueError):
        mult_std(h, 1, "up")


def test_kl_basis_examples():
    assert kl_basis(S1) == standard_basis(S1) + standard_basis(ID).scale(V)
    assert kl_basis(X4) == N_element(X4) + N_element(S1).scale(V)
    assert kl_basis(T11) == N_element(T11) + N_element(T00).scale(LaurentPoly({2: 1}))


def test_kl_basis_cap():
    with pytest.raises(ResourceLimitError):
        kl_basis(from_word("1234"), max_length=3)


def test_kl_polynomial_examples():
    for w in (ID, T00, X4):
        h, p = kl_polynomial(w, w)
        assert h == ONE and p == QPoly.one()
    h, p = kl_polynomial(ID, X4)
    assert h == LaurentPoly({4: 1, 2: 1}) and str(p) == "1 + q"
    h, p = kl_polynomial(ID, T11)
    assert h == LaurentPoly({7: 1, 5: 1}) and str(p) == "1 + q"
    h, p = kl_polynomial(generator(0), T00)
    assert h.is_zero and p.is_zero


def test_N_element_examples():
    assert N_element(ID) == standard_basis(ID)
    assert N_element(S1) == kl_basis(S1)
    assert content(N_element(T00)) == 6


def test_M_element_examples():
    for w in (S1, T00, X4):
        assert M_element(w, w) == N_element(w)
    # symmetric exactly when the lengths agree
    ball = weyl.enumerate_up_to_length(4)
    for i, x in enumerate(ball):
        y = ball[(7 * i + 3) % len(ball)]
        assert (M_element(x, y) == M_element(y, x)) == (x.length == y.length)


def test_M_content_formula_value():
    # |union of the two flanking lower intervals| at (m, n) = (1, 1)
    a = weyl.RHO.apply(regions.theta1((1, 0)))
    b = (weyl.RHO * weyl.RHO).apply(regions.theta1((0, 1)))
    assert content(M_element(a, b)) == 38


def test_G_coefficient():
    assert G_coefficient(ID, standard_basis(ID)) == ONE
    assert G_coefficient(S1, standard_basis(ID)).is_zero
    assert G_coefficient(T00, kl_basis(T11)) == LaurentPoly({4: 1, 2: 1})


def test_content_examples():
    for w in (ID, S1, T11):
        assert content(standard_basis(w)) == 1
    assert content(N_element(regions.theta1((0, 0)))) == 12
    assert content(N_element(regions.theta2((0, 0)))) == 22


def test_content_multiplicative_at_v_equals_one():
    h = N_element(T00)
    assert content(mult_kl_s(h, 0)) == 2 * content(h)


def test_is_monotonic_examples():
    for w in weyl.enumerate_up_to_length(5):
        assert is_monotonic(N_element(w))
    for w in weyl.enumerate_up_to_length(4):
        assert is_monotonic(kl_basis(w))
    assert not is_monotonic(standard_basis(S1))
    assert not is_monotonic(standard_basis(ID).scale(LaurentPoly({0: -1})))


def test_hecke_geq_examples():
    h = kl_basis(T00)
    assert hecke_geq(h, h)
    assert hecke_geq(N_element(T00), standard_basis(T00))
    assert not hecke_geq(standard_basis(T00), N_element(T00))


def test_equality_principle():
    # coefficientwise order plus equal content forces equality
    a = N_element(X4)
    b = N_element(X4)
    assert hecke_geq(a, b) and content(a) == content(b) and a == b


def test_unitriangularity_to_length_12():
    for w in weyl.enumerate_up_to_length(12):
        basis = kl_basis(w)
        assert basis.coefficient(w) == ONE
        for x, p in basis.items():
            if x == w:
                continue
            assert x.length < w.length
            assert p.is_nonneg() and p.min_exp() >= 1, (x.word(), w.word())


def test_kl_basis_support_is_the_full_lower_interval():
    # constant terms of the q-polynomials are 1, so no coefficient
    # below the top can vanish
    for w in weyl.enumerate_up_to_length(9):
        assert kl_basis(w).support() == weyl.lower_interval(w)


def test_round_trip_h_and_p_to_length_12():
    from bruhat_forge.laurent import from_q, to_q

    for w in weyl.enumerate_up_to_length(12):
        basis = kl_basis(w)
        for x, h in basis.items():
            ldiff = w.length - x.length
            assert from_q(to_q(h, ldiff), ldiff) == h


def test_bar_self_duality_to_length_10():
    for w in weyl.enumerate_up_to_length(10):
        basis = kl_basis(w)
        assert bar_involution(basis) == basis, w.word()


def test_bar_on_standard_basis_is_involutive():
    for w in weyl.enumerate_up_to_length(5):
        h = standard_basis(w)
        assert bar_involution(bar_involution(h)) == h


def test_apply_symmetry_on_hecke():
    for tau in weyl.SYMMETRY_GROUP:
        img = hecke.apply_symmetry(tau, kl_basis(T00))
        assert img == kl_basis(tau.apply(T00))


def test_json_round_trip():
    h = kl_basis(X4)
    obj = h.to_json_obj()
    assert obj == sorted(obj, key=lambda r: (len(r["element"]), r["element"]))
    assert HeckeElement.from_json_obj(obj) == h
