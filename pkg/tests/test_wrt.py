from __future__ import annotations

import doctest
from fractions import Fraction
from math import gcd

import pytest

from unified_wrt import wrt
from unified_wrt.cyclo import CycloElem, mod_inverse
from unified_wrt.errors import BadInput, NonPrimePower, NotCoprime
from unified_wrt.wrt import (
    EPS0,
    EPS0BAR,
    LensPiece,
    LinkingData,
    ManifoldSpec,
    bezout_hat,
    cable_rewrite,
    cont_frac_ge2,
    d_eps,
    dedekind_sum,
    flip_closed,
    gr_eps,
    gr_q,
    jacobi_symbol,
    lens_tau_prime_closed,
    prime_power,
    tau,
    tau_L1,
    tau_lens,
    tau_prime,
    tau_prime_lens,
)


def test_doctests():
    assert doctest.testmod(wrt).failed == 0


def test_dedekind_small_values():
    assert dedekind_sum(1, 3) == Fraction(1, 18)
    assert dedekind_sum(1, 5) == Fraction(1, 5)
    assert dedekind_sum(2, 5) == 0
    # s(a,b) = s(a,-b) = -s(-a,b)
    assert dedekind_sum(2, -7) == dedekind_sum(2, 7) == -dedekind_sum(-2, 7)


def test_bezout_hat():
    for b in (5, -5, 9, -8):
        for a in range(-abs(b) + 1, abs(b)):
            if a == 0 or gcd(a, b) != 1:
                continue
            ahat, bhat = bezout_hat(a, b)
            assert b * bhat + a * ahat == 1
            assert 0 < (1 if a > 0 else -1) * ahat < abs(b)


def test_cont_frac():
    assert cont_frac_ge2(5, 1) == [5]
    assert cont_frac_ge2(7, 2) == [2, 4]
    with pytest.raises(BadInput):
        cont_frac_ge2(5, 7)


def test_d_eps():
    assert d_eps(9, 2, EPS0) == 1
    assert d_eps(9, 2, EPS0BAR) == 5
    assert d_eps(8, 3, EPS0BAR) % 2 == 1
    with pytest.raises(NotCoprime):
        d_eps(6, 3, EPS0)


def test_jacobi_multiplicative():
    for y in range(1, 40, 2):
        for x1 in range(-5, 6):
            for x2 in range(-5, 6):
                assert jacobi_symbol(x1 * x2, y) == jacobi_symbol(x1, y) * jacobi_symbol(x2, y)


def test_prime_power():
    assert prime_power(-9) == (3, 2)
    assert prime_power(1) == (1, 0)
    with pytest.raises(NonPrimePower):
        prime_power(12)


def test_lens_piece_validation():
    with pytest.raises(NotCoprime):
        LensPiece(6, 4)
    with pytest.raises(BadInput):
        LensPiece(5, 2, 2)


def test_S3_is_one():
    for r in (3, 5, 7):
        assert tau_prime(ManifoldSpec([]), r) == CycloElem.one(r)
        assert tau_lens(1, 1, 1, r) == CycloElem.one(r)


def test_L1_nonzero():
    for b in (2, 3, 4, 5, 9, -3, -8):
        for r in range(3, 26, 2):
            assert not tau_L1(b, r).is_zero()


def test_L52_closed_value():
    for r in range(3, 30, 2):
        if r % 5:
            assert tau_prime_lens(5, 2, 1, r) == CycloElem.monomial(r, 3 * mod_inverse(5, r))


def test_closed_matches_brute_spot():
    for b, a, d in ((9, 2, 5), (-8, 3, 3), (7, -3, 1), (4, 1, 1)):
        for r in (3, 9, 11, 15):
            assert lens_tau_prime_closed(b, a, d, r) == tau_prime_lens(b, a, d, r)


def test_closed_rejects_composite():
    with pytest.raises(NonPrimePower):
        lens_tau_prime_closed(6, 1, 1, 7)


def test_tau_multiplicative():
    m = ManifoldSpec([LensPiece(3, 1), LensPiece(-5, 2)])
    for r in (7, 11, 15):
        assert tau(m, r) == tau_lens(3, 1, 1, r) * tau_lens(-5, 2, 1, r)


def test_tau_conjugation():
    for b, a in ((5, 2), (9, 4), (8, 3)):
        for r in (7, 9, 15):
            assert tau_lens(-b, a, 1, r) == tau_lens(b, a, 1, r).conj()


def test_tau_prime_sign_relation():
    # the normalizer is shared by both signs, so the relation carries a ratio
    for b, a in ((5, 2), (9, 4)):
        for r in (7, 9, 15):
            assert tau_prime_lens(-b, a, 1, r) == tau_lens(b, a, 1, r).conj() / tau_L1(b, r)


def test_manifold_json_roundtrip():
    m = ManifoldSpec([LensPiece(9, 2, 5), LensPiece(-3, 1)])
    assert ManifoldSpec.from_json(m.to_json()) == m


def test_gradings_cabling():
    D = LinkingData(1, 2, ((1, -2),), ((3, 1), (1, -2)), (5, 4))
    g = (gr_eps(D), gr_q(D))
    assert (gr_eps(flip_closed(D, 0)), gr_q(flip_closed(D, 0))) == g
    for V in cable_rewrite(D, 0):
        assert (gr_eps(V), gr_q(V)) == g
    with pytest.raises(BadInput):
        LinkingData(0, 2, (), ((0, 1), (2, 0)), (1, 1))
