from __future__ import annotations

import doctest
from fractions import Fraction

import pytest

from unified_wrt import habiro
from unified_wrt.cyclo import CycloElem, CycloModK, LaurentPoly, mod_inverse
from unified_wrt.errors import NonPrimePower, NotCoprime, SmallOrderUnsupported
from unified_wrt.habiro import (
    TaylorJet,
    UnifiedInvariant,
    ev_x,
    ev_z,
    frobenius_Fb,
    frobenius_inverse,
    pi_projections,
    pi_sector,
    qroot_newton,
    sector_of,
    split_prime_power,
    taylor_jet,
)
from unified_wrt.laplace import Q_bk_factor
from unified_wrt.unify import unified_lens


def test_doctests():
    assert doctest.testmod(habiro).failed == 0


def test_sector_selection():
    assert sector_of(3, 2, 5) == 0
    assert sector_of(3, 2, 3) == 1
    assert sector_of(3, 2, 27) == 2
    assert sector_of(3, 2, 81) == 2
    assert split_prime_power(-8) == (2, 3)
    with pytest.raises(NonPrimePower):
        split_prime_power(15)


def test_qroot_is_root():
    for b in (2, 3, 5):
        for n in (1, 7, 11):
            y = qroot_newton(n, 3, b)
            assert y ** b == CycloModK.q(n, 3)
            assert y.in_ring(b)
    with pytest.raises(NotCoprime):
        qroot_newton(9, 1, 3)


def test_frobenius_inverse():
    x = CycloModK.from_poly(LaurentPoly.from_list([1, -2, 0, 3]), 7, 2)
    assert frobenius_Fb(frobenius_inverse(x, 3), 3) == x


def test_ev_atoms():
    for r in (5, 7, 11):
        assert ev_x(3, r) == CycloElem.monomial(r, mod_inverse(3, r))
    assert ev_z(9, 2, 15).is_zero()
    assert not ev_z(9, 3, 15).is_zero()


def test_invariant_json_roundtrip():
    inv = unified_lens(9, 2, "0bar") * UnifiedInvariant.from_factor(Q_bk_factor(-3, 1))
    back = UnifiedInvariant.from_json(inv.to_json())
    for r in (9, 15, 27):
        assert back.evaluate(r) == inv.evaluate(r)


def test_projections():
    inv = unified_lens(9, 2, "0") + unified_lens(9, 2, "0bar")
    for r in (5, 7, 9, 27):
        j = sector_of(3, 2, r)
        full = inv.evaluate(r)
        assert pi_sector(inv, 3, j).evaluate(r) == full
        eps = "0" if j == 0 else "0bar"
        assert pi_projections(inv, 3, eps).evaluate(r) == full


def test_guarded_value():
    val = Q_bk_factor(3, 2)
    inv = UnifiedInvariant.from_factor(val)
    with pytest.raises(SmallOrderUnsupported):
        inv.evaluate(5)
    assert inv.evaluate(1) == CycloElem.zero(1)


def test_taylor_jet_binomial():
    jet = taylor_jet(LaurentPoly.mono(Fraction(3, 5)), 1, 4)
    assert [c.coeffs[0] for c in jet.coeffs] == [1, Fraction(3, 5), Fraction(-3, 25),
                                                 Fraction(7, 125)]
    one = TaylorJet.const(1, 4, 1)
    assert jet * jet.inverse() == one
