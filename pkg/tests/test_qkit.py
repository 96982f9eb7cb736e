from __future__ import annotations

import doctest
from fractions import Fraction

import pytest

from unified_wrt import qkit
from unified_wrt.cyclo import LaurentPoly
from unified_wrt.errors import BadInput, IntegralityViolation, NonPolynomialCoefficient
from unified_wrt.qkit import (
    A_poly,
    HabiroCoeffTable,
    habiro_C_from_jones,
    integrality_check,
    jones_table_from_json,
    jones_table_to_json,
    meridian_jones,
    pochhammer,
    qbinom,
    qnum,
    unknot_table,
    unlink_jones,
)

q = LaurentPoly.mono(1)


def test_doctests():
    assert doctest.testmod(qkit).failed == 0


def test_qnum_values():
    assert qnum(1) == LaurentPoly.one()
    assert qnum(-2) == -qnum(2)
    assert qnum(2) * qnum(2) == qnum(3) + 1


def test_qbinom_pascal():
    half = LaurentPoly.mono
    for n in range(1, 8):
        for k in range(1, n):
            rhs = half(Fraction(n - k, 2)) * qbinom(n - 1, k - 1) + half(Fraction(-k, 2)) * qbinom(n - 1, k)
            assert qbinom(n, k) == rhs
            assert qbinom(n, k) == qbinom(n, n - k)


def test_pochhammer_zero_factor():
    assert pochhammer(0, 1, 3).is_zero()
    assert pochhammer(1, 1, 0) == LaurentPoly.one()
    with pytest.raises(BadInput):
        pochhammer(1, 1, -1)


def test_A_vanishes_above_diagonal():
    for n in range(1, 6):
        assert A_poly(n, n).is_zero()
        assert A_poly(n, n - 1) != LaurentPoly.zero()
        assert A_poly(n, 0) == (LaurentPoly({n: 1, -n: 1}) - 2) / (1 - q) ** 2


def test_unknot_coefficients():
    table = habiro_C_from_jones(unlink_jones(1, 6), 1, 6)
    assert table.entries == {(0,): q}
    assert table.entries == unknot_table().entries


def test_meridian_expansion_roundtrip():
    for j in (1, 3, 5):
        J = meridian_jones(6, j)
        table = habiro_C_from_jones(J, 1, 6, (j,))
        for n, v in J.items():
            assert table.expand(n) == v * qnum(n[0])
        for k, c in table.nonzero():
            assert integrality_check(c, max(k))
        assert HabiroCoeffTable.from_json(table.to_json()) == table


def test_integrality_check_rejects():
    assert integrality_check(LaurentPoly.zero(), 3)
    assert not integrality_check(q, 1)
    assert not integrality_check(LaurentPoly.mono(Fraction(1, 2)), 0)


def test_inconsistent_table_rejected():
    J = unlink_jones(2, 4)
    J[(3, 2)] = J[(3, 2)] + q
    with pytest.raises((NonPolynomialCoefficient, IntegralityViolation)):
        habiro_C_from_jones(J, 2, 4)


def test_jones_json_roundtrip():
    J = meridian_jones(4, 3)
    values, arity, colors = jones_table_from_json(jones_table_to_json(J, 1, (3,)))
    assert values == J and arity == 1 and colors == (3,)
