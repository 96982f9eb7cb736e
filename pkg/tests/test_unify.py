from __future__ import annotations

from fractions import Fraction

import pytest

from unified_wrt.cyclo import CycloElem, LaurentPoly, mod_inverse
from unified_wrt.errors import IntegralityViolation
from unified_wrt.laplace import ev_Q
from unified_wrt.qkit import HabiroCoeffTable, unknot_table
from unified_wrt.unify import (
    congruent_mod_p,
    connected_sum,
    covers_order,
    crt_split,
    ev_unified,
    fp_basis_coefficients,
    fp_basis_value,
    general_lens_quotient,
    ohtsuki_congruence,
    ohtsuki_taylor,
    unified_diagonal,
    unified_from_spec,
    unified_L1,
    unified_lens,
)
from unified_wrt.wrt import (
    DiagonalPiece,
    LensPiece,
    ManifoldSpec,
    d_eps,
    lens_tau_prime_closed,
    tau_prime,
)


def test_lens_sectors_match_closed_form():
    for b, a in ((9, 2), (-9, 4), (7, 3), (-8, 3)):
        for r in range(3, 30, 2):
            for eps in ("0", "0bar"):
                inv = unified_lens(b, a, eps)
                if covers_order(inv, r):
                    want = lens_tau_prime_closed(b, a, d_eps(b, a, eps), r)
                    assert ev_unified(inv, r) == want


def test_L52_closed_instance():
    inv = unified_lens(5, 2, "0")
    for r in (3, 7, 11, 13):
        assert ev_unified(inv, r) == CycloElem.monomial(r, 3 * mod_inverse(5, r))


def test_quotient_inverts_lens():
    inv = unified_lens(9, 2, "0bar")
    one = general_lens_quotient(inv, 9, 2, "0bar")
    for r in (9, 15, 27):
        assert ev_unified(one, r) == CycloElem.one(r)


def test_diagonal_matches_lens():
    for b in (3, -5):
        inv = unified_diagonal(DiagonalPiece((b,), unknot_table()))
        for r in (5, 7, 9, 11):
            assert ev_unified(inv, r) == tau_prime(ManifoldSpec([LensPiece(b, 1)]), r)


def test_diagonal_is_lens_times_q_Q():
    inv = unified_diagonal(DiagonalPiece((3,), unknot_table()))
    for r in (5, 7, 11):
        q = CycloElem.monomial(r, 1)
        assert ev_unified(inv, r) == ev_unified(unified_L1(3), r) * q * ev_Q(3, 0, r)


def test_diagonal_rejects_bad_coefficients():
    table = HabiroCoeffTable(1, (2,), {(1,): LaurentPoly.mono(1)})
    with pytest.raises(IntegralityViolation):
        unified_diagonal(DiagonalPiece((3,), table))


def test_connected_sum_multiplies():
    m = ManifoldSpec([LensPiece(3, 1), LensPiece(-5, 2)])
    inv = unified_from_spec(m)
    both = connected_sum(unified_lens(3, 1, "0"), unified_lens(-5, 2, "0"))
    for r in (7, 11, 13):
        assert ev_unified(inv, r) == tau_prime(m, r)
        assert ev_unified(both, r) == tau_prime(m, r)


def test_taylor_L52():
    jet = ohtsuki_taylor(unified_lens(5, 2, "0"), 1, K=4)
    assert [c.coeffs[0] for c in jet.coeffs[:3]] == [1, Fraction(3, 5), Fraction(-3, 25)]


def test_crt_split():
    alpha, beta = crt_split(7, 3)
    assert alpha % 3 == 1 and alpha % 7 == 0
    assert beta % 3 == 0 and beta % 7 == 1


def test_fp_basis_roundtrip():
    x = CycloElem.from_exponents(21, [1, -2, 0, 3, 5] + [0] * 16, 5)
    coeffs = fp_basis_coefficients(x, 3)
    assert fp_basis_value(coeffs, 3, 7) == x


def test_congruence_helper():
    a = CycloElem.const(3, Fraction(7, 5))
    assert congruent_mod_p(a, CycloElem.zero(3), 7)
    assert not congruent_mod_p(a, CycloElem.zero(3), 11)


def test_ohtsuki_report():
    rep = ohtsuki_congruence(ManifoldSpec([LensPiece(5, 2)]), 1, (7, 11), K=4)
    assert rep.ok
    assert all(all(v) for v in rep.verdicts.values())
