from __future__ import annotations

import random

import pytest

from unified_wrt.cyclo import CycloElem, LaurentPoly
from unified_wrt.errors import SmallOrderUnsupported
from unified_wrt.laplace import (
    andrews_specialized_check,
    bposbneg_check,
    ev_laplace,
    ev_Q,
    habiro_product_z,
    s_sum_check,
    qbk_product_form,
    qq_factorization_check,
    verify_fourier,
)
from unified_wrt.suites import random_zpoly


def test_Q_b0_small_cases():
    for b in (3, -3, 5):
        for r in (3, 5, 7, 9):
            lhs, rhs = qbk_product_form(b, 0, r)
            assert lhs == rhs


def test_Q_guard_and_order_one():
    with pytest.raises(SmallOrderUnsupported):
        ev_Q(5, 2, 5)
    assert ev_Q(5, 0, 1) == CycloElem.one(1)
    assert ev_Q(5, 2, 1) == CycloElem.zero(1)


def test_Q_in_localized_ring():
    for b in (3, -9, 8):
        for r in (9, 11, 15, 21):
            assert ev_Q(b, 2, r).in_ring(abs(b))


def test_habiro_product_lowest_factor():
    # the k = 0 product is z + z^{-1} - 2
    assert habiro_product_z(0) == {1: LaurentPoly.one(), -1: LaurentPoly.one(),
                                   0: LaurentPoly.const(-2)}


def test_fourier_seeded():
    rng = random.Random(7)
    for _ in range(5):
        f = random_zpoly(rng)
        for b in (3, -5):
            for r in (1, 3, 5, 9):
                assert verify_fourier(f, b, r)


def test_laplace_of_constant():
    f = {0: LaurentPoly.one()}
    for r in (3, 5, 7):
        assert ev_laplace(f, 3, r) == CycloElem.one(r)


def test_sign_independence():
    for k in range(4):
        assert bposbneg_check(k)


def test_pochhammer_factorization():
    for N in range(1, 5):
        for c in (1, 3, 5):
            assert qq_factorization_check(N, c)


def test_s_sum():
    for b, j, k, r in ((3, 0, 1, 7), (3, 1, 1, 9), (9, 1, 2, 15), (-5, 0, 1, 11)):
        assert s_sum_check(b, j, k, r)


@pytest.mark.parametrize("b,j,k", [(3, 1, 2), (9, 2, 1), (-3, 1, 2), (2, 0, 2), (-4, 0, 1)])
def test_andrews_report(b, j, k):
    rep = andrews_specialized_check(b, j, k)
    assert rep.identity and rep.product_form and rep.root_free and rep.lattice
