from __future__ import annotations

import doctest
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unified_wrt import cyclo
from unified_wrt.cyclo import (
    CycloElem,
    CycloModK,
    LaurentPoly,
    cyclotomic_poly,
    euler_phi,
    ev_root,
    factorize,
    galois_conjugate,
    gauss_gamma,
    mod_inverse,
    quad_gauss,
    reduce_mod_phi_power,
)
from unified_wrt.errors import BadInput, DivisionByZeroCyclo, NotCoprime

ODD = st.sampled_from([1, 3, 5, 7, 9, 15, 21])
small = st.integers(-6, 6)


def elem(r: int, coeffs: list[int]) -> CycloElem:
    return CycloElem.from_exponents(r, (coeffs * r)[:r])


def test_doctests():
    assert doctest.testmod(cyclo).failed == 0


def test_number_helpers():
    assert mod_inverse(3, 7) == 5
    assert euler_phi(21) == 12
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    with pytest.raises(NotCoprime):
        mod_inverse(3, 9)


def test_cyclotomic_poly_degree():
    for n in range(1, 30):
        assert cyclotomic_poly(n).max_exp() == euler_phi(n)


def test_root_has_exact_order():
    for r in (3, 5, 9, 15, 21):
        x = CycloElem.monomial(r, 1)
        assert x ** r == CycloElem.one(r)
        assert all(x ** d != CycloElem.one(r) for d in range(1, r))


@settings(max_examples=60, deadline=None)
@given(ODD, st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_field_axioms(r, u, v):
    x, y = elem(r, u), elem(r, v)
    assert x * y == y * x
    assert (x + y) - y == x
    if not y.is_zero():
        assert (x / y) * y == x


@settings(max_examples=40, deadline=None)
@given(ODD, st.lists(small, min_size=1, max_size=5))
def test_json_roundtrip(r, u):
    x = elem(r, u) / 6
    assert CycloElem.from_json(x.to_json()) == x


def test_division_by_zero():
    with pytest.raises(DivisionByZeroCyclo):
        CycloElem.one(5) / CycloElem.zero(5)


def test_even_order_rejected():
    with pytest.raises(BadInput):
        CycloElem.one(4)


def test_conj_is_galois_minus_one():
    x = elem(15, [1, 2, 0, -3])
    assert x.conj() == galois_conjugate(x, -1)
    assert x.conj().conj() == x


def test_quad_gauss_square():
    for r in range(1, 26, 2):
        assert quad_gauss(r) ** 2 == CycloElem.const(r, (-1) ** ((r - 1) // 2) * r)


def test_gauss_gamma_unit_size():
    # gamma * conj(gamma) is nonzero and real
    for b in (3, -3, 5):
        for r in (7, 11, 15):
            g = gauss_gamma(b, r)
            n = g * g.conj()
            assert not n.is_zero()
            assert n == n.conj()


def test_laurent_rational_exponents():
    q = LaurentPoly.mono(1)
    h = LaurentPoly.mono(Fraction(1, 2))
    assert h * h == q
    assert LaurentPoly.from_json((q + h).to_json()) == q + h
    assert ev_root(h, 7) == CycloElem.monomial(7, mod_inverse(2, 7))


def test_laurent_exact_division():
    q = LaurentPoly.mono(1)
    assert ((q ** 3 - 1) / (q - 1)) == q ** 2 + q + 1


def test_mod_phi_power():
    q = CycloModK.q(5, 2)
    assert q ** 5 != CycloModK.const(5, 2, 1)
    f = cyclotomic_poly(5) ** 2
    assert reduce_mod_phi_power(f, 5, 2) == CycloModK.const(5, 2, 0)
    g = cyclotomic_poly(5)
    assert reduce_mod_phi_power(g, 5, 2) != CycloModK.const(5, 2, 0)
