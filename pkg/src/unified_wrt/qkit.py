"""Balanced q-numbers, q-Pochhammer symbols, the cyclotomic expansion basis
A(n, k) and extraction of expansion coefficients C(k) from colored Jones tables.

Conventions: {n} = q^(n/2) - q^(-n/2), [n] = {n}/{1}, [n]! = [1]...[n] and
(x; q)_n = (1 - x)(1 - xq)...(1 - xq^(n-1)).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .cyclo import LaurentPoly, Scalar
from .errors import (
    BadInput,
    ExactDivisionFailed,
    IntegralityViolation,
    NonPolynomialCoefficient,
)

ONE = LaurentPoly.one()


@lru_cache(maxsize=None)
def qnum(n: int) -> LaurentPoly:
    """Balanced quantum integer [n]; [-n] = -[n].

    >>> qnum(3)
    q^(-1) + 1 + q
    """
    if n < 0:
        return -qnum(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)}, 2)


def qbrace(n: int) -> LaurentPoly:
    """{n} = q^(n/2) - q^(-n/2)."""
    return LaurentPoly({n: 1, -n: -1}, 2)


@lru_cache(maxsize=None)
def qfac(n: int) -> LaurentPoly:
    if n < 0:
        raise BadInput("factorial of a negative number")
    out = ONE
    for i in range(1, n + 1):
        out = out * qnum(i)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> LaurentPoly:
    """Balanced q-binomial [n choose k]; zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return LaurentPoly()
    out = qfac(n).divmod_exact(qfac(k) * qfac(n - k))
    if not out.is_integral():
        raise ExactDivisionFailed(f"q-binomial [{n},{k}] is not integral")
    return out


def pochhammer(x_exp: Scalar, q_step: Scalar = 1, count: int = 0) -> LaurentPoly:
    """(q^x_exp; q^q_step)_count for rational exponents.

    >>> pochhammer(1, 1, 2) == (1 - LaurentPoly.mono(1)) * (1 - LaurentPoly.mono(2))
    True
    """
    if count < 0:
        raise BadInput("negative Pochhammer length")
    x_exp, q_step = Fraction(x_exp), Fraction(q_step)
    out = ONE
    for j in range(count):
        e = x_exp + j * q_step
        if e == 0:
            return LaurentPoly()
        out = out * (1 - LaurentPoly.mono(e))
    return out


@lru_cache(maxsize=None)
def A_poly(n: int, k: int) -> LaurentPoly:
    """A(n,k) = prod_{i=0..k} (q^n + q^-n - q^i - q^-i) / ((1-q)(q^{k+1};q)_{k+1})."""
    if n < 1 or k < 0:
        raise BadInput("A(n,k) needs n >= 1 and k >= 0")
    if k >= n:
        return LaurentPoly()
    num = ONE
    qn = LaurentPoly({n: 1, -n: 1})
    for i in range(k + 1):
        num = num * (qn - LaurentPoly({i: 1, -i: 1}) if i else qn - 2)
    den = (1 - LaurentPoly.mono(1)) * pochhammer(k + 1, 1, k + 1)
    out = num.divmod_exact(den)
    if not out.is_integral():
        raise ExactDivisionFailed(f"A({n},{k}) has non-integral coefficients")
    return out


def A_multi(n: Sequence[int], k: Sequence[int]) -> LaurentPoly:
    out = ONE
    for ni, ki in zip(n, k):
        out = out * A_poly(ni, ki)
        if out.is_zero():
            break
    return out


def habiro_divisor(K: int) -> LaurentPoly:
    """(q^{K+1}; q)_{K+1} / (1 - q)."""
    return pochhammer(K + 1, 1, K + 1).divmod_exact(1 - LaurentPoly.mono(1))


def integrality_check(C: LaurentPoly, K: int) -> bool:
    """True iff C lies in (q^{K+1};q)_{K+1}/(1-q) * Z[q^{+-1}]."""
    if C.is_zero():
        return True
    if not C.has_integer_exponents() or not C.is_integral():
        return False
    try:
        quo = C.divmod_exact(habiro_divisor(K))
    except ExactDivisionFailed:
        return False
    return quo.is_integral()


@dataclass
class HabiroCoeffTable:
    """Coefficients C(k) of the expansion J(n) prod [n_i] = sum_k C(k) A(n,k)."""

    arity: int
    max_index: tuple[int, ...]
    entries: dict[tuple[int, ...], LaurentPoly] = field(default_factory=dict)
    colors_fixed: tuple[int, ...] = ()

    def get(self, k: Sequence[int]) -> LaurentPoly:
        return self.entries.get(tuple(k), LaurentPoly())

    def nonzero(self):
        return sorted((k, c) for k, c in self.entries.items() if not c.is_zero())

    def expand(self, n: Sequence[int]) -> LaurentPoly:
        """Right side of the expansion at colors n."""
        out = LaurentPoly()
        for k, c in self.entries.items():
            if not c.is_zero() and all(ki < ni for ki, ni in zip(k, n)):
                out = out + c * A_multi(n, k)
        return out

    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "maxIndex": list(self.max_index),
            "colorsFixed": list(self.colors_fixed),
            "entries": [{"k": list(k), "poly": c.to_json()} for k, c in sorted(self.entries.items())],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "HabiroCoeffTable":
        entries = {tuple(e["k"]): LaurentPoly.from_json(e["poly"]) for e in obj["entries"]}
        m = int(obj["arity"])
        max_index = tuple(obj.get("maxIndex") or
                          [max((k[i] for k in entries), default=0) for i in range(m)])
        return cls(m, max_index, entries, tuple(obj.get("colorsFixed", ())))


def unknot_table() -> HabiroCoeffTable:
    return HabiroCoeffTable(1, (0,), {(0,): LaurentPoly.mono(1)})


def habiro_C_from_jones(jones: Mapping[tuple[int, ...], LaurentPoly], m: int, N: int,
                        colors: Sequence[int] = ()) -> HabiroCoeffTable:
    """Solve J(n) prod [n_i] = sum_{k < n} C(k) A(n,k) for all 1 <= n_i <= N.

    The system is triangular: the coefficient of C(n-1) at colors n is
    prod A(n_i, n_i - 1), and every other contributing k is componentwise
    below n - 1.  Tuples are processed by increasing total color.
    """
    if m < 1 or N < 1:
        raise BadInput("need arity >= 1 and bound >= 1")
    tuples = sorted(itertools.product(range(1, N + 1), repeat=m), key=lambda t: (sum(t), t))
    C: dict[tuple[int, ...], LaurentPoly] = {}
    for n in tuples:
        if n not in jones:
            raise BadInput(f"Jones table lacks colors {n}")
        lhs = jones[n]
        for ni in n:
            lhs = lhs * qnum(ni)
        if not lhs.has_integer_exponents():
            raise NonPolynomialCoefficient(f"J{n} prod[n] has fractional q-exponents")
        for k, c in C.items():
            if not c.is_zero() and all(ki < ni for ki, ni in zip(k, n)):
                lhs = lhs - c * A_multi(n, k)
        k = tuple(ni - 1 for ni in n)
        try:
            ck = lhs.divmod_exact(A_multi(n, k))
        except ExactDivisionFailed as exc:
            raise NonPolynomialCoefficient(f"C{k} is not a Laurent polynomial") from exc
        if not ck.is_integral():
            raise NonPolynomialCoefficient(f"C{k} has non-integral coefficients")
        if not integrality_check(ck, max(k)):
            raise IntegralityViolation(f"C{k} is not divisible by (q^{{K+1}};q)_{{K+1}}/(1-q)")
        C[k] = ck
    entries = {k: c for k, c in C.items() if not c.is_zero()}
    return HabiroCoeffTable(m, tuple([N - 1] * m), entries, tuple(colors))


def tensor_tables(*tables: HabiroCoeffTable) -> HabiroCoeffTable:
    """Coefficient table of a split union from the tables of its parts."""
    entries: dict[tuple[int, ...], LaurentPoly] = {(): ONE}
    max_index: tuple[int, ...] = ()
    colors: tuple[int, ...] = ()
    for t in tables:
        new = {}
        for k1, c1 in entries.items():
            for k2, c2 in t.entries.items():
                new[k1 + k2] = c1 * c2
        entries = new
        max_index += t.max_index
        colors += t.colors_fixed
    return HabiroCoeffTable(len(max_index), max_index, entries, colors)


def jones_table_to_json(jones: Mapping[tuple[int, ...], LaurentPoly], m: int,
                        colors: Sequence[int] = ()) -> dict:
    return {
        "arity": m,
        "colorsFixed": list(colors),
        "values": [{"n": list(n), "poly": p.to_json()} for n, p in sorted(jones.items())],
    }


def jones_table_from_json(obj: Mapping) -> tuple[dict[tuple[int, ...], LaurentPoly], int, tuple[int, ...]]:
    values = {tuple(v["n"]): LaurentPoly.from_json(v["poly"]) for v in obj["values"]}
    return values, int(obj["arity"]), tuple(obj.get("colorsFixed", ()))


def unlink_jones(m: int, N: int, colors: Sequence[int] = ()) -> dict[tuple[int, ...], LaurentPoly]:
    """J of the m-component zero-framed unlink (times unlinked fixed colors)."""
    fixed = ONE
    for j in colors:
        fixed = fixed * qnum(j)
    out = {}
    for n in itertools.product(range(1, N + 1), repeat=m):
        v = fixed
        for ni in n:
            v = v * qnum(ni)
        out[n] = v
    return out


def meridian_jones(N: int, j: int) -> dict[tuple[int, ...], LaurentPoly]:
    """J(n, j) = [n j] for a zero-framed unknot with a meridian colored j."""
    return {(n,): qnum(n * j) for n in range(1, N + 1)}
