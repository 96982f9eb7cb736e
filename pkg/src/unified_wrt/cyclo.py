"""Exact Laurent polynomials in fractional powers of q, cyclotomic quotients
Z[1/b][q]/(Phi_r) and Z[1/b][q]/(Phi_n^k), evaluation at odd roots of unity,
Gauss sums and Galois conjugation.

Coefficients are exact rationals (``int`` when integral, ``Fraction``
otherwise).  Membership in a localized ring Z[1/b] is a property that is
checked on demand (``in_ring``) and enforced when serializing to the
``LocalizedScalar`` wire format.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    BadInput,
    DivisionByZeroCyclo,
    ExactDivisionFailed,
    NonInvertibleExponentDenominator,
    NotCoprime,
)

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# small number theory helpers


def mod_inverse(a: int, r: int) -> int:
    """Inverse of ``a`` modulo ``r`` in ``[0, r)``.

    >>> mod_inverse(4, 7)
    2
    """
    if r <= 0:
        raise BadInput(f"modulus must be positive, got {r}")
    if r == 1:
        return 0
    if gcd(a, r) != 1:
        raise NotCoprime(f"{a} is not invertible modulo {r}")
    return pow(a, -1, r)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def factorize(n: int) -> dict[int, int]:
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def radical(n: int) -> int:
    r = 1
    for p in factorize(n):
        r *= p
    return r


def p_valuation(n: int, p: int) -> int:
    if n == 0:
        raise BadInput("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def divides_power_of(den: int, base: int) -> bool:
    """True iff ``den`` divides some power of ``base``."""
    den = abs(den)
    while den > 1:
        g = gcd(den, base)
        if g == 1:
            return False
        while den % g == 0:
            den //= g
    return True


def _norm(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# LocalizedScalar


@dataclass(frozen=True)
class LocalizedScalar:
    """The rational number ``numerator / base**denom_exp`` in lowest terms."""

    numerator: int
    base: int = 1
    denom_exp: int = 0

    def __post_init__(self):
        if self.base < 1 or self.denom_exp < 0:
            raise BadInput("base must be positive and denom_exp non-negative")
        num, e = self.numerator, self.denom_exp
        if self.base == 1:
            e = 0
        while e > 0 and num % self.base == 0:
            num //= self.base
            e -= 1
        if num == 0:
            e = 0
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_exp", e)

    @classmethod
    def from_fraction(cls, x: Scalar, base: int) -> "LocalizedScalar":
        x = Fraction(x)
        if x.denominator == 1:
            return cls(x.numerator, base, 0)
        if base == 1 or not divides_power_of(x.denominator, base):
            raise BadInput(f"{x} is not in Z[1/{base}]")
        e, power = 0, 1
        while power % x.denominator:
            power *= base
            e += 1
        return cls(x.numerator * (power // x.denominator), base, e)

    def to_fraction(self) -> Scalar:
        return _norm(Fraction(self.numerator, self.base ** self.denom_exp))

    def __add__(self, other: "LocalizedScalar") -> "LocalizedScalar":
        return LocalizedScalar.from_fraction(
            Fraction(self.to_fraction()) + Fraction(other.to_fraction()), self.base)

    def __mul__(self, other: "LocalizedScalar") -> "LocalizedScalar":
        return LocalizedScalar.from_fraction(
            Fraction(self.to_fraction()) * Fraction(other.to_fraction()), self.base)

    def __neg__(self) -> "LocalizedScalar":
        return LocalizedScalar(-self.numerator, self.base, self.denom_exp)


def _minimal_base(values: Iterable[Scalar]) -> int:
    den = 1
    for v in values:
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    return radical(den) if den > 1 else 1


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficient lists, lowest degree first)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[Scalar], b: Sequence[Scalar]) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _pdivmod(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple[list, list]:
    """Quotient and remainder of dense polynomials over Q."""
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    _trim(rem)
    db, lead = len(b) - 1, b[-1]
    if len(rem) <= db:
        return [], rem
    quo = [0] * (len(rem) - db)
    unit = lead in (1, -1)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        t = c * lead if unit else _norm(Fraction(c) / lead)
        quo[i - db] = t
        for j in range(db + 1):
            if b[j]:
                rem[i - db + j] -= t * b[j]
    rem = [_norm(x) for x in rem[:db]]
    return [_norm(x) for x in quo], _trim(rem)


# ---------------------------------------------------------------------------
# LaurentPoly


class LaurentPoly:
    """Finite sum of ``c * q**(e/den)`` with exact rational ``c``.

    The exponent denominator is kept minimal, so equal polynomials have equal
    representations.

    >>> q = LaurentPoly.mono(1)
    >>> (q + 1) * (q - 1) == q**2 - 1
    True
    >>> LaurentPoly.mono(Fraction(1, 2)).den
    2
    """

    __slots__ = ("terms", "den", "_hash")

    def __init__(self, terms: Mapping[int, Scalar] | None = None, den: int = 1):
        if den < 1:
            raise BadInput("exponent denominator must be positive")
        clean = {}
        for e, c in (terms or {}).items():
            if c:
                clean[int(e)] = _norm(c)
        g = den
        for e in clean:
            g = gcd(g, e)
            if g == 1:
                break
        if g > 1:
            clean = {e // g: c for e, c in clean.items()}
            den //= g
        self.terms = clean
        self.den = den
        self._hash = None

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def mono(cls, exp: Scalar, coeff: Scalar = 1) -> "LaurentPoly":
        """``coeff * q**exp`` for a rational exponent."""
        exp = Fraction(exp)
        return cls({exp.numerator: coeff}, exp.denominator)

    @classmethod
    def from_list(cls, coeffs: Sequence[Scalar], low: int = 0) -> "LaurentPoly":
        return cls({low + i: c for i, c in enumerate(coeffs) if c})

    # basic views ----------------------------------------------------------
    def items(self):
        """Pairs (rational exponent, coefficient), sorted by exponent."""
        return [(_norm(Fraction(e, self.den)), self.terms[e]) for e in sorted(self.terms)]

    def coeff(self, exp: Scalar) -> Scalar:
        exp = Fraction(exp) * self.den
        if exp.denominator != 1:
            return 0
        return self.terms.get(exp.numerator, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def has_integer_exponents(self) -> bool:
        return self.den == 1

    def min_exp(self) -> Fraction:
        return Fraction(min(self.terms), self.den)

    def max_exp(self) -> Fraction:
        return Fraction(max(self.terms), self.den)

    def lifted(self, den: int) -> dict[int, Scalar]:
        """Terms rescaled to exponent denominator ``den`` (a multiple of ``self.den``)."""
        if den % self.den:
            raise BadInput(f"{den} is not a multiple of {self.den}")
        f = den // self.den
        return {e * f: c for e, c in self.terms.items()}

    def coefficient_values(self):
        return list(self.terms.values())

    def in_ring(self, base: int) -> bool:
        return all(not isinstance(c, Fraction) or divides_power_of(c.denominator, base)
                   for c in self.terms.values())

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return LaurentPoly.const(x)
        return NotImplemented

    def _common(self, other: "LaurentPoly"):
        D = self.den * other.den // gcd(self.den, other.den)
        return D, self.lifted(D), other.lifted(D)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D, a, b = self._common(other)
        for e, c in b.items():
            a[e] = a.get(e, 0) + c
        return LaurentPoly(a, D)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.den)

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.den)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D, a, b = self._common(other)
        out: dict[int, Scalar] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out, D)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self.terms) != 1:
                raise ExactDivisionFailed("negative power of a non-monomial")
            (e, c), = self.terms.items()
            return LaurentPoly({-e * (-n): Fraction(1) / Fraction(c) ** (-n)}, self.den)
        result, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "LaurentPoly":
        return self * c

    def shift(self, exp: Scalar) -> "LaurentPoly":
        """Multiply by ``q**exp``."""
        return self * LaurentPoly.mono(exp)

    def subs_power(self, m: Scalar) -> "LaurentPoly":
        """Substitute ``q -> q**m`` for a nonzero rational ``m``."""
        m = Fraction(m)
        if m == 0:
            raise BadInput("substitution q -> q^0 is not allowed")
        D = self.den * m.denominator
        return LaurentPoly({e * m.numerator: c for e, c in self.terms.items()}, D)

    def inverted(self) -> "LaurentPoly":
        """Substitute ``q -> q**-1``."""
        return self.subs_power(-1)

    def _dense(self, D: int):
        t = self.lifted(D)
        low = min(t)
        arr = [0] * (max(t) - low + 1)
        for e, c in t.items():
            arr[e - low] = c
        return low, arr

    def divmod_exact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient ``self / other`` over Q[q^{±1/D}]; raises if inexact."""
        other = self._coerce(other)
        if other.is_zero():
            raise ExactDivisionFailed("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        D = self.den * other.den // gcd(self.den, other.den)
        flow, f = self._dense(D)
        glow, g = other._dense(D)
        quo, rem = _pdivmod(f, g)
        if rem:
            raise ExactDivisionFailed("polynomial division leaves a remainder")
        return LaurentPoly({flow - glow + i: c for i, c in enumerate(quo) if c}, D)

    def __truediv__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self.divmod_exact(other)

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.den == other.den and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.den, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                parts.append(str(c))
            else:
                ex = "q" if e == 1 else f"q^({e})"
                parts.append(ex if c == 1 else (f"-{ex}" if c == -1 else f"({c})*{ex}"))
        return " + ".join(parts).replace("+ -", "- ")

    # evaluation -----------------------------------------------------------
    def evaluate(self, x: Scalar) -> Scalar:
        """Value at a rational point (integer exponents only)."""
        if self.den != 1:
            raise BadInput("evaluate() requires integer exponents")
        x = Fraction(x)
        return _norm(sum((c * x ** e for e, c in self.terms.items()), Fraction(0)))

    # serialization --------------------------------------------------------
    def to_json(self, base: int | None = None) -> dict:
        if base is None:
            base = _minimal_base(self.terms.values())
        terms = []
        for e in sorted(self.terms):
            s = LocalizedScalar.from_fraction(self.terms[e], base)
            terms.append([e, str(s.numerator), s.denom_exp])
        return {"base": base, "expDen": self.den, "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "LaurentPoly":
        base = int(obj.get("base", 1))
        terms = {}
        for e, num, k in obj["terms"]:
            terms[int(e)] = LocalizedScalar(int(num), base, int(k)).to_fraction()
        return cls(terms, int(obj.get("expDen", 1)))


q = LaurentPoly.mono(1)


# ---------------------------------------------------------------------------
# cyclotomic polynomials


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise BadInput("cyclotomic polynomial needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _pdivmod(num, cyclotomic_coeffs(d))
            assert not rem
    return tuple(num)


def cyclotomic_poly(n: int) -> LaurentPoly:
    """Phi_n as a LaurentPoly.

    >>> cyclotomic_poly(6)
    1 - q + q^(2)
    """
    return LaurentPoly.from_list(cyclotomic_coeffs(n))


@lru_cache(maxsize=None)
def _power_table(r: int) -> tuple[tuple[int, ...], ...]:
    """Row e is the power-basis vector of xi^e modulo Phi_r, for 0 <= e < r."""
    phi = cyclotomic_coeffs(r)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(r):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


# ---------------------------------------------------------------------------
# CycloElem


class CycloElem:
    """Element of Q(xi_r) as ``num / den`` with ``num`` an integer vector in the
    power basis 1, xi, ..., xi^(phi(r)-1).

    >>> x = CycloElem.monomial(5, 1)
    >>> x ** 5 == CycloElem.one(5)
    True
    """

    __slots__ = ("order", "num", "den")

    def __init__(self, order: int, num: Sequence[int], den: int = 1):
        if order < 1 or order % 2 == 0:
            raise BadInput(f"root order must be odd and positive, got {order}")
        num = tuple(int(c) for c in num)
        if len(num) != euler_phi(order):
            raise BadInput("coefficient vector has the wrong length")
        if den == 0:
            raise DivisionByZeroCyclo("zero denominator")
        if den < 0:
            num, den = tuple(-c for c in num), -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num, den = tuple(c // g for c in num), den // g
        if not any(num):
            den = 1
        self.order, self.num, self.den = order, num, den

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, r: int) -> "CycloElem":
        return cls(r, [0] * euler_phi(r))

    @classmethod
    def one(cls, r: int) -> "CycloElem":
        return cls.const(r, 1)

    @classmethod
    def const(cls, r: int, c: Scalar) -> "CycloElem":
        c = Fraction(c)
        v = [0] * euler_phi(r)
        v[0] = c.numerator
        return cls(r, v, c.denominator)

    @classmethod
    def monomial(cls, r: int, e: int, c: Scalar = 1) -> "CycloElem":
        c = Fraction(c)
        row = _power_table(r)[e % r]
        return cls(r, [x * c.numerator for x in row], c.denominator)

    @classmethod
    def from_exponents(cls, r: int, vec: Sequence[int], den: int = 1) -> "CycloElem":
        """Reduce ``sum_e vec[e] xi^e`` (``0 <= e < r``) to the power basis."""
        table = _power_table(r)
        out = [0] * euler_phi(r)
        for e, c in enumerate(vec):
            c = int(c)
            if c:
                for i, t in enumerate(table[e]):
                    if t:
                        out[i] += c * t
        return cls(r, out, den)

    @classmethod
    def from_rationals(cls, r: int, coeffs: Sequence[Scalar]) -> "CycloElem":
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        return cls(r, [int(c * den) for c in fr], den)

    # views ----------------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Scalar, ...]:
        return tuple(_norm(Fraction(c, self.den)) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_integral(self) -> bool:
        return self.den == 1

    def in_ring(self, base: int) -> bool:
        return divides_power_of(self.den, base)

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.order != self.order:
                raise BadInput(f"order mismatch: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.const(self.order, other)
        return NotImplemented

    def __add__(self, other) -> "CycloElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.den * other.den // gcd(self.den, other.den)
        fa, fb = d // self.den, d // other.den
        return CycloElem(self.order, [x * fa + y * fb for x, y in zip(self.num, other.num)], d)

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        return CycloElem(self.order, [-x for x in self.num], self.den)

    def __sub__(self, other) -> "CycloElem":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "CycloElem":
        return (-self) + other

    def __mul__(self, other) -> "CycloElem":
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CycloElem(self.order, [x * other.numerator for x in self.num],
                             self.den * other.denominator)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r, phi = self.order, len(self.num)
        prod = _pmul(self.num, other.num)
        out = prod[:phi] + [0] * (phi - min(phi, len(prod)))
        table = _power_table(r)
        for e in range(phi, len(prod)):
            c = prod[e]
            if c:
                for i, t in enumerate(table[e % r]):
                    if t:
                        out[i] += c * t
        return CycloElem(r, out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        return cyclo_inverse(self)

    def __truediv__(self, other) -> "CycloElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroCyclo("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        return self * cyclo_inverse(other)

    def __rtruediv__(self, other) -> "CycloElem":
        return CycloElem.const(self.order, other) * cyclo_inverse(self)

    def __pow__(self, n: int) -> "CycloElem":
        if n < 0:
            return cyclo_inverse(self) ** (-n)
        result, base = CycloElem.one(self.order), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self, t: int = -1) -> "CycloElem":
        return galois_conjugate(self, t)

    # comparison -----------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloElem.const(self.order, other)
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.order == other.order and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        return hash((self.order, self.num, self.den))

    def __repr__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(str(c) if i == 0 else f"({c})*x^{i}")
        return f"CycloElem(r={self.order}: {' + '.join(parts) or '0'})"

    # serialization --------------------------------------------------------
    def to_json(self, base: int | None = None) -> dict:
        if base is None:
            base = radical(self.den) if self.den > 1 else 1
        coeffs = []
        for c in self.coeffs:
            s = LocalizedScalar.from_fraction(c, base)
            coeffs.append([str(s.numerator), s.denom_exp])
        return {"order": self.order, "base": base, "coeffs": coeffs}

    @classmethod
    def from_json(cls, obj: Mapping) -> "CycloElem":
        base = int(obj.get("base", 1))
        vals = [LocalizedScalar(int(n), base, int(k)).to_fraction() for n, k in obj["coeffs"]]
        return cls.from_rationals(int(obj["order"]), vals)


def _poly_inverse_mod(a: Sequence[Scalar], m: Sequence[Scalar]) -> list:
    """``s`` with ``a*s = 1 mod m`` over Q by the extended Euclidean algorithm."""
    r0, r1 = _trim([Fraction(x) for x in m]), _trim([Fraction(x) for x in a])
    s0, s1 = [], [Fraction(1)]
    while r1 and len(r1) > 1:
        quo, rem = _pdivmod(r0, r1)
        prod = _pmul(quo, s1)
        n = max(len(s0), len(prod))
        s2 = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)]
        r0, r1, s0, s1 = r1, rem, s1, _trim(s2)
    if not r1:
        raise DivisionByZeroCyclo("element is not invertible")
    c = Fraction(r1[0])
    return [_norm(Fraction(x) / c) for x in s1]


def cyclo_inverse(x: CycloElem) -> CycloElem:
    """Inverse in Q(xi) via extended Euclid of the lift against Phi_r.

    >>> x = CycloElem.from_rationals(3, [1, -1])
    >>> x * cyclo_inverse(x) == 1
    True
    """
    if x.is_zero():
        raise DivisionByZeroCyclo("cannot invert zero")
    r = x.order
    if len(x.num) == 1:
        return CycloElem(r, [x.den], x.num[0])
    s = _poly_inverse_mod(list(x.num), cyclotomic_coeffs(r))
    s = [Fraction(c) * x.den for c in s]
    phi = euler_phi(r)
    return CycloElem.from_rationals(r, (s + [0] * phi)[:phi])


def galois_conjugate(x: CycloElem, t: int) -> CycloElem:
    """Apply the automorphism xi -> xi^t."""
    r = x.order
    if gcd(t, r) != 1:
        raise NotCoprime(f"{t} is not a unit modulo {r}")
    vec = [0] * r
    for i, c in enumerate(x.num):
        if c:
            vec[(i * t) % r] += c
    return CycloElem.from_exponents(r, vec, x.den)


def ev_root(f: LaurentPoly, r: int) -> CycloElem:
    """Evaluate at a primitive odd order ``r`` root: ``q^(1/D) -> xi^(D_*)``.

    >>> ev_root(LaurentPoly.mono(Fraction(1, 4)), 3) == CycloElem.monomial(3, 1)
    True
    """
    if r < 1 or r % 2 == 0:
        raise BadInput(f"root order must be odd and positive, got {r}")
    if gcd(f.den, r) != 1:
        raise NonInvertibleExponentDenominator(
            f"exponent denominator {f.den} is not invertible modulo {r}")
    Dstar = mod_inverse(f.den, r)
    vec = [0] * r
    den = 1
    for c in f.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    for e, c in f.terms.items():
        vec[(e * Dstar) % r] += int(c * den)
    return CycloElem.from_exponents(r, vec, den)


def gauss_gamma(b: int, r: int) -> CycloElem:
    """The sum over odd ``0 < n < 2r`` of ``xi^(b(n^2-1)/4)``."""
    vec = [0] * r
    for n in range(1, 2 * r, 2):
        vec[(b * ((n * n - 1) // 4)) % r] += 1
    return CycloElem.from_exponents(r, vec)


def quad_gauss(r: int) -> CycloElem:
    """The sum over ``1 <= j <= r`` of ``xi^(4_* j^2)``; squares to ``(-1)^((r-1)/2) r``."""
    four = mod_inverse(4, r)
    vec = [0] * r
    for j in range(1, r + 1):
        vec[(four * j * j) % r] += 1
    return CycloElem.from_exponents(r, vec)


# ---------------------------------------------------------------------------
# CycloModK


@lru_cache(maxsize=None)
def _phi_power(n: int, k: int) -> tuple[int, ...]:
    out = [1]
    for _ in range(k):
        out = _pmul(out, cyclotomic_coeffs(n))
    return tuple(out)


class CycloModK:
    """Element of Q[q]/(Phi_n^k) in the power basis of length ``k*phi(n)``."""

    __slots__ = ("n", "k", "coeffs")

    def __init__(self, n: int, k: int, coeffs: Sequence[Scalar]):
        if n < 1 or k < 1:
            raise BadInput("need n >= 1 and k >= 1")
        dim = k * euler_phi(n)
        coeffs = [_norm(c) for c in coeffs]
        if len(coeffs) > dim:
            _, coeffs = _pdivmod(coeffs, _phi_power(n, k))
        coeffs = list(coeffs) + [0] * (dim - len(coeffs))
        self.n, self.k, self.coeffs = n, k, tuple(coeffs)

    @classmethod
    def from_poly(cls, f: LaurentPoly, n: int, k: int) -> "CycloModK":
        return reduce_mod_phi_power(f, n, k)

    @classmethod
    def q(cls, n: int, k: int) -> "CycloModK":
        return cls(n, k, [0, 1])

    @classmethod
    def const(cls, n: int, k: int, c: Scalar) -> "CycloModK":
        return cls(n, k, [c])

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def _check(self, other) -> "CycloModK":
        if isinstance(other, (int, Fraction)):
            return CycloModK.const(self.n, self.k, other)
        if (other.n, other.k) != (self.n, self.k):
            raise BadInput("modulus mismatch")
        return other

    def __add__(self, other) -> "CycloModK":
        other = self._check(other)
        return CycloModK(self.n, self.k, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> "CycloModK":
        return CycloModK(self.n, self.k, [-a for a in self.coeffs])

    def __sub__(self, other) -> "CycloModK":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "CycloModK":
        return (-self) + other

    def __mul__(self, other) -> "CycloModK":
        if isinstance(other, (int, Fraction)):
            return CycloModK(self.n, self.k, [a * other for a in self.coeffs])
        other = self._check(other)
        return CycloModK(self.n, self.k, _pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "CycloModK":
        if e < 0:
            return self.inverse() ** (-e)
        result, base = CycloModK.const(self.n, self.k, 1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def residue(self) -> CycloElem:
        """Image in Q[q]/(Phi_n) (n odd), i.e. the value at an order-n root."""
        fr = [Fraction(c) for c in self.coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        vec = [0] * self.n
        for i, c in enumerate(fr):
            vec[i % self.n] += int(c * den)
        return CycloElem.from_exponents(self.n, vec, den)

    def inverse(self) -> "CycloModK":
        """Inverse by Newton/Hensel lifting of the inverse modulo Phi_n."""
        if self.n % 2 == 1:
            base_inv = cyclo_inverse(self.residue()).coeffs
        else:
            base_inv = _poly_inverse_mod(
                _pdivmod(list(self.coeffs), cyclotomic_coeffs(self.n))[1] or [0],
                cyclotomic_coeffs(self.n))
        z = CycloModK(self.n, self.k, base_inv)
        one = CycloModK.const(self.n, self.k, 1)
        prec = 1
        while prec < self.k:
            z = z * (2 - self * z)
            prec *= 2
        if self * z != one:
            raise DivisionByZeroCyclo("element is not a unit")
        return z

    def __truediv__(self, other) -> "CycloModK":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * self._check(other).inverse()

    def lift(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.coeffs)

    def substitute_power(self, b: int) -> "CycloModK":
        """Image under ``q -> q^b``."""
        qb = CycloModK.q(self.n, self.k) ** b
        result = CycloModK.const(self.n, self.k, 0)
        for c in reversed(self.coeffs):
            result = result * qb + c
        return result

    def in_ring(self, base: int) -> bool:
        return all(not isinstance(c, Fraction) or divides_power_of(c.denominator, base)
                   for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloModK.const(self.n, self.k, other)
        if not isinstance(other, CycloModK):
            return NotImplemented
        return (self.n, self.k, self.coeffs) == (other.n, other.k, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.coeffs))

    def __repr__(self) -> str:
        return f"CycloModK(n={self.n}, k={self.k}, {list(self.coeffs)})"


def reduce_mod_phi_power(f: LaurentPoly, n: int, k: int) -> CycloModK:
    """Canonical representative of ``f`` modulo ``Phi_n^k`` (integer exponents)."""
    if f.den != 1:
        raise BadInput("reduce_mod_phi_power needs integer q-exponents")
    if f.is_zero():
        return CycloModK(n, k, [])
    low = min(f.terms)
    coeffs = [0] * (max(f.terms) - low + 1)
    for e, c in f.terms.items():
        coeffs[e - low] = c
    x = CycloModK(n, k, coeffs)
    if low:
        x = x * CycloModK.q(n, k) ** low
    return x
