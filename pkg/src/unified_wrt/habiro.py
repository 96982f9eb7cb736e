"""Finite models of the cyclotomic completions: Frobenius maps and roots of q
modulo powers of cyclotomic polynomials, the atoms z_{b,a} and x_b, per-sector
elements with evaluation rules, unified invariants, and Taylor jets.

For |b| = p^l the sector of an odd order r is min(val_p(r), l).  Sector 0 is
generated by g0 = q^(1/(4|b|)), in which x_b = g0^(4 sn(b)).  A sector j >= 1
with c = p^min(j,l), b' = b/c is generated by u = q^(1/4) and X = x_b subject
to X^|b'| = u^(4 c sn(b)).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

from .cyclo import (
    CycloElem,
    CycloModK,
    LaurentPoly,
    LocalizedScalar,
    Scalar,
    _norm,
    ev_root,
    factorize,
    mod_inverse,
    p_valuation,
    reduce_mod_phi_power,
)
from .errors import (
    BadInput,
    DivisionByZeroCyclo,
    NonConvergence,
    NonInvertibleDenominator,
    NonPrimePower,
    NotCoprime,
    SectorMismatch,
    SmallOrderUnsupported,
)


def _sn(x: int) -> int:
    return 1 if x > 0 else -1


def split_prime_power(b: int) -> tuple[int, int]:
    """(p, l) with |b| = p^l, and (1, 0) for |b| = 1."""
    if b == 0:
        raise BadInput("b must be nonzero")
    f = factorize(b)
    if not f:
        return 1, 0
    if len(f) > 1:
        raise NonPrimePower(f"{b} is not plus or minus a prime power")
    (p, l), = f.items()
    return p, l


def sector_of(p: int, l: int, r: int) -> int:
    """Sector index min(val_p(r), l) selected by an odd order r."""
    if p == 1:
        return 0
    return min(p_valuation(r, p), l)


# ---------------------------------------------------------------------------
# Frobenius maps and roots of q modulo Phi_n^k


def frobenius_Fb(x: CycloModK, b: int) -> CycloModK:
    """q -> q^b on Q[q]/(Phi_n^k)."""
    if gcd(x.n, b) != 1:
        raise NotCoprime(f"b={b} is not coprime to n={x.n}")
    return x.substitute_power(b)


def substitute(x: CycloModK, y: CycloModK) -> CycloModK:
    """x(y): replace q by y in the representative of x."""
    out = CycloModK.const(x.n, x.k, 0)
    for c in reversed(x.coeffs):
        out = out * y + c
    return out


def qroot_newton(n: int, k: int, b: int) -> CycloModK:
    """The b-th root y of q in Q[q]/(Phi_n^k) with y = q^(b_*) modulo Phi_n.

    >>> qroot_newton(5, 1, 3) == CycloModK.from_poly(LaurentPoly.mono(2), 5, 1)
    True
    """
    if b == 0 or gcd(n, b) != 1:
        raise NotCoprime(f"b={b} is not coprime to n={n}")
    qq = CycloModK.q(n, k)
    y = qq ** (mod_inverse(b, n) if n > 1 else 0)
    steps = max(1, math.ceil(math.log2(k))) + 1
    for _ in range(steps + 1):
        err = y ** b - qq
        if err == CycloModK.const(n, k, 0):
            return y
        y = y - err / (b * y ** (b - 1))
    raise NonConvergence(f"Newton iteration for the {b}-th root of q mod Phi_{n}^{k} did not settle")


def frobenius_inverse(x: CycloModK, b: int) -> CycloModK:
    """F_b^{-1}(x) = x(q^(1/b))."""
    return substitute(x, qroot_newton(x.n, x.k, b))


def Gm_map(f, m: int):
    """q -> q^m; on Q[q]/(Phi_n^k) the target is Q[q]/(Phi_mn^k)."""
    if m < 1:
        raise BadInput("G_m needs m >= 1")
    if isinstance(f, LaurentPoly):
        return f.subs_power(m)
    if isinstance(f, CycloModK):
        return reduce_mod_phi_power(f.lift().subs_power(m), f.n * m, f.k)
    raise BadInput(f"unsupported argument {type(f).__name__}")


# ---------------------------------------------------------------------------
# atoms


def _xb_exponent(b: int, r: int) -> int:
    """e with ev(x_b) = xi^e: e = c * b'_* where c = (b, r), b' = b/c."""
    c = gcd(b, r)
    rp = r // c
    return c * mod_inverse(b // c, rp) if rp > 1 else 0


def ev_x(b: int, r: int) -> CycloElem:
    """ev(x_b) = (xi^c)^(b'_*).

    >>> ev_x(9, 15) == CycloElem.monomial(15, 6)
    True
    """
    if r == 1:
        return CycloElem.one(1)
    return CycloElem.monomial(r, _xb_exponent(b, r))


def ev_z(b: int, a: int, r: int) -> CycloElem:
    """ev(z_{b,a}): 0 if c does not divide a, else (xi^c)^(a_1^2 b'_*)."""
    if r == 1:
        return CycloElem.one(1)
    c = gcd(b, r)
    if a % c:
        return CycloElem.zero(r)
    a1 = a // c
    return CycloElem.monomial(r, a1 * a1 * _xb_exponent(b, r))


# ---------------------------------------------------------------------------
# sector elements


@dataclass(frozen=True)
class SectorElem:
    """Laurent polynomial in the generators of one sector.

    ``terms`` maps (generator exponent, X exponent) to a rational coefficient;
    in sector 0 the X exponent is always 0 and the generator is g0, otherwise
    the generator is u and the X exponent lies in [0, |b'|).
    """

    p: int
    l: int
    sign: int
    j: int
    terms: Mapping[tuple[int, int], Scalar] = field(default_factory=dict)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise BadInput("sign must be +-1")
        if not 0 <= self.j <= self.l:
            raise BadInput(f"sector {self.j} outside 0..{self.l}")
        c, bp = self.c, self.bprime_abs
        clean: dict[tuple[int, int], Scalar] = {}
        for (e, t), v in self.terms.items():
            if not v:
                continue
            if self.j == 0:
                if t:
                    raise BadInput("sector 0 has no X generator")
            else:
                s, t = divmod(t, bp)
                e += 4 * c * self.sign * s
            key = (int(e), int(t))
            clean[key] = clean.get(key, 0) + v
        object.__setattr__(self, "terms",
                           {k: _norm(Fraction(v)) for k, v in clean.items() if v})

    # shape -----------------------------------------------------------------
    @property
    def b(self) -> int:
        return self.sign * self.p ** self.l

    @property
    def c(self) -> int:
        return self.p ** self.j if self.j else 1

    @property
    def bprime_abs(self) -> int:
        return self.p ** (self.l - self.j) if self.j else self.p ** self.l

    def _like(self, terms) -> "SectorElem":
        return SectorElem(self.p, self.l, self.sign, self.j, terms)

    def _check(self, other: "SectorElem") -> None:
        if (self.p, self.l, self.sign, self.j) != (other.p, other.l, other.sign, other.j):
            raise BadInput("sector elements live in different sectors")

    # constructors ----------------------------------------------------------
    @classmethod
    def zero(cls, b: int, j: int) -> "SectorElem":
        p, l = split_prime_power(b)
        return cls(p, l, _sn(b), min(j, l), {})

    @classmethod
    def one(cls, b: int, j: int) -> "SectorElem":
        return cls.from_laurent(b, j, LaurentPoly.one())

    @classmethod
    def from_laurent(cls, b: int, j: int, f: LaurentPoly) -> "SectorElem":
        """Embed a Laurent polynomial in fractional powers of q."""
        p, l = split_prime_power(b)
        j = min(j, l)
        unit = 4 * abs(b) if j == 0 else 4
        if unit % f.den:
            raise BadInput(f"q-exponent denominator {f.den} is not available in sector {j}")
        scale = unit // f.den
        return cls(p, l, _sn(b), j, {(e * scale, 0): c for e, c in f.terms.items()})

    @classmethod
    def q_power(cls, b: int, j: int, exp: Scalar) -> "SectorElem":
        return cls.from_laurent(b, j, LaurentPoly.mono(exp))

    @classmethod
    def x(cls, b: int, j: int, power: int = 1) -> "SectorElem":
        """x_{b;j}^power."""
        p, l = split_prime_power(b)
        j = min(j, l)
        if j == 0:
            return cls(p, l, _sn(b), 0, {(4 * _sn(b) * power, 0): 1})
        return cls(p, l, _sn(b), j, {(0, power): 1})

    @classmethod
    def z(cls, b: int, a: int, j: int) -> "SectorElem":
        """z_{b,a;j}: zero unless c | a, then x_{b;j}^(a_1^2).  Labels j >= l
        collapse to l since c = (b, p^j) is then constant."""
        p, l = split_prime_power(b)
        j = min(j, l)
        c = p ** j if j else 1
        if a % c:
            return cls.zero(b, j)
        return cls.x(b, j, (a // c) ** 2)

    # arithmetic ------------------------------------------------------------
    def __add__(self, other) -> "SectorElem":
        other = self._coerce(other)
        self._check(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self) -> "SectorElem":
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "SectorElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SectorElem":
        return (-self) + other

    def _coerce(self, other) -> "SectorElem":
        if isinstance(other, SectorElem):
            return other
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if isinstance(other, LaurentPoly):
            return SectorElem.from_laurent(self.b, self.j, other)
        raise BadInput(f"cannot combine SectorElem with {type(other).__name__}")

    def __mul__(self, other) -> "SectorElem":
        other = self._coerce(other)
        self._check(other)
        terms: dict[tuple[int, int], Scalar] = {}
        for (e1, t1), v1 in self.terms.items():
            for (e2, t2), v2 in other.terms.items():
                k = (e1 + e2, t1 + t2)
                terms[k] = terms.get(k, 0) + v1 * v2
        return self._like(terms)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def inverse(self) -> "SectorElem":
        if not self.is_monomial():
            raise BadInput("only monomial sector elements are inverted")
        (e, t), v = next(iter(self.terms.items()))
        return self._like({(-e, -t): 1 / Fraction(v)})

    def __pow__(self, n: int) -> "SectorElem":
        if n < 0:
            return self.inverse() ** (-n)
        out = SectorElem.one(self.b, self.j)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SectorElem):
            return NotImplemented
        return ((self.p, self.l, self.sign, self.j) == (other.p, other.l, other.sign, other.j)
                and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash((self.p, self.l, self.sign, self.j, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        gen = "g0" if self.j == 0 else "u"
        parts = [f"{v}*{gen}^{e}" + (f"*X^{t}" if t else "") for (e, t), v in sorted(self.terms.items())]
        return f"SectorElem(b={self.b}, j={self.j}: {' + '.join(parts) or '0'})"

    # evaluation ------------------------------------------------------------
    def to_laurent(self) -> LaurentPoly:
        """The element as a Laurent polynomial in fractional powers of q."""
        if any(t for _, t in self.terms):
            raise BadInput("element involves X, which is not a power of q")
        unit = 4 * abs(self.b) if self.j == 0 else 4
        return LaurentPoly({e: v for (e, _), v in self.terms.items()}, unit)

    def evaluate(self, r: int) -> CycloElem:
        """Value at a primitive root of odd order r in this element's sector."""
        if r < 1 or r % 2 == 0:
            raise BadInput("root order must be odd and positive")
        if sector_of(self.p, self.l, r) != self.j:
            raise SectorMismatch(f"order {r} does not select sector {self.j} of b={self.b}")
        if r == 1:
            return CycloElem.const(1, sum((Fraction(v) for v in self.terms.values()), Fraction(0)))
        unit = 4 * abs(self.b) if self.j == 0 else 4
        gstar = mod_inverse(unit, r)
        xe = _xb_exponent(self.b, r)
        vec: dict[int, Fraction] = {}
        for (e, t), v in self.terms.items():
            k = (e * gstar + t * xe) % r
            vec[k] = vec.get(k, 0) + Fraction(v)
        den = 1
        for v in vec.values():
            den = den * v.denominator // gcd(den, v.denominator)
        dense = [0] * r
        for k, v in vec.items():
            dense[k] = int(v * den)
        return CycloElem.from_exponents(r, dense, den)

    # serialization ---------------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for (e, t), v in sorted(self.terms.items()):
            s = LocalizedScalar.from_fraction(v, self.p)
            terms.append([[e, t], str(s.numerator), s.denom_exp])
        return {"p": self.p, "l": self.l, "sign": self.sign, "j": self.j, "terms": terms}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SectorElem":
        p = int(obj["p"])
        terms = {(int(k[0]), int(k[1])): LocalizedScalar(int(n), p, int(d)).to_fraction()
                 for k, n, d in obj["terms"]}
        return cls(p, int(obj["l"]), int(obj["sign"]), int(obj["j"]), terms)


# ---------------------------------------------------------------------------
# unified invariants


@dataclass(frozen=True)
class SectorValue:
    """num / (den * (1 - x_{-b})^chi) in one sector.

    ``guard_k`` marks values whose denominators may vanish at orders r <= 2k+2;
    such evaluations are refused, except r = 1 where ``at_one`` is returned.
    """

    num: SectorElem
    den: LaurentPoly = field(default_factory=LaurentPoly.one)
    chi: bool = False
    guard_k: int | None = None
    at_one: Scalar | None = None

    def evaluate(self, r: int) -> CycloElem:
        if self.guard_k is not None:
            if r == 1 and self.at_one is not None:
                return CycloElem.const(1, self.at_one)
            if r <= 2 * self.guard_k + 2:
                raise SmallOrderUnsupported(
                    f"order {r} is at most 2k+2 = {2 * self.guard_k + 2}")
        val = self.num.evaluate(r)
        if self.den != LaurentPoly.one():
            d = ev_root(self.den, r)
            if d.is_zero():
                raise SmallOrderUnsupported(f"denominator vanishes at order {r}")
            val = val / d
        if self.chi:
            d = 1 - ev_x(-self.num.b, r)
            if d.is_zero():
                raise SmallOrderUnsupported(f"1 - x_(-b) vanishes at order {r}")
            val = val / d
        return val

    def is_monomial(self) -> bool:
        return (self.num.is_monomial() and self.den == LaurentPoly.one()
                and not self.chi and self.guard_k is None)

    def __mul__(self, other: "SectorValue") -> "SectorValue":
        if self.chi and other.chi:
            raise BadInput("products with a doubled (1 - x_(-b)) factor are not modelled")
        gk = [g for g in (self.guard_k, other.guard_k) if g is not None]
        a1 = None
        if self.at_one is not None or other.at_one is not None:
            a1 = Fraction(self.at_one if self.at_one is not None else 1) * \
                Fraction(other.at_one if other.at_one is not None else 1)
        return SectorValue(self.num * other.num, self.den * other.den, self.chi or other.chi,
                           max(gk) if gk else None, a1)

    def to_json(self) -> dict:
        at_one = None if self.at_one is None else str(Fraction(self.at_one))
        return {"num": self.num.to_json(), "den": self.den.to_json(), "chi": self.chi,
                "guardK": self.guard_k, "atOne": at_one}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SectorValue":
        at_one = obj.get("atOne")
        return cls(SectorElem.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]),
                   bool(obj.get("chi", False)), obj.get("guardK"),
                   None if at_one is None else Fraction(at_one))

    def inverse(self) -> "SectorValue":
        if not self.is_monomial():
            raise BadInput("only signed monomial sectors are invertible here")
        return SectorValue(self.num.inverse())


@dataclass(frozen=True)
class SectorFactor:
    """Per-prime component: a value for each sector 0..l (missing means 0)."""

    p: int
    l: int
    sign: int
    values: Mapping[int, SectorValue]

    @property
    def b(self) -> int:
        return self.sign * self.p ** self.l

    def select(self, r: int) -> SectorValue | None:
        return self.values.get(sector_of(self.p, self.l, r))

    def evaluate(self, r: int) -> CycloElem:
        v = self.select(r)
        if v is None:
            return CycloElem.zero(r)
        return v.evaluate(r)

    def __mul__(self, other: "SectorFactor") -> "SectorFactor":
        if (self.p, self.l, self.sign) != (other.p, other.l, other.sign):
            raise BadInput("factor shapes differ")
        vals = {j: self.values[j] * other.values[j]
                for j in self.values if j in other.values}
        return SectorFactor(self.p, self.l, self.sign, vals)

    def inverse(self) -> "SectorFactor":
        return SectorFactor(self.p, self.l, self.sign,
                            {j: v.inverse() for j, v in self.values.items()})

    def to_json(self) -> dict:
        return {"p": self.p, "l": self.l, "sign": self.sign,
                "sectors": [[j, v.to_json()] for j, v in sorted(self.values.items())]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "SectorFactor":
        return cls(int(obj["p"]), int(obj["l"]), int(obj["sign"]),
                   {int(j): SectorValue.from_json(v) for j, v in obj["sectors"]})


Term = tuple[LaurentPoly, tuple[SectorFactor, ...]]


@dataclass(frozen=True)
class UnifiedInvariant:
    """Finite sum of scalar * product of sector factors."""

    terms: tuple[Term, ...] = ()

    @classmethod
    def one(cls) -> "UnifiedInvariant":
        return cls(((LaurentPoly.one(), ()),))

    @classmethod
    def from_factor(cls, factor: SectorFactor, scalar: LaurentPoly | None = None) -> "UnifiedInvariant":
        return cls(((scalar or LaurentPoly.one(), (factor,)),))

    @property
    def base(self) -> int:
        primes: dict[int, int] = {}
        for _, factors in self.terms:
            for f in factors:
                if f.p > 1:
                    primes[f.p] = max(primes.get(f.p, 0), f.l)
        out = 1
        for p, l in primes.items():
            out *= p ** l
        return out

    def __add__(self, other: "UnifiedInvariant") -> "UnifiedInvariant":
        return UnifiedInvariant(self.terms + other.terms)

    def __mul__(self, other: "UnifiedInvariant") -> "UnifiedInvariant":
        terms = []
        for s1, f1 in self.terms:
            for s2, f2 in other.terms:
                terms.append((s1 * s2, f1 + f2))
        return UnifiedInvariant(tuple(terms))

    def scale(self, c: LaurentPoly) -> "UnifiedInvariant":
        return UnifiedInvariant(tuple((s * c, f) for s, f in self.terms))

    def evaluate(self, r: int) -> CycloElem:
        out = CycloElem.zero(r)
        for scalar, factors in self.terms:
            s = ev_root(scalar, r)
            if s.is_zero():
                continue
            for f in factors:
                s = s * f.evaluate(r)
                if s.is_zero():
                    break
            out = out + s
        return out

    def inverse(self) -> "UnifiedInvariant":
        """Inverse of a single term whose sectors are signed monomials."""
        if len(self.terms) != 1:
            raise BadInput("only single-term invariants are inverted")
        scalar, factors = self.terms[0]
        if len(scalar.terms) != 1:
            raise BadInput("scalar part is not a monomial")
        (e, c), = scalar.terms.items()
        inv_scalar = LaurentPoly({-e: 1 / Fraction(c)}, scalar.den)
        return UnifiedInvariant(((inv_scalar, tuple(f.inverse() for f in factors)),))

    def __truediv__(self, other: "UnifiedInvariant") -> "UnifiedInvariant":
        return self * other.inverse()

    def to_json(self) -> dict:
        return {"terms": [{"scalar": sc.to_json(), "factors": [f.to_json() for f in fs]}
                          for sc, fs in self.terms]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "UnifiedInvariant":
        return cls(tuple((LaurentPoly.from_json(t["scalar"]),
                          tuple(SectorFactor.from_json(f) for f in t["factors"]))
                         for t in obj["terms"]))


def pi_projections(inv: UnifiedInvariant, p: int, eps: str) -> UnifiedInvariant:
    """Keep sector 0 (eps "0") or sectors j >= 1 (eps "0bar") of every p-factor."""
    if eps not in ("0", "0bar"):
        raise BadInput(f"unknown epsilon {eps!r}")
    keep = (lambda j: j == 0) if eps == "0" else (lambda j: j >= 1)
    terms = []
    for scalar, factors in inv.terms:
        new = []
        for f in factors:
            if f.p == p:
                f = SectorFactor(f.p, f.l, f.sign, {j: v for j, v in f.values.items() if keep(j)})
            new.append(f)
        terms.append((scalar, tuple(new)))
    return UnifiedInvariant(tuple(terms))


def pi_sector(inv: UnifiedInvariant, p: int, j: int) -> UnifiedInvariant:
    """Keep only sector j of every p-factor."""
    terms = []
    for scalar, factors in inv.terms:
        new = tuple(SectorFactor(f.p, f.l, f.sign, {i: v for i, v in f.values.items() if i == j})
                    if f.p == p else f for f in factors)
        terms.append((scalar, new))
    return UnifiedInvariant(tuple(terms))


# ---------------------------------------------------------------------------
# Taylor jets


def _gen_binom(rho: Fraction, m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out = out * (rho - i) / (i + 1)
    return out


@dataclass(frozen=True)
class TaylorJet:
    """a_0 + a_1 x + ... + a_{K-1} x^{K-1}, the image of q -> e_n + x mod x^K."""

    n: int
    K: int
    coeffs: tuple[CycloElem, ...]

    @classmethod
    def const(cls, n: int, K: int, c: CycloElem | Scalar) -> "TaylorJet":
        if not isinstance(c, CycloElem):
            c = CycloElem.const(n, c)
        return cls(n, K, (c,) + tuple(CycloElem.zero(n) for _ in range(K - 1)))

    def __add__(self, other: "TaylorJet") -> "TaylorJet":
        return TaylorJet(self.n, self.K, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TaylorJet") -> "TaylorJet":
        return TaylorJet(self.n, self.K, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TaylorJet":
        if not isinstance(other, TaylorJet):
            return TaylorJet(self.n, self.K, tuple(a * other for a in self.coeffs))
        out = []
        for m in range(self.K):
            s = CycloElem.zero(self.n)
            for i in range(m + 1):
                if not self.coeffs[i].is_zero() and not other.coeffs[m - i].is_zero():
                    s = s + self.coeffs[i] * other.coeffs[m - i]
            out.append(s)
        return TaylorJet(self.n, self.K, tuple(out))

    __rmul__ = __mul__

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return self.K

    def truncate(self, K: int) -> "TaylorJet":
        return TaylorJet(self.n, K, self.coeffs[:K])

    def shift_down(self, v: int) -> "TaylorJet":
        """Divide by x^v (the first v coefficients must vanish)."""
        if any(not c.is_zero() for c in self.coeffs[:v]):
            raise NonInvertibleDenominator("jet is not divisible by the requested power of x")
        return TaylorJet(self.n, self.K - v, self.coeffs[v:])

    def inverse(self) -> "TaylorJet":
        a0 = self.coeffs[0]
        if a0.is_zero():
            raise NonInvertibleDenominator("jet with zero constant term is not invertible")
        inv0 = 1 / a0
        out = [inv0]
        for m in range(1, self.K):
            s = CycloElem.zero(self.n)
            for i in range(1, m + 1):
                s = s + self.coeffs[i] * out[m - i]
            out.append(-s * inv0)
        return TaylorJet(self.n, self.K, tuple(out))

    def in_ring(self, base: int) -> bool:
        return all(c.in_ring(base) for c in self.coeffs)


def monomial_jet(n: int, K: int, value: CycloElem, rho: Scalar) -> TaylorJet:
    """Jet of a monomial g with g(e_n) = value and g = q^rho formally:
    value * sum_m binom(rho, m) (x / e_n)^m."""
    rho = Fraction(rho)
    einv = CycloElem.monomial(n, -1)
    out, pw = [], CycloElem.one(n)
    for m in range(K):
        out.append(value * pw * _gen_binom(rho, m))
        pw = pw * einv
    return TaylorJet(n, K, tuple(out))


def taylor_jet(f: LaurentPoly, n: int, K: int) -> TaylorJet:
    """First K coefficients of f(e_n + x) with q^(s/D) -> e_n^(s/D)(1 + x/e_n)^(s/D).

    >>> [c.coeffs[0] for c in taylor_jet(LaurentPoly.mono(Fraction(3, 5)), 1, 3).coeffs]
    [1, Fraction(3, 5), Fraction(-3, 25)]
    """
    if n % 2 == 0:
        raise BadInput("jet centers must have odd order")
    if gcd(f.den, n) != 1:
        raise NonInvertibleDenominator(f"exponent denominator {f.den} is not invertible at order {n}")
    out = TaylorJet.const(n, K, 0)
    for e, c in f.terms.items():
        rho = Fraction(e, f.den)
        val = ev_root(LaurentPoly.mono(rho), n)
        out = out + monomial_jet(n, K, val, rho) * Fraction(c)
    return out


def sector_elem_jet(x: SectorElem, n: int, K: int) -> TaylorJet:
    """Jet of a sector element at an order-n root in its sector."""
    if sector_of(x.p, x.l, n) != x.j:
        raise SectorMismatch(f"order {n} does not select sector {x.j}")
    unit = 4 * abs(x.b) if x.j == 0 else 4
    c, bp = x.c, x.bprime_abs
    out = TaylorJet.const(n, K, 0)
    for (e, t), v in x.terms.items():
        # u^e X^t = q^(e/unit + t c sn(b)/|b'|) formally, with its own root value
        rho = Fraction(e, unit) + Fraction(t * c * x.sign, bp)
        val = SectorElem(x.p, x.l, x.sign, x.j, {(e, t): 1}).evaluate(n)
        out = out + monomial_jet(n, K, val, rho) * Fraction(v)
    return out
