"""Unified invariants of lens spaces and diagonal manifolds, their evaluation,
Taylor expansions at roots of unity and the mod-p congruences between the
expansion coefficients and values at nearby roots.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence

from .cyclo import CycloElem, LaurentPoly, euler_phi, mod_inverse
from .errors import (
    BadInput,
    IntegralityViolation,
    NonInvertibleDenominator,
    NotCoprime,
    SectorMismatch,
    SmallOrderUnsupported,
)
from .habiro import (
    SectorElem,
    SectorFactor,
    SectorValue,
    TaylorJet,
    UnifiedInvariant,
    sector_elem_jet,
    sector_of,
    split_prime_power,
    taylor_jet,
)
from .laplace import Q_bk_factor
from .qkit import integrality_check
from .wrt import (
    EPS0,
    EPS0BAR,
    DiagonalPiece,
    LensPiece,
    ManifoldSpec,
    bezout_hat,
    d_eps,
    dedekind_sum,
    jacobi_symbol,
    lens_u,
    prime_power,
    sn,
    tau_prime,
)

# ---------------------------------------------------------------------------
# lens spaces


def lens_sector_exponent(b: int, a: int) -> Fraction:
    """3 s(1,b) - 3 sn(b) s(a,b), the sector-0 exponent."""
    return 3 * dedekind_sum(1, b) - 3 * sn(b) * dedekind_sum(a, b)


def lens_u_prime(b: int, a: int) -> Fraction:
    """u' = u - a (a_hat - sn(a) d)^2 / b with d = d(0bar)."""
    d = d_eps(b, a, EPS0BAR)
    ahat, _ = bezout_hat(a, b)
    return lens_u(b, a, d) - Fraction(a * (ahat - sn(a) * d) ** 2, b)


def _lens_value(b: int, a: int, j: int) -> SectorValue:
    p, l = split_prime_power(b)
    if j == 0:
        e = lens_sector_exponent(b, a)
        if (e * abs(b)).denominator != 1:
            raise IntegralityViolation(f"sector-0 exponent {e} not in (1/b)Z")
        return SectorValue(SectorElem.q_power(b, 0, e))
    up = lens_u_prime(b, a)
    if up.denominator != 1 or up % 4:
        raise IntegralityViolation(f"u' = {up} is not divisible by 4")
    pj = p ** min(j, l)
    sign = -1 if ((pj + 1) // 2) * ((sn(a * b) - 1) // 2) % 2 else 1
    jac = jacobi_symbol(abs(a), p) ** min(j, l)
    return SectorValue(SectorElem.q_power(b, j, up / 4) * (sign * jac))


def unified_lens(b: int, a: int, eps: str) -> UnifiedInvariant:
    """I^eps of M(b, a; d(eps)); eps "0" fills sector 0, eps "0bar" the sectors j >= 1."""
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a},{b}) != 1")
    if eps not in (EPS0, EPS0BAR):
        raise BadInput(f"unknown epsilon {eps!r}")
    prime_power(b)
    p, l = split_prime_power(b)
    if p in (1, 2):
        sectors = [0] if eps == EPS0 else []
    else:
        sectors = [0] if eps == EPS0 else list(range(1, l + 1))
    vals = {j: _lens_value(b, a, j) for j in sectors}
    return UnifiedInvariant.from_factor(SectorFactor(p, l, sn(b), vals))


def unified_lens_piece(piece: LensPiece) -> UnifiedInvariant:
    """Unified invariant of M(b, a; d), carrying every sector whose epsilon has d(eps) = d."""
    b, a, d = piece.b, piece.a, piece.d
    p, l = split_prime_power(b)
    vals = {}
    if d == d_eps(b, a, EPS0):
        vals[0] = _lens_value(b, a, 0)
    if p not in (1, 2) and d == d_eps(b, a, EPS0BAR):
        for j in range(1, l + 1):
            vals[j] = _lens_value(b, a, j)
    if not vals:
        raise BadInput(f"no unified invariant for knot color d={d} on L({b},{a})")
    return UnifiedInvariant.from_factor(SectorFactor(p, l, sn(b), vals))


def unified_L1(b: int) -> UnifiedInvariant:
    """I_{L(b,1)} in every sector (d(0) = d(0bar) = 1 for a = 1)."""
    return unified_lens_piece(LensPiece(b, 1, 1))


def general_lens_quotient(inv: UnifiedInvariant, b: int, a: int, eps: str) -> UnifiedInvariant:
    """inv * unified_lens(b, a, eps)^(-1); the divisor's sectors are signed monomials."""
    return inv / unified_lens(b, a, eps)


# ---------------------------------------------------------------------------
# diagonal pieces and connected sums


def unified_diagonal(piece: DiagonalPiece) -> UnifiedInvariant:
    """prod I_{L(b_i,1)} * sum_k C(k) prod_i Q_{b_i, k_i}."""
    for k, c in piece.coeffs.nonzero():
        if not integrality_check(c, max(k)):
            raise IntegralityViolation(f"C{k} fails the divisibility check")
    lens = UnifiedInvariant.one()
    for b in piece.framings:
        lens = lens * unified_L1(b)
    terms = []
    for k, c in piece.coeffs.nonzero():
        factors = tuple(Q_bk_factor(b, ki) for b, ki in zip(piece.framings, k))
        terms.append((c, factors))
    return lens * UnifiedInvariant(tuple(terms))


def connected_sum(*invs: UnifiedInvariant) -> UnifiedInvariant:
    out = UnifiedInvariant.one()
    for inv in invs:
        out = out * inv
    return out


def unified_from_spec(manifold: ManifoldSpec) -> UnifiedInvariant:
    parts = []
    for s in manifold.summands:
        parts.append(unified_lens_piece(s) if isinstance(s, LensPiece) else unified_diagonal(s))
    return connected_sum(*parts)


def ev_unified(inv: UnifiedInvariant, r: int) -> CycloElem:
    """ev at a primitive root of odd order r, asserted to lie in Z[1/base][xi]."""
    if r < 1 or r % 2 == 0:
        raise BadInput("root order must be odd and positive")
    val = inv.evaluate(r)
    if not val.in_ring(inv.base):
        raise IntegralityViolation(f"value at order {r} is not in Z[1/{inv.base}][xi]")
    return val


def covers_order(inv: UnifiedInvariant, r: int) -> bool:
    """True iff every factor of every term carries the sector selected by r."""
    return all(f.select(r) is not None for _, fs in inv.terms for f in fs)


# ---------------------------------------------------------------------------
# Taylor expansion


def jet_divide(num: TaylorJet, den: TaylorJet) -> TaylorJet:
    """num / den, cancelling a common power of x first."""
    v = den.valuation()
    if v >= den.K:
        raise NonInvertibleDenominator("denominator jet vanishes to the full depth")
    return num.shift_down(v) * den.shift_down(v).inverse()


def _value_jet(val: SectorValue, r0: int, K: int) -> TaylorJet:
    num = sector_elem_jet(val.num, r0, K)
    den = taylor_jet(val.den, r0, K)
    if val.chi:
        x = 1 - SectorElem.x(val.num.b, val.num.j, -1)
        den = den * sector_elem_jet(x, r0, K)
    if den.valuation() == 0:
        return num * den.inverse()
    return jet_divide(num, den)


def _jet_depth(inv: UnifiedInvariant, r0: int, K: int) -> int:
    """Depth that leaves K coefficients after every denominator shift."""
    extra = 0
    for _, fs in inv.terms:
        for f in fs:
            v = f.select(r0)
            if v is None:
                continue
            den = taylor_jet(v.den, r0, K + 2 * len(v.den.terms) + 2)
            e = den.valuation() + (1 if v.chi else 0)
            extra = max(extra, e)
    return K + extra


def ohtsuki_taylor(inv: UnifiedInvariant, r0: int, K: int = 8) -> TaylorJet:
    """a_0, ..., a_{K-1} with I(e_{r0} + x) = sum a_n x^n."""
    depth = _jet_depth(inv, r0, K)
    out = TaylorJet.const(r0, K, 0)
    for scalar, fs in inv.terms:
        term = taylor_jet(scalar, r0, depth)
        for f in fs:
            v = f.select(r0)
            if v is None:
                term = None
                break
            fj = _value_jet(v, r0, depth)
            term = term.truncate(min(term.K, fj.K)) * fj.truncate(min(term.K, fj.K))
        if term is None:
            continue
        if term.K < K:
            raise NonInvertibleDenominator("jet depth exhausted by denominator cancellation")
        out = out + term.truncate(K)
    if not out.in_ring(inv.base):
        raise IntegralityViolation("Taylor coefficients leave Z[1/b][e_r]")
    return out


# ---------------------------------------------------------------------------
# expansion at nearby roots


def crt_split(p: int, r0: int) -> tuple[int, int]:
    """(alpha, beta) with alpha = 1 mod r0, 0 mod p and beta = 0 mod r0, 1 mod p,
    so that xi = xi^alpha * xi^beta = e_{r0} e_p for xi of order p r0."""
    n = p * r0
    alpha = (p * mod_inverse(p, r0)) % n if r0 > 1 else 0
    beta = (1 - alpha) % n
    return alpha, beta


def fp_basis_coefficients(x: CycloElem, r0: int) -> list[CycloElem]:
    """a_{p,0..p-2} in Q(e_{r0}) with x = sum a_{p,n} (xi - e_{r0})^n.

    Here xi is the standard generator of order p*r0 and e_{r0} = xi^alpha from
    crt_split, identified with the standard generator of order r0.
    """
    n = x.order
    if n % r0:
        raise BadInput("order of x is not a multiple of r0")
    p = n // r0
    if p < 2 or gcd(p, r0) != 1 or any(p % i == 0 for i in range(2, int(p ** 0.5) + 1)):
        raise BadInput(f"{p} is not a prime coprime to r0={r0}")
    # xi^k = e_{r0}^k e_p^k: coefficient of e_p^i is a polynomial in e_{r0}
    poly: list[CycloElem] = [CycloElem.zero(r0) for _ in range(p)]
    for k, c in enumerate(x.coeffs):
        if c:
            poly[k % p] = poly[k % p] + CycloElem.monomial(r0, k, c)
    # reduce modulo 1 + e_p + ... + e_p^{p-1}
    top = poly[p - 1]
    poly = [poly[i] - top for i in range(p - 1)]
    # e_p = 1 + X / e_{r0}
    einv = CycloElem.monomial(r0, -1)
    out = []
    from math import comb
    for m in range(p - 1):
        s = CycloElem.zero(r0)
        for i in range(m, p - 1):
            if not poly[i].is_zero():
                s = s + poly[i] * comb(i, m)
        out.append(s * einv ** m)
    return out


def fp_basis_value(coeffs: Sequence[CycloElem], r0: int, p: int) -> CycloElem:
    """Re-evaluate sum a_{p,n} (xi - e_{r0})^n in Q(xi), xi of order p*r0."""
    n = p * r0
    alpha, _ = crt_split(p, r0)
    X = CycloElem.monomial(n, 1) - CycloElem.monomial(n, alpha)
    out, pw = CycloElem.zero(n), CycloElem.one(n)
    for a in coeffs:
        out = out + _embed(a, n, alpha) * pw
        pw = pw * X
    return out


def _embed(a: CycloElem, n: int, alpha: int) -> CycloElem:
    """Q(e_{r0}) -> Q(xi): e_{r0} -> xi^alpha."""
    out = CycloElem.zero(n)
    for k, c in enumerate(a.coeffs):
        if c:
            out = out + CycloElem.monomial(n, k * alpha, c)
    return out


def congruent_mod_p(x: CycloElem, y: CycloElem, p: int) -> bool:
    """x = y mod p in Z[1/b][e_r] (p coprime to every denominator)."""
    for c in (x - y).coeffs:
        c = Fraction(c)
        if c.denominator % p == 0 or c.numerator % p:
            return False
    return True


def _primes_above(m: int, count: int, avoid: int) -> list[int]:
    out, q = [], m + 1
    while len(out) < count:
        if q > 1 and all(q % i for i in range(2, int(q ** 0.5) + 1)) and avoid % q:
            out.append(q)
        q += 1
    return out


@dataclass
class OhtsukiReport:
    manifold: ManifoldSpec
    r0: int
    K: int
    taylor: TaylorJet
    per_prime: dict[int, list[CycloElem]] = field(default_factory=dict)
    verdicts: dict[int, list[bool]] = field(default_factory=dict)
    paths_agree: dict[int, bool | None] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(all(v) for v in self.verdicts.values()) and \
            all(a is not False for a in self.paths_agree.values())

    def to_json(self) -> dict:
        return {
            "manifold": self.manifold.to_json(),
            "r0": self.r0,
            "K": self.K,
            "taylor": [c.to_json() for c in self.taylor.coeffs],
            "primes": {
                str(p): {
                    "coefficients": [c.to_json() for c in cs],
                    "congruent": self.verdicts[p],
                    "pathsAgree": self.paths_agree.get(p),
                }
                for p, cs in sorted(self.per_prime.items())
            },
            "ok": self.ok,
        }


def ohtsuki_congruence(manifold: ManifoldSpec, r0: int, primes: Sequence[int] | None = None,
                       K: int = 8) -> OhtsukiReport:
    """Compare the Taylor coefficients a_n at e_{r0} with the coefficients a_{p,n}
    of tau'(e_{r0} e_p) modulo p."""
    if r0 < 1 or r0 % 2 == 0:
        raise BadInput("r0 must be odd and positive")
    inv = unified_from_spec(manifold)
    base = manifold.base()
    if primes is None:
        primes = _primes_above(max(base, r0), 3, r0)
    jet = ohtsuki_taylor(inv, r0, K)
    report = OhtsukiReport(manifold, r0, K, jet)
    for p in primes:
        if p <= max(base, r0) or r0 % p == 0:
            raise BadInput(f"prime {p} must exceed max(base, r0) and not divide r0")
        n = p * r0
        value = tau_prime(manifold, n)
        agree = None
        if covers_order(inv, n):
            try:
                agree = ev_unified(inv, n) == value
            except (SmallOrderUnsupported, SectorMismatch):
                agree = None
        coeffs = fp_basis_coefficients(value, r0)
        report.per_prime[p] = coeffs
        report.paths_agree[p] = agree
        top = min(K, p - 1)
        report.verdicts[p] = [congruent_mod_p(jet.coeffs[i], coeffs[i], p) for i in range(top)]
    return report
