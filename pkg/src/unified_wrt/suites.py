"""Verification grids.  Every suite returns a SuiteResult whose JSON form is
deterministic for a given seed; cells are independent and may run in a pool."""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

from .cyclo import CycloElem, CycloModK, LaurentPoly, mod_inverse, quad_gauss
from .errors import IntegralityViolation, NonPolynomialCoefficient, WRTError
from .habiro import qroot_newton, split_prime_power, sector_of
from .laplace import andrews_specialized_check, bposbneg_check, qbk_product_form, \
    qq_factorization_check, verify_fourier
from .qkit import (
    HabiroCoeffTable,
    habiro_C_from_jones,
    integrality_check,
    meridian_jones,
    qnum,
    tensor_tables,
    unknot_table,
    unlink_jones,
)
from .unify import (
    connected_sum,
    ev_unified,
    ohtsuki_congruence,
    unified_diagonal,
    unified_lens,
)
from .wrt import (
    EPS0,
    EPS0BAR,
    DiagonalPiece,
    LensPiece,
    LinkingData,
    ManifoldSpec,
    cable_rewrite,
    d_eps,
    dedekind_sum,
    flip_closed,
    flip_open,
    gr_eps,
    gr_q,
    jacobi_symbol,
    lens_tau_prime_closed,
    tau_L1,
    tau_lens,
    tau_prime,
    tau_prime_lens,
)

PRIME_POWERS_TO_9 = (2, 3, 4, 5, 7, 8, 9)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        return SuiteResult(self.name, self.checked + other.checked, self.failures + other.failures)

    def to_json(self) -> dict:
        return {"suite": self.name, "checked": self.checked, "passed": self.ok,
                "failures": self.failures[:20], "failureCount": len(self.failures)}


def _run(name: str, fn: Callable, cells: Sequence, jobs: int = 1) -> SuiteResult:
    """Apply fn to every cell; fn returns None on success or a failure dict."""
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outs = list(pool.map(fn, cells, chunksize=max(1, len(cells) // (4 * jobs))))
    else:
        outs = [fn(c) for c in cells]
    res = SuiteResult(name, len(cells))
    res.failures = [o for o in outs if o is not None]
    return res


def _guard(fn: Callable, cell, **info) -> dict | None:
    try:
        return fn(cell)
    except WRTError as exc:
        return {**info, "error": f"{type(exc).__name__}: {exc}"}


# ---------------------------------------------------------------------------
# criterion 1: closed lens formula against the Hopf-chain sum


def lens_grid() -> list[tuple[int, int, int, int]]:
    cells = []
    for B in PRIME_POWERS_TO_9:
        for b in (B, -B):
            for a in range(-B + 1, B):
                if a == 0 or gcd(a, b) != 1:
                    continue
                for d in sorted({d_eps(b, a, EPS0), d_eps(b, a, EPS0BAR)}):
                    for r in range(3, 22, 2):
                        cells.append((b, a, d, r))
    return cells


def _lens_cell(cell) -> dict | None:
    b, a, d, r = cell
    def go(_):
        if lens_tau_prime_closed(b, a, d, r) != tau_prime_lens(b, a, d, r):
            return {"b": b, "a": a, "d": d, "r": r}
        return None
    return _guard(go, cell, b=b, a=a, d=d, r=r)


def suite_lens(jobs: int = 1, lens_fn: Callable | None = None) -> SuiteResult:
    if lens_fn is not None:
        # mutation hook: compare a caller-supplied closed formula instead
        res = SuiteResult("lens-equivalence")
        for b, a, d, r in lens_grid():
            res.checked += 1
            if lens_fn(b, a, d, r) != tau_prime_lens(b, a, d, r):
                res.failures.append({"b": b, "a": a, "d": d, "r": r})
        return res
    return _run("lens-equivalence", _lens_cell, lens_grid(), jobs)


# ---------------------------------------------------------------------------
# criterion 2: product form of Q_{b,k}

QBK_B = (2, -2, 3, -3, 4, -4, 5, -5, 8, -8, 9, -9)


def qbk_grid() -> list[tuple[int, int, int]]:
    cells = []
    for b in QBK_B:
        for k in range(5):
            rs = [r for r in range(3, 26, 2) if r > 2 * k + 2]
            if abs(b) == 9:
                rs.append(27)
            cells.extend((b, k, r) for r in rs)
    return cells


def _qbk_cell(cell) -> dict | None:
    b, k, r = cell
    def go(_):
        lhs, rhs = qbk_product_form(b, k, r)
        return None if lhs == rhs else {"b": b, "k": k, "r": r}
    return _guard(go, cell, b=b, k=k, r=r)


def suite_qbk(jobs: int = 1) -> SuiteResult:
    return _run("qbk-theorem", _qbk_cell, qbk_grid(), jobs)


# ---------------------------------------------------------------------------
# criterion 3: Andrews specialization

ANDREWS_ODD = ((3, 0), (3, 1), (9, 0), (9, 1), (9, 2), (5, 0), (5, 1), (-3, 1))
ANDREWS_EVEN = (2, -2, 4, -4)


def andrews_grid() -> list[tuple[int, int, int]]:
    cells = [(b, j, k) for b, j in ANDREWS_ODD for k in range(4)]
    cells += [(b, 0, k) for b in ANDREWS_EVEN for k in range(4)]
    return cells


def _andrews_cell(cell) -> dict | None:
    b, j, k = cell
    def go(_):
        rep = andrews_specialized_check(b, j, k)
        if rep.ok:
            return None
        return {"b": b, "j": j, "k": k, "identity": rep.identity, "productForm": rep.product_form,
                "rootFree": rep.root_free, "lattice": rep.lattice}
    return _guard(go, cell, b=b, j=j, k=k)


def suite_andrews(jobs: int = 1) -> SuiteResult:
    res = _run("andrews", _andrews_cell, andrews_grid(), jobs)
    for k in range(7):
        res.checked += 1
        if not bposbneg_check(k):
            res.failures.append({"bposbneg": k})
    for N in range(1, 8):
        for c in (1, 3, 5, 9):
            res.checked += 1
            if not qq_factorization_check(N, c):
                res.failures.append({"factorization": [N, c]})
    return res


# ---------------------------------------------------------------------------
# criterion 4: Fourier/Laplace


def random_zpoly(rng: random.Random, zdeg: int = 6, qdeg: int = 3) -> dict[int, LaurentPoly]:
    f = {}
    for a in range(-zdeg, zdeg + 1):
        if rng.random() < 0.5:
            terms = {e: rng.randint(-5, 5) for e in range(-qdeg, qdeg + 1) if rng.random() < 0.5}
            c = LaurentPoly(terms)
            if not c.is_zero():
                f[a] = c
    if not f:
        f[0] = LaurentPoly.one()
    return f


FOURIER_B = (3, -3, 5, -5, 9)


def fourier_cells(seed: int, count: int = 100) -> list:
    rng = random.Random(seed)
    polys = [random_zpoly(rng) for _ in range(count)]
    return [(i, {a: c.to_json() for a, c in f.items()}) for i, f in enumerate(polys)]


def _fourier_cell(cell) -> dict | None:
    i, fj = cell
    f = {a: LaurentPoly.from_json(c) for a, c in fj.items()}
    for b in FOURIER_B:
        for r in range(1, 16, 2):
            try:
                ok = verify_fourier(f, b, r)
            except WRTError as exc:
                return {"poly": i, "b": b, "r": r, "error": str(exc)}
            if not ok:
                return {"poly": i, "b": b, "r": r}
    return None


def suite_fourier(seed: int = 0, jobs: int = 1) -> SuiteResult:
    return _run("fourier", _fourier_cell, fourier_cells(seed), jobs)


# ---------------------------------------------------------------------------
# criteria 5 and 6: unified invariants


def unified_lens_grid() -> list[tuple[int, int, str, int]]:
    cells = []
    for b, a, d, r in lens_grid():
        p, l = split_prime_power(b)
        j = sector_of(p, l, r)
        for eps in (EPS0, EPS0BAR):
            if d == d_eps(b, a, eps) and (j == 0) == (eps == EPS0):
                cells.append((b, a, eps, r))
    return sorted(set(cells), key=lambda c: (abs(c[0]), c[0], c[1], c[2], c[3]))


def _unified_lens_cell(cell) -> dict | None:
    b, a, eps, r = cell
    def go(_):
        got = ev_unified(unified_lens(b, a, eps), r)
        if got != lens_tau_prime_closed(b, a, d_eps(b, a, eps), r):
            return {"b": b, "a": a, "eps": eps, "r": r}
        return None
    return _guard(go, cell, b=b, a=a, eps=eps, r=r)


DIAGONAL_B = (3, -3, 5, -5, 9, -9)


def _diagonal_cells() -> list:
    cells = [("single", (b,), r) for b in DIAGONAL_B for r in range(3, 22, 2)]
    pairs = [(3, -5), (3, 3), (-3, 9), (5, -9), (-5, -3)]
    cells += [("sum", pair, r) for pair in pairs for r in range(3, 22, 2)]
    return cells


def _diagonal_cell(cell) -> dict | None:
    kind, bs, r = cell
    def go(_):
        invs = [unified_diagonal(DiagonalPiece((b,), unknot_table())) for b in bs]
        got = ev_unified(connected_sum(*invs), r)
        want = tau_prime(ManifoldSpec([LensPiece(b, 1, 1) for b in bs]), r)
        return None if got == want else {"kind": kind, "framings": list(bs), "r": r}
    return _guard(go, cell, kind=kind, framings=list(bs), r=r)


def suite_unified(jobs: int = 1) -> SuiteResult:
    res = _run("unified", _unified_lens_cell, unified_lens_grid(), jobs)
    res = res.merge(_run("unified", _diagonal_cell, _diagonal_cells(), jobs))
    # tau'_{L(5,2)} = xi^{3 * 5_*} for (r, 5) = 1
    for r in range(3, 40, 2):
        if r % 5 == 0:
            continue
        res.checked += 1
        want = CycloElem.monomial(r, 3 * mod_inverse(5, r))
        if ev_unified(unified_lens(5, 2, EPS0), r) != want or lens_tau_prime_closed(5, 2, 1, r) != want:
            res.failures.append({"L(5,2)": r})
    return res


# ---------------------------------------------------------------------------
# criterion 7: expansion coefficients


def suite_habiro(seed: int = 0) -> SuiteResult:
    res = SuiteResult("habiro")
    q = LaurentPoly.mono(1)

    def check(cond: bool, **info) -> None:
        res.checked += 1
        if not cond:
            res.failures.append(info)

    unknot = habiro_C_from_jones(unlink_jones(1, 6), 1, 6)
    check(unknot.entries == {(0,): q}, case="unknot")
    tables: list[tuple[str, dict, HabiroCoeffTable]] = []
    for m, N in ((1, 6), (2, 4), (3, 3)):
        J = unlink_jones(m, N)
        tables.append((f"unlink{m}", J, habiro_C_from_jones(J, m, N)))
    for j in (1, 3, 5, 7):
        J = meridian_jones(6, j)
        tables.append((f"meridian{j}", J, habiro_C_from_jones(J, 1, 6, (j,))))
    for name, J, table in tables:
        for n, v in J.items():
            lhs = v
            for ni in n:
                lhs = lhs * qnum(ni)
            check(table.expand(n) == lhs, case=name, colors=list(n))
        for k, c in table.nonzero():
            check(integrality_check(c, max(k)), case=name, k=list(k))
        check(HabiroCoeffTable.from_json(table.to_json()) == table, case=name, roundtrip=True)
    # tensor product of tables equals the table of the split union
    t2 = tensor_tables(unknot, unknot)
    check(t2.entries == tables[1][2].entries, case="tensor")
    # a seeded inconsistency must be rejected
    rng = random.Random(seed)
    J = unlink_jones(2, 4)
    n = (rng.randint(2, 4), rng.randint(2, 4))
    J[n] = J[n] + LaurentPoly.mono(rng.randint(-3, 3), rng.choice((-1, 1)))
    try:
        habiro_C_from_jones(J, 2, 4)
        rejected = False
    except (NonPolynomialCoefficient, IntegralityViolation):
        rejected = True
    check(rejected, case="inconsistent", colors=list(n))
    bad = LaurentPoly.mono(rng.randint(0, 3), rng.choice((-1, 1)))
    check(not integrality_check(bad, 1 + rng.randint(0, 2)), case="nondivisible")
    return res


# ---------------------------------------------------------------------------
# criterion 8: roots of q


def suite_roots() -> SuiteResult:
    res = SuiteResult("roots")
    for b in (2, 3, 5, 9):
        for n in range(1, 26):
            if gcd(n, b) != 1:
                continue
            for k in (1, 2, 3):
                res.checked += 1
                y = qroot_newton(n, k, b)
                ok = y ** b == CycloModK.q(n, k) and y.in_ring(b)
                if n % 2 and n > 1:
                    ok = ok and y.residue() == CycloElem.monomial(n, mod_inverse(b, n))
                if not ok:
                    res.failures.append({"b": b, "n": n, "k": k})
    return res


# ---------------------------------------------------------------------------
# criterion 9: Ohtsuki congruences


def suite_ohtsuki() -> SuiteResult:
    res = SuiteResult("ohtsuki")
    l52 = ManifoldSpec([LensPiece(5, 2, 1)])
    rep = ohtsuki_congruence(l52, 1, (7, 11, 13), K=5)
    res.checked += 1
    want = [Fraction(1), Fraction(3, 5), Fraction(-3, 25)]
    got = [Fraction(c.coeffs[0]) for c in rep.taylor.coeffs[:3]]
    if got != want:
        res.failures.append({"taylor": [str(x) for x in got]})
    for run in (rep, ohtsuki_congruence(l52, 3, None, K=5)):
        for p, verdicts in run.verdicts.items():
            res.checked += 1
            if not all(verdicts) or run.paths_agree.get(p) is False:
                res.failures.append({"r0": run.r0, "p": p, "verdicts": verdicts})
    return res


# ---------------------------------------------------------------------------
# criterion 10: number theory and conjugation


def _jacobi_brute(x: int, y: int) -> int:
    out, m, p = 1, y, 3
    while m > 1:
        while m % p == 0:
            m //= p
            if x % p == 0:
                return 0
            out *= 1 if any((t * t - x) % p == 0 for t in range(p)) else -1
        p += 2
    return out


def galois_grid() -> list[tuple[int, int, int, int]]:
    return [(b, a, d, r) for b, a, d, r in lens_grid() if b > 0]


def suite_number_theory() -> SuiteResult:
    res = SuiteResult("number-theory")
    for b in range(2, 51):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            res.checked += 1
            lhs = dedekind_sum(a, b) + dedekind_sum(b, a)
            rhs = Fraction(-1, 4) + Fraction(a * a + b * b + 1, 12 * a * b)
            if lhs != rhs:
                res.failures.append({"dedekind": [a, b]})
    for y in range(1, 100, 2):
        for x in range(-y, 2 * y + 1):
            res.checked += 1
            if jacobi_symbol(x, y) != _jacobi_brute(x, y):
                res.failures.append({"jacobi": [x, y]})
    for r in range(1, 26, 2):
        res.checked += 1
        if quad_gauss(r) ** 2 != CycloElem.const(r, (-1) ** ((r - 1) // 2) * r):
            res.failures.append({"gauss": r})
    for b, a, d, r in galois_grid():
        res.checked += 1
        if tau_prime_lens(-b, a, d, r) != tau_prime_lens(b, a, d, r).conj():
            res.failures.append({"galoisTauPrime": [b, a, d, r]})
    return res


def suite_galois_tau() -> SuiteResult:
    """Conjugation on the unnormalized invariant, and the normalizer ratio."""
    res = SuiteResult("galois-tau")
    for b, a, d, r in galois_grid():
        res.checked += 1
        if tau_lens(-b, a, d, r) != tau_lens(b, a, d, r).conj():
            res.failures.append({"tau": [b, a, d, r]})
        res.checked += 1
        if tau_prime_lens(-b, a, d, r) != tau_lens(b, a, d, r).conj() / tau_L1(b, r):
            res.failures.append({"tauPrimeRatio": [b, a, d, r]})
    return res


# ---------------------------------------------------------------------------
# criterion 11: gradings


def random_linking_data(rng: random.Random) -> LinkingData:
    n, m = rng.randint(0, 3), rng.randint(1, 4)
    p = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            p[i][j] = p[j][i] = rng.randint(-5, 5)
    l = tuple(tuple(rng.randint(-4, 4) for _ in range(m)) for _ in range(n))
    colors = tuple(rng.randint(1, 7) for _ in range(m))
    return LinkingData(n, m, l, tuple(map(tuple, p)), colors)


def suite_gradings(seed: int = 0, count: int = 200) -> SuiteResult:
    res = SuiteResult("gradings")
    rng = random.Random(seed)
    for idx in range(count):
        D = random_linking_data(rng)
        g = (gr_eps(D), gr_q(D))
        variants = [("flipClosed", j, flip_closed(D, j)) for j in range(D.m)]
        variants += [("flipOpen", i, flip_open(D, i)) for i in range(D.n)]
        for i in range(D.m):
            if D.colors[i] >= 3:
                doubled, lowered = cable_rewrite(D, i)
                variants += [("cableDoubled", i, doubled), ("cableLowered", i, lowered)]
        for kind, i, V in variants:
            res.checked += 1
            if (gr_eps(V), gr_q(V)) != g:
                res.failures.append({"instance": idx, "move": kind, "component": i})
    return res


# ---------------------------------------------------------------------------

SUITES = ("lens-equivalence", "qbk-theorem", "andrews", "fourier", "unified", "ohtsuki",
          "gradings", "habiro", "roots", "number-theory", "galois-tau")


def run_suite(name: str, seed: int = 0, jobs: int = 1) -> list[SuiteResult]:
    table: dict[str, Callable[[], SuiteResult]] = {
        "lens-equivalence": lambda: suite_lens(jobs),
        "qbk-theorem": lambda: suite_qbk(jobs),
        "andrews": lambda: suite_andrews(jobs),
        "fourier": lambda: suite_fourier(seed, jobs),
        "unified": lambda: suite_unified(jobs),
        "ohtsuki": suite_ohtsuki,
        "gradings": lambda: suite_gradings(seed),
        "habiro": lambda: suite_habiro(seed),
        "roots": suite_roots,
        "number-theory": suite_number_theory,
        "galois-tau": suite_galois_tau,
    }
    if name == "all":
        return [table[n]() for n in SUITES]
    if name not in table:
        raise KeyError(name)
    return [table[name]()]
