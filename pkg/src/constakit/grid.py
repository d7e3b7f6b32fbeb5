"""The default desk-scale parameter grid and its verification driver.

A grid point fixes (p, a, l, m, n); verification at a point re-derives
the full structural picture there: order-profile identities, coset
partitions, minimal-polynomial structure, and for every constant class
the closed-form factorization checked for exact reconstruction,
irreducibility of every factor, and multiset agreement with the generic
oracle.  The CLI's verify-grid subcommand and the acceptance suite both
drive these checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .cosets import coset_table, negation_coset_map, order_profile
from .equivalence import are_equivalent, transversal
from .errors import VerificationError
from .factorizer import (
    DEFAULT_ORACLE_SEED,
    factorization_of,
    minimal_polys,
    minimal_polys_q2,
    oracle_factor,
    oracle_is_irreducible,
)
from .gf import make_field
from .polyring import Poly, is_self_reciprocal, reciprocal

GRID_Q_MAX = 13
GRID_ELLS = (3, 5, 7, 11)
GRID_M_MAX = 2
GRID_N_MAX = 2
GRID_LENGTH_MAX = 2000

#: Lengths up to which verify_point also samples code-level identities.
CODE_CHECK_LENGTH_MAX = 100


@dataclass(frozen=True, order=True)
class GridPoint:
    p: int
    a: int
    ell: int
    m: int
    n: int

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def N(self) -> int:
        return 2 * self.ell**self.m * self.p**self.n

    def to_json(self):
        return {"p": self.p, "a": self.a, "ell": self.ell, "m": self.m, "n": self.n}

    def label(self) -> str:
        return f"q={self.q} ell={self.ell} m={self.m} n={self.n}"


def default_grid() -> list[GridPoint]:
    """All grid points with q <= 13, l in {3,5,7,11}, m,n <= 2, N <= 2000."""
    pts = []
    for p in (3, 5, 7, 11, 13):
        amax = 1
        while p ** (amax + 1) <= GRID_Q_MAX:
            amax += 1
        for a in range(1, amax + 1):
            for ell in GRID_ELLS:
                if ell == p:
                    continue
                for m in range(1, GRID_M_MAX + 1):
                    for n in range(1, GRID_N_MAX + 1):
                        pt = GridPoint(p, a, ell, m, n)
                        if pt.N <= GRID_LENGTH_MAX:
                            pts.append(pt)
    return sorted(pts)


def _check(results, point, name, fn):
    try:
        detail = fn()
        results.append(
            {"point": point.to_json(), "check": name, "ok": True, "detail": detail}
        )
    except Exception as exc:  # noqa: BLE001 - report every failure kind
        results.append(
            {
                "point": point.to_json(),
                "check": name,
                "ok": False,
                "detail": f"{type(exc).__name__}: {exc}",
            }
        )


def verify_point(
    point: GridPoint,
    *,
    with_oracle: bool = True,
    seed: int = DEFAULT_ORACLE_SEED,
    inject_fault: bool = False,
) -> list[dict]:
    """All structural checks at one grid point; returns check records."""
    results: list[dict] = []
    F = make_field(point.p, point.a)
    q, ell, m, n = point.q, point.ell, point.m, point.n

    def chk_profile():
        prof = order_profile(q, ell, m)
        if 1 + sum(l * d for l, d in zip(prof.lam, prof.delta)) != ell**m:
            raise VerificationError("counting identity failed")
        return f"f={prof.f} s={prof.s} e={prof.e}"

    _check(results, point, "order-profile", chk_profile)

    def chk_cosets():
        table = coset_table(q, ell, m)
        seen = sorted(v for c in table.cosets for v in c.members)
        if seen != list(range(ell**m)):
            raise VerificationError("cosets do not partition")
        for c in table.cosets[1:]:
            if len(c.members) != table.profile.lam[c.r - 1]:
                raise VerificationError("coset size != lambda(r)")
        neg = negation_coset_map(table)
        for i, j in enumerate(neg):
            if neg[j] != i:
                raise VerificationError("negation map not an involution")
        if table.profile.f % 2 == 1:
            fixed = [i for i, j in enumerate(neg) if i == j]
            if fixed != [0]:
                raise VerificationError("odd f must fix only the zero coset")
        return f"{len(table.cosets)} cosets"

    _check(results, point, "coset-table", chk_cosets)

    def chk_minimal_polys():
        table = coset_table(q, ell, m)
        Ms = minimal_polys(F, ell, m)
        neg = negation_coset_map(table)
        if table.profile.f % 2 == 0:
            for M in Ms:
                if not is_self_reciprocal(M):
                    raise VerificationError("even f: factor not self-reciprocal")
        else:
            for i, M in enumerate(Ms):
                if reciprocal(M) != Ms[neg[i]]:
                    raise VerificationError("odd f: reciprocal pairing broken")
                if i > 0 and neg[i] == i:
                    raise VerificationError("odd f: unexpected self-paired factor")
        if table.profile.f % 2 == 0:
            ref = minimal_polys_q2(F, ell, m)
            for i, tup in enumerate(ref.polys):
                prod = Poly.one(ref.F2)
                for g in tup:
                    prod = prod * g
                lift = Poly.from_elements(
                    ref.F2, [ref.map2.embed(c) for c in Ms[i].coeffs()]
                )
                if prod != lift:
                    raise VerificationError("q^2 regrouping does not recover M")
        return f"{len(Ms)} minimal polynomials"

    _check(results, point, "minimal-polys", chk_minimal_polys)

    def chk_transversal():
        classes = transversal(F, ell, m, n)
        want = gcd(2 * ell**m * point.p**n, q - 1)
        if len(classes) != want:
            raise VerificationError(f"{len(classes)} classes, expected {want}")
        N = point.N
        for i, ci in enumerate(classes):
            for cj in classes[i + 1 :]:
                if are_equivalent(ci.rep, cj.rep, N):
                    raise VerificationError("transversal reps are equivalent")
        return f"{len(classes)} classes"

    _check(results, point, "transversal", chk_transversal)

    classes = transversal(F, ell, m, n)
    for cls in classes:
        def chk_factorization(cls=cls):
            fact = factorization_of(F, ell, m, n, cls.rep)
            if inject_fault:
                bad = list(fact.factors)
                bad[0] = bad[0] + Poly.one(F)
                fact = type(fact)(
                    fact.field, fact.ell, fact.m, fact.n, fact.lam,
                    fact.case, tuple(bad), fact.aux, fact.j_class,
                )
            want = Poly.binomial(F, point.N, -cls.rep)
            if fact.product() != want:
                raise VerificationError("product reconstruction failed")
            for g in fact.factors:
                if not oracle_is_irreducible(g):
                    raise VerificationError(f"factor not irreducible: {g!r}")
            return f"case {fact.case}, {len(fact.factors)} factors"

        _check(results, point, f"factorization[j={cls.index}]", chk_factorization)

        if with_oracle:
            def chk_oracle(cls=cls):
                fact = factorization_of(F, ell, m, n, cls.rep)
                target = Poly.binomial(F, point.N, -cls.rep)
                via_oracle = oracle_factor(target, seed=seed)
                closed = sorted(g.key() for g in fact.factors)
                generic = sorted(g.key() for g, _ in via_oracle)
                if closed != generic:
                    raise VerificationError("factor multisets differ from oracle")
                if {k for _, k in via_oracle} != {fact.multiplicity}:
                    raise VerificationError("oracle multiplicities differ from p^n")
                return f"{len(via_oracle)} oracle factors agree"

            _check(results, point, f"oracle-multiset[j={cls.index}]", chk_oracle)

    if point.N <= CODE_CHECK_LENGTH_MAX:
        def chk_codes():
            from . import codes

            rng = random.Random(
                point.p * 1000003 + point.a * 10007 + ell * 101 + m * 11 + n
            )
            sampled = 0
            for cls in classes:
                fact = factorization_of(F, ell, m, n, cls.rep)
                pn = fact.multiplicity
                for _ in range(8):
                    exps = tuple(rng.randrange(pn + 1) for _ in fact.factors)
                    C = codes.make_code(fact, exps)
                    D = codes.dual(C)
                    if C.dim + D.dim != point.N or codes.dual(D) != C:
                        raise VerificationError("duality identities failed")
                    if codes.orthogonality_matrix(C, D).any():
                        raise VerificationError("dual codes are not orthogonal")
                    sampled += 1
            n_lcd_c = len(codes.enumerate_lcd_cyclic(F, ell, m, n))
            n_lcd_n = len(codes.enumerate_lcd_negacyclic(F, ell, m, n))
            n_sd = len(codes.enumerate_self_dual_negacyclic(F, ell, m, n))
            return (
                f"{sampled} random duals ok; LCD cyclic {n_lcd_c}, "
                f"negacyclic {n_lcd_n}, self-dual {n_sd}"
            )

        _check(results, point, "codes-sample", chk_codes)

    return results


def verify_grid(
    points=None,
    *,
    with_oracle: bool = True,
    seed: int = DEFAULT_ORACLE_SEED,
    inject_fault: bool = False,
):
    """Run verify_point across a grid; returns (all_ok, records)."""
    if points is None:
        points = default_grid()
    records = []
    for pt in points:
        records.extend(
            verify_point(
                pt, with_oracle=with_oracle, seed=seed, inject_fault=inject_fault
            )
        )
    return all(r["ok"] for r in records), records
