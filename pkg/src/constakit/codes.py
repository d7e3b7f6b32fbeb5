"""Constacyclic codes on top of a Factorization.

A code is an exponent vector over the distinct irreducible factors of
X^N - lam; its generator polynomial is the corresponding product.  Duals
are lam^{-1}-constacyclic and are computed two ways on every call (the
closed-form exponent flip through the reciprocal pairing, and the direct
reciprocal of (X^N - lam)/g) which must agree.  LCD and self-dual
enumeration walk the orbits of the reciprocal pairing; the emitted
counts are checked against the closed-form count for the relevant case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backend import K
from .errors import (
    BudgetExceededError,
    ParameterError,
    VerificationError,
)
from .factorizer import Factorization, factorization_of
from .gf import FieldElement, FieldSpec, synchronized_cache
from .polyring import Poly, reciprocal

__all__ = [
    "ConstacyclicCode",
    "LinearSubspace",
    "make_code",
    "dual",
    "intersection_dim",
    "is_lcd",
    "iter_lcd_codes",
    "enumerate_lcd_cyclic",
    "enumerate_lcd_negacyclic",
    "iter_self_dual_negacyclic",
    "enumerate_self_dual_negacyclic",
    "encode",
    "min_distance_exhaustive",
    "weight_enumerator",
    "lcd_count_formula",
    "self_dual_count_formula",
]

DEFAULT_DISTANCE_BUDGET = 10**6


@dataclass(frozen=True)
class ConstacyclicCode:
    fact: Factorization
    exps: tuple[int, ...]

    @property
    def field(self) -> FieldSpec:
        return self.fact.field

    @property
    def N(self) -> int:
        return self.fact.N

    @property
    def lam(self) -> FieldElement:
        return self.fact.lam

    @property
    def generator(self) -> Poly:
        g = getattr(self, "_gen", None)
        if g is None:
            g = Poly.one(self.field)
            for f, e in zip(self.fact.factors, self.exps):
                if e:
                    g = g * f**e
            object.__setattr__(self, "_gen", g)
        return g

    @property
    def dim(self) -> int:
        return self.N - self.generator.degree

    def __eq__(self, other):
        return (
            isinstance(other, ConstacyclicCode)
            and self.field is other.field
            and self.N == other.N
            and self.lam == other.lam
            and self.generator == other.generator
        )

    def __hash__(self):
        return hash((id(self.field), self.N, self.lam.vec, self.generator.key()))

    def to_json(self):
        return {
            "lambda_class": self.fact.j_class,
            "exponents": list(self.exps),
            "generator_coeffs": self.generator.to_json()["coeffs"],
            "dim": self.dim,
        }


def make_code(fact: Factorization, exps) -> ConstacyclicCode:
    exps = tuple(int(e) for e in exps)
    if len(exps) != len(fact.factors):
        raise ParameterError(
            f"expected {len(fact.factors)} exponents, got {len(exps)}"
        )
    pn = fact.multiplicity
    if any(e < 0 or e > pn for e in exps):
        raise ParameterError(f"exponents must lie in [0, {pn}]")
    return ConstacyclicCode(fact, exps)


# ---------------------------------------------------------------------------
# linear-algebra plumbing (encoded scalars + lookup tables)


def _tables(F: FieldSpec):
    return F.tables()


def _enc_poly(g: Poly) -> np.ndarray:
    F = g.field
    weights = F.p ** np.arange(F.a, dtype=np.int64)
    if g.is_zero():
        return np.zeros(0, dtype=np.int64)
    return g._c @ weights


def generator_matrix(C: ConstacyclicCode) -> np.ndarray:
    """(dim, N) matrix of encoded scalars; rows are X^i * g."""
    g = _enc_poly(C.generator)
    k = C.dim
    M = np.zeros((k, C.N), dtype=np.int64)
    for i in range(k):
        M[i, i : i + g.shape[0]] = g
    return M


@dataclass(frozen=True)
class LinearSubspace:
    """Row space in reduced row-echelon form over a small field."""

    field: FieldSpec
    length: int
    basis: np.ndarray  # (rank, length), encoded scalars, rref

    @classmethod
    def from_rows(cls, field: FieldSpec, length: int, rows: np.ndarray) -> LinearSubspace:
        add_t, mul_t, neg_t, inv_t = _tables(field)
        if rows.shape[0] == 0:
            return cls(field, length, np.zeros((0, length), dtype=np.int64))
        R, rank = K.tab_rref(rows.astype(np.int64), add_t, mul_t, inv_t, neg_t)
        return cls(field, length, R[:rank])

    @property
    def dim(self) -> int:
        return self.basis.shape[0]


def _rank(F: FieldSpec, rows: np.ndarray) -> int:
    if rows.shape[0] == 0:
        return 0
    add_t, mul_t, neg_t, inv_t = _tables(F)
    _, rank = K.tab_rref(rows.astype(np.int64), add_t, mul_t, inv_t, neg_t)
    return rank


def subspace(C: ConstacyclicCode) -> LinearSubspace:
    return LinearSubspace.from_rows(C.field, C.N, generator_matrix(C))


def orthogonality_matrix(C1: ConstacyclicCode, C2: ConstacyclicCode) -> np.ndarray:
    """All pairwise inner products of the two generator matrices (encoded)."""
    if C1.field is not C2.field or C1.N != C2.N:
        raise ParameterError("codes must share field and length")
    add_t, mul_t, _, _ = _tables(C1.field)
    G1, G2 = generator_matrix(C1), generator_matrix(C2)
    if G1.shape[0] == 0 or G2.shape[0] == 0:
        return np.zeros((G1.shape[0], G2.shape[0]), dtype=np.int64)
    return K.tab_matmul(G1, G2.T.copy(), add_t, mul_t)


def intersection_dim(C1: ConstacyclicCode, C2: ConstacyclicCode) -> int:
    """Dimension of the intersection of two codes of the same length.

    Computed from ranks of the stacked generator matrices; when the
    codes live in the same ambient ring the polynomial route
    N - deg lcm(g1, g2) is computed as well and must agree.
    """
    if C1.field is not C2.field:
        raise ParameterError("codes over different fields")
    if C1.N != C2.N:
        raise ParameterError("codes of different lengths")
    F = C1.field
    G1, G2 = generator_matrix(C1), generator_matrix(C2)
    r1, r2 = G1.shape[0], G2.shape[0]
    stacked = _rank(F, np.concatenate([G1, G2], axis=0))
    inter = r1 + r2 - stacked
    if C1.lam == C2.lam:
        via_lcm = C1.N - C1.generator.lcm(C2.generator).degree
        if via_lcm != inter:
            raise VerificationError(
                f"intersection dimension mismatch: rank route {inter}, "
                f"lcm route {via_lcm}"
            )
    return inter


# ---------------------------------------------------------------------------
# duality


def dual_factorization(fact: Factorization) -> Factorization:
    return factorization_of(
        fact.field, fact.ell, fact.m, fact.n, fact.lam.inverse()
    )


@synchronized_cache
def _pairing_cached(fact: Factorization) -> tuple[Factorization, tuple[int, ...]]:
    dfact = dual_factorization(fact)
    sigma = tuple(dfact.index_of(reciprocal(f)) for f in fact.factors)
    return dfact, sigma


def reciprocal_pairing(fact: Factorization) -> tuple[Factorization, tuple[int, ...]]:
    """The dual factorization and the factor pairing i -> index of f_i*."""
    return _pairing_cached(fact)


def dual(C: ConstacyclicCode) -> ConstacyclicCode:
    """The dual code: lam^{-1}-constacyclic with flipped paired exponents."""
    fact = C.fact
    pn = fact.multiplicity
    dfact, sigma = reciprocal_pairing(fact)
    exps = [0] * len(dfact.factors)
    for i, e in enumerate(C.exps):
        exps[sigma[i]] = pn - e
    D = make_code(dfact, tuple(exps))
    # independent route: h = (X^N - lam)/g, dual generator = h*
    h = Poly.binomial(fact.field, fact.N, -fact.lam).exact_div(C.generator)
    direct = reciprocal(h)
    if direct != D.generator:
        raise VerificationError(
            "closed-form dual generator disagrees with reciprocal of h"
        )
    return D


def is_lcd(C: ConstacyclicCode) -> bool:
    """Whether the code meets its dual trivially.

    For lam outside {1, -1} this is always the case; the intersection is
    still computed and checked as a guard.
    """
    F = C.field
    D = dual(C)
    inter = intersection_dim(C, D)
    if C.lam != F.one and C.lam != -F.one:
        if inter != 0:
            raise VerificationError(
                "a code with lambda != +-1 must intersect its dual trivially"
            )
        return True
    return inter == 0


# ---------------------------------------------------------------------------
# LCD and self-dual enumeration


def _pairing_orbits(fact: Factorization):
    dfact, sigma = reciprocal_pairing(fact)
    if dfact is not fact:
        raise ParameterError("pairing orbits need lam = lam^{-1} (cyclic/negacyclic)")
    fixed = [i for i, j in enumerate(sigma) if i == j]
    cycles = [(i, j) for i, j in enumerate(sigma) if i < j]
    return fixed, cycles


def iter_lcd_codes(fact: Factorization):
    """All LCD codes in a cyclic/negacyclic ring, via the pairing orbits.

    The intersection with the dual vanishes exactly when every
    self-reciprocal factor has exponent 0 or p^n and every reciprocal
    pair shares one exponent value in {0, p^n}.
    """
    pn = fact.multiplicity
    fixed, cycles = _pairing_orbits(fact)
    slots = len(fixed) + len(cycles)
    for mask in range(1 << slots):
        exps = [0] * len(fact.factors)
        for t, i in enumerate(fixed):
            if (mask >> t) & 1:
                exps[i] = pn
        for t, (i, j) in enumerate(cycles):
            if (mask >> (len(fixed) + t)) & 1:
                exps[i] = exps[j] = pn
        yield make_code(fact, tuple(exps))


def lcd_count_formula(family: str, q: int, f: int, e: int) -> int:
    """Closed-form count of LCD cyclic/negacyclic codes for the case."""
    if family == "cyclic":
        return 2 ** (e + 2) if f % 2 == 1 else 2 ** (2 * (e + 1))
    if family == "negacyclic":
        if q % 4 == 1:
            return 2 ** (e + 1)
        if f % 2 == 1:
            if e % 2 != 0:
                raise VerificationError("odd f forces even e")
            return 2 ** (1 + e // 2)
        if f % 4 == 2:
            return 2 ** (1 + 2 * e)
        return 2 ** (1 + e)
    raise ParameterError(f"unknown family {family!r}")


def self_dual_count_formula(q: int, p: int, n: int, e: int) -> int:
    return (p**n + 1) ** (e + 1) if q % 4 == 1 else 0


def _enumerate_lcd(F: FieldSpec, ell: int, m: int, n: int, lam, family: str):
    fact = factorization_of(F, ell, m, n, lam)
    codes = list(iter_lcd_codes(fact))
    prof = fact.profile
    want = lcd_count_formula(family, F.q, prof.f, prof.e)
    if len(codes) != want:
        raise VerificationError(
            f"LCD {family} enumeration found {len(codes)} codes, "
            f"closed form predicts {want}"
        )
    for C in codes:
        if not is_lcd(C):
            raise VerificationError("enumerated code fails the LCD check")
    return codes


def enumerate_lcd_cyclic(F: FieldSpec, ell: int, m: int, n: int):
    """All LCD cyclic codes of length 2 l^m p^n; count checked."""
    return _enumerate_lcd(F, ell, m, n, F.one, "cyclic")


def enumerate_lcd_negacyclic(F: FieldSpec, ell: int, m: int, n: int):
    """All LCD negacyclic codes of length 2 l^m p^n; count checked."""
    return _enumerate_lcd(F, ell, m, n, -F.one, "negacyclic")


def iter_self_dual_negacyclic(F: FieldSpec, ell: int, m: int, n: int):
    """Self-dual negacyclic codes: exponents e and p^n - e across pairs.

    A self-reciprocal factor would force 2e = p^n, impossible for odd p,
    so self-dual codes exist exactly when the pairing is fixed-point
    free (q = 1 mod 4).
    """
    fact = factorization_of(F, ell, m, n, -F.one)
    pn = fact.multiplicity
    fixed, cycles = _pairing_orbits(fact)
    if fixed:
        return
    total = (pn + 1) ** len(cycles)
    for idx in range(total):
        exps = [0] * len(fact.factors)
        rem = idx
        for i, j in cycles:
            exps[i] = rem % (pn + 1)
            exps[j] = pn - exps[i]
            rem //= pn + 1
        yield make_code(fact, tuple(exps))


def enumerate_self_dual_negacyclic(F: FieldSpec, ell: int, m: int, n: int):
    """All self-dual negacyclic codes; count and C = dual(C) checked."""
    codes = list(iter_self_dual_negacyclic(F, ell, m, n))
    prof = factorization_of(F, ell, m, n, -F.one).profile
    want = self_dual_count_formula(F.q, F.p, n, prof.e)
    if len(codes) != want:
        raise VerificationError(
            f"self-dual enumeration found {len(codes)}, closed form {want}"
        )
    for C in codes:
        D = dual(C)
        if D != C:
            raise VerificationError("enumerated self-dual code is not self-dual")
        if C.dim * 2 != C.N:
            raise VerificationError("self-dual code must have dimension N/2")
    return codes


# ---------------------------------------------------------------------------
# encoding, weights, distance


def encode(C: ConstacyclicCode, message) -> list[FieldElement]:
    """Codeword = message polynomial times the generator (degree < N)."""
    F = C.field
    msg = [F.elem(c) for c in message]
    if len(msg) != C.dim:
        raise ParameterError(f"message length must equal dim = {C.dim}")
    cw = Poly.from_elements(F, msg) * C.generator
    out = [cw.coeff(i) for i in range(C.N)]
    if cw.degree >= C.N:
        raise AssertionError("codeword overflowed the block length")
    return out


def _weight_hist(C: ConstacyclicCode, budget: int) -> np.ndarray:
    F = C.field
    k = C.dim
    if k == 0:
        out = np.zeros(C.N + 1, dtype=np.int64)
        out[0] = 1
        return out
    if F.q**k > budget:
        raise BudgetExceededError(
            f"q^dim = {F.q}^{k} exceeds the enumeration budget {budget}"
        )
    add_t, mul_t, neg_t, inv_t = _tables(F)
    G = generator_matrix(C)
    rowmul = np.zeros((k, F.q, C.N), dtype=np.int64)
    for v in range(F.q):
        rowmul[:, v, :] = mul_t[v, G]
    return K.tab_weight_hist(rowmul, add_t, C.N)


def weight_enumerator(C: ConstacyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET):
    """Weight histogram over all q^dim codewords (index = Hamming weight)."""
    return _weight_hist(C, budget)


def min_distance_exhaustive(
    C: ConstacyclicCode, budget: int = DEFAULT_DISTANCE_BUDGET
) -> int:
    """Minimum nonzero Hamming weight by full codeword enumeration."""
    if C.dim == 0:
        raise ParameterError("the zero code has no nonzero codewords")
    hist = _weight_hist(C, budget)
    for w in range(1, hist.shape[0]):
        if hist[w]:
            return w
    raise AssertionError("no nonzero codeword found in a dim > 0 code")
