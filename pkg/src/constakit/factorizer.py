"""Closed-form irreducible factorizations of X^(2 l^m p^n) - lam over F_q.

Every nonzero lam falls into one n-equivalence class, and the
factorization is produced per class by one of the classification cases:

* gcd(l, q-1) = 1: the class of 1 (case A, scaled cyclic factors) or the
  nontrivial class (B1 for odd f, pairing conjugate minimal polynomials;
  B2 for even f, built from the q^2-coset refinement).
* l | q-1: classes indexed by j in [0, 2 l^v); j = 0 gives binomial
  factors from the l^v-th roots of unity (case I), j = l^v splits into
  quadratic or mixed binomials (II.A / II.B on m <= u vs m > u), and the
  remaining j = y l^z give high-degree binomials (III.A odd y, III.B
  even y).

Every factor carries multiplicity p^n.  A generic oracle (squarefree
decomposition, then distinct-degree and randomized equal-degree
splitting) provides the independent verification route; it shares no
code path with the closed forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .cosets import OrderProfile, coset_table, order_profile
from .errors import ParameterError, VerificationError
from .gf import (
    FieldElement,
    FieldSpec,
    TowerMap,
    build_tower,
    element_order,
    primitive_root_of_unity,
    sqrt_of,
    synchronized_cache,
)
from .polyring import Poly, monic_hat, scale_sub

__all__ = [
    "Factorization",
    "minimal_polys",
    "minimal_polys_q2",
    "factor_cyclic",
    "factor_coprime_case",
    "factor_divides_case",
    "factor_constacyclic",
    "oracle_factor",
    "oracle_is_irreducible",
    "DEFAULT_ORACLE_SEED",
]

DEFAULT_ORACLE_SEED = 0xC0DE


# ---------------------------------------------------------------------------
# minimal polynomials from cyclotomic cosets


def _eta_powers(ext_field, eta, count):
    pows = [ext_field.one]
    for _ in range(count - 1):
        pows.append(pows[-1] * eta)
    return pows


@synchronized_cache
def minimal_polys(F: FieldSpec, ell: int, m: int) -> tuple[Poly, ...]:
    """Minimal polynomials M of eta^rho, one per q-cyclotomic coset.

    Entry i corresponds to coset i of coset_table(q, l, m); entry 0 is
    X - 1.  Products are computed over the tower hosting a primitive
    l^m-th root of unity and the coefficients are pulled back to F.
    """
    table = coset_table(F.q, ell, m)
    lam_m = table.profile.lam[m - 1]
    lm = ell**m
    if lam_m == 1:
        eta = primitive_root_of_unity(F, lm)
        pows = _eta_powers(F, eta, lm)
        out = [
            Poly.from_elements(F, [-pows[c.members[0]], F.one])
            for c in table.cosets
        ]
    else:
        tower = build_tower(F, lam_m)
        T = tower.ext
        eta = primitive_root_of_unity(T, lm)
        pows = _eta_powers(T, eta, lm)
        out = []
        for c in table.cosets:
            prod = Poly.one(T)
            for s in c.members:
                prod = prod * Poly.from_elements(T, [-pows[s], T.one])
            out.append(
                Poly.from_elements(
                    F, [tower.project(coef) for coef in prod.coeffs()]
                )
            )
    total = Poly.one(F)
    for f in out:
        total = total * f
    if total != Poly.binomial(F, lm, -F.one):
        raise VerificationError("minimal polynomials do not multiply to X^(l^m)-1")
    return tuple(out)


@dataclass(frozen=True)
class Q2Refinement:
    """q^2-coset minimal polynomials over the quadratic extension."""

    F2: FieldSpec
    map2: TowerMap  # F -> F2
    polys: tuple[tuple[Poly, ...], ...]  # per coset: (N,) for {0}, else (N, Nq)


@synchronized_cache
def minimal_polys_q2(F: FieldSpec, ell: int, m: int) -> Q2Refinement:
    """Minimal polynomials over F_{q^2} from the q^2-coset refinement.

    Only defined for even f = ord_l(q); for odd f the q-coset polynomials
    already factor X^(l^m) - 1 over F_{q^2}, so calling this is misuse.
    """
    table = coset_table(F.q, ell, m)
    if table.profile.f % 2 != 0:
        raise ParameterError("q^2 refinement requires even ord_l(q)")
    lam_m = table.profile.lam[m - 1]
    lm = ell**m

    two_tower = build_tower(F, 2)
    F2 = two_tower.ext
    w2 = sqrt_of(F2, two_tower, F.xi)

    tower = build_tower(F, lam_m)
    T = tower.ext
    eta = primitive_root_of_unity(T, lm)
    pows = _eta_powers(T, eta, lm)
    w = sqrt_of(T, tower, F.xi)
    winv2 = (w + w).inverse()
    half = F.elem(pow(2, F.p - 2, F.p))

    def pull(y: FieldElement) -> FieldElement:
        # y in the q^2-subfield of T; decompose as u + v*w with u, v in F
        yq = y**F.q
        u = tower.project((y + yq) * tower.embed(half))
        v = tower.project((y - yq) * winv2)
        return two_tower.embed(u) + two_tower.embed(v) * w2

    def orbit_poly(members) -> Poly:
        prod = Poly.one(T)
        for s in members:
            prod = prod * Poly.from_elements(T, [-pows[s], T.one])
        return Poly.from_elements(F2, [pull(c) for c in prod.coeffs()])

    polys = []
    for parts in table.q2_split:
        polys.append(tuple(orbit_poly(part) for part in parts))
    total = Poly.one(F2)
    for tup in polys:
        for f in tup:
            total = total * f
    if total != Poly.binomial(F2, lm, -F2.one):
        raise VerificationError("q^2 refinement does not multiply to X^(l^m)-1")
    return Q2Refinement(F2, two_tower, tuple(polys))


# ---------------------------------------------------------------------------
# the factorization object


@dataclass(frozen=True)
class Factorization:
    """Distinct monic irreducible factors of X^N - lam, multiplicity p^n."""

    field: FieldSpec
    ell: int
    m: int
    n: int
    lam: FieldElement
    case: str
    factors: tuple[Poly, ...]  # canonical order: (degree, lex coefficients)
    aux: tuple[tuple[str, object], ...]
    j_class: int | None = None

    @property
    def N(self) -> int:
        return 2 * self.ell**self.m * self.field.p**self.n

    @property
    def multiplicity(self) -> int:
        return self.field.p**self.n

    @property
    def profile(self) -> OrderProfile:
        return order_profile(self.field.q, self.ell, self.m)

    def index_of(self, f: Poly) -> int:
        table = getattr(self, "_index", None)
        if table is None:
            table = {g: i for i, g in enumerate(self.factors)}
            object.__setattr__(self, "_index", table)
        if f not in table:
            raise ParameterError("polynomial is not a factor of this factorization")
        return table[f]

    def product(self) -> Poly:
        acc = Poly.one(self.field)
        for f in self.factors:
            acc = acc * f
        return acc ** self.multiplicity

    def verify_product(self):
        want = Poly.binomial(self.field, self.N, -self.lam)
        if self.product() != want:
            raise VerificationError(
                f"factor product does not equal X^{self.N} - lambda ({self.case})"
            )

    def aux_dict(self) -> dict:
        return dict(self.aux)

    def to_json(self):
        def enc(v):
            if isinstance(v, FieldElement):
                return v.to_json()
            return v

        return {
            "q": self.field.q,
            "p": self.field.p,
            "a": self.field.a,
            "ell": self.ell,
            "m": self.m,
            "n": self.n,
            "N": self.N,
            "lambda": self.lam.to_json(),
            "lambda_class": self.j_class,
            "case": self.case,
            "multiplicity": self.multiplicity,
            "aux": {k: enc(v) for k, v in self.aux},
            "factors": [f.to_json() for f in self.factors],
        }


def _finalize(field, ell, m, n, lam, case, factors, aux, j_class=None):
    canon = tuple(sorted(factors, key=lambda f: f.key()))
    if len({f.key() for f in canon}) != len(canon):
        raise VerificationError(f"case {case} emitted duplicate factors")
    fact = Factorization(field, ell, m, n, lam, case, canon, tuple(aux), j_class)
    fact.verify_product()
    return fact


def _validate_params(F: FieldSpec, ell: int, m: int, n: int):
    if ell == F.p:
        raise ParameterError("l must differ from the characteristic")
    if m < 1 or n < 1:
        raise ParameterError("m and n must be >= 1")
    order_profile(F.q, ell, m)  # validates l odd prime, l coprime to q


def _neg_sub(f: Poly) -> Poly:
    """monic(f(-X))."""
    return monic_hat(scale_sub(f, -f.field.one))


# ---------------------------------------------------------------------------
# classification cases


def factor_cyclic(F: FieldSpec, ell: int, m: int, n: int) -> Factorization:
    """X^N - 1 = prod M_i(X)^(p^n) * monic(M_i(-X))^(p^n)."""
    _validate_params(F, ell, m, n)
    Ms = minimal_polys(F, ell, m)
    factors = list(Ms) + [_neg_sub(Mi) for Mi in Ms]
    e = coset_table(F.q, ell, m).e
    if len(factors) != 2 * (e + 1):
        raise VerificationError("cyclic case expects 2(e+1) distinct factors")
    return _finalize(F, ell, m, n, F.one, "CYCLIC", factors, [], j_class=0)


def _scan_witness(F: FieldSpec, N: int, target: FieldElement) -> FieldElement:
    """Smallest (lex) a with a^N = target."""
    for a in F.elements():
        if a.is_zero():
            continue
        if a**N == target:
            return a
    raise AssertionError("witness scan failed")  # callers guarantee existence


def factor_coprime_case(
    F: FieldSpec, ell: int, m: int, n: int, lam: FieldElement
) -> Factorization:
    """The gcd(l, q-1) = 1 classification: cases A, B1, B2."""
    _validate_params(F, ell, m, n)
    if gcd(ell, F.q - 1) != 1:
        raise ParameterError("this case requires gcd(l, q-1) = 1")
    if lam.is_zero():
        raise ParameterError("lambda must be nonzero")
    N = 2 * ell**m * F.p**n
    prof = order_profile(F.q, ell, m)
    Ms = minimal_polys(F, ell, m)

    if lam ** ((F.q - 1) // 2) == F.one:
        # lam is an even power of xi: scaled cyclic factors
        a = _scan_witness(F, N, lam.inverse())
        factors = []
        for Mi in Ms:
            Ma = monic_hat(scale_sub(Mi, a))
            factors.extend([Ma, _neg_sub(Ma)])
        return _finalize(
            F, ell, m, n, lam, "COPRIME-A", factors, [("a", a)], j_class=0
        )

    # lam in the class of xi^(p^n)
    b = _scan_witness(F, N, F.xi ** (F.p**n) * lam.inverse())
    two_tower = build_tower(F, 2)
    F2 = two_tower.ext
    alpha1 = sqrt_of(F2, two_tower, F.xi)
    w = pow(ell, -m, 2 * (F.q - 1))
    beta1 = alpha1 ** (-w)
    if element_order(beta1) != 2 * (F.q - 1):
        raise VerificationError("beta1 is not a primitive 2(q-1)-th root of unity")
    if beta1 ** (ell**m) * alpha1 != F2.one:
        raise VerificationError("beta1^(l^m) * alpha1 != 1")
    if beta1**F.q != -beta1:
        raise VerificationError("beta1^q != -beta1")
    aux = [("b", b), ("alpha1", alpha1), ("beta1", beta1)]

    def to_base(poly2: Poly) -> Poly:
        return Poly.from_elements(F, [two_tower.project(c) for c in poly2.coeffs()])

    if prof.f % 2 == 1:
        # B1: S_i = monic(M_i(beta1 X)) * monic(M_i(-beta1 X)) over F_q
        factors = []
        for Mi in Ms:
            M2 = Poly.from_elements(F2, [two_tower.embed(c) for c in Mi.coeffs()])
            Si = monic_hat(scale_sub(M2, beta1)) * monic_hat(scale_sub(M2, -beta1))
            factors.append(monic_hat(scale_sub(to_base(Si), b)))
        if len(factors) != prof.e + 1:
            raise VerificationError("case B1 expects e+1 factors")
        return _finalize(F, ell, m, n, lam, "COPRIME-B1", factors, aux, j_class=1)

    # B2: pair the q^2-coset polynomials
    ref = minimal_polys_q2(F, ell, m)
    if ref.F2 is not F2:
        raise AssertionError("quadratic towers must coincide")
    b1inv = beta1.inverse()
    P = Poly.from_elements(F2, [-(b1inv * b1inv), F2.zero, F2.one])
    factors = [monic_hat(scale_sub(to_base(P), b))]
    for pair in ref.polys[1:]:
        Nk, Nkq = pair
        Qi = monic_hat(scale_sub(Nk, beta1)) * monic_hat(scale_sub(Nkq, -beta1))
        Ri = monic_hat(scale_sub(Nkq, beta1)) * monic_hat(scale_sub(Nk, -beta1))
        factors.append(monic_hat(scale_sub(to_base(Qi), b)))
        factors.append(monic_hat(scale_sub(to_base(Ri), b)))
    if len(factors) != 2 * prof.e + 1:
        raise VerificationError("case B2 expects 2e+1 factors")
    return _finalize(F, ell, m, n, lam, "COPRIME-B2", factors, aux, j_class=1)


def factor_divides_case(
    F: FieldSpec, ell: int, m: int, n: int, lam: FieldElement
) -> Factorization:
    """The l | (q-1) classification: cases I, II.A, II.B, III.A, III.B."""
    _validate_params(F, ell, m, n)
    if (F.q - 1) % ell != 0:
        raise ParameterError("this case requires l | q-1")
    if lam.is_zero():
        raise ParameterError("lambda must be nonzero")
    p, q = F.p, F.q
    N = 2 * ell**m * p**n
    u = 0
    rem = q - 1
    while rem % ell == 0:
        rem //= ell
        u += 1
    v = min(m, u)
    xi = F.xi
    zeta = xi ** ((q - 1) // ell**v)
    pn = p**n

    # locate the class: lam in xi^(j p^n) <xi^(2 l^v)>
    sub_index = (q - 1) // (2 * ell**v)
    j = None
    for cand in range(2 * ell**v):
        if (lam * (xi ** (cand * pn)).inverse()) ** sub_index == F.one:
            j = cand
            break
    if j is None:
        raise AssertionError("lambda matches no power coset")
    aux = [("u", u), ("v", v), ("zeta", zeta), ("j", j)]

    def binom(t: int, const: FieldElement) -> Poly:
        return Poly.binomial(F, t, -const)

    if j == 0:
        c1 = _scan_witness(F, N, lam.inverse())
        c1i = c1.inverse()
        factors = []
        for i in range(ell**v):
            zi = zeta**i
            factors.append(binom(1, c1i * zi))
            factors.append(binom(1, -(c1i * zi)))
        for jj in range(1, m - u + 1):
            cj = c1i ** (ell**jj)
            for k in range(1, ell**v + 1):
                if k % ell == 0:
                    continue
                zk = zeta**k
                factors.append(binom(ell**jj, cj * zk))
                factors.append(binom(ell**jj, -(cj * zk)))
        aux.append(("c1", c1))
        return _finalize(F, ell, m, n, lam, "DIV-I", factors, aux, j_class=j)

    if j == ell**v:
        c2 = _scan_witness(F, N, xi ** (ell**v * pn) * lam.inverse())
        c2i2 = c2.inverse() ** 2
        aux.append(("c2", c2))
        if m <= u:
            alpha = xi ** ((q - 1) // ell**m)
            aux.append(("alpha", alpha))
            factors = [binom(2, c2i2 * xi * alpha**i) for i in range(ell**m)]
            return _finalize(F, ell, m, n, lam, "DIV-II.A", factors, aux, j_class=j)
        # m > u: beta in <xi^(l^u)> with beta^(l^m) xi^(l^u) = 1
        M0 = (q - 1) // ell**u
        beta = (xi ** (ell**u)).inverse() ** pow(ell, -m, M0)
        if beta ** (ell**m) * xi ** (ell**u) != F.one:
            raise VerificationError("beta^(l^m) * xi^(l^u) != 1")
        if element_order(beta) != M0:
            raise VerificationError("beta must have order (q-1)/l^u")
        aux.append(("beta", beta))
        bi = beta.inverse()
        factors = [binom(2, c2i2 * bi * zeta**i) for i in range(ell**u)]
        for jj in range(1, m - u + 1):
            lj = ell**jj
            cfac = c2i2**lj * bi**lj
            for k in range(1, ell**u + 1):
                if k % ell == 0:
                    continue
                factors.append(binom(2 * lj, cfac * zeta**k))
        return _finalize(F, ell, m, n, lam, "DIV-II.B", factors, aux, j_class=j)

    # case III: j = y l^z with l coprime to y
    z = 0
    y = j
    while y % ell == 0:
        y //= ell
        z += 1
    if z > v - 1:
        raise AssertionError("class power exceeds l^(v-1)")
    d1 = _scan_witness(F, N, xi ** (j * pn) * lam.inverse())
    delta = xi ** ((q - 1) // ell**z)
    aux.extend([("d1", d1), ("y", y), ("z", z), ("delta", delta)])
    d1i = d1.inverse()
    if y % 2 == 1:
        t = 2 * ell ** (m - z)
        cfac = d1i**t * xi**y
        factors = [binom(t, cfac * delta**i) for i in range(ell**z)]
        return _finalize(F, ell, m, n, lam, "DIV-III.A", factors, aux, j_class=j)
    y0 = y // 2
    t = ell ** (m - z)
    cfac = d1i**t * xi**y0
    factors = []
    for i in range(ell**z):
        factors.append(binom(t, cfac * delta**i))
        factors.append(binom(t, -(cfac * delta**i)))
    aux.append(("y0", y0))
    return _finalize(F, ell, m, n, lam, "DIV-III.B", factors, aux, j_class=j)


def factor_constacyclic(
    F: FieldSpec, ell: int, m: int, n: int, lam: FieldElement
) -> Factorization:
    """Dispatch on gcd(l, q-1) to the matching classification case."""
    lam = F.elem(lam)
    if lam.is_zero():
        raise ParameterError("lambda must be nonzero")
    if gcd(ell, F.q - 1) == 1:
        return factor_coprime_case(F, ell, m, n, lam)
    return factor_divides_case(F, ell, m, n, lam)


@synchronized_cache
def _factor_constacyclic_cached(F, ell, m, n, lam_vec):
    return factor_constacyclic(F, ell, m, n, FieldElement(F, lam_vec))


def factorization_of(F: FieldSpec, ell: int, m: int, n: int, lam) -> Factorization:
    """Cached front end to factor_constacyclic (safe: results are immutable)."""
    lam = F.elem(lam)
    return _factor_constacyclic_cached(F, ell, m, n, lam.vec)


# ---------------------------------------------------------------------------
# generic oracle factorization


def _pth_root(f: Poly) -> Poly:
    """g with g^p = f, for f whose nonzero terms all have p | exponent."""
    F = f.field
    p = F.p
    rows = []
    for i in range(0, f.degree + 1, p):
        rows.append(f.coeff(i) ** (p ** (F.a - 1)))
    for i in range(f.degree + 1):
        if i % p and not f.coeff(i).is_zero():
            raise ParameterError("polynomial is not a p-th power")
    return Poly.from_elements(F, rows)


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic squarefree parts with multiplicities (characteristic-p aware)."""
    F = f.field
    if f.is_zero():
        raise ParameterError("cannot decompose the zero polynomial")
    f = monic_hat(f)
    if f.degree == 0:
        return []
    out = []
    deriv = f.derivative()
    if deriv.is_zero():
        for g, k in squarefree_decomposition(_pth_root(f)):
            out.append((g, k * F.p))
        return out
    c = f.gcd(deriv)
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree > 0:
            out.append((z, i))
        w = y
        c = c.exact_div(y)
        i += 1
    # what is left of the cofactor is exactly the p-divisible-multiplicity
    # part of f, with its multiplicities intact
    if c.degree > 0:
        out.extend(squarefree_decomposition(c))
    return out


def _distinct_degree(g: Poly) -> list[tuple[int, Poly]]:
    """Split a monic squarefree g into (d, product of degree-d irreducibles)."""
    F = g.field
    x = Poly.x(F)
    out = []
    h = x
    d = 0
    while g.degree > 0:
        d += 1
        if 2 * d > g.degree:
            out.append((g.degree, g))
            break
        h = h.powmod(F.q, g)
        gd = g.gcd(h - x)
        if gd.degree > 0:
            out.append((d, gd))
            g = g.exact_div(gd)
            h = h % g
    return out


def _equal_degree(pile: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus split of a pile of degree-d irreducibles."""
    F = pile.field
    if pile.degree == d:
        return [pile]
    half = (F.q**d - 1) // 2
    while True:
        coeffs = [F.element_from_index(rng.randrange(F.q)) for _ in range(pile.degree)]
        h = Poly.from_elements(F, coeffs)
        if h.degree < 1:
            continue
        g = h.gcd(pile)
        if 0 < g.degree < pile.degree:
            left = g
        else:
            t = h.powmod(half, pile) - Poly.one(F)
            left = t.gcd(pile)
            if not (0 < left.degree < pile.degree):
                continue
        right = pile.exact_div(left)
        return _equal_degree(left, d, rng) + _equal_degree(right, d, rng)


def oracle_factor(f: Poly, seed: int = DEFAULT_ORACLE_SEED) -> list[tuple[Poly, int]]:
    """Complete monic irreducible factorization by generic algorithms.

    Entirely independent of the closed-form routes; randomized splitting
    is driven by the given seed so runs are reproducible.
    """
    if f.is_zero():
        raise ParameterError("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = []
    for part, mult in squarefree_decomposition(f):
        for d, pile in _distinct_degree(part):
            for irr in _equal_degree(pile, d, rng):
                out.append((irr, mult))
    out.sort(key=lambda t: t[0].key())
    check = Poly.one(f.field)
    for g, k in out:
        check = check * g**k
    if check != monic_hat(f):
        raise VerificationError("oracle factorization failed to reconstruct input")
    return out


def oracle_is_irreducible(f: Poly) -> bool:
    """Distinct-degree irreducibility criterion."""
    if f.degree < 1:
        raise ParameterError("irreducibility is defined for degree >= 1")
    d = f.degree
    if d == 1:
        return True
    F = f.field
    deriv = f.derivative()
    if deriv.is_zero():
        return False  # a p-th power
    if f.gcd(deriv).degree != 0:
        return False  # repeated factor
    x = Poly.x(F)
    primes = set()
    dd = d
    r = 2
    while r * r <= dd:
        while dd % r == 0:
            primes.add(r)
            dd //= r
        r += 1
    if dd > 1:
        primes.add(dd)
    for r in sorted(primes):
        h = x.powmod(F.q ** (d // r), f)
        if (h - x).gcd(f).degree != 0:
            return False
    h = x.powmod(F.q**d, f)
    return h == x
