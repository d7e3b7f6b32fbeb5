"""Exact arithmetic in finite fields of odd characteristic.

A field F_{p^a} is represented as F_p[x]/(h) where h is the
lexicographically smallest monic irreducible polynomial of degree a over
F_p (coefficients compared low-degree-first).  Elements are coefficient
vectors of length a in the power basis of h, stored as tuples of ints in
[0, p).

Primitive elements are certified by factoring q-1, which is only done
for q below PRIMITIVITY_BOUND.  Larger fields (the towers hosting roots
of unity for the closed-form factorizations) never expose a certified
primitive element; primitive_root_of_unity then falls back to a
deterministic scan that certifies the order of the root itself, which is
all downstream code needs.
"""

from __future__ import annotations

import functools
import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import sympy

from .backend import K, bit_array
from .errors import FieldMismatchError, ParameterError, SubfieldError

#: Largest q for which q-1 is factored to certify primitive elements.
PRIMITIVITY_BOUND = 2**64

#: Hard cap on field size (bit length of q); keeps tower construction sane.
MAX_Q_BITS = 2048

#: Largest q for which dense arithmetic lookup tables are built.
TABLE_BOUND = 2**12

_lock = threading.RLock()


def synchronized_cache(fn):
    """lru_cache that also guarantees one instance per key under races.

    Cached constructors hand out objects compared by identity (fields,
    towers, factorizations), so two racing first calls must not each
    build their own copy.
    """
    cached = lru_cache(maxsize=None)(fn)
    guard = threading.Lock()

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with guard:
            return cached(*args, **kwargs)

    wrapper.cache_clear = cached.cache_clear
    return wrapper


class FieldSpec:
    """A finite field F_{p^a} with its defining data and cached helpers."""

    def __init__(self, p: int, a: int, defining: tuple[int, ...]):
        self.p = p
        self.a = a
        self.q = p**a
        self.defining = defining
        self._xi = None
        self._q1_factors = None
        self._redmat = None
        self._tables = None
        self._frob_mat = None

    # -- basic element plumbing ------------------------------------------

    def elem(self, value) -> FieldElement:
        """Coerce an int (prime subfield) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatchError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            vec = [int(value) % self.p] + [0] * (self.a - 1)
            return FieldElement(self, tuple(vec))
        vec = [int(c) % self.p for c in value]
        if len(vec) > self.a:
            raise ParameterError(f"coefficient vector longer than degree {self.a}")
        vec.extend([0] * (self.a - len(vec)))
        return FieldElement(self, tuple(vec))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.a)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.a - 1))

    def elements(self):
        """All field elements in ascending lexicographic coefficient order."""
        if self.q > 10**7:
            raise ParameterError("field too large to enumerate")
        return self._iter_elements()

    def _iter_elements(self):
        # lazy lexicographic stream, safe on huge fields for bounded scans
        for vec in itertools.product(range(self.p), repeat=self.a):
            yield FieldElement(self, vec)

    def element_from_index(self, i: int) -> FieldElement:
        """Element with base-p digits of i as coefficients (c0 least significant)."""
        digits = []
        for _ in range(self.a):
            digits.append(i % self.p)
            i //= self.p
        return FieldElement(self, tuple(digits))

    # -- cached machinery -------------------------------------------------

    @property
    def redmat(self) -> np.ndarray:
        """(a-1, a) fold matrix: row t is x^(a+t) mod defining."""
        with _lock:
            if self._redmat is None:
                a, p = self.a, self.p
                red = np.zeros((max(a - 1, 0), a), dtype=np.int64)
                if a > 1:
                    h = np.array(self.defining, dtype=np.int64)
                    cur = (-h[:a]) % p  # x^a mod h
                    red[0] = cur
                    for t in range(1, a - 1):
                        nxt = np.zeros(a, dtype=np.int64)
                        nxt[1:] = cur[:-1]
                        nxt = (nxt + cur[a - 1] * red[0]) % p
                        red[t] = nxt
                        cur = nxt
                self._redmat = red
            return self._redmat

    @property
    def q1_factors(self) -> dict[int, int]:
        """Prime factorization of q-1 (only below PRIMITIVITY_BOUND)."""
        if self.q > PRIMITIVITY_BOUND:
            raise ParameterError(
                f"q = {self.p}^{self.a} exceeds the primitive-element "
                f"certification budget ({PRIMITIVITY_BOUND})"
            )
        with _lock:
            if self._q1_factors is None:
                self._q1_factors = {
                    int(r): int(k) for r, k in sympy.factorint(self.q - 1).items()
                }
            return self._q1_factors

    @property
    def xi(self) -> FieldElement:
        """The primitive element: smallest (lex) element of order q-1."""
        with _lock:
            if self._xi is None:
                facs = self.q1_factors
                for x in self._iter_elements():
                    if x.is_zero():
                        continue
                    if all(
                        x ** ((self.q - 1) // r) != self.one for r in facs
                    ):
                        self._xi = x
                        break
                else:
                    raise AssertionError("no primitive element found")
            return self._xi

    def tables(self):
        """Dense arithmetic tables on encoded scalars (small fields only).

        Returns (add, mul, neg, inv) where scalars are encoded as
        sum(c_i * p^i).  Used by the linear-algebra layer.
        """
        if self.q > TABLE_BOUND:
            raise ParameterError(f"q = {self.q} too large for lookup tables")
        with _lock:
            if self._tables is None:
                p, a, q = self.p, self.a, self.q
                idx = np.arange(q, dtype=np.int64)
                digits = np.zeros((q, a), dtype=np.int64)
                rem = idx.copy()
                for i in range(a):
                    digits[:, i] = rem % p
                    rem //= p
                weights = p ** np.arange(a, dtype=np.int64)
                add_d = (digits[:, None, :] + digits[None, :, :]) % p
                add_t = add_d @ weights
                neg_t = ((-digits) % p) @ weights
                # basis products x^i * x^j reduced mod defining
                T = np.zeros((a, a, a), dtype=np.int64)
                red = self.redmat
                for i in range(a):
                    for j in range(a):
                        if i + j < a:
                            T[i, j, i + j] = 1
                        else:
                            T[i, j] = red[i + j - a]
                mul_d = np.einsum("xi,yj,ijk->xyk", digits, digits, T) % p
                mul_t = mul_d @ weights
                inv_t = np.zeros(q, dtype=np.int64)
                acc = np.ones(q, dtype=np.int64)
                base = idx.copy()
                e = q - 2
                while e > 0:
                    if e & 1:
                        acc = mul_t[acc, base]
                    base = mul_t[base, base]
                    e >>= 1
                inv_t = acc
                inv_t[0] = 0
                self._tables = (add_t, mul_t, neg_t, inv_t)
            return self._tables

    def encode(self, x: FieldElement) -> int:
        """Scalar encoding used by the tables: sum(c_i * p^i)."""
        e = 0
        for c in reversed(x.vec):
            e = e * self.p + c
        return e

    def decode(self, e: int) -> FieldElement:
        return self.element_from_index(e)

    # -- dunder -----------------------------------------------------------

    def __repr__(self):
        if self.a == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.a})"

    def to_json(self):
        return {"p": self.p, "a": self.a, "defining": list(self.defining)}


class FieldElement:
    """Element of a FieldSpec: coefficient vector in the power basis."""

    __slots__ = ("field", "vec")

    def __init__(self, field: FieldSpec, vec: tuple[int, ...]):
        self.field = field
        self.vec = vec

    def is_zero(self) -> bool:
        return not any(self.vec)

    def in_prime_subfield(self) -> bool:
        return not any(self.vec[1:])

    def _check(self, other: FieldElement):
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise FieldMismatchError("operands from different fields")

    def __add__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((u + v) % p for u, v in zip(self.vec, other.vec))
        )

    def __sub__(self, other):
        self._check(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((u - v) % p for u, v in zip(self.vec, other.vec))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-u) % p for u in self.vec))

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if F.a == 1:
            return FieldElement(F, ((self.vec[0] * other.vec[0]) % F.p,))
        u = np.array(self.vec, dtype=np.int64)
        v = np.array(other.vec, dtype=np.int64)
        return FieldElement(F, tuple(int(c) for c in K.elem_mul(u, v, F.redmat, F.p)))

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        F = self.field
        if F.a == 1:
            return FieldElement(F, (pow(self.vec[0], F.p - 2, F.p),))
        u = np.array(self.vec, dtype=np.int64)
        h = np.array(F.defining, dtype=np.int64)
        return FieldElement(F, tuple(int(c) for c in K.elem_inv(u, h, F.p)))

    def __truediv__(self, other):
        self._check(other)
        return self * other.inverse()

    def __pow__(self, e: int):
        F = self.field
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return F.one
        if self.is_zero():
            return F.zero
        if F.a == 1:
            return FieldElement(F, (pow(self.vec[0], e, F.p),))
        u = np.array(self.vec, dtype=np.int64)
        out = K.elem_pow(u, bit_array(e), F.redmat, F.p)
        return FieldElement(F, tuple(int(c) for c in out))

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field is other.field
            and self.vec == other.vec
        )

    def __hash__(self):
        return hash((id(self.field), self.vec))

    def __repr__(self):
        if self.field.a == 1:
            return f"{self.vec[0]}"
        return f"{list(self.vec)}"

    def to_json(self):
        if self.field.a == 1:
            return self.vec[0]
        return list(self.vec)


# -- field construction ----------------------------------------------------


def _irreducible_1d(farr: np.ndarray, p: int) -> bool:
    """Distinct-degree irreducibility test for a monic poly over F_p."""
    d = farr.shape[0] - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    x = np.array([0, 1], dtype=np.int64)
    for r in sorted({int(r) for r in sympy.factorint(d)}):
        xp = K.poly_powmod(x, bit_array(p ** (d // r)), farr, p)
        diff = np.zeros(max(xp.shape[0], 2), dtype=np.int64)
        diff[: xp.shape[0]] = xp
        diff[1] = (diff[1] - 1) % p
        if K.poly_gcd(diff, farr, p).shape[0] != 1:
            return False
    xp = K.poly_powmod(x, bit_array(p**d), farr, p)
    return xp.shape[0] == 2 and xp[0] == 0 and xp[1] == 1


@synchronized_cache
def _make_field_cached(p: int, a: int) -> FieldSpec:
    if a == 1:
        return FieldSpec(p, 1, (0, 1))
    # lexicographically smallest monic irreducible of degree a; c0 = 0 would
    # be divisible by x, so the scan starts at c0 = 1
    for tail in itertools.product(range(1, p), *([range(p)] * (a - 1))):
        farr = np.array(list(tail) + [1], dtype=np.int64)
        # cheap root screen before the full test
        if any(
            sum(c * pow(x, i, p) for i, c in enumerate(farr)) % p == 0
            for x in range(p)
        ):
            continue
        if _irreducible_1d(farr, p):
            return FieldSpec(p, a, tuple(int(c) for c in farr))
    raise AssertionError("no irreducible polynomial found")  # unreachable


def make_field(p: int, a: int = 1) -> FieldSpec:
    """Construct F_{p^a} for an odd prime p.

    The defining polynomial is the lexicographically smallest monic
    irreducible of degree a over F_p (coefficients compared
    low-degree-first), so construction is deterministic across runs.
    """
    if not isinstance(p, int) or p < 3 or not sympy.isprime(p):
        raise ParameterError(f"p = {p} must be an odd prime (characteristic 2 is out of scope)")
    if not isinstance(a, int) or a < 1:
        raise ParameterError(f"extension degree a = {a} must be >= 1")
    if a * p.bit_length() > MAX_Q_BITS:
        raise ParameterError(
            f"q = {p}^{a} exceeds the supported size budget (2^{MAX_Q_BITS})"
        )
    return _make_field_cached(p, a)


# -- orders and roots of unity ----------------------------------------------


def element_order(x: FieldElement) -> int:
    """Multiplicative order of a nonzero element (divides q-1)."""
    if x.is_zero():
        raise ParameterError("zero element has no multiplicative order")
    F = x.field
    o = F.q - 1
    for r, k in F.q1_factors.items():
        for _ in range(k):
            if o % r == 0 and x ** (o // r) == F.one:
                o //= r
            else:
                break
    return o


def _order_is(x: FieldElement, n: int, n_factors) -> bool:
    F = x.field
    if x**n != F.one:
        return False
    return all(x ** (n // r) != F.one for r in n_factors)


def primitive_root_of_unity(F: FieldSpec, N: int) -> FieldElement:
    """A deterministic element of multiplicative order exactly N.

    Requires N | q-1.  For fields with a certified primitive element this
    is xi^((q-1)/N); beyond the certification budget a lexicographic scan
    returns the first candidate power whose order is exactly N.
    """
    if N < 1:
        raise ParameterError("N must be positive")
    if (F.q - 1) % N != 0:
        raise ParameterError(f"N = {N} does not divide q-1 = {F.q - 1}")
    if N == 1:
        return F.one
    if N == 2:
        return -F.one
    if F.q <= PRIMITIVITY_BOUND:
        return F.xi ** ((F.q - 1) // N)
    n_factors = sorted({int(r) for r in sympy.factorint(N)})
    e = (F.q - 1) // N
    for x in itertools.islice(F._iter_elements(), 1, None):
        y = x**e
        if _order_is(y, N, n_factors):
            return y
    raise AssertionError("no root of unity found")  # unreachable


# -- square roots and towers -------------------------------------------------


def field_sqrt(F: FieldSpec, c: FieldElement) -> FieldElement:
    """Deterministic square root in F (Tonelli-Shanks; lex-smaller root).

    Raises ParameterError when c is a non-square.
    """
    if c.field is not F:
        raise FieldMismatchError("element not in the given field")
    if c.is_zero():
        return F.zero
    q = F.q
    if c ** ((q - 1) // 2) != F.one:
        raise ParameterError("element is not a square")
    S, t = 0, q - 1
    while t % 2 == 0:
        S += 1
        t //= 2
    if S == 1:
        r = c ** ((q + 1) // 4)
    else:
        z = None
        for cand in itertools.islice(F._iter_elements(), 1, None):
            if cand ** ((q - 1) // 2) != F.one:
                z = cand
                break
        M = S
        w = z**t
        r = c ** ((t + 1) // 2)
        b = c**t
        while b != F.one:
            i, bb = 0, b
            while bb != F.one:
                bb = bb * bb
                i += 1
            for _ in range(M - i - 1):
                w = w * w
            r = r * w
            w = w * w
            b = b * w
            M = i
    return min(r, -r, key=lambda e: e.vec)


@dataclass(frozen=True)
class TowerMap:
    """Embedding of a base field into an extension field.

    gen_image is the chosen image of the base generator x (a root of the
    base defining polynomial inside the extension); the map sends
    sum(c_i x^i) to sum(c_i gen_image^i).
    """

    base: FieldSpec
    ext: FieldSpec
    gen_image: FieldElement

    def __post_init__(self):
        # power basis images, rows = gen_image^i as vectors over F_p
        W = np.zeros((self.base.a, self.ext.a), dtype=np.int64)
        acc = self.ext.one
        for i in range(self.base.a):
            W[i] = acc.vec
            acc = acc * self.gen_image
        object.__setattr__(self, "_W", W)

    def embed(self, x: FieldElement) -> FieldElement:
        if x.field is not self.base:
            raise FieldMismatchError("element not in the base field")
        p = self.base.p
        vec = (np.array(x.vec, dtype=np.int64) @ self._W) % p
        return FieldElement(self.ext, tuple(int(v) for v in vec))

    def project(self, y: FieldElement) -> FieldElement:
        """Preimage in the base field; SubfieldError if y is not in the image."""
        if y.field is not self.ext:
            raise FieldMismatchError("element not in the extension field")
        p = self.base.p
        # solve c @ W = y.vec over F_p by gaussian elimination on W^T | y
        A = np.concatenate(
            [self._W.T, np.array(y.vec, dtype=np.int64)[:, None]], axis=1
        )
        rows, cols = A.shape
        rank = 0
        piv_cols = []
        for ccol in range(cols - 1):
            piv = None
            for r in range(rank, rows):
                if A[r, ccol] % p:
                    piv = r
                    break
            if piv is None:
                continue
            A[[rank, piv]] = A[[piv, rank]]
            A[rank] = (A[rank] * pow(int(A[rank, ccol]), p - 2, p)) % p
            for r in range(rows):
                if r != rank and A[r, ccol] % p:
                    A[r] = (A[r] - A[r, ccol] * A[rank]) % p
            piv_cols.append(ccol)
            rank += 1
        if any(A[r, -1] % p for r in range(rank, rows)):
            raise SubfieldError(
                f"element {y!r} does not lie in the embedded copy of {self.base!r}"
            )
        sol = [0] * self.base.a
        for r, ccol in enumerate(piv_cols):
            sol[ccol] = int(A[r, -1]) % p
        return FieldElement(self.base, tuple(sol))

    def contains(self, y: FieldElement) -> bool:
        try:
            self.project(y)
            return True
        except SubfieldError:
            return False


def embed(m: TowerMap, x: FieldElement) -> FieldElement:
    """Image of a base-field element inside the extension."""
    return m.embed(x)


def sqrt_of(F2: FieldSpec, m: TowerMap, xi: FieldElement) -> FieldElement:
    """Square root (in the extension) of a base-field non-square.

    Requires xi to be a non-square in the base field, so the root lies
    outside the base; the lexicographically smaller of the two roots is
    returned.
    """
    if m.ext is not F2:
        raise FieldMismatchError("tower map does not target the given field")
    if xi.field is not m.base:
        raise FieldMismatchError("element not in the tower base")
    if xi.is_zero() or xi ** ((m.base.q - 1) // 2) == m.base.one:
        raise ParameterError("element is a square in the base field")
    return field_sqrt(F2, m.embed(xi))


@synchronized_cache
def build_tower(base: FieldSpec, k: int) -> TowerMap:
    """Degree-k extension of base with a deterministic embedding."""
    if k < 1:
        raise ParameterError("tower degree must be >= 1")
    ext = make_field(base.p, base.a * k)
    if base.a == 1:
        return TowerMap(base, ext, ext.one)
    if base.a == 2:
        # root of the base quadratic via the quadratic formula
        c0, c1 = base.defining[0], base.defining[1]
        p = base.p
        disc = ext.elem((c1 * c1 - 4 * c0) % p)
        s = field_sqrt(ext, disc)
        inv2 = ext.elem(pow(2, p - 2, p))
        r1 = (-ext.elem(c1) + s) * inv2
        r2 = (-ext.elem(c1) - s) * inv2
        return TowerMap(base, ext, min(r1, r2, key=lambda e: e.vec))
    raise ParameterError("towers over base fields of degree > 2 are out of desk scale")
