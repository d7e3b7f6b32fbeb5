"""Dense univariate polynomials over a FieldSpec.

Coefficients are stored ascending in an (L, a) int64 array with no
trailing zero rows; the zero polynomial has L = 0.  Prime fields take the
1-D kernel fast path, extensions the 2-D kernels.  Besides ring
arithmetic this module carries the polynomial transforms the
closed-form factorizations are phrased in: monic normalization, the monic
reciprocal, and the substitution X -> aX.
"""

from __future__ import annotations

import numpy as np

from .backend import K, bit_array
from .errors import FieldMismatchError, ParameterError
from .gf import FieldElement, FieldSpec

__all__ = [
    "Poly",
    "monic_hat",
    "reciprocal",
    "scale_sub",
    "is_self_reciprocal",
]


def _strip(arr: np.ndarray) -> np.ndarray:
    L = arr.shape[0]
    while L > 0 and not arr[L - 1].any():
        L -= 1
    return np.ascontiguousarray(arr[:L])


class Poly:
    __slots__ = ("field", "_c")

    def __init__(self, field: FieldSpec, coeff_rows: np.ndarray, *, _normalized=False):
        self.field = field
        arr = np.asarray(coeff_rows, dtype=np.int64)
        if arr.ndim != 2 or (arr.shape[0] > 0 and arr.shape[1] != field.a):
            raise ParameterError("coefficient array has wrong shape")
        if not _normalized:
            arr = _strip(arr % field.p)
        self._c = arr

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls(field, np.zeros((0, field.a), dtype=np.int64), _normalized=True)

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls.from_elements(field, [field.one])

    @classmethod
    def x(cls, field: FieldSpec) -> Poly:
        return cls.from_elements(field, [field.zero, field.one])

    @classmethod
    def from_elements(cls, field: FieldSpec, elems) -> Poly:
        rows = np.zeros((len(elems), field.a), dtype=np.int64)
        for i, e in enumerate(elems):
            rows[i] = field.elem(e).vec
        return cls(field, rows)

    @classmethod
    def from_ints(cls, field: FieldSpec, ints) -> Poly:
        return cls.from_elements(field, [field.elem(c) for c in ints])

    @classmethod
    def binomial(cls, field: FieldSpec, t: int, const: FieldElement) -> Poly:
        """X^t + const."""
        rows = np.zeros((t + 1, field.a), dtype=np.int64)
        rows[0] = field.elem(const).vec
        rows[t] = field.one.vec
        return cls(field, rows)

    # -- views -------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self._c.shape[0] - 1

    def is_zero(self) -> bool:
        return self._c.shape[0] == 0

    def coeff(self, i: int) -> FieldElement:
        if i < 0 or i > self.degree:
            return self.field.zero
        return FieldElement(self.field, tuple(int(v) for v in self._c[i]))

    def coeffs(self) -> list[FieldElement]:
        return [self.coeff(i) for i in range(self.degree + 1)]

    @property
    def lead(self) -> FieldElement:
        if self.is_zero():
            raise ParameterError("zero polynomial has no leading coefficient")
        return self.coeff(self.degree)

    def constant(self) -> FieldElement:
        return self.coeff(0)

    def is_monic(self) -> bool:
        return not self.is_zero() and self.lead == self.field.one

    def key(self):
        """Canonical sort key: (degree, coefficient tuples low degree first)."""
        return (self.degree, tuple(tuple(int(v) for v in row) for row in self._c))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field is other.field
            and self._c.shape == other._c.shape
            and bool(np.array_equal(self._c, other._c))
        )

    def __hash__(self):
        return hash((id(self.field), self._c.tobytes(), self._c.shape))

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            row = self._c[i]
            if not row.any():
                continue
            c = self.coeff(i)
            cs = repr(c)
            if i == 0:
                terms.append(cs)
            else:
                xs = "X" if i == 1 else f"X^{i}"
                terms.append(xs if c == self.field.one and self.field.a == 1 else f"{cs}*{xs}")
        return " + ".join(terms)

    def to_json(self):
        return {"coeffs": [self.coeff(i).to_json() for i in range(self.degree + 1)]}

    # -- ring arithmetic -----------------------------------------------------

    def _check(self, other: Poly):
        if not isinstance(other, Poly) or other.field is not self.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        la, lb = self._c.shape[0], other._c.shape[0]
        out = np.zeros((max(la, lb), self.field.a), dtype=np.int64)
        out[:la] = self._c
        out[:lb] = (out[:lb] + other._c) % self.field.p
        return Poly(self.field, out)

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        la, lb = self._c.shape[0], other._c.shape[0]
        out = np.zeros((max(la, lb), self.field.a), dtype=np.int64)
        out[:la] = self._c
        out[:lb] = (out[:lb] - other._c) % self.field.p
        return Poly(self.field, out)

    def __neg__(self) -> Poly:
        return Poly(self.field, (-self._c) % self.field.p, _normalized=True)

    def __mul__(self, other) -> Poly:
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(F)
        if F.a == 1:
            out = K.poly_mul(self._c[:, 0], other._c[:, 0], F.p)[:, None]
        else:
            out = K.xpoly_mul(self._c, other._c, F.redmat, F.p)
        return Poly(F, out)

    def scale(self, c: FieldElement) -> Poly:
        """Multiply every coefficient by the scalar c."""
        F = self.field
        c = F.elem(c)
        if c.is_zero():
            return Poly.zero(F)
        if F.a == 1:
            return Poly(F, (self._c * c.vec[0]) % F.p)
        rows = np.zeros_like(self._c)
        cv = np.array(c.vec, dtype=np.int64)
        for i in range(self._c.shape[0]):
            rows[i] = K.elem_mul(self._c[i], cv, F.redmat, F.p)
        return Poly(F, rows)

    def __divmod__(self, other: Poly):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        if F.a == 1:
            q, r = K.poly_divmod(self._c[:, 0], other._c[:, 0], F.p)
            return Poly(F, q[:, None]), Poly(F, r[:, None])
        h = np.array(F.defining, dtype=np.int64)
        q, r = K.xpoly_divmod(self._c, other._c, F.redmat, h, F.p)
        return Poly(F, q), Poly(F, r)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ParameterError("division is not exact")
        return q

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor (0 when both inputs are 0)."""
        self._check(other)
        F = self.field
        if F.a == 1:
            g = K.poly_gcd(self._c[:, 0], other._c[:, 0], F.p)[:, None]
        else:
            h = np.array(F.defining, dtype=np.int64)
            g = K.xpoly_gcd(self._c, other._c, F.redmat, h, F.p)
        return Poly(F, g)

    def lcm(self, other: Poly) -> Poly:
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        g = self.gcd(other)
        return monic_hat((self * other).exact_div(g))

    def frobenius_spread(self) -> Poly:
        """f^p computed as sum c_i^p X^(i*p)."""
        F = self.field
        if self.is_zero():
            return self
        L = self._c.shape[0]
        rows = np.zeros(((L - 1) * F.p + 1, F.a), dtype=np.int64)
        if F.a == 1:
            rows[:: F.p, 0] = self._c[:, 0]
        else:
            rows[:: F.p] = (self._c @ _frob_matrix(F)) % F.p
        return Poly(F, rows, _normalized=True)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ParameterError("negative polynomial power")
        F = self.field
        if k == 0:
            return Poly.one(F)
        if self.is_zero():
            return self
        # peel off p-adic part with cheap Frobenius spreads
        j = 0
        while k % F.p == 0:
            k //= F.p
            j += 1
        acc = Poly.one(F)
        base = self
        e = k
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        for _ in range(j):
            acc = acc.frobenius_spread()
        return acc

    def powmod(self, e: int, mod: Poly) -> Poly:
        self._check(mod)
        if mod.is_zero():
            raise ZeroDivisionError("zero modulus")
        F = self.field
        eb = bit_array(e)
        if F.a == 1:
            out = K.poly_powmod(self._c[:, 0], eb, mod._c[:, 0], F.p)[:, None]
        else:
            h = np.array(F.defining, dtype=np.int64)
            out = K.xpoly_powmod(self._c, eb, mod._c, F.redmat, h, F.p)
        return Poly(F, out)

    def eval(self, x: FieldElement) -> FieldElement:
        F = self.field
        x = F.elem(x)
        acc = F.zero
        for i in range(self.degree, -1, -1):
            acc = acc * x + self.coeff(i)
        return acc

    def derivative(self) -> Poly:
        F = self.field
        if self.degree < 1:
            return Poly.zero(F)
        rows = self._c[1:].copy()
        mult = np.arange(1, rows.shape[0] + 1, dtype=np.int64)[:, None] % F.p
        return Poly(F, (rows * mult) % F.p)

    def shift(self, k: int) -> Poly:
        """Multiply by X^k."""
        if self.is_zero() or k == 0:
            return self
        rows = np.zeros((self._c.shape[0] + k, self.field.a), dtype=np.int64)
        rows[k:] = self._c
        return Poly(self.field, rows, _normalized=True)


def _frob_matrix(F: FieldSpec) -> np.ndarray:
    with_attr = getattr(F, "_frob_mat", None)
    if with_attr is None:
        M = np.zeros((F.a, F.a), dtype=np.int64)
        x = FieldElement(F, (0, 1) + (0,) * (F.a - 2)) if F.a > 1 else F.one
        for i in range(F.a):
            M[i] = ((x**i) ** F.p).vec
        F._frob_mat = M
        with_attr = M
    return with_attr


def monic_hat(f: Poly) -> Poly:
    """The monic scalar multiple of a nonzero polynomial."""
    if f.is_zero():
        raise ParameterError("zero polynomial has no monic normalization")
    if f.is_monic():
        return f
    return f.scale(f.lead.inverse())


def reciprocal(f: Poly) -> Poly:
    """Monic reciprocal f(0)^{-1} X^deg(f) f(1/X); roots become inverses."""
    if f.is_zero() or f.constant().is_zero():
        raise ParameterError("reciprocal requires a nonzero constant term")
    rev = Poly(f.field, f._c[::-1].copy())
    return monic_hat(rev)


def scale_sub(f: Poly, a: FieldElement) -> Poly:
    """The substitution X -> aX: coefficient i is multiplied by a^i."""
    F = f.field
    a = F.elem(a)
    if a.is_zero():
        raise ParameterError("scale substitution requires a != 0")
    if f.is_zero() or a == F.one:
        return f
    if F.a == 1:
        L = f._c.shape[0]
        powers = np.empty(L, dtype=np.int64)
        acc = 1
        for i in range(L):
            powers[i] = acc
            acc = (acc * a.vec[0]) % F.p
        return Poly(F, (f._c * powers[:, None]) % F.p, _normalized=True)
    rows = np.zeros_like(f._c)
    accel = F.one
    for i in range(f._c.shape[0]):
        rows[i] = K.elem_mul(
            f._c[i], np.array(accel.vec, dtype=np.int64), F.redmat, F.p
        )
        accel = accel * a
    return Poly(F, rows, _normalized=True)


def is_self_reciprocal(f: Poly) -> bool:
    """True when f equals its own monic reciprocal."""
    return reciprocal(f) == monic_hat(f)
