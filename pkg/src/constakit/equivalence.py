"""The n-equivalence relation on nonzero field constants.

Two constants lam, mu are n-equivalent when lam X^n - mu has a root,
equivalently when (lam^{-1} mu)^d = 1 with d = (q-1)/gcd(n, q-1); the
classes are the cosets of the n-th powers, so there are exactly
gcd(n, q-1) of them.  Codes over n-equivalent constants are isomorphic
via f(X) -> f(aX) for any witness a with a^n lam = mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ParameterError
from .gf import FieldElement, FieldSpec
from .polyring import monic_hat, scale_sub

#: Largest field searched exhaustively for witness scalars.
WITNESS_SEARCH_BOUND = 10**6


def class_count(F: FieldSpec, n: int) -> int:
    """Number of n-equivalence classes in the multiplicative group."""
    return gcd(n, F.q - 1)


def are_equivalent(lam: FieldElement, mu: FieldElement, n: int) -> bool:
    """Whether lam X^n - mu has a root in the field."""
    if lam.is_zero() or mu.is_zero():
        raise ParameterError("equivalence is defined on nonzero constants")
    if lam.field is not mu.field:
        raise ParameterError("constants from different fields")
    F = lam.field
    d = (F.q - 1) // gcd(n, F.q - 1)
    return (lam.inverse() * mu) ** d == F.one


def witness_scalar(lam: FieldElement, mu: FieldElement, n: int) -> FieldElement | None:
    """Smallest (lex) a with a^n lam = mu, or None when inequivalent."""
    if lam.is_zero() or mu.is_zero():
        raise ParameterError("witness search needs nonzero constants")
    F = lam.field
    if not are_equivalent(lam, mu, n):
        return None
    if F.q > WITNESS_SEARCH_BOUND:
        raise ParameterError("field too large for exhaustive witness search")
    for a in F.elements():
        if a.is_zero():
            continue
        if (a**n) * lam == mu:
            return a
    raise AssertionError("equivalent constants admit a witness")  # unreachable


@dataclass(frozen=True)
class EquivalenceClass:
    """One class of the N-equivalence, represented as xi^(j p^n)."""

    field: FieldSpec
    n: int
    index: int
    rep: FieldElement

    def to_json(self):
        return {"j": self.index, "rep": self.rep.to_json()}


def transversal(F: FieldSpec, ell: int, m: int, n: int) -> list[EquivalenceClass]:
    """Class representatives xi^(j p^n) for N = 2 l^m p^n, j = 0..gcd-1.

    Since the characteristic p never divides q-1, multiplication by p^n
    permutes the classes and these representatives are pairwise
    inequivalent.
    """
    p = F.p
    N = 2 * ell**m * p**n
    count = gcd(N, F.q - 1)
    step = pow(p, n, F.q - 1)
    xi = F.xi
    out = [
        EquivalenceClass(F, N, j, xi ** ((j * step) % (F.q - 1)))
        for j in range(count)
    ]
    reps = {r.rep for r in out}
    if len(reps) != count:
        raise AssertionError("transversal representatives are not distinct")
    return out


def class_of(F: FieldSpec, ell: int, m: int, n: int, lam: FieldElement) -> int:
    """Index j of the class of lam in the transversal ordering."""
    if lam.is_zero():
        raise ParameterError("lambda must be nonzero")
    N = 2 * ell**m * F.p**n
    for cls in transversal(F, ell, m, n):
        if are_equivalent(cls.rep, lam, N):
            return cls.index
    raise AssertionError("every constant belongs to a class")  # unreachable


def apply_phi(code, a: FieldElement):
    """Image of a constacyclic code under the ring map f(X) -> f(aX).

    The input code is mu-constacyclic; the output is lam-constacyclic for
    lam = mu / a^N, with generator monic(g(aX)) and the same dimension.
    """
    from .codes import make_code
    from .factorizer import factor_constacyclic

    if a.is_zero():
        raise ParameterError("phi_a requires a != 0")
    fact = code.fact
    F = fact.field
    if a.field is not F:
        raise ParameterError("scalar from a different field")
    lam_new = fact.lam * (a**fact.N).inverse()
    new_fact = factor_constacyclic(F, fact.ell, fact.m, fact.n, lam_new)
    exps = [0] * len(new_fact.factors)
    for i, f in enumerate(fact.factors):
        g = monic_hat(scale_sub(f, a))
        exps[new_fact.index_of(g)] = code.exps[i]
    return make_code(new_fact, tuple(exps))
