"""Multiplicative orders and cyclotomic cosets modulo l^m.

The order profile captures everything the factor counts depend on:
f = ord_l(q), the exact power l^s dividing q^f - 1, the tower of orders
lam(r) = f * l^max(r-s, 0) = ord_{l^r}(q), the coset counts
delta(r) = phi(l^r) / lam(r), and e = sum(delta).  Coset tables list the
q-orbits on Z_{l^m} with the structured representatives l^(m-r) g^k, and
(for even f) their refinement into q^2-orbits.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import ParameterError

__all__ = [
    "mult_order",
    "order_profile",
    "unit_group_generator",
    "coset_table",
    "negation_coset_map",
    "OrderProfile",
    "CosetTable",
]


def mult_order(q: int, M: int) -> int:
    """Least k >= 1 with q^k = 1 (mod M)."""
    if M < 1:
        raise ParameterError("modulus must be >= 1")
    if gcd(q, M) != 1:
        raise ParameterError(f"gcd({q}, {M}) != 1")
    if M == 1:
        return 1
    k, acc = 1, q % M
    while acc != 1:
        acc = (acc * q) % M
        k += 1
    return k


def _phi_prime_power(ell: int, r: int) -> int:
    return ell ** (r - 1) * (ell - 1)


@lru_cache(maxsize=None)
def unit_group_generator(ell: int, m: int) -> int:
    """Smallest positive generator of the (cyclic) unit group mod l^m."""
    if ell % 2 == 0 or ell < 3:
        raise ParameterError("l must be an odd prime")
    mod = ell**m
    target = _phi_prime_power(ell, m)
    for g in range(2, mod):
        if g % ell == 0:
            continue
        if mult_order(g, mod) == target:
            return g
    raise AssertionError("no generator found")  # unreachable for odd prime powers


@dataclass(frozen=True)
class OrderProfile:
    ell: int
    m: int
    q: int
    f: int
    s: int
    t: int
    lam: tuple[int, ...]  # lam[r-1] = ord_{l^r}(q)
    delta: tuple[int, ...]
    e: int
    g: int

    def to_json(self):
        return {
            "ell": self.ell,
            "m": self.m,
            "q": self.q,
            "f": self.f,
            "s": self.s,
            "t": self.t,
            "lambda": list(self.lam),
            "delta": list(self.delta),
            "e": self.e,
            "g": self.g,
        }


@lru_cache(maxsize=None)
def order_profile(q: int, ell: int, m: int) -> OrderProfile:
    """Order data of q modulo l, l^2, ..., l^m."""
    if ell < 3 or any(ell % d == 0 for d in range(2, int(ell**0.5) + 1)):
        raise ParameterError(f"l = {ell} must be an odd prime")
    if m < 1:
        raise ParameterError("m must be >= 1")
    if q % ell == 0:
        raise ParameterError(f"l = {ell} must not divide q = {q}")
    f = mult_order(q, ell)
    rem = q**f - 1
    s = 0
    while rem % ell == 0:
        rem //= ell
        s += 1
    t = (q**f - 1) // ell**s
    lam = tuple(f * ell ** max(r - s, 0) for r in range(1, m + 1))
    for r in range(1, m + 1):
        direct = mult_order(q, ell**r)
        if direct != lam[r - 1]:
            raise AssertionError(
                f"order formula mismatch at l^{r}: {lam[r-1]} vs {direct}"
            )
    delta = tuple(_phi_prime_power(ell, r) // lam[r - 1] for r in range(1, m + 1))
    e = sum(delta)
    if 1 + sum(l * d for l, d in zip(lam, delta)) != ell**m:
        raise AssertionError("coset counting identity failed")
    return OrderProfile(ell, m, q, f, s, t, lam, delta, e, unit_group_generator(ell, m))


@dataclass(frozen=True)
class Coset:
    rep: int  # canonical representative: smallest member
    structured_rep: int  # the structured representative l^(m-r) g^k
    r: int  # 0 for the zero coset
    k: int
    members: tuple[int, ...]  # sorted


@dataclass(frozen=True)
class CosetTable:
    profile: OrderProfile
    cosets: tuple[Coset, ...]  # index 0 is {0}; then (r asc, k asc)
    q2_split: tuple[tuple[tuple[int, ...], ...], ...] | None
    # q2_split[i] holds the q^2-orbits refining coset i (1 or 2 of them),
    # present exactly when f is even.

    @property
    def e(self) -> int:
        return self.profile.e

    def coset_index_of(self, value: int) -> int:
        mod = self.profile.ell**self.profile.m
        v = value % mod
        return self._member_map[v]

    def to_json(self):
        out = {
            "profile": self.profile.to_json(),
            "cosets": [
                {
                    "rep": c.rep,
                    "structured_rep": c.structured_rep,
                    "r": c.r,
                    "k": c.k,
                    "members": list(c.members),
                }
                for c in self.cosets
            ],
        }
        if self.q2_split is not None:
            out["q2_cosets"] = [
                [list(part) for part in parts] for parts in self.q2_split
            ]
        return out


def _orbit(start: int, mult: int, mod: int) -> tuple[int, ...]:
    seen = [start % mod]
    cur = (start * mult) % mod
    while cur != seen[0]:
        seen.append(cur)
        cur = (cur * mult) % mod
    return tuple(seen)


@lru_cache(maxsize=None)
def coset_table(q: int, ell: int, m: int) -> CosetTable:
    """All q-cyclotomic cosets mod l^m (and q^2-refinement when f is even)."""
    prof = order_profile(q, ell, m)
    mod = ell**m
    g = prof.g
    cosets = [Coset(0, 0, 0, 0, (0,))]
    for r in range(1, m + 1):
        base = ell ** (m - r)
        gk = 1
        for k in range(prof.delta[r - 1]):
            srep = (base * gk) % mod
            orbit = _orbit(srep, q, mod)
            if len(orbit) != prof.lam[r - 1]:
                raise AssertionError("coset size does not match lambda(r)")
            cosets.append(Coset(min(orbit), srep, r, k, tuple(sorted(orbit))))
            gk = (gk * g) % mod
    # partition check
    union = [v for c in cosets for v in c.members]
    if len(union) != mod or len(set(union)) != mod:
        raise AssertionError("cosets do not partition Z_{l^m}")

    q2_split = None
    if prof.f % 2 == 0:
        qq = (q * q) % mod
        split = [((0,),)]
        for c in cosets[1:]:
            d1 = _orbit(c.structured_rep, qq, mod)
            d2 = _orbit((c.structured_rep * q) % mod, qq, mod)
            if len(d1) != len(c.members) // 2 or set(d1) | set(d2) != set(c.members):
                raise AssertionError("q^2 refinement does not bisect the coset")
            split.append((tuple(sorted(d1)), tuple(sorted(d2))))
        q2_split = tuple(split)

    table = CosetTable(prof, tuple(cosets), q2_split)
    member_map = {}
    for i, c in enumerate(table.cosets):
        for v in c.members:
            member_map[v] = i
    object.__setattr__(table, "_member_map", member_map)
    return table


def negation_coset_map(table: CosetTable) -> tuple[int, ...]:
    """For each coset index, the index of the coset containing its negation.

    Always an involution; when f is odd only the zero coset is fixed.
    """
    mod = table.profile.ell**table.profile.m
    out = tuple(
        table.coset_index_of((-c.structured_rep) % mod) for c in table.cosets
    )
    for i, j in enumerate(out):
        if out[j] != i:
            raise AssertionError("negation map is not an involution")
    return out
