"""Numba-compiled kernels for dense polynomial and matrix arithmetic mod p.

Conventions shared with the numpy fallback (see _kernels_numpy):

* 1-D kernels (``poly_*``) act on polynomials over the prime field F_p,
  stored as ascending int64 coefficient arrays in [0, p).
* 2-D kernels (``xpoly_*``, ``elem_*``) act on polynomials over an
  extension field F_{p^A}; a polynomial of length L is an (L, A) array
  whose rows are field elements in the power basis of the defining
  polynomial h.  ``redmat`` is the (A-1, A) fold matrix with row t equal
  to x^(A+t) mod h, used to reduce products of two field elements.
* Divisors passed to divmod/gcd/powmod must have a nonzero leading
  coefficient (callers normalize).  Returned remainders may carry
  trailing zeros; callers strip them.
* Exponents are uint8 bit arrays, most significant bit first, so that
  arbitrarily large integers (q^k - 1 scale) fit.
* ``tab_*`` kernels work on scalars encoded as integers in [0, q) with
  field arithmetic supplied via lookup tables.
"""

import numpy as np
from numba import njit

_OPTS = dict(cache=True, nogil=True)


@njit(**_OPTS)
def _inv_int(x, p):
    # Fermat inverse; p prime, 0 < x < p.
    r = 1
    b = x % p
    e = p - 2
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


@njit(**_OPTS)
def poly_mul(f, g, p):
    lf = f.shape[0]
    lg = g.shape[0]
    if lf == 0 or lg == 0:
        return np.zeros(0, dtype=np.int64)
    out = np.zeros(lf + lg - 1, dtype=np.int64)
    for i in range(lf):
        fi = f[i]
        if fi == 0:
            continue
        for j in range(lg):
            out[i + j] += fi * g[j]
    return out % p


@njit(**_OPTS)
def poly_divmod(f, g, p):
    lf = f.shape[0]
    lg = g.shape[0]
    r = f.copy()
    if lf < lg:
        return np.zeros(0, dtype=np.int64), r
    q = np.zeros(lf - lg + 1, dtype=np.int64)
    ginv = _inv_int(g[lg - 1], p)
    for i in range(lf - lg, -1, -1):
        c = (r[i + lg - 1] * ginv) % p
        if c == 0:
            continue
        q[i] = c
        for j in range(lg):
            r[i + j] = (r[i + j] - c * g[j]) % p
    return q, r[: lg - 1]


@njit(**_OPTS)
def _true_len(f):
    n = f.shape[0]
    while n > 0 and f[n - 1] == 0:
        n -= 1
    return n


@njit(**_OPTS)
def poly_gcd(f, g, p):
    a = f[: _true_len(f)].copy()
    b = g[: _true_len(g)].copy()
    while b.shape[0] > 0:
        _, r = poly_divmod(a, b, p)
        a = b
        b = r[: _true_len(r)].copy()
    if a.shape[0] == 0:
        return a
    lead = a[a.shape[0] - 1]
    if lead != 1:
        a = (a * _inv_int(lead, p)) % p
    return a


@njit(**_OPTS)
def poly_powmod(f, ebits, mod, p):
    lm = mod.shape[0]
    acc = np.zeros(1, dtype=np.int64)
    acc[0] = 1
    if lm == 1:
        return np.zeros(0, dtype=np.int64)
    _, base = poly_divmod(f, mod, p)
    base = base[: _true_len(base)].copy()
    for t in range(ebits.shape[0]):
        if t > 0:
            sq = poly_mul(acc, acc, p)
            _, acc = poly_divmod(sq, mod, p)
            acc = acc[: _true_len(acc)].copy()
        if ebits[t] == 1:
            pr = poly_mul(acc, base, p)
            _, acc = poly_divmod(pr, mod, p)
            acc = acc[: _true_len(acc)].copy()
    return acc


@njit(**_OPTS)
def poly_inv_mod(f, h, p):
    # Extended Euclid over F_p[x]; assumes gcd(f, h) = 1 and h monic.
    r0 = h[: _true_len(h)].copy()
    r1 = f[: _true_len(f)].copy()
    s0 = np.zeros(0, dtype=np.int64)
    s1 = np.zeros(1, dtype=np.int64)
    s1[0] = 1
    while r1.shape[0] > 0:
        q, r = poly_divmod(r0, r1, p)
        r0 = r1
        r1 = r[: _true_len(r)].copy()
        qs = poly_mul(q, s1, p)
        ln = max(s0.shape[0], qs.shape[0])
        ns = np.zeros(ln, dtype=np.int64)
        for i in range(s0.shape[0]):
            ns[i] = s0[i]
        for i in range(qs.shape[0]):
            ns[i] = (ns[i] - qs[i]) % p
        s0 = s1
        s1 = ns[: _true_len(ns)].copy()
    lead = r0[r0.shape[0] - 1]
    out = (s0 * _inv_int(lead, p)) % p
    _, out = poly_divmod(out, h, p)
    return out[: _true_len(out)].copy()


@njit(**_OPTS)
def elem_mul(u, v, redmat, p):
    a = u.shape[0]
    raw = np.zeros(2 * a - 1, dtype=np.int64)
    for i in range(a):
        ui = u[i]
        if ui == 0:
            continue
        for j in range(a):
            raw[i + j] += ui * v[j]
    raw %= p
    out = raw[:a].copy()
    for t in range(a - 1):
        c = raw[a + t]
        if c == 0:
            continue
        for j in range(a):
            out[j] = (out[j] + c * redmat[t, j]) % p
    return out


@njit(**_OPTS)
def elem_inv(u, h, p):
    a = h.shape[0] - 1
    inv = poly_inv_mod(u, h, p)
    out = np.zeros(a, dtype=np.int64)
    for i in range(inv.shape[0]):
        out[i] = inv[i]
    return out


@njit(**_OPTS)
def elem_pow(u, ebits, redmat, p):
    a = u.shape[0]
    acc = np.zeros(a, dtype=np.int64)
    acc[0] = 1
    for t in range(ebits.shape[0]):
        if t > 0:
            acc = elem_mul(acc, acc, redmat, p)
        if ebits[t] == 1:
            acc = elem_mul(acc, u, redmat, p)
    return acc


@njit(**_OPTS)
def _xtrue_len(F):
    n = F.shape[0]
    while n > 0:
        allz = True
        for j in range(F.shape[1]):
            if F[n - 1, j] != 0:
                allz = False
                break
        if allz:
            n -= 1
        else:
            break
    return n


@njit(**_OPTS)
def xpoly_mul(F, G, redmat, p):
    lf = F.shape[0]
    lg = G.shape[0]
    a = F.shape[1]
    if lf == 0 or lg == 0:
        return np.zeros((0, a), dtype=np.int64)
    raw = np.zeros((lf + lg - 1, 2 * a - 1), dtype=np.int64)
    for i in range(lf):
        for s in range(a):
            c = F[i, s]
            if c == 0:
                continue
            for j in range(lg):
                for t in range(a):
                    raw[i + j, s + t] += c * G[j, t]
    raw %= p
    out = np.zeros((lf + lg - 1, a), dtype=np.int64)
    for i in range(lf + lg - 1):
        for j in range(a):
            out[i, j] = raw[i, j]
        for t in range(a - 1):
            c = raw[i, a + t]
            if c == 0:
                continue
            for j in range(a):
                out[i, j] = (out[i, j] + c * redmat[t, j]) % p
    return out


@njit(**_OPTS)
def xpoly_divmod(F, G, redmat, h, p):
    lf = F.shape[0]
    lg = G.shape[0]
    a = F.shape[1]
    r = F.copy()
    if lf < lg:
        return np.zeros((0, a), dtype=np.int64), r
    q = np.zeros((lf - lg + 1, a), dtype=np.int64)
    ginv = elem_inv(G[lg - 1], h, p)
    for i in range(lf - lg, -1, -1):
        c = elem_mul(r[i + lg - 1], ginv, redmat, p)
        nz = False
        for j in range(a):
            if c[j] != 0:
                nz = True
                break
        if not nz:
            continue
        q[i] = c
        for j in range(lg):
            cg = elem_mul(c, G[j], redmat, p)
            for t in range(a):
                r[i + j, t] = (r[i + j, t] - cg[t]) % p
    return q, r[: lg - 1].copy()


@njit(**_OPTS)
def xpoly_gcd(F, G, redmat, h, p):
    a = F.shape[1]
    A = F[: _xtrue_len(F)].copy()
    B = G[: _xtrue_len(G)].copy()
    while B.shape[0] > 0:
        _, r = xpoly_divmod(A, B, redmat, h, p)
        A = B
        B = r[: _xtrue_len(r)].copy()
    la = A.shape[0]
    if la == 0:
        return A
    lead = A[la - 1]
    one = True
    for j in range(a):
        want = 1 if j == 0 else 0
        if lead[j] != want:
            one = False
            break
    if not one:
        li = elem_inv(lead, h, p)
        out = np.zeros((la, a), dtype=np.int64)
        for i in range(la):
            out[i] = elem_mul(A[i], li, redmat, p)
        return out
    return A


@njit(**_OPTS)
def xpoly_powmod(F, ebits, MOD, redmat, h, p):
    a = F.shape[1]
    acc = np.zeros((1, a), dtype=np.int64)
    acc[0, 0] = 1
    if MOD.shape[0] == 1:
        return np.zeros((0, a), dtype=np.int64)
    _, base = xpoly_divmod(F, MOD, redmat, h, p)
    base = base[: _xtrue_len(base)].copy()
    for t in range(ebits.shape[0]):
        if t > 0:
            sq = xpoly_mul(acc, acc, redmat, p)
            _, acc = xpoly_divmod(sq, MOD, redmat, h, p)
            acc = acc[: _xtrue_len(acc)].copy()
        if ebits[t] == 1:
            pr = xpoly_mul(acc, base, redmat, p)
            _, acc = xpoly_divmod(pr, MOD, redmat, h, p)
            acc = acc[: _xtrue_len(acc)].copy()
    return acc


@njit(**_OPTS)
def tab_rref(M, add_t, mul_t, inv_t, neg_t):
    R = M.copy()
    rows, cols = R.shape
    rank = 0
    for c in range(cols):
        piv = -1
        for r in range(rank, rows):
            if R[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(cols):
                tmp = R[piv, j]
                R[piv, j] = R[rank, j]
                R[rank, j] = tmp
        s = inv_t[R[rank, c]]
        if s != 1:
            for j in range(cols):
                R[rank, j] = mul_t[s, R[rank, j]]
        for r in range(rows):
            if r == rank or R[r, c] == 0:
                continue
            factor = neg_t[R[r, c]]
            for j in range(cols):
                R[r, j] = add_t[R[r, j], mul_t[factor, R[rank, j]]]
        rank += 1
        if rank == rows:
            break
    return R, rank


@njit(**_OPTS)
def tab_matmul(A, B, add_t, mul_t):
    n, k = A.shape
    k2, m = B.shape
    C = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for t in range(k):
            a = A[i, t]
            if a == 0:
                continue
            for j in range(m):
                C[i, j] = add_t[C[i, j], mul_t[a, B[t, j]]]
    return C


@njit(**_OPTS)
def tab_weight_hist(rowmul, add_t, nmax):
    # Weight histogram over all q^k combinations of the k generator rows.
    # rowmul[d, v, :] encodes v * row_d; suffix sums are updated from the
    # lowest changed odometer digit upward.
    k = rowmul.shape[0]
    q = rowmul.shape[1]
    n = rowmul.shape[2]
    hist = np.zeros(nmax + 1, dtype=np.int64)
    msg = np.zeros(k, dtype=np.int64)
    suf = np.zeros((k + 1, n), dtype=np.int64)
    while True:
        w = 0
        for j in range(n):
            if suf[0, j] != 0:
                w += 1
        hist[w] += 1
        d = 0
        while d < k and msg[d] == q - 1:
            msg[d] = 0
            d += 1
        if d == k:
            break
        msg[d] += 1
        for i in range(d, -1, -1):
            for j in range(n):
                suf[i, j] = add_t[suf[i + 1, j], rowmul[i, msg[i], j]]
    return hist
