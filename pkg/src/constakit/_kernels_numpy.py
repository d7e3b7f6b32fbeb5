"""Pure-numpy fallback for the kernels in _kernels_numba.

Same contracts and array conventions as the numba module; selected at
import time via the CONSTAKIT_BACKEND environment flag.  Implementations
favor vectorized numpy over per-coefficient python loops, so this path
stays usable (if slower) when numba is unavailable.
"""

import numpy as np


def _inv_int(x, p):
    return pow(int(x), p - 2, p)


def _true_len(f):
    nz = np.nonzero(f)[0]
    return 0 if nz.size == 0 else int(nz[-1]) + 1


def poly_mul(f, g, p):
    if f.shape[0] == 0 or g.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    return np.convolve(f, g) % p


def poly_divmod(f, g, p):
    lf, lg = f.shape[0], g.shape[0]
    r = f.copy()
    if lf < lg:
        return np.zeros(0, dtype=np.int64), r
    q = np.zeros(lf - lg + 1, dtype=np.int64)
    ginv = _inv_int(g[lg - 1], p)
    for i in range(lf - lg, -1, -1):
        c = (r[i + lg - 1] * ginv) % p
        if c:
            q[i] = c
            r[i : i + lg] = (r[i : i + lg] - c * g) % p
    return q, r[: lg - 1]


def poly_gcd(f, g, p):
    a = f[: _true_len(f)].copy()
    b = g[: _true_len(g)].copy()
    while b.shape[0]:
        _, r = poly_divmod(a, b, p)
        a, b = b, r[: _true_len(r)].copy()
    if a.shape[0] and a[-1] != 1:
        a = (a * _inv_int(a[-1], p)) % p
    return a


def poly_powmod(f, ebits, mod, p):
    if mod.shape[0] == 1:
        return np.zeros(0, dtype=np.int64)
    acc = np.ones(1, dtype=np.int64)
    _, base = poly_divmod(f, mod, p)
    base = base[: _true_len(base)].copy()
    for t in range(ebits.shape[0]):
        if t > 0:
            _, acc = poly_divmod(poly_mul(acc, acc, p), mod, p)
            acc = acc[: _true_len(acc)].copy()
        if ebits[t]:
            _, acc = poly_divmod(poly_mul(acc, base, p), mod, p)
            acc = acc[: _true_len(acc)].copy()
    return acc


def poly_inv_mod(f, h, p):
    r0 = h[: _true_len(h)].copy()
    r1 = f[: _true_len(f)].copy()
    s0 = np.zeros(0, dtype=np.int64)
    s1 = np.ones(1, dtype=np.int64)
    while r1.shape[0]:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r[: _true_len(r)].copy()
        qs = poly_mul(q, s1, p)
        ns = np.zeros(max(s0.shape[0], qs.shape[0]), dtype=np.int64)
        ns[: s0.shape[0]] = s0
        ns[: qs.shape[0]] = (ns[: qs.shape[0]] - qs) % p
        s0, s1 = s1, ns[: _true_len(ns)].copy()
    out = (s0 * _inv_int(r0[-1], p)) % p
    _, out = poly_divmod(out, h, p)
    return out[: _true_len(out)].copy()


def _fold(raw, redmat, p):
    # raw: (..., 2A-1) unreduced element coefficients -> (..., A) reduced.
    a = redmat.shape[1]
    if a == 1:
        return raw[..., :1] % p
    return (raw[..., :a] + raw[..., a:] @ redmat) % p


def elem_mul(u, v, redmat, p):
    return _fold(np.convolve(u, v), redmat, p)


def elem_inv(u, h, p):
    a = h.shape[0] - 1
    inv = poly_inv_mod(u, h, p)
    out = np.zeros(a, dtype=np.int64)
    out[: inv.shape[0]] = inv
    return out


def elem_pow(u, ebits, redmat, p):
    a = u.shape[0]
    acc = np.zeros(a, dtype=np.int64)
    acc[0] = 1
    for t in range(ebits.shape[0]):
        if t > 0:
            acc = elem_mul(acc, acc, redmat, p)
        if ebits[t]:
            acc = elem_mul(acc, u, redmat, p)
    return acc


def _xtrue_len(F):
    nz = np.nonzero(F.any(axis=1))[0]
    return 0 if nz.size == 0 else int(nz[-1]) + 1


def xpoly_mul(F, G, redmat, p):
    lf, a = F.shape
    lg = G.shape[0]
    if lf == 0 or lg == 0:
        return np.zeros((0, a), dtype=np.int64)
    raw = np.zeros((lf + lg - 1, 2 * a - 1), dtype=np.int64)
    if lf < lg:
        F, G, lf, lg = G, F, lg, lf
    for j in range(lg):
        for t in range(a):
            c = G[j, t]
            if c:
                raw[j : j + lf, t : t + a] += c * F
    raw %= p
    return _fold(raw, redmat, p)


def _rows_times_scalar(rows, c, redmat, p):
    # Multiply every row (a field element) by the scalar element c.
    lg, a = rows.shape
    raw = np.zeros((lg, 2 * a - 1), dtype=np.int64)
    for s in range(a):
        if c[s]:
            raw[:, s : s + a] += c[s] * rows
    return _fold(raw % p, redmat, p)


def xpoly_divmod(F, G, redmat, h, p):
    lf, a = F.shape
    lg = G.shape[0]
    r = F.copy()
    if lf < lg:
        return np.zeros((0, a), dtype=np.int64), r
    q = np.zeros((lf - lg + 1, a), dtype=np.int64)
    ginv = elem_inv(G[lg - 1], h, p)
    for i in range(lf - lg, -1, -1):
        c = elem_mul(r[i + lg - 1], ginv, redmat, p)
        if c.any():
            q[i] = c
            r[i : i + lg] = (r[i : i + lg] - _rows_times_scalar(G, c, redmat, p)) % p
    return q, r[: lg - 1].copy()


def xpoly_gcd(F, G, redmat, h, p):
    A = F[: _xtrue_len(F)].copy()
    B = G[: _xtrue_len(G)].copy()
    while B.shape[0]:
        _, r = xpoly_divmod(A, B, redmat, h, p)
        A, B = B, r[: _xtrue_len(r)].copy()
    if A.shape[0]:
        lead = A[-1]
        one = np.zeros_like(lead)
        one[0] = 1
        if not np.array_equal(lead, one):
            A = _rows_times_scalar(A, elem_inv(lead, h, p), redmat, p)
    return A


def xpoly_powmod(F, ebits, MOD, redmat, h, p):
    a = F.shape[1]
    if MOD.shape[0] == 1:
        return np.zeros((0, a), dtype=np.int64)
    acc = np.zeros((1, a), dtype=np.int64)
    acc[0, 0] = 1
    _, base = xpoly_divmod(F, MOD, redmat, h, p)
    base = base[: _xtrue_len(base)].copy()
    for t in range(ebits.shape[0]):
        if t > 0:
            _, acc = xpoly_divmod(xpoly_mul(acc, acc, redmat, p), MOD, redmat, h, p)
            acc = acc[: _xtrue_len(acc)].copy()
        if ebits[t]:
            _, acc = xpoly_divmod(xpoly_mul(acc, base, redmat, p), MOD, redmat, h, p)
            acc = acc[: _xtrue_len(acc)].copy()
    return acc


def tab_rref(M, add_t, mul_t, inv_t, neg_t):
    R = M.copy()
    rows, cols = R.shape
    rank = 0
    for c in range(cols):
        pivs = np.nonzero(R[rank:, c])[0]
        if pivs.size == 0:
            continue
        piv = rank + int(pivs[0])
        if piv != rank:
            R[[rank, piv]] = R[[piv, rank]]
        s = inv_t[R[rank, c]]
        if s != 1:
            R[rank] = mul_t[s, R[rank]]
        mask = np.nonzero(R[:, c])[0]
        mask = mask[mask != rank]
        if mask.size:
            factors = neg_t[R[mask, c]]
            R[mask] = add_t[R[mask], mul_t[factors[:, None], R[rank][None, :]]]
        rank += 1
        if rank == rows:
            break
    return R, rank


def tab_matmul(A, B, add_t, mul_t):
    n, k = A.shape
    C = np.zeros((n, B.shape[1]), dtype=np.int64)
    for t in range(k):
        C = add_t[C, mul_t[A[:, t][:, None], B[t][None, :]]]
    return C


def tab_weight_hist(rowmul, add_t, nmax):
    k, q, n = rowmul.shape
    hist = np.zeros(nmax + 1, dtype=np.int64)
    total = q**k
    chunk = 1 << 16
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cw = np.zeros((idx.shape[0], n), dtype=np.int64)
        rem = idx
        for d in range(k):
            digits = rem % q
            rem = rem // q
            cw = add_t[cw, rowmul[d, digits]]
        w = np.count_nonzero(cw, axis=1)
        hist += np.bincount(w, minlength=nmax + 1)
    return hist
