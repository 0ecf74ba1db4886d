"""Hot loops over packed polynomials.

A packed polynomial is a pair ``(keys, coeffs)`` of int64 arrays, keys
strictly decreasing, coefficients in ``[1, p)``.  ``enc`` is the tuple from
:attr:`germcodim.encoding.Encoding.arrays`.

Every function here runs unchanged without numba (see :mod:`germcodim._jit`).
"""
import numpy as np

from ._jit import njit

OK = 0
OVERFLOW = 1


@njit
def decode_key(key, enc, out):
    """Write the exponents of ``key`` into ``out``; return the component."""
    shift, mask, lo, dkind, drow, dsign, dwvec, dw, grading, comp_field, D, K0 = enc
    n = out.shape[0]
    for v in range(n):
        if dkind[v] == 0:
            r = drow[v]
            out[v] = dsign[v] * (((key >> shift[r]) & mask[r]) + lo[r])
    for v in range(n):
        if dkind[v] == 1:
            r = drow[v]
            s = ((key >> shift[r]) & mask[r]) + lo[r]
            for u in range(n):
                s -= dwvec[v, u] * out[u]
            out[v] = s // dw[v]
    if comp_field >= 0:
        return -(((key >> shift[comp_field]) & mask[comp_field]) + lo[comp_field])
    return 0


@njit
def key_degree(key, enc, scratch):
    decode_key(key, enc, scratch)
    grading = enc[8]
    d = 0
    for v in range(scratch.shape[0]):
        d += grading[v] * scratch[v]
    return d


@njit
def support_mask(exps):
    """Divisibility filter: bit (v, k) is set when exponent v reaches threshold k.

    If a divides b then mask(a) is a subset of mask(b).
    """
    n = exps.shape[0]
    per = 63 // n
    if per > 8:
        per = 8
    m = 0
    for v in range(n):
        e = exps[v]
        th = 1
        for k in range(per):
            if e < th:
                break
            m |= 1 << (v * per + k)
            th = th * 2 if th >= 2 else th + 1
    return m


@njit
def merge(ak, ac, ashift, ascale, bk, bc, bshift, bscale, p):
    """Return ``ascale*x^a*A + bscale*x^b*B`` where the shifts are key offsets."""
    na = ak.shape[0]
    nb = bk.shape[0]
    rk = np.empty(na + nb, dtype=np.int64)
    rc = np.empty(na + nb, dtype=np.int64)
    i = 0
    j = 0
    r = 0
    while i < na and j < nb:
        ka = ak[i] + ashift
        kb = bk[j] + bshift
        if ka > kb:
            rk[r] = ka
            rc[r] = (ac[i] * ascale) % p
            r += 1
            i += 1
        elif kb > ka:
            rk[r] = kb
            rc[r] = (bc[j] * bscale) % p
            r += 1
            j += 1
        else:
            c = (ac[i] * ascale + bc[j] * bscale) % p
            if c != 0:
                rk[r] = ka
                rc[r] = c
                r += 1
            i += 1
            j += 1
    while i < na:
        rk[r] = ak[i] + ashift
        rc[r] = (ac[i] * ascale) % p
        r += 1
        i += 1
    while j < nb:
        rk[r] = bk[j] + bshift
        rc[r] = (bc[j] * bscale) % p
        r += 1
        j += 1
    return rk[:r], rc[:r]


@njit
def sort_combine(keys, coeffs, p):
    """Sort terms by decreasing key, adding coefficients of equal keys."""
    n = keys.shape[0]
    rk = np.empty(n, dtype=np.int64)
    rc = np.empty(n, dtype=np.int64)
    if n == 0:
        return rk, rc
    order = np.argsort(-keys, kind="mergesort")
    r = 0
    cur = keys[order[0]]
    acc = 0
    for t in range(n):
        k = keys[order[t]]
        if k != cur:
            acc %= p
            if acc != 0:
                rk[r] = cur
                rc[r] = acc
                r += 1
            cur = k
            acc = 0
        acc += coeffs[order[t]] % p
    acc %= p
    if acc != 0:
        rk[r] = cur
        rc[r] = acc
        r += 1
    return rk[:r], rc[:r]


@njit
def mul(ak, ac, bk, bc, K0, p):
    na = ak.shape[0]
    nb = bk.shape[0]
    if na == 0 or nb == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    keys = np.empty(na * nb, dtype=np.int64)
    coeffs = np.empty(na * nb, dtype=np.int64)
    t = 0
    for i in range(na):
        for j in range(nb):
            keys[t] = ak[i] + bk[j] - K0
            coeffs[t] = (ac[i] * bc[j]) % p
            t += 1
    return sort_combine(keys, coeffs, p)


@njit
def inv_mod(a, p):
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    t, newt, r, newr = 0, 1, p, a
    while newr != 0:
        q = r // newr
        t, newt = newt, t - q * newt
        r, newr = newr, r - q * newr
    return t % p


# -- geobucket ---------------------------------------------------------------

NLEVELS = 24


@njit
def _level_cap(i):
    return 8 << (2 * i)


@njit
def _bucket_add(bk, bc, head, qk, qc, qshift, qscale, p):
    n = qk.shape[0]
    i = 0
    while _level_cap(i) < n and i < NLEVELS - 1:
        i += 1
    while True:
        cur_k = bk[i][head[i]:]
        cur_c = bc[i][head[i]:]
        mk, mc = merge(cur_k, cur_c, 0, 1, qk, qc, qshift, qscale, p)
        if mk.shape[0] <= _level_cap(i) or i == NLEVELS - 1:
            bk[i] = mk
            bc[i] = mc
            head[i] = 0
            return
        bk[i] = np.empty(0, dtype=np.int64)
        bc[i] = np.empty(0, dtype=np.int64)
        head[i] = 0
        qk = mk
        qc = mc
        qshift = 0
        qscale = 1
        i += 1


@njit
def _bucket_pop(bk, bc, head, p, out):
    """Pop the leading term into out[0], out[1]; return False if empty."""
    while True:
        best = -1
        bestkey = 0
        for i in range(NLEVELS):
            if head[i] < bk[i].shape[0]:
                k = bk[i][head[i]]
                if best < 0 or k > bestkey:
                    best = i
                    bestkey = k
        if best < 0:
            return False
        c = 0
        for i in range(NLEVELS):
            if head[i] < bk[i].shape[0] and bk[i][head[i]] == bestkey:
                c += bc[i][head[i]]
                head[i] += 1
        c %= p
        if c != 0:
            out[0] = bestkey
            out[1] = c
            return True


@njit
def _find_reducer(key, enc, exps, lt_exps, lt_comp, lt_mask, reducers):
    comp = decode_key(key, enc, exps)
    tmask = support_mask(exps)
    n = exps.shape[0]
    for t in range(reducers.shape[0]):
        g = reducers[t]
        if lt_comp[g] != comp or (lt_mask[g] & ~tmask) != 0:
            continue
        ok = True
        for v in range(n):
            if lt_exps[g, v] > exps[v]:
                ok = False
                break
        if ok:
            return g
    return -1


@njit
def reduce_poly(fk, fc, sk, sc, start, length, lt_exps, lt_comp, lt_mask,
                maxdeg, ltdeg, reducers, enc, p, full):
    """Normal form of ``f`` modulo the monic basis elements listed in ``reducers``.

    Basis element ``g`` occupies ``sk[start[g]:start[g]+length[g]]``.  With
    ``full`` false only the leading term is made irreducible.  Returns
    ``(keys, coeffs, status)``.
    """
    n = lt_exps.shape[1]
    grading = enc[8]
    D = enc[10]
    bk = [np.empty(0, dtype=np.int64) for _ in range(NLEVELS)]
    bc = [np.empty(0, dtype=np.int64) for _ in range(NLEVELS)]
    head = np.zeros(NLEVELS, dtype=np.int64)
    _bucket_add(bk, bc, head, fk, fc, 0, 1, p)
    cap = max(16, fk.shape[0])
    ok_ = np.empty(cap, dtype=np.int64)
    oc_ = np.empty(cap, dtype=np.int64)
    r = 0
    term = np.zeros(2, dtype=np.int64)
    exps = np.zeros(n, dtype=np.int64)
    status = OK
    while _bucket_pop(bk, bc, head, p, term):
        key = term[0]
        c = term[1]
        g = _find_reducer(key, enc, exps, lt_exps, lt_comp, lt_mask, reducers)
        if g >= 0:
            d = 0
            for v in range(n):
                d += grading[v] * exps[v]
            if d - ltdeg[g] + maxdeg[g] > D:
                status = OVERFLOW
                break
            s0 = start[g]
            L = length[g]
            _bucket_add(bk, bc, head, sk[s0 + 1:s0 + L], sc[s0 + 1:s0 + L],
                        key - sk[s0], p - c, p)
            continue
        if r == cap:
            cap *= 2
            nk = np.empty(cap, dtype=np.int64)
            nc = np.empty(cap, dtype=np.int64)
            nk[:r] = ok_[:r]
            nc[:r] = oc_[:r]
            ok_ = nk
            oc_ = nc
        ok_[r] = key
        oc_[r] = c
        r += 1
        if not full:
            break
    if status == OK and not full:
        while _bucket_pop(bk, bc, head, p, term):
            if r == cap:
                cap *= 2
                nk = np.empty(cap, dtype=np.int64)
                nc = np.empty(cap, dtype=np.int64)
                nk[:r] = ok_[:r]
                nc[:r] = oc_[:r]
                ok_ = nk
                oc_ = nc
            ok_[r] = term[0]
            oc_[r] = term[1]
            r += 1
    return ok_[:r].copy(), oc_[:r].copy(), status


@njit
def make_monic(ck, p):
    """Scale coefficient array in place so the first entry is 1."""
    if ck.shape[0] == 0:
        return
    a = inv_mod(ck[0], p)
    for i in range(ck.shape[0]):
        ck[i] = (ck[i] * a) % p


@njit
def spoly(sk, sc, start, length, i, j, lcm_key, p):
    """S-polynomial of monic basis elements i and j (leading terms cancel)."""
    si, li = start[i], length[i]
    sj, lj = start[j], length[j]
    return merge(sk[si + 1:si + li], sc[si + 1:si + li], lcm_key - sk[si], 1,
                 sk[sj + 1:sj + lj], sc[sj + 1:sj + lj], lcm_key - sk[sj], p - 1, p)
