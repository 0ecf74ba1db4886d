"""Independent reference computations used by the tests."""
import itertools
import random

import sympy as sp

from germcodim import PolyRing

P = 31991


def sympy_reduced_gb(polys, ring):
    """Reduced degrevlex basis from sympy, as a set of monic term tuples."""
    syms = sp.symbols(" ".join(ring.var_names))
    syms = syms if isinstance(syms, tuple) else (syms,)
    exprs = [sp.sympify(str(f).replace("^", "**"), locals=dict(zip(ring.var_names, syms)))
             for f in polys]
    G = sp.groebner(exprs, *syms, order="grevlex", modulus=ring.p)
    out = set()
    for g in G.exprs:
        terms = sp.Poly(g, *syms, modulus=ring.p).terms()
        out.add(_monic_terms([(int(c) % ring.p, tuple(e)) for e, c in terms], ring.p))
    return out


def _monic_terms(terms, p):
    terms = [(c % p, e) for c, e in terms if c % p]
    # scale by the degrevlex-leading coefficient
    top = max(terms, key=lambda t: (sum(t[1]), tuple(-x for x in reversed(t[1]))))
    inv = pow(top[0], -1, p)
    return tuple(sorted((c * inv % p, e) for c, e in terms))


def ours_as_set(G):
    return {_monic_terms(list(g.terms), G.ring.p) for g in G.elements}


def staircase_brute(lts, n, box):
    """Count monomials in [0, box)^n not divisible by any row of ``lts``."""
    count = 0
    for e in itertools.product(range(box), repeat=n):
        if not any(all(a <= b for a, b in zip(l, e)) for l in lts):
            count += 1
    return count


def nullspace_mod_p(rows, p):
    """Basis of {v : M v = 0} where M is given by ``rows`` (list of lists)."""
    if not rows:
        return []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [v * inv % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fcol] % p
        basis.append(v)
    return basis


def random_poly(ring, rng, max_deg=3, max_terms=4):
    n = ring.nvars
    d = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_deg)
        e = [0] * n
        for _ in range(deg):
            e[rng.randrange(n)] += 1
        d[tuple(e)] = rng.randrange(1, ring.p)
    return ring.from_dict(d)


def random_ideal(rng, nvars=None, ngens=None, max_deg=3, p=P):
    n = nvars or rng.randint(1, 3)
    ring = PolyRing(["x", "y", "z", "w"][:n], p=p)
    k = ngens or rng.randint(1, 3)
    gens = [random_poly(ring, rng, max_deg) for _ in range(k)]
    return ring, [g for g in gens if not g.is_zero()] or [ring.var(0)]


def monomials_up_to(n, deg):
    out = []
    for e in itertools.product(range(deg + 1), repeat=n):
        if sum(e) <= deg:
            out.append(e)
    return out


def rng(seed):
    return random.Random(seed)
