"""Jacobians, minors, Fitting ideals, elimination and preimages under ring maps."""
from __future__ import annotations

import itertools
from typing import Sequence

from .errors import RingMismatch
from .groebner import Ideal, modulo, vdim
from .orders import Block, MonomialOrder, WeightedDegRevLex
from .poly import PolyMatrix, PolyRing, Polynomial, RingMap


def jacobian_matrix(F: Sequence[Polynomial]) -> PolyMatrix:
    F = list(F)
    if not F:
        raise ValueError("jacobian of an empty list")
    ring = F[0].ring
    for f in F:
        if f.ring != ring:
            raise RingMismatch("jacobian entries must share one ring")
    return PolyMatrix([[f.diff(v) for v in range(ring.nvars)] for f in F], ring)


def _det(M: PolyMatrix, rows: tuple, cols: tuple, cache: dict) -> Polynomial:
    """Laplace expansion along the first listed row, memoized on (rows, cols)."""
    key = (rows, cols)
    if key in cache:
        return cache[key]
    ring = M.ring
    if len(rows) == 1:
        out = M[rows[0], cols[0]]
    else:
        out = ring.zero
        r0, rest = rows[0], rows[1:]
        for t, c in enumerate(cols):
            a = M[r0, c]
            if a.is_zero():
                continue
            sub = _det(M, rest, cols[:t] + cols[t + 1:], cache)
            if sub.is_zero():
                continue
            term = a * sub
            out = out + term if t % 2 == 0 else out - term
    cache[key] = out
    return out


def minor_list(M: PolyMatrix, r: int) -> list[Polynomial]:
    if r <= 0:
        raise ValueError("minor size must be positive")
    nr, nc = M.shape
    if r > min(nr, nc):
        return []
    cache: dict = {}
    out = []
    for rows in itertools.combinations(range(nr), r):
        for cols in itertools.combinations(range(nc), r):
            out.append(_det(M, rows, cols, cache))
    return out


def minors(M: PolyMatrix, r: int) -> Ideal:
    """Ideal of all r-by-r minors; the zero ideal when r exceeds the matrix size."""
    return Ideal(M.ring, [m for m in minor_list(M, r) if not m.is_zero()])


def fitting_ideal(presentation: PolyMatrix, k: int) -> Ideal:
    """``Fitt_k`` of the module presented by an n-by-m matrix (n generators)."""
    if k < 0:
        raise ValueError("Fitting index must be non-negative")
    n, m = presentation.shape
    size = n - k
    ring = presentation.ring
    if size <= 0:
        return Ideal(ring, [ring.one])
    if size > min(n, m):
        return Ideal(ring, [])
    return minors(presentation, size)


# -- elimination ----------------------------------------------------------------

def _block_order(kill_order: MonomialOrder, keep_order: MonomialOrder) -> Block:
    return Block((kill_order, keep_order))


def _sub_order(order: MonomialOrder, idx: Sequence[int]) -> MonomialOrder:
    """Restriction of a weighted degrevlex order to a subset of its variables."""
    grading = order.grading()
    return WeightedDegRevLex(tuple(grading[i] for i in idx))


def eliminate(I: Ideal, kill: Sequence[str | int]) -> Ideal:
    """``I`` intersected with the subring of the remaining variables.

    The kill variables are moved to a leading block ordered by weighted
    degrevlex; the result lives in a ring on the kept variables.
    """
    ring = I.ring
    kill_idx = sorted({ring.index(v) for v in kill})
    keep_idx = [i for i in range(ring.nvars) if i not in kill_idx]
    if not kill_idx:
        return Ideal(ring, I.generators)
    if not keep_idx:
        raise ValueError("cannot eliminate every variable")
    keep_ring = PolyRing([ring.var_names[i] for i in keep_idx],
                         _sub_order(ring.order, keep_idx), ring.field)
    perm = kill_idx + keep_idx
    big = PolyRing([ring.var_names[i] for i in perm],
                   _block_order(_sub_order(ring.order, kill_idx), keep_ring.order), ring.field)
    moved = [big.from_terms((c, tuple(e[i] for i in perm)) for c, e in g.terms)
             for g in I.generators]
    G = Ideal(big, moved).gb
    nk = len(kill_idx)
    out = []
    for g in G.elements:
        if all(not any(e[:nk]) for _, e in g.terms):
            out.append(keep_ring.from_terms((c, e[nk:]) for c, e in g.terms))
    return Ideal(keep_ring, out)


def product_ring(phi: RingMap) -> PolyRing:
    """``F_p[dest vars, source vars]`` with the destination block eliminated first."""
    names = phi.dest.var_names + phi.source.var_names
    if len(set(names)) != len(names):
        raise ValueError("source and destination variable names must differ")
    return PolyRing(names, Block((phi.dest.order, phi.source.order)), phi.dest.field)


def preimage(phi: RingMap, J: Ideal) -> Ideal:
    """``{g in source : phi(g) in J}`` via elimination in the product ring."""
    if J.ring != phi.dest:
        raise RingMismatch("ideal does not lie in the destination ring of the map")
    src, dst = phi.source, phi.dest
    big = product_ring(phi)
    n = dst.nvars

    def lift_dest(g):
        return big.from_terms((c, e + (0,) * src.nvars) for c, e in g.terms)

    gens = [lift_dest(g) for g in J.generators]
    for i, img in enumerate(phi.images):
        y = [0] * (n + src.nvars)
        y[n + i] = 1
        gens.append(big.monomial(y) - lift_dest(img))
    G = Ideal(big, gens).gb
    out = []
    for g in G.elements:
        if all(not any(e[:n]) for _, e in g.terms):
            out.append(src.from_terms((c, e[n:]) for c, e in g.terms))
    return Ideal(src, out)


def relative_quotient_dim(A: Ideal, B: Ideal):
    """Dimension of ``(A + B)/B``, or ``INFINITE``."""
    if A.ring != B.ring:
        raise RingMismatch("ideals lie in different rings")
    return vdim(modulo(list(A.generators), B, A.ring))


def ideal_membership(g: Polynomial, I: Ideal) -> bool:
    if g.ring != I.ring:
        raise RingMismatch("polynomial and ideal lie in different rings")
    return I.gb.contains(g)
