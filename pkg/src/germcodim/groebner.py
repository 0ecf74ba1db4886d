"""Gröbner bases of ideals and submodules of free modules over F_p[x].

The engine works on packed polynomials (see :mod:`germcodim.encoding`):
Buchberger's algorithm with the sugar selection strategy and the
Gebauer-Möller installation of critical pairs.  The reduction loop lives in
:func:`germcodim.kernels.reduce_poly`.

Module elements use the same machinery: a term carries its component in the
key, pairs are only formed between leading terms in one component, and the
product criterion is switched off for rank > 1 (it does not hold there).
"""
from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import deadline, kernels
from ._jit import njit
from .encoding import Encoding
from .errors import ExponentOverflow, RingMismatch
from .poly import PolyRing, Polynomial

log = logging.getLogger(__name__)

INFINITE = float("inf")


@dataclass(frozen=True)
class ModuleOrder:
    """``scheme`` is ``"TOP"`` (term over position) or ``"POT"``.

    Components are ranked by index, lower index greater.
    """

    base: object
    scheme: str = "TOP"

    def __post_init__(self):
        if self.scheme not in ("TOP", "POT"):
            raise ValueError(f"unknown scheme {self.scheme!r}")


class ModuleVector:
    """Element of ``R^k`` given by its k component polynomials."""

    __slots__ = ("components", "ring")

    def __init__(self, components: Sequence[Polynomial], ring: PolyRing | None = None):
        comps = tuple(components)
        if ring is None:
            if not comps:
                raise ValueError("ring required for a rank-0 vector")
            ring = comps[0].ring
        for c in comps:
            if c.ring != ring:
                raise RingMismatch("vector components must share one ring")
        self.components = comps
        self.ring = ring

    @property
    def rank(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __add__(self, other):
        return ModuleVector([a + b for a, b in zip(self, other)], self.ring)

    def __sub__(self, other):
        return ModuleVector([a - b for a, b in zip(self, other)], self.ring)

    def __mul__(self, f):
        return ModuleVector([a * f for a in self], self.ring)

    __rmul__ = __mul__

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.components) + "]"

    __repr__ = __str__


# -- packing -------------------------------------------------------------------

def pack_element(x, ring: PolyRing, enc: Encoding):
    """Packed form of a polynomial (rank 1) or ModuleVector."""
    if isinstance(x, Polynomial):
        if x.ring != ring:
            raise RingMismatch("polynomial lies in another ring")
        if enc.rank == 1:
            return ring.pack(x, enc)
        x = ModuleVector([x] + [ring.zero] * (enc.rank - 1), ring)
    if x.ring != ring:
        raise RingMismatch("vector lies in another ring")
    if x.rank != enc.rank:
        raise ValueError(f"vector of rank {x.rank} in a rank-{enc.rank} context")
    exps, comps, coeffs = [], [], []
    for i, f in enumerate(x.components):
        for c, e in f.terms:
            exps.append(e)
            comps.append(i)
            coeffs.append(c)
    if not exps:
        return np.empty(0, np.int64), np.empty(0, np.int64)
    keys = enc.encode(np.array(exps, np.int64), np.array(comps, np.int64))
    return kernels.sort_combine(keys, np.array(coeffs, np.int64), ring.p)


def unpack_element(keys, coeffs, ring: PolyRing, enc: Encoding):
    if enc.rank == 1:
        return ring.unpack(keys, coeffs, enc)
    comps_terms = [[] for _ in range(enc.rank)]
    if len(keys):
        exps, comps = enc.decode(keys)
        for c, e, k in zip(coeffs.tolist(), exps.tolist(), comps.tolist()):
            comps_terms[k].append((c, tuple(e)))
    return ModuleVector([ring.from_terms(t) for t in comps_terms], ring)


# -- packed basis store ----------------------------------------------------------

class _Store:
    """Growable arrays of monic packed polynomials with leading-term data."""

    def __init__(self, enc: Encoding, p: int):
        self.enc = enc
        self.p = p
        n = enc.n
        self.sk = np.empty(1 << 12, np.int64)
        self.sc = np.empty(1 << 12, np.int64)
        self.used = 0
        cap = 64
        self.start = np.zeros(cap, np.int64)
        self.length = np.zeros(cap, np.int64)
        self.lt_exps = np.zeros((cap, n), np.int64)
        self.lt_comp = np.zeros(cap, np.int64)
        self.lt_mask = np.zeros(cap, np.int64)
        self.lt_key = np.zeros(cap, np.int64)
        self.maxdeg = np.zeros(cap, np.int64)
        self.ltdeg = np.zeros(cap, np.int64)
        self.sugar = np.zeros(cap, np.int64)
        self.count = 0

    def _grow_rows(self):
        for name in ("start", "length", "lt_comp", "lt_mask", "lt_key", "maxdeg", "ltdeg",
                     "sugar"):
            a = getattr(self, name)
            b = np.zeros(2 * a.shape[0], np.int64)
            b[: a.shape[0]] = a
            setattr(self, name, b)
        a = self.lt_exps
        b = np.zeros((2 * a.shape[0], a.shape[1]), np.int64)
        b[: a.shape[0]] = a
        self.lt_exps = b

    def add(self, keys, coeffs, sugar=None) -> int:
        m = keys.shape[0]
        while self.used + m > self.sk.shape[0]:
            for name in ("sk", "sc"):
                a = getattr(self, name)
                b = np.empty(2 * a.shape[0], np.int64)
                b[: self.used] = a[: self.used]
                setattr(self, name, b)
        if self.count == self.start.shape[0]:
            self._grow_rows()
        i = self.count
        self.sk[self.used:self.used + m] = keys
        self.sc[self.used:self.used + m] = coeffs
        self.start[i] = self.used
        self.length[i] = m
        self.used += m
        exps, comps = self.enc.decode(keys)
        degs = exps @ self.enc.grading
        self.lt_exps[i] = exps[0]
        self.lt_comp[i] = comps[0]
        self.lt_mask[i] = kernels.support_mask(exps[0])
        self.lt_key[i] = keys[0]
        self.maxdeg[i] = degs.max()
        self.ltdeg[i] = degs[0]
        self.sugar[i] = max(int(degs.max()), sugar if sugar is not None else 0)
        self.count += 1
        return i

    def get(self, i):
        s, L = self.start[i], self.length[i]
        return self.sk[s:s + L], self.sc[s:s + L]

    def reduce(self, keys, coeffs, reducers, full=True):
        n = self.count
        rk, rc, status = kernels.reduce_poly(
            keys, coeffs, self.sk, self.sc, self.start[:n], self.length[:n],
            self.lt_exps[:n], self.lt_comp[:n], self.lt_mask[:n], self.maxdeg[:n],
            self.ltdeg[:n], np.asarray(reducers, np.int64), self.enc.arrays, self.p, full,
        )
        if status != kernels.OK:
            raise ExponentOverflow(
                f"reduction left the packed degree bound {self.enc.D}"
            )
        return rk, rc


@njit
def _gm_select(lcms, coprime):
    """Gebauer-Möller selection among the new pairs (h, g_a), in order a = 0..k-1."""
    k, n = lcms.shape
    kept = np.zeros(k, dtype=np.bool_)
    for a in range(k):
        if coprime[a]:
            kept[a] = True
            continue
        dominated = False
        for b in range(k):
            if b == a or (b < a and not kept[b]):
                continue
            divides = True
            for v in range(n):
                if lcms[b, v] > lcms[a, v]:
                    divides = False
                    break
            if divides:
                dominated = True
                break
        kept[a] = not dominated
    return kept


class _Pairs:
    def __init__(self, n):
        cap = 256
        self.i = np.zeros(cap, np.int64)
        self.j = np.zeros(cap, np.int64)
        self.comp = np.zeros(cap, np.int64)
        self.lcm = np.zeros((cap, n), np.int64)
        self.alive = np.zeros(cap, np.bool_)
        self.count = 0
        self.live = np.zeros(0, np.int64)  # ids possibly alive

    def add(self, i, j, comp, lcms):
        m = lcms.shape[0]
        while self.count + m > self.i.shape[0]:
            for name in ("i", "j", "comp", "alive"):
                a = getattr(self, name)
                b = np.zeros(2 * a.shape[0], a.dtype)
                b[: a.shape[0]] = a
                setattr(self, name, b)
            b = np.zeros((2 * self.lcm.shape[0], self.lcm.shape[1]), np.int64)
            b[: self.lcm.shape[0]] = self.lcm
            self.lcm = b
        ids = np.arange(self.count, self.count + m)
        self.i[ids] = i
        self.j[ids] = j
        self.comp[ids] = comp
        self.lcm[ids] = lcms
        self.alive[ids] = True
        self.count += m
        live = self.live[self.alive[self.live]]
        self.live = np.concatenate([live, ids])
        return ids


@dataclass
class BuchbergerStats:
    pairs_reduced: int = 0
    zero_reductions: int = 0
    basis_size: int = 0
    max_sugar: int = 0


def _buchberger(packed: list, enc: Encoding, p: int, stats: BuchbergerStats | None = None):
    """Run Buchberger on packed generators; return (store, active indices)."""
    store = _Store(enc, p)
    pairs = _Pairs(enc.n)
    ideal_case = enc.rank == 1
    grading = enc.grading
    heap: list = []
    seq = itertools.count()
    gens = []
    for keys, coeffs in packed:
        if keys.shape[0] == 0:
            continue
        coeffs = coeffs.copy()
        kernels.make_monic(coeffs, p)
        exps, _ = enc.decode(keys)
        sug = int((exps @ grading).max())
        gens.append((keys, coeffs))
        heapq.heappush(heap, (sug, int(keys[0]), next(seq), -len(gens)))
    G: list[int] = []
    stats = stats if stats is not None else BuchbergerStats()
    last_sugar = None
    reducers = None

    while heap:
        deadline.check()
        sug, _, _, pid = heapq.heappop(heap)
        if pid >= 0:
            if not pairs.alive[pid]:
                continue
            pairs.alive[pid] = False
            i, j = int(pairs.i[pid]), int(pairs.j[pid])
            lkey = int(enc.encode(pairs.lcm[pid], [pairs.comp[pid]])[0])
            keys, coeffs = kernels.spoly(store.sk, store.sc, store.start, store.length,
                                         i, j, lkey, p)
        else:
            keys, coeffs = gens[-pid - 1]
        stats.pairs_reduced += 1
        if last_sugar != sug:
            log.debug("sugar %d: basis %d, pending %d", sug, len(G), len(heap))
            last_sugar = sug
        if keys.shape[0] and G:
            if reducers is None:
                reducers = np.array(sorted(G, key=lambda g: (store.length[g], g)), np.int64)
            keys, coeffs = store.reduce(keys, coeffs, reducers, full=True)
        if keys.shape[0] == 0:
            stats.zero_reductions += 1
            continue
        coeffs = coeffs.copy()
        kernels.make_monic(coeffs, p)
        h = store.add(keys, coeffs, sug)
        stats.max_sugar = max(stats.max_sugar, sug)
        _update(store, pairs, G, h, heap, seq, ideal_case)
        reducers = None
    stats.basis_size = len(G)
    return store, G


def _update(store: _Store, pairs: _Pairs, G: list, h: int, heap, seq, ideal_case: bool):
    enc = store.enc
    lt_h = store.lt_exps[h]
    comp_h = store.lt_comp[h]
    Garr = np.array(G, dtype=np.int64)
    # chain criterion on the pending pairs
    live = pairs.live[pairs.alive[pairs.live]]
    if live.shape[0]:
        sel = live[pairs.comp[live] == comp_h]
        if sel.shape[0]:
            L = pairs.lcm[sel]
            div = np.all(L >= lt_h, axis=1)
            if div.any():
                sel, L = sel[div], L[div]
                l1 = np.maximum(store.lt_exps[pairs.i[sel]], lt_h)
                l2 = np.maximum(store.lt_exps[pairs.j[sel]], lt_h)
                kill = ~np.all(l1 == L, axis=1) & ~np.all(l2 == L, axis=1)
                pairs.alive[sel[kill]] = False
        pairs.live = live
    # new pairs (g, h)
    if Garr.shape[0]:
        cand = Garr[store.lt_comp[Garr] == comp_h]
        if cand.shape[0]:
            lts = store.lt_exps[cand]
            lcms = np.maximum(lts, lt_h)
            if ideal_case:
                coprime = np.all(np.minimum(lts, lt_h) == 0, axis=1)
            else:
                coprime = np.zeros(cand.shape[0], np.bool_)
            kept = _gm_select(lcms, coprime)
            keep = kept & ~coprime
            if keep.any():
                cand, lcms = cand[keep], lcms[keep]
                dl = lcms @ enc.grading
                sug = np.maximum(store.sugar[cand] + dl - store.ltdeg[cand],
                                 store.sugar[h] + dl - store.ltdeg[h])
                lkeys = enc.encode(lcms, np.full(cand.shape[0], comp_h))
                ids = pairs.add(cand, h, comp_h, lcms)
                for pid, s, k in zip(ids.tolist(), sug.tolist(), lkeys.tolist()):
                    heapq.heappush(heap, (s, k, next(seq), pid))
    # drop basis elements whose leading term is now redundant
    if Garr.shape[0]:
        same = store.lt_comp[Garr] == comp_h
        red = same & np.all(store.lt_exps[Garr] >= lt_h, axis=1)
        if red.any():
            G[:] = Garr[~red].tolist()
    G.append(h)


def _interreduce(store: _Store, G: list[int]) -> list[tuple]:
    """Reduced basis: minimal, monic, tails reduced, sorted by leading term descending."""
    order = sorted(G, key=lambda g: store.lt_key[g], reverse=True)
    out = []
    for g in order:
        keys, coeffs = store.get(g)
        others = [x for x in order if x != g]
        if others and keys.shape[0] > 1:
            tk, tc = store.reduce(keys[1:], coeffs[1:], others, full=True)
            keys = np.concatenate([keys[:1], tk])
            coeffs = np.concatenate([coeffs[:1], tc])
        out.append((keys.copy(), coeffs.copy()))
    return out


# -- public objects ---------------------------------------------------------------

class GroebnerBasis:
    """A Gröbner basis together with its packed store for fast normal forms."""

    def __init__(self, ring: PolyRing, rank: int, scheme: str, packed: list,
                 reduced: bool, stats: BuchbergerStats | None = None):
        self.ring = ring
        self.rank = rank
        self.scheme = scheme
        self.enc = ring.encoding(rank, scheme)
        self.reduced = reduced
        self.stats = stats
        self._packed = packed
        self._store = _Store(self.enc, ring.p)
        for k, c in packed:
            self._store.add(k, c)
        self._elements = None

    @property
    def elements(self) -> list:
        if self._elements is None:
            self._elements = [unpack_element(k, c, self.ring, self.enc) for k, c in self._packed]
        return self._elements

    def __len__(self):
        return len(self._packed)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def leading_exponents(self) -> np.ndarray:
        return self._store.lt_exps[: self._store.count].copy()

    def leading_components(self) -> np.ndarray:
        return self._store.lt_comp[: self._store.count].copy()

    def normal_form(self, f):
        keys, coeffs = pack_element(f, self.ring, self.enc)
        if keys.shape[0] and len(self):
            keys, coeffs = self._store.reduce(keys, coeffs, range(len(self)), full=True)
        return unpack_element(keys, coeffs, self.ring, self.enc)

    def contains(self, f) -> bool:
        keys, coeffs = pack_element(f, self.ring, self.enc)
        if keys.shape[0] == 0:
            return True
        if not len(self):
            return False
        keys, _ = self._store.reduce(keys, coeffs, range(len(self)), full=False)
        return keys.shape[0] == 0

    def is_unit(self) -> bool:
        return self.rank == 1 and any(
            not any(e) for e in self._store.lt_exps[: self._store.count].tolist()
        )

    def __repr__(self):
        return f"GroebnerBasis({len(self)} elements, rank {self.rank}, {self.scheme})"


class Ideal:
    """Ideal of a polynomial ring; the reduced basis is computed once on demand."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial]):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial) or g.ring != ring:
                raise RingMismatch("ideal generators must lie in the ring")
            gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = None

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = reduce_gb(buchberger(self))
        return self._gb

    @property
    def cached_gb(self):
        return self._gb

    def __contains__(self, f):
        return self.gb.contains(f)

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.generators)})"


class Submodule:
    def __init__(self, ring: PolyRing, rank: int, generators: Iterable,
                 order: ModuleOrder | None = None):
        gens = []
        for g in generators:
            if isinstance(g, Polynomial) and rank == 1:
                g = ModuleVector([g], ring)
            if not isinstance(g, ModuleVector) or g.ring != ring or g.rank != rank:
                raise RingMismatch("submodule generators must be rank-k vectors over the ring")
            gens.append(g)
        self.ring = ring
        self.rank = rank
        self.generators = tuple(gens)
        self.order = order or ModuleOrder(ring.order, "TOP")
        self._gb = None

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = reduce_gb(buchberger(self))
        return self._gb

    @property
    def cached_gb(self):
        return self._gb


def _context(I):
    if isinstance(I, Ideal):
        return I.ring, 1, "TOP", I.generators
    if isinstance(I, Submodule):
        return I.ring, I.rank, I.order.scheme, I.generators
    raise TypeError("expected an Ideal or a Submodule")


def buchberger(I: Ideal | Submodule) -> GroebnerBasis:
    """A (not necessarily reduced) Gröbner basis of the ideal or submodule."""
    ring, rank, scheme, gens = _context(I)
    enc = ring.encoding(rank, scheme)
    packed = [pack_element(g, ring, enc) for g in gens]
    stats = BuchbergerStats()
    store, G = _buchberger(packed, enc, ring.p, stats)
    out = [(store.get(g)[0].copy(), store.get(g)[1].copy()) for g in G]
    return GroebnerBasis(ring, rank, scheme, out, reduced=False, stats=stats)


def reduce_gb(G: GroebnerBasis) -> GroebnerBasis:
    if G.reduced:
        return G
    store = G._store
    minimal = []
    lts = store.lt_exps[: store.count]
    comps = store.lt_comp[: store.count]
    keys = store.lt_key[: store.count]
    for i in range(store.count):
        dominated = False
        for j in range(store.count):
            if j == i or comps[j] != comps[i] or not np.all(lts[j] <= lts[i]):
                continue
            # equal leading terms: keep the first occurrence
            if keys[j] != keys[i] or j < i:
                dominated = True
                break
        if not dominated:
            minimal.append(i)
    packed = _interreduce(store, minimal)
    return GroebnerBasis(G.ring, G.rank, G.scheme, packed, reduced=True, stats=G.stats)


def groebner(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    ring = ring or gens[0].ring
    return Ideal(ring, gens).gb


def normal_form(f, G: GroebnerBasis | Sequence):
    if isinstance(G, GroebnerBasis):
        return G.normal_form(f)
    G = list(G)
    if not G:
        return f
    ring = G[0].ring
    rank = G[0].rank if isinstance(G[0], ModuleVector) else 1
    packed = [pack_element(g, ring, ring.encoding(rank)) for g in G]
    packed = [(k, _monic(c, ring.p)) for k, c in packed if k.shape[0]]
    return GroebnerBasis(ring, rank, "TOP", packed, reduced=False).normal_form(f)


def _monic(c, p):
    c = c.copy()
    kernels.make_monic(c, p)
    return c


# -- independent checker ------------------------------------------------------

def _py_terms(x, rank):
    if rank == 1:
        return {(e, 0): c for c, e in x.terms}
    return {(e, i): c for i, f in enumerate(x.components) for c, e in f.terms}


def _py_reduce(d, basis, p, sort_key):
    """Plain dict-based full reduction (used only by is_groebner)."""
    d = dict(d)
    rem = {}
    while d:
        t = max(d, key=sort_key)
        c = d.pop(t)
        for lt, lc, g in basis:
            if lt[1] == t[1] and all(a <= b for a, b in zip(lt[0], t[0])):
                m = tuple(b - a for a, b in zip(lt[0], t[0]))
                f = c * pow(lc, -1, p) % p
                for (e, comp), gc in g.items():
                    if (e, comp) == lt:
                        continue
                    k = (tuple(x + y for x, y in zip(e, m)), comp)
                    v = (d.get(k, 0) - f * gc) % p
                    if v:
                        d[k] = v
                    else:
                        d.pop(k, None)
                break
        else:
            rem[t] = c
    return rem


def is_groebner(G) -> bool:
    """True iff every S-pair of ``G`` reduces to zero (no criteria applied)."""
    if isinstance(G, GroebnerBasis):
        ring, rank, scheme, elems = G.ring, G.rank, G.scheme, G.elements
    else:
        elems = list(G)
        if not elems:
            return True
        ring = elems[0].ring
        rank = elems[0].rank if isinstance(elems[0], ModuleVector) else 1
        scheme = "TOP"
    p = ring.p
    okey = ring.order.sort_key

    def sort_key(t):
        if scheme == "POT":
            return (-t[1], okey(t[0]))
        return (okey(t[0]), -t[1])

    basis = []
    for g in elems:
        d = _py_terms(g, rank)
        if not d:
            continue
        lt = max(d, key=sort_key)
        basis.append((lt, d[lt], d))
    for a, b in itertools.combinations(range(len(basis)), 2):
        (la, ca, da), (lb, cb, db) = basis[a], basis[b]
        if la[1] != lb[1]:
            continue
        L = tuple(max(x, y) for x, y in zip(la[0], lb[0]))
        ma = tuple(x - y for x, y in zip(L, la[0]))
        mb = tuple(x - y for x, y in zip(L, lb[0]))
        s = {}
        ia, ib = pow(ca, -1, p), pow(cb, -1, p)
        for (e, comp), c in da.items():
            k = (tuple(x + y for x, y in zip(e, ma)), comp)
            s[k] = (s.get(k, 0) + c * ia) % p
        for (e, comp), c in db.items():
            k = (tuple(x + y for x, y in zip(e, mb)), comp)
            s[k] = (s.get(k, 0) - c * ib) % p
        s = {k: v for k, v in s.items() if v}
        if _py_reduce(s, basis, p, sort_key):
            return False
    return True


# -- dimension counts --------------------------------------------------------------

@njit
def _staircase_count(lts, bounds):
    """Monomials outside the monomial ideal generated by the rows of ``lts``.

    ``bounds[v]`` is the exponent of a pure power of variable v in the ideal.
    """
    m, n = lts.shape
    if n == 1:
        return bounds[0]
    total = 0
    pre = np.zeros(n - 1, dtype=np.int64)
    while True:
        c = bounds[n - 1]
        for t in range(m):
            ok = True
            for v in range(n - 1):
                if lts[t, v] > pre[v]:
                    ok = False
                    break
            if ok and lts[t, n - 1] < c:
                c = lts[t, n - 1]
        total += c
        # advance the odometer; a zero count lets us skip the rest of a coordinate
        v = n - 2
        if c == 0:
            while v >= 0 and pre[v] == 0:
                v -= 1
            if v < 0:
                return total
            pre[v] = 0
            v -= 1
        while v >= 0:
            pre[v] += 1
            if pre[v] < bounds[v]:
                break
            pre[v] = 0
            v -= 1
        if v < 0:
            return total


def _monomial_vdim(lts: np.ndarray, n: int):
    if lts.shape[0] == 0:
        return INFINITE
    bounds = np.zeros(n, np.int64)
    for v in range(n):
        others = np.delete(lts, v, axis=1)
        pure = lts[np.all(others == 0, axis=1), v]
        if pure.shape[0] == 0:
            return INFINITE
        bounds[v] = pure.min()
    if bounds.min() == 0:
        return 0
    return int(_staircase_count(np.ascontiguousarray(lts), bounds))


def vdim(I, rank: int | None = None):
    """Dimension over F_p of R/I or R^k/S; ``INFINITE`` when not finite."""
    G = I.gb if isinstance(I, (Ideal, Submodule)) else I
    if not isinstance(G, GroebnerBasis):
        raise TypeError("vdim needs an Ideal, Submodule or GroebnerBasis")
    k = G.rank if rank is None else rank
    n = G.ring.nvars
    if k == 0:
        return 0
    lts = G.leading_exponents()
    comps = G.leading_components()
    total = 0
    for c in range(k):
        r = _monomial_vdim(lts[comps == c], n)
        if r == INFINITE:
            return INFINITE
        total += r
    return total


def krull_dim(I) -> int:
    """Dimension of R/I from the leading monomials; -1 for the unit ideal."""
    G = I.gb if isinstance(I, Ideal) else I
    n = G.ring.nvars
    lts = G.leading_exponents()
    if any(not row.any() for row in lts):
        return -1
    supports = [frozenset(np.nonzero(row)[0].tolist()) for row in lts]
    for size in range(n, -1, -1):
        for S in itertools.combinations(range(n), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return -1


def modulo(A: Sequence[Polynomial], B: Ideal | Sequence[Polynomial], ring: PolyRing | None = None
           ) -> Submodule:
    """``S = {c in R^k : sum c_i a_i in B}``, so that ``R^k/S`` is ``(<A>+B)/B``."""
    A = list(A)
    bgens = list(B.generators if isinstance(B, Ideal) else B)
    if ring is None:
        if A:
            ring = A[0].ring
        elif bgens:
            ring = bgens[0].ring
        else:
            raise ValueError("cannot infer the ring")
    k = len(A)
    if k == 0:
        S = Submodule(ring, 0, [])
        S._gb = GroebnerBasis(ring, 1, "POT", [], reduced=True)
        S._gb.rank = 0
        return S
    for f in A + bgens:
        if f.ring != ring:
            raise RingMismatch("modulo arguments must share one ring")
    zero = ring.zero
    vecs = []
    for i, a in enumerate(A):
        comps = [zero] * (k + 1)
        comps[0] = a
        comps[i + 1] = ring.one
        vecs.append(ModuleVector(comps, ring))
    for b in bgens:
        vecs.append(ModuleVector([b] + [zero] * k, ring))
    big = Submodule(ring, k + 1, vecs, ModuleOrder(ring.order, "POT"))
    G = buchberger(big)
    enc_small = ring.encoding(k, "POT")
    keep = []
    for vec in G.elements:
        if vec[0].is_zero():
            keep.append(ModuleVector(vec.components[1:], ring))
    S = Submodule(ring, k, keep, ModuleOrder(ring.order, "POT"))
    # the projected elements already form a Gröbner basis for POT on 1..k
    packed = [pack_element(v, ring, enc_small) for v in keep]
    S._gb = reduce_gb(GroebnerBasis(ring, k, "POT", packed, reduced=False))
    return S
