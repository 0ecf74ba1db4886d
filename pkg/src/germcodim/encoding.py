"""Packing of (monomial, component) pairs into order-preserving int64 keys.

For an order with row matrix ``W`` the key of ``(e, c)`` is the concatenation
of the fields ``W[r] @ e - lo[r]`` (most significant first), plus a field for
``-c`` when the rank exceeds one.  As long as every exponent respects the
degree bound, comparing keys compares terms, and multiplying by a monomial
``m`` adds ``key(m) - K0`` to the key, where ``K0`` is the key of ``(1, 0)``.
"""
from __future__ import annotations

import numpy as np

from .errors import ExponentOverflow
from .orders import MonomialOrder

KEY_BITS = 63


class Encoding:
    """Key layout for one order, rank and degree bound.

    ``scheme`` is ``"TOP"`` (compare terms first, then component) or
    ``"POT"`` (component first).  Lower component index is the greater one.
    """

    def __init__(self, order: MonomialOrder, rank: int = 1, scheme: str = "TOP",
                 degree_bound: int | None = None):
        if scheme not in ("TOP", "POT"):
            raise ValueError(f"unknown module scheme {scheme!r}")
        if rank < 1:
            raise ValueError("rank must be positive")
        self.order = order
        self.rank = rank
        self.scheme = scheme
        self.n = order.nvars
        self.grading = np.array(order.grading(), dtype=np.int64)
        rows = [list(r) for r in order.rows()]
        if degree_bound is None:
            degree_bound = self._max_bound(rows)
        self.D = int(degree_bound)
        self._layout(rows, self.D, check=True)

    def _field_ranges(self, rows, D):
        caps = [D // int(g) for g in self.grading]
        out = []
        for row in rows:
            lo = sum(min(0, r) * c for r, c in zip(row, caps))
            hi = sum(max(0, r) * c for r, c in zip(row, caps))
            out.append((lo, hi))
        return out

    def _bits(self, rows, D):
        total = sum((hi - lo).bit_length() for lo, hi in self._field_ranges(rows, D))
        if self.rank > 1:
            total += (self.rank - 1).bit_length()
        return total

    def _max_bound(self, rows):
        lo, hi = 1, 1
        while self._bits(rows, hi * 2) <= KEY_BITS and hi < (1 << 40):
            hi *= 2
        hi *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self._bits(rows, mid) <= KEY_BITS:
                lo = mid
            else:
                hi = mid
        if self._bits(rows, lo) > KEY_BITS:
            raise ExponentOverflow("too many variables to pack a monomial into 63 bits")
        return lo

    def _layout(self, rows, D, check):
        n = self.n
        ranges = self._field_ranges(rows, D)
        W = [list(r) + [0] for r in rows]
        if self.rank > 1:
            comp_row = [0] * n + [-1]
            comp_range = (-(self.rank - 1), 0)
            if self.scheme == "POT":
                W.insert(0, comp_row)
                ranges.insert(0, comp_range)
                self.comp_field = 0
                row_offset = 1
            else:
                W.append(comp_row)
                ranges.append(comp_range)
                self.comp_field = len(W) - 1
                row_offset = 0
        else:
            self.comp_field = -1
            row_offset = 0
        nf = len(W)
        widths = [(hi - lo).bit_length() for lo, hi in ranges]
        if check and sum(widths) > KEY_BITS:
            raise ExponentOverflow(f"degree bound {D} does not fit in a 63-bit key")
        shifts = [0] * nf
        acc = 0
        for f in range(nf - 1, -1, -1):
            shifts[f] = acc
            acc += widths[f]
        self.W = np.array(W, dtype=np.int64)
        self.lo = np.array([lo for lo, _ in ranges], dtype=np.int64)
        self.shift = np.array(shifts, dtype=np.int64)
        self.mask = np.array([(1 << w) - 1 for w in widths], dtype=np.int64)
        # decode plan
        dkind = np.zeros(n, dtype=np.int64)
        drow = np.zeros(n, dtype=np.int64)
        dsign = np.zeros(n, dtype=np.int64)
        dwvec = np.zeros((n, n), dtype=np.int64)
        dw = np.ones(n, dtype=np.int64)
        for v, item in enumerate(self.order.decode_plan()):
            if item[0] == "direct":
                dkind[v], drow[v], dsign[v] = 0, item[1] + row_offset, item[2]
            else:
                _, r, bvars, bw = item
                dkind[v], drow[v] = 1, r + row_offset
                for u, w in zip(bvars, bw):
                    if u == v:
                        dw[v] = w
                    else:
                        dwvec[v, u] = w
        self.dkind, self.drow, self.dsign, self.dwvec, self.dw = dkind, drow, dsign, dwvec, dw
        self.K0 = int(self.encode(np.zeros((1, n), dtype=np.int64))[0])

    @property
    def arrays(self):
        """Tuple handed to the kernels."""
        return (self.shift, self.mask, self.lo, self.dkind, self.drow, self.dsign,
                self.dwvec, self.dw, self.grading, self.comp_field, self.D, self.K0)

    def check(self, exps: np.ndarray):
        exps = np.asarray(exps, dtype=np.int64).reshape(-1, self.n)
        if exps.size and (exps.min() < 0 or (exps @ self.grading).max() > self.D):
            raise ExponentOverflow(f"monomial exceeds the weighted degree bound {self.D}")

    def encode(self, exps, comps=None) -> np.ndarray:
        exps = np.asarray(exps, dtype=np.int64).reshape(-1, self.n)
        self.check(exps)
        m = exps.shape[0]
        full = np.zeros((m, self.n + 1), dtype=np.int64)
        full[:, : self.n] = exps
        if comps is not None:
            comps = np.asarray(comps, dtype=np.int64)
            if comps.size and (comps.min() < 0 or comps.max() >= self.rank):
                raise ValueError("component index out of range")
            full[:, self.n] = comps
        vals = full @ self.W.T - self.lo
        return (vals << self.shift).sum(axis=1)

    def decode(self, keys):
        keys = np.asarray(keys, dtype=np.int64)
        raw = ((keys[:, None] >> self.shift) & self.mask) + self.lo
        exps = np.zeros((keys.shape[0], self.n), dtype=np.int64)
        for v in range(self.n):
            if self.dkind[v] == 0:
                exps[:, v] = self.dsign[v] * raw[:, self.drow[v]]
        for v in range(self.n):
            if self.dkind[v] == 1:
                exps[:, v] = (raw[:, self.drow[v]] - exps @ self.dwvec[v]) // self.dw[v]
        if self.comp_field >= 0:
            comps = -raw[:, self.comp_field]
        else:
            comps = np.zeros(keys.shape[0], dtype=np.int64)
        return exps, comps

    def degree(self, exps) -> np.ndarray:
        return np.asarray(exps, dtype=np.int64).reshape(-1, self.n) @ self.grading
