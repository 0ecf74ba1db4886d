"""Multivariate polynomials over a prime field.

Polynomials are immutable.  The term tuple is kept strictly decreasing in the
ring's monomial order with no zero coefficients, so equal polynomials have
identical term tuples.  Heavy products are delegated to the packed kernels.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .encoding import Encoding
from .errors import ExponentOverflow, NotHomogeneous, RingMismatch
from .orders import MonomialOrder, degrevlex

DEFAULT_CHARACTERISTIC = 31991
EXPONENT_CAP = 1 << 16

# products with more term pairs than this go through the packed kernels
_PACKED_MUL_THRESHOLD = 4000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        if not (2 <= self.p < 2**31):
            raise ValueError(f"characteristic must lie in [2, 2^31), got {self.p}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)


Monomial = tuple  # tuple[int, ...]


def _check_monomial(exps, n):
    if len(exps) != n:
        raise ValueError(f"monomial {exps} has wrong length, expected {n}")
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e >= EXPONENT_CAP:
            raise ExponentOverflow(f"exponent {e} exceeds the cap {EXPONENT_CAP - 1}")


class PolyRing:
    """``F_p[vars]`` with a global monomial order (degrevlex by default)."""

    def __init__(self, var_names: Sequence[str], order: MonomialOrder | None = None,
                 p: int | PrimeField = DEFAULT_CHARACTERISTIC):
        names = tuple(var_names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")
        self.var_names = names
        self.nvars = len(names)
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.p = self.field.p
        self.order = order if order is not None else degrevlex(len(names))
        if self.order.nvars != self.nvars:
            raise ValueError(
                f"order is for {self.order.nvars} variables, ring has {self.nvars}"
            )
        self._index = {v: i for i, v in enumerate(names)}
        self._encodings = {}

    def __repr__(self):
        return f"PolyRing(p={self.p}, vars={self.var_names}, order={self.order!r})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.var_names == other.var_names
                and self.order == other.order and self.p == other.p)

    def __hash__(self):
        return hash((self.var_names, self.order, self.p))

    def index(self, var: str | int) -> int:
        if isinstance(var, int):
            if not 0 <= var < self.nvars:
                raise ValueError(f"variable index {var} out of range")
            return var
        try:
            return self._index[var]
        except KeyError:
            raise ValueError(f"unknown variable {var!r}") from None

    def encoding(self, rank: int = 1, scheme: str = "TOP") -> Encoding:
        key = (rank, scheme)
        if key not in self._encodings:
            self._encodings[key] = Encoding(self.order, rank, scheme)
        return self._encodings[key]

    def sort_key(self, exps):
        return self.order.sort_key(exps)

    # constructors
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, ((c, (0,) * self.nvars),) if c else ())

    def var(self, name: str | int) -> "Polynomial":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, ((1, tuple(e)),))

    @property
    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        return self.from_dict({tuple(exps): coeff})

    def from_dict(self, d: Mapping[tuple, int]) -> "Polynomial":
        p = self.p
        items = []
        for e, c in d.items():
            c %= p
            if c:
                e = tuple(int(x) for x in e)
                _check_monomial(e, self.nvars)
                items.append((c, e))
        key = self.order.sort_key
        items.sort(key=lambda t: key(t[1]), reverse=True)
        return Polynomial(self, tuple(items))

    def from_terms(self, terms: Iterable[tuple[int, tuple]]) -> "Polynomial":
        d: dict = {}
        for c, e in terms:
            e = tuple(e)
            d[e] = d.get(e, 0) + c
        return self.from_dict(d)

    def parse(self, text: str) -> "Polynomial":
        from .parse import parse_poly
        return parse_poly(text, self)

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring != self:
                raise RingMismatch("polynomial belongs to another ring")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.constant(int(x))

    # packed conversion
    def pack(self, f: "Polynomial", enc: Encoding | None = None):
        enc = enc or self.encoding()
        if f.is_zero():
            return np.empty(0, np.int64), np.empty(0, np.int64)
        exps = np.array([e for _, e in f.terms], dtype=np.int64)
        coeffs = np.array([c for c, _ in f.terms], dtype=np.int64)
        return enc.encode(exps), coeffs

    def unpack(self, keys, coeffs, enc: Encoding | None = None) -> "Polynomial":
        enc = enc or self.encoding()
        if len(keys) == 0:
            return self.zero
        exps, _ = enc.decode(keys)
        return Polynomial(self, tuple(
            (int(c), tuple(int(x) for x in e)) for c, e in zip(coeffs.tolist(), exps.tolist())
        ))


class Polynomial:
    __slots__ = ("ring", "terms", "__dict__")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms

    # basic structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> tuple:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][1]

    @property
    def lc(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][0]

    @cached_property
    def as_dict(self) -> dict:
        return {e: c for c, e in self.terms}

    def coefficient(self, exps) -> int:
        return self.as_dict.get(tuple(exps), 0)

    def monomials(self):
        return [e for _, e in self.terms]

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][1]))

    def constant_term(self) -> int:
        return self.as_dict.get((0,) * self.ring.nvars, 0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, (int, np.integer)):
            return self.ring.constant(int(other))
        raise TypeError(f"cannot combine polynomial with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.as_dict)
        for c, e in other.terms:
            d[e] = d.get(e, 0) + c
        return self.ring.from_dict(d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, tuple(((p - c) % p, e) for c, e in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scalar_mul(self, c: int) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero
        return Polynomial(self.ring, tuple(((a * c) % p, e) for a, e in self.terms))

    def mul_monomial(self, exps, c: int = 1) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0 or not self.terms:
            return self.ring.zero
        out = []
        for a, e in self.terms:
            m = tuple(x + y for x, y in zip(e, exps))
            _check_monomial(m, self.ring.nvars)
            out.append(((a * c) % p, m))
        return Polynomial(self.ring, tuple(out))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scalar_mul(int(other))
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return self.ring.zero
        if len(self.terms) * len(other.terms) > _PACKED_MUL_THRESHOLD:
            try:
                return _packed_mul(self, other)
            except ExponentOverflow:
                pass
        p = self.ring.p
        d: dict = {}
        for a, e in self.terms:
            for b, f in other.terms:
                m = tuple(x + y for x, y in zip(e, f))
                d[m] = d.get(m, 0) + a * b
        return self.ring.from_dict({m: c % p for m, c in d.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scalar_mul(self.ring.field.inv(self.lc))

    # calculus and evaluation
    def diff(self, var) -> "Polynomial":
        i = self.ring.index(var)
        p = self.ring.p
        out = []
        for c, e in self.terms:
            if e[i]:
                c2 = (c * e[i]) % p
                if c2:
                    m = list(e)
                    m[i] -= 1
                    out.append((c2, tuple(m)))
        # differentiation can reorder terms under a weighted order
        return self.ring.from_terms(out)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.ring.nvars:
            raise ValueError(
                f"point has {len(point)} coordinates, ring has {self.ring.nvars} variables"
            )
        p = self.ring.p
        total = 0
        for c, e in self.terms:
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * pow(x, k, p) % p
            total += v
        return total % p


def _packed_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    ring = a.ring
    enc = ring.encoding()
    da = max(enc.degree([e for _, e in a.terms]))
    db = max(enc.degree([e for _, e in b.terms]))
    if da + db > enc.D:
        raise ExponentOverflow("product exceeds packed degree bound")
    ak, ac = ring.pack(a, enc)
    bk, bc = ring.pack(b, enc)
    rk, rc = kernels.mul(ak, ac, bk, bc, enc.K0, ring.p)
    return ring.unpack(rk, rc, enc)


def weighted_degree(f: Polynomial, weights: Sequence[int]) -> int | None:
    """Common weighted degree of all terms; ``None`` for the zero polynomial.

    Raises :class:`NotHomogeneous` naming two terms of different degree.
    """
    if len(weights) != f.ring.nvars:
        raise ValueError("weight vector length differs from the number of variables")
    if f.is_zero():
        return None
    first = None
    for c, e in f.terms:
        d = sum(w * x for w, x in zip(weights, e))
        if first is None:
            first = (d, c, e)
        elif d != first[0]:
            from .parse import format_term
            raise NotHomogeneous(
                format_term(f.ring, first[1], first[2]), format_term(f.ring, c, e),
                (first[0], d),
            )
    return first[0]


def partial_derivative(f: Polynomial, var) -> Polynomial:
    return f.diff(var)


def evaluate(f: Polynomial, point: Sequence[int]) -> int:
    return f.evaluate(point)


class RingMap:
    """Algebra map ``source -> dest`` sending the i-th source variable to ``images[i]``."""

    def __init__(self, source: PolyRing, dest: PolyRing, images: Sequence[Polynomial]):
        images = tuple(images)
        if len(images) != source.nvars:
            raise ValueError(
                f"{len(images)} images given for {source.nvars} source variables"
            )
        for g in images:
            if not isinstance(g, Polynomial) or g.ring != dest:
                raise RingMismatch("ring map images must lie in the destination ring")
        if source.p != dest.p:
            raise RingMismatch("source and destination have different characteristic")
        self.source = source
        self.dest = dest
        self.images = images

    def __call__(self, g: Polynomial) -> Polynomial:
        return apply_ring_map(self, g)


def apply_ring_map(phi: RingMap, g: Polynomial) -> Polynomial:
    if not isinstance(g, Polynomial) or g.ring != phi.source:
        raise RingMismatch("argument does not lie in the source ring of the map")
    if g.is_zero():
        return phi.dest.zero
    dest = phi.dest
    enc = dest.encoding()
    p = dest.p
    imgs = [dest.pack(h, enc) for h in phi.images]
    img_deg = [
        int(max(enc.degree([e for _, e in h.terms]))) if h.terms else 0 for h in phi.images
    ]
    one = (np.array([enc.K0], np.int64), np.array([1], np.int64))
    powers: list[dict] = [{0: one} for _ in imgs]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            if img_deg[i] * k > enc.D:
                raise ExponentOverflow("ring map image exceeds the packed degree bound")
            h = power(i, k // 2)
            sq = kernels.mul(h[0], h[1], h[0], h[1], enc.K0, p)
            cache[k] = kernels.mul(sq[0], sq[1], *imgs[i], enc.K0, p) if k % 2 else sq
        return cache[k]

    # group monomials by all but the last variable to share partial products
    parts_k, parts_c = [], []
    prefix_cache: dict = {}
    for c, e in g.terms:
        pre = e[:-1]
        if pre not in prefix_cache:
            acc = one
            for i, k in enumerate(pre):
                if k:
                    acc = kernels.mul(acc[0], acc[1], *power(i, k), enc.K0, p)
            prefix_cache[pre] = acc
        acc = prefix_cache[pre]
        if e[-1]:
            acc = kernels.mul(acc[0], acc[1], *power(len(e) - 1, e[-1]), enc.K0, p)
        parts_k.append(acc[0])
        parts_c.append(acc[1] * c % p)
    keys, coeffs = kernels.sort_combine(np.concatenate(parts_k), np.concatenate(parts_c), p)
    return dest.unpack(keys, coeffs, enc)


class PolyMatrix:
    """Rectangular matrix of polynomials sharing one ring."""

    def __init__(self, rows: Sequence[Sequence[Polynomial]], ring: PolyRing | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows have different lengths")
        if ring is None:
            if not rows or not rows[0]:
                raise ValueError("ring required for an empty matrix")
            ring = rows[0][0].ring
        for r in rows:
            for x in r:
                if x.ring != ring:
                    raise RingMismatch("matrix entries must share one ring")
        self.ring = ring
        self.rows = rows

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def evaluate(self, point) -> list[list[int]]:
        return [[x.evaluate(point) for x in r] for r in self.rows]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(list(zip(*self.rows)), self.ring)

    def __str__(self):
        return "\n".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    m = [[x % p for x in row] for row in matrix]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
