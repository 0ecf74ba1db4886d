"""Monomial orders.

Every order used here is a matrix order: a monomial ``e`` is mapped to the
integer vector ``W @ e`` and vectors are compared lexicographically.  The rows
are chosen so that ``W`` is square and invertible on exponent vectors, which
makes the order total and lets the array engine pack ``W @ e`` into a single
int64 key (see :mod:`germcodim.encoding`).

Row layouts:

* ``WeightedDegRevLex(w)`` on ``n`` variables: ``w``, ``-e_n``, ..., ``-e_2``.
  Among monomials of equal weighted degree the one with the larger exponent
  on the last variable is smaller (the usual degrevlex convention).
* ``Lex``: ``e_1``, ..., ``e_n``.
* ``Block``: the rows of each sub-order, shifted to its variable range, with
  earlier blocks more significant.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

LT, EQ, GT = -1, 0, 1


class MonomialOrder:
    """Base class; subclasses define :meth:`rows` and :meth:`grading`."""

    nvars: int

    def rows(self) -> list[tuple[int, ...]]:
        raise NotImplementedError

    def grading(self) -> tuple[int, ...]:
        """Positive weights bounding every exponent (used for key budgets)."""
        raise NotImplementedError

    def decode_plan(self) -> list[tuple]:
        """Per variable: ``("direct", row, sign)`` or ``("derived", row, block_vars, weights)``."""
        raise NotImplementedError

    def sort_key(self, exps: Sequence[int]) -> tuple[int, ...]:
        if len(exps) != self.nvars:
            raise ValueError(
                f"monomial has {len(exps)} exponents, order expects {self.nvars}"
            )
        return tuple(sum(r * e for r, e in zip(row, exps) if r) for row in self._rows)

    def __post_init__(self):
        object.__setattr__(self, "_rows", self.rows())


@dataclass(frozen=True)
class WeightedDegRevLex(MonomialOrder):
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if not w or any(x <= 0 for x in w):
            raise ValueError("weights must be a nonempty list of positive integers")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "nvars", len(w))
        super().__post_init__()

    def rows(self):
        n = len(self.weights)
        out = [self.weights]
        for j in range(n - 1, 0, -1):
            row = [0] * n
            row[j] = -1
            out.append(tuple(row))
        return out

    def grading(self):
        return self.weights

    def decode_plan(self):
        n = len(self.weights)
        plan = [("derived", 0, tuple(range(n)), self.weights)]
        for j in range(1, n):
            plan.append(("direct", n - j, -1))
        return plan

    def __repr__(self):
        return f"wp{self.weights}"


def degrevlex(n: int) -> WeightedDegRevLex:
    return WeightedDegRevLex((1,) * n)


@dataclass(frozen=True)
class Lex(MonomialOrder):
    nvars: int

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("Lex needs at least one variable")
        super().__post_init__()

    def rows(self):
        n = self.nvars
        return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]

    def grading(self):
        return (1,) * self.nvars

    def decode_plan(self):
        return [("direct", i, 1) for i in range(self.nvars)]

    def __repr__(self):
        return f"lp({self.nvars})"


@dataclass(frozen=True)
class Block(MonomialOrder):
    """Product order; ``blocks`` is a sequence of sub-orders on consecutive variables."""

    blocks: tuple[MonomialOrder, ...]

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if not blocks:
            raise ValueError("Block order needs at least one block")
        for b in blocks:
            if not isinstance(b, MonomialOrder):
                raise TypeError(f"not a monomial order: {b!r}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "nvars", sum(b.nvars for b in blocks))
        super().__post_init__()

    def ranges(self) -> list[range]:
        out, start = [], 0
        for b in self.blocks:
            out.append(range(start, start + b.nvars))
            start += b.nvars
        return out

    def rows(self):
        n = self.nvars
        out = []
        for b, rng in zip(self.blocks, self.ranges()):
            for row in b.rows():
                full = [0] * n
                full[rng.start:rng.stop] = row
                out.append(tuple(full))
        return out

    def grading(self):
        return tuple(w for b in self.blocks for w in b.grading())

    def decode_plan(self):
        plan, row0 = [], 0
        for b, rng in zip(self.blocks, self.ranges()):
            for item in b.decode_plan():
                if item[0] == "direct":
                    plan.append(("direct", row0 + item[1], item[2]))
                else:
                    plan.append(
                        ("derived", row0 + item[1],
                         tuple(rng.start + v for v in item[2]), item[3])
                    )
            row0 += len(b.rows())
        return plan

    def __repr__(self):
        return "(" + ",".join(repr(b) for b in self.blocks) + ")"


def cmp_monomials(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way comparison: ``LT`` (-1), ``EQ`` (0) or ``GT`` (1)."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    ka, kb = order.sort_key(a), order.sort_key(b)
    return (ka > kb) - (ka < kb)
