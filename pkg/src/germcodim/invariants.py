"""Invariants of weighted-homogeneous map-germs (C^n, 0) -> (C^{n+1}, 0).

The A_e-codimension is obtained as the dimension of

    (f*)^{-1}((f* J_h) O_n) / J_h O_{n+1}

where h is the equation of the image.  This requires f to be weighted
homogeneous (checked) and its ramification locus to have codimension 2 (a
gate, overridable with ``force``; forced numbers are only ``dim N_f``).
"""
from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Sequence

from . import deadline
from .errors import GermcodimError, NotHomogeneous, StageTimeout
from .groebner import INFINITE, Ideal, vdim, krull_dim
from .ideal_ops import (ideal_membership, jacobian_matrix, minors, preimage,
                        relative_quotient_dim)
from .orders import WeightedDegRevLex
from .poly import (DEFAULT_CHARACTERISTIC, PolyRing, Polynomial, RingMap, rank_mod_p,
                   weighted_degree)

log = logging.getLogger(__name__)


class GermError(GermcodimError, ValueError):
    pass


class ImageNotHypersurface(GermError):
    pass


class HypothesisUnmet(GermError):
    pass


@dataclass
class MapGerm:
    source_vars: tuple[str, ...]
    target_vars: tuple[str, ...]
    weights: tuple[int, ...]
    degrees: tuple[int, ...]
    components: tuple[Polynomial, ...]
    characteristic: int = DEFAULT_CHARACTERISTIC

    @classmethod
    def from_strings(cls, source_vars, target_vars, weights, degrees, components,
                     characteristic=DEFAULT_CHARACTERISTIC) -> "MapGerm":
        source_vars, target_vars = tuple(source_vars), tuple(target_vars)
        weights, degrees = tuple(int(w) for w in weights), tuple(int(d) for d in degrees)
        n = len(source_vars)
        if n < 1:
            raise GermError("a germ needs at least one source variable")
        if len(weights) != n:
            raise GermError(f"{len(weights)} weights for {n} source variables")
        if len(target_vars) != n + 1:
            raise GermError(
                f"expected {n + 1} target variables for {n} source variables, "
                f"got {len(target_vars)}"
            )
        if len(degrees) != n + 1:
            raise GermError(f"expected {n + 1} degrees, got {len(degrees)}")
        if len(components) != n + 1:
            raise GermError(f"expected {n + 1} components, got {len(components)}")
        if any(w <= 0 for w in weights) or any(d <= 0 for d in degrees):
            raise GermError("weights and degrees must be positive integers")
        if set(source_vars) & set(target_vars):
            raise GermError("source and target variable names must differ")
        ring = PolyRing(source_vars, WeightedDegRevLex(weights), characteristic)
        comps = tuple(ring.parse(c) if isinstance(c, str) else ring(c) for c in components)
        return cls(source_vars, target_vars, weights, degrees, comps, characteristic)

    @property
    def n(self) -> int:
        return len(self.source_vars)

    @property
    def source_ring(self) -> PolyRing:
        return self.components[0].ring

    @property
    def target_ring(self) -> PolyRing:
        ring = self.__dict__.get("_target_ring")
        if ring is None:
            ring = PolyRing(self.target_vars, WeightedDegRevLex(self.degrees), self.characteristic)
            self.__dict__["_target_ring"] = ring
        return ring

    def ring_map(self) -> RingMap:
        """The algebra map f*: O_target -> O_source."""
        return RingMap(self.target_ring, self.source_ring, self.components)

    def permuted(self, perm: Sequence[int]) -> "MapGerm":
        """Same germ with components (and degrees, target names) reordered."""
        return MapGerm(self.source_vars, tuple(self.target_vars[i] for i in perm),
                       self.weights, tuple(self.degrees[i] for i in perm),
                       tuple(self.components[i] for i in perm), self.characteristic)

    def echo(self) -> dict:
        return {
            "source_vars": list(self.source_vars),
            "target_vars": list(self.target_vars),
            "weights": list(self.weights),
            "degrees": list(self.degrees),
            "components": [str(c) for c in self.components],
        }


def validate_germ(g: MapGerm) -> list[str]:
    """Violations of weighted homogeneity and of vanishing at the origin."""
    problems = []
    for i, (f, d) in enumerate(zip(g.components, g.degrees)):
        name = g.target_vars[i]
        if f.is_zero():
            problems.append(f"component {i} ({name}) is zero")
            continue
        if f.constant_term():
            problems.append(
                f"component {i} ({name}) has constant term {f.constant_term()}; "
                "it must vanish at the origin"
            )
        try:
            wd = weighted_degree(f, g.weights)
        except NotHomogeneous as exc:
            problems.append(f"component {i} ({name}): {exc}")
            continue
        if wd != d:
            problems.append(
                f"component {i} ({name}) has weighted degree {wd}, declared {d}"
            )
    return problems


def _require_valid(g: MapGerm):
    problems = validate_germ(g)
    if problems:
        raise GermError("invalid germ: " + "; ".join(problems))


def corank(g: MapGerm) -> int:
    df0 = jacobian_matrix(g.components).evaluate([0] * g.n)
    return g.n - rank_mod_p(df0, g.characteristic)


@dataclass(frozen=True)
class Ramification:
    dim: int
    codim: int

    @property
    def gate(self) -> bool:
        return self.codim == 2


def ramification(g: MapGerm) -> Ramification:
    """Krull dimension of the ideal of maximal minors of the Jacobian."""
    R = minors(jacobian_matrix(g.components), g.n)
    d = krull_dim(R)
    return Ramification(d, g.n - d)


def ramification_dim(g: MapGerm) -> int:
    return ramification(g).dim


def image_ideal(g: MapGerm) -> Polynomial:
    """Equation h of the image: the single generator of ker f*."""
    phi = g.ring_map()
    P = preimage(phi, Ideal(g.source_ring, []))
    gens = [x for x in P.generators if not x.is_zero()]
    if not gens:
        raise ImageNotHypersurface("map not generically finite onto a hypersurface")
    if len(gens) > 1:
        raise ImageNotHypersurface(
            f"image is not a hypersurface (kernel needs {len(gens)} generators)"
        )
    h = gens[0]
    assert phi(h).is_zero(), "f*(h) != 0"
    weighted_degree(h, g.degrees)  # raises if h is not weighted homogeneous
    return h


@dataclass
class Timings:
    ms: dict = field(default_factory=dict)
    last: str | None = None

    @contextmanager
    def stage(self, name: str):
        deadline.set_stage(name, self.last)
        t0 = time.perf_counter()
        yield
        self.ms[name] = int(round((time.perf_counter() - t0) * 1000))
        self.last = name
        log.info("stage %s done in %d ms", name, self.ms[name])


def nf_dimension(g: MapGerm, timings: Timings | None = None):
    """``dim N_f`` by the preimage pipeline, without the ramification gate."""
    _require_valid(g)
    t = timings or Timings()
    phi = g.ring_map()
    T = g.target_ring
    with t.stage("image"):
        h = image_ideal(g)
    with t.stage("jacobian_pullback"):
        Jh = Ideal(T, [h.diff(v) for v in range(T.nvars)])
        fjh = Ideal(g.source_ring, [phi(d) for d in Jh.generators])
    with t.stage("preimage"):
        ffjh = preimage(phi, fjh)
    with t.stage("quotient"):
        # Euler: h lies in J_h for weighted-homogeneous h
        assert ideal_membership(h, Jh), "h not in J_h"
        return relative_quotient_dim(ffjh, Jh)


def ae_codim(g: MapGerm, force: bool = False, timings: Timings | None = None):
    """A_e-codimension (or ``INFINITE``) for germs passing the ramification gate.

    With ``force`` the gate is skipped and the number returned is dim N_f.
    """
    _require_valid(g)
    if not force:
        ram = ramification(g)
        if not ram.gate:
            raise HypothesisUnmet(
                f"ramification locus has codimension {ram.codim}, not 2"
            )
    return nf_dimension(g, timings)


def multiplicity(g: MapGerm):
    """``dim O_n / f*(m)``, or ``INFINITE`` for a non-finite map."""
    return vdim(Ideal(g.source_ring, g.components))


def mu_image_family(k: int) -> int:
    """Image Milnor number for weights (1,2,3) and degrees (4,5,6,2k+1)."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be an integer >= 1")
    num = 4 * k**3 + 3 * k**2 + 5 * k
    q, r = divmod(num, 6)
    if r:
        raise ArithmeticError(f"correction term not integral for k={k}")
    return 487 * k**3 + 576 * k**2 + 197 * k + 18 + q


def family_index(g: MapGerm) -> int | None:
    """k when the germ has weights (1,2,3) and degrees (4,5,6,2k+1)."""
    if g.weights != (1, 2, 3) or len(g.degrees) != 4 or g.degrees[:3] != (4, 5, 6):
        return None
    d = g.degrees[3]
    if d % 2 == 1 and d >= 3:
        return (d - 1) // 2
    return None


def greuel_mu(tau: int, cm_type: int) -> int:
    """Milnor number of a weighted-homogeneous space curve: tau - t + 1."""
    if tau < 0:
        raise ValueError("Tjurina number must be non-negative")
    if cm_type < 1:
        raise ValueError("Cohen-Macaulay type must be at least 1")
    mu = tau - cm_type + 1
    if mu < 0:
        raise ValueError(f"inconsistent input: tau - t + 1 = {mu} < 0")
    return mu


EQUAL = "EQUAL"
MU_GREATER = "MU_GREATER"
CODIM_GREATER = "CODIM_GREATER"
NOT_FINITE = "NOT_FINITE"
NOT_APPLICABLE = "NOT_APPLICABLE"


def verdict(mu_image, ae) -> str:
    if ae == INFINITE:
        return NOT_FINITE
    if mu_image is None or ae is None:
        return NOT_APPLICABLE
    if mu_image == ae:
        return EQUAL
    return MU_GREATER if mu_image > ae else CODIM_GREATER


def _json_count(x):
    if x is None:
        return None
    return "infinite" if x == INFINITE else int(x)


@dataclass
class GermReport:
    germ: MapGerm
    corank: int | None = None
    ramification_dim: int | None = None
    gate: bool | None = None
    multiplicity: object = None
    ae_codim: object = None
    ae_codim_certified: bool = True
    mu_image: int | None = None
    mu_source: str | None = None
    verdict: str = NOT_APPLICABLE
    timings_ms: dict = field(default_factory=dict)
    errors: list = field(default_factory=list)

    def to_json(self, timings: bool = True) -> dict:
        return {
            "germ": self.germ.echo(),
            "corank": self.corank,
            "ramification_dim": self.ramification_dim,
            "gate": self.gate,
            "multiplicity": _json_count(self.multiplicity),
            "ae_codim": _json_count(self.ae_codim),
            "mu_image": self.mu_image,
            "verdict": self.verdict,
            "characteristic": self.germ.characteristic,
            "timings_ms": dict(self.timings_ms) if timings else {},
            "errors": list(self.errors),
        }


def mond_verdict(g: MapGerm, mu_I: int | None = None, *, family_k: int | None = None,
                 force: bool = False, timings: Timings | None = None,
                 skip_ae: bool = False) -> GermReport:
    """Run every invariant and compare mu_I with the A_e-codimension.

    Stage errors are recorded in ``report.errors`` and do not stop later,
    independent stages.  A timeout is re-raised.
    """
    t = timings or Timings()
    rep = GermReport(germ=g, timings_ms=t.ms)
    problems = validate_germ(g)
    if problems:
        rep.errors.extend(problems)
    if mu_I is None:
        k = family_k if family_k is not None else family_index(g)
        if k is not None and family_index(g) == k:
            mu_I = mu_image_family(k)
            rep.mu_source = f"family k={k}"
        elif family_k is not None:
            rep.errors.append(
                f"family_k={family_k} does not match weights {g.weights} / degrees {g.degrees}"
            )
    else:
        rep.mu_source = "given"
    rep.mu_image = mu_I

    def attempt(name, fn):
        try:
            with t.stage(name):
                return fn()
        except StageTimeout:
            raise
        except (GermcodimError, ArithmeticError, AssertionError) as exc:
            rep.errors.append(f"{name}: {exc}")
            return None

    rep.corank = attempt("corank", lambda: corank(g))
    ram = attempt("ramification", lambda: ramification(g))
    if ram is not None:
        rep.ramification_dim, rep.gate = ram.dim, ram.gate
    if not problems:
        rep.multiplicity = attempt("multiplicity", lambda: multiplicity(g))
    if not problems and not skip_ae:
        if rep.gate or force:
            rep.ae_codim_certified = bool(rep.gate)
            try:
                rep.ae_codim = nf_dimension(g, t)
            except StageTimeout:
                raise
            except (GermcodimError, AssertionError) as exc:
                rep.errors.append(f"ae_codim: {exc}")
        elif rep.gate is False:
            rep.errors.append(
                "ae_codim: ramification codimension is not 2; rerun with force for dim N_f"
            )
    rep.verdict = verdict(rep.mu_image, rep.ae_codim)
    return rep
