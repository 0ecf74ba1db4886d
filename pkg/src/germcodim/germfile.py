"""Germ files.

A germ file has a ``[germ]`` section of ``key = value`` lines and a
``[components]`` section with one polynomial per line::

    # f1: weights (1,2,3), degrees (4,5,6,7)
    [germ]
    source_vars = x, y, z
    target_vars = X, Y, Z, W
    weights = 1, 2, 3
    degrees = 4, 5, 6, 7
    characteristic = 31991      # optional, default 31991
    mu_image = 18967            # optional
    family_k = 3                # optional

    [components]
    y^2+x*z
    ...

``#`` starts a comment.  A component line ending in ``\\`` continues on the
next line.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import GermcodimError
from .invariants import MapGerm
from .poly import DEFAULT_CHARACTERISTIC, is_prime

KEYS = ("source_vars", "target_vars", "weights", "degrees", "characteristic",
        "mu_image", "family_k")


class GermFileError(GermcodimError, ValueError):
    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:"
            if line is not None:
                where += f"{line}:"
            where += " "
        super().__init__(where + message)


@dataclass
class GermFile:
    germ: MapGerm
    mu_image: int | None = None
    family_k: int | None = None
    path: str | None = None


def _int_list(value, key, path, line):
    try:
        return [int(x) for x in value.replace(",", " ").split()]
    except ValueError:
        raise GermFileError(f"{key} must be a list of integers", path, line) from None


def parse_germ_text(text: str, path: str | None = None,
                    characteristic: int | None = None) -> GermFile:
    section = None
    values: dict = {}
    comps: list[str] = []
    pending = ""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line and not pending:
            continue
        if line.startswith("[") and not pending:
            if not line.endswith("]"):
                raise GermFileError(f"bad section header {line!r}", path, lineno)
            section = line[1:-1].strip().lower()
            if section not in ("germ", "components"):
                raise GermFileError(f"unknown section [{section}]", path, lineno)
            continue
        if section == "germ":
            if "=" not in line:
                raise GermFileError("expected key = value", path, lineno)
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in KEYS:
                raise GermFileError(f"unknown key {key!r}", path, lineno)
            if key in values:
                raise GermFileError(f"duplicate key {key!r}", path, lineno)
            values[key] = (value, lineno)
        elif section == "components":
            if line.endswith("\\"):
                pending += line[:-1]
                continue
            comps.append((pending + line, lineno))
            pending = ""
        else:
            raise GermFileError("content outside of a section", path, lineno)
    if pending:
        raise GermFileError("dangling line continuation", path)
    for key in ("source_vars", "target_vars", "weights", "degrees"):
        if key not in values:
            raise GermFileError(f"missing key {key!r}", path)
    if not comps:
        raise GermFileError("no [components] given", path)

    def names(key):
        value, ln = values[key]
        out = [s.strip() for s in value.split(",") if s.strip()]
        if not out:
            raise GermFileError(f"{key} is empty", path, ln)
        return out

    src, tgt = names("source_vars"), names("target_vars")
    weights = _int_list(values["weights"][0], "weights", path, values["weights"][1])
    degrees = _int_list(values["degrees"][0], "degrees", path, values["degrees"][1])

    def opt_int(key):
        if key not in values:
            return None
        value, ln = values[key]
        try:
            return int(value)
        except ValueError:
            raise GermFileError(f"{key} must be an integer", path, ln) from None

    p = opt_int("characteristic")
    if characteristic is not None:
        p = characteristic
    if p is None:
        p = DEFAULT_CHARACTERISTIC
    if not (2 <= p < 2**31 and is_prime(p)):
        raise GermFileError(f"characteristic {p} is not a prime below 2^31", path)
    n = len(src)
    if len(weights) != n:
        raise GermFileError(f"{len(weights)} weights for {n} source variables", path)
    if len(tgt) != n + 1:
        raise GermFileError(
            f"{len(tgt)} target variables; expected {n + 1} for {n} source variables", path
        )
    if len(degrees) != n + 1:
        raise GermFileError(f"{len(degrees)} degrees; expected {n + 1}", path)
    if len(comps) != n + 1:
        raise GermFileError(f"{len(comps)} components; expected {n + 1}", path)
    try:
        germ = MapGerm.from_strings(src, tgt, weights, degrees, [c for c, _ in comps], p)
    except GermcodimError as exc:
        raise GermFileError(str(exc), path) from None
    return GermFile(germ, opt_int("mu_image"), opt_int("family_k"), path)


def load_germ(path, characteristic: int | None = None) -> GermFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GermFileError(f"cannot read germ file: {exc.strerror}", str(path)) from None
    return parse_germ_text(text, str(path), characteristic)


def format_germ(gf: GermFile) -> str:
    g = gf.germ
    lines = ["[germ]",
             f"source_vars = {', '.join(g.source_vars)}",
             f"target_vars = {', '.join(g.target_vars)}",
             f"weights = {', '.join(map(str, g.weights))}",
             f"degrees = {', '.join(map(str, g.degrees))}",
             f"characteristic = {g.characteristic}"]
    if gf.mu_image is not None:
        lines.append(f"mu_image = {gf.mu_image}")
    if gf.family_k is not None:
        lines.append(f"family_k = {gf.family_k}")
    lines += ["", "[components]"] + [str(c) for c in g.components]
    return "\n".join(lines) + "\n"
