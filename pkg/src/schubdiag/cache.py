"""On-disk cache of Weyl group enumerations.

A cache file is JSON holding the reduced words, matrices and the length
distribution.  Files are checked against the known group order, the length
statistics and the realization before use; anything that fails is recomputed
and overwritten with a warning.
"""

from __future__ import annotations

import json
import os
import warnings
from collections import Counter
from pathlib import Path

from . import __version__
from .rootsys import (
    DEFAULT_WEYL_CAP,
    RootSystem,
    WeylElement,
    WeylGroup,
    _identity,
    _mat_mul,
    enumerate_weyl,
    expected_order,
    register_group,
)

ENV_VAR = "SCHUBDIAG_CACHE"
FORMAT = 1


class CorruptCache(ValueError):
    pass


class CacheWarning(UserWarning):
    pass


def cache_dir(explicit: str | os.PathLike | None = None) -> Path | None:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else None


def cache_path(directory: str | os.PathLike, rs: RootSystem) -> Path:
    return Path(directory) / f"weyl_{rs.name}.json"


def _length_counts(elements) -> list[int]:
    c = Counter(w.length for w in elements)
    return [c[k] for k in range(max(c) + 1)]


def dump(rs: RootSystem, elements: list[WeylElement]) -> dict:
    return {
        "format": FORMAT,
        "version": __version__,
        "system": rs.name,
        "simple_roots": [list(a) for a in rs.simple_roots],
        "order": len(elements),
        "length_counts": _length_counts(elements),
        "elements": [{"word": list(w.word), "matrix": [list(r) for r in w.matrix]} for w in elements],
    }


def parse(rs: RootSystem, data: dict) -> list[WeylElement]:
    """Rebuild and validate an enumeration; raises CorruptCache on any inconsistency."""
    try:
        if data["format"] != FORMAT or data["system"] != rs.name:
            raise CorruptCache("format or system mismatch")
        if [tuple(a) for a in data["simple_roots"]] != list(rs.simple_roots):
            raise CorruptCache("realization mismatch")
        raw = data["elements"]
        order = expected_order(rs)
        if data["order"] != order or len(raw) != order:
            raise CorruptCache(f"expected {order} elements")
        refl = rs.simple_reflections
        elements = []
        for item in raw:
            word = tuple(int(i) for i in item["word"])
            matrix = tuple(tuple(int(c) for c in row) for row in item["matrix"])
            m = _identity(rs.coord_dim)
            for i in word:
                if not 1 <= i <= rs.rank:
                    raise CorruptCache(f"bad generator {i}")
                m = _mat_mul(m, refl[i - 1])
            if m != matrix:
                raise CorruptCache(f"word {word} does not reproduce its matrix")
            elements.append(WeylElement(matrix, word, len(word)))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CorruptCache):
            raise
        raise CorruptCache(f"malformed cache: {exc}") from exc
    if len({w.matrix for w in elements}) != len(elements):
        raise CorruptCache("duplicate elements")
    if elements[0].length != 0 or elements[-1].length != rs.num_positive:
        raise CorruptCache("elements not ordered by length")
    if _length_counts(elements) != data["length_counts"]:
        raise CorruptCache("length statistics mismatch")
    if data["length_counts"] != poincare_coefficients(rs):
        raise CorruptCache("length statistics differ from the Poincare polynomial")
    return elements


def invariant_degrees(rs: RootSystem) -> list[int]:
    n = rs.rank
    if rs.family == "A":
        return list(range(2, n + 2))
    if rs.family in ("B", "C"):
        return [2 * i for i in range(1, n + 1)]
    if rs.family == "D":
        return [2 * i for i in range(1, n)] + [n]
    return [2, 6]


def poincare_coefficients(rs: RootSystem) -> list[int]:
    """Coefficients of prod_i (1 + q + ... + q^(d_i - 1)): the number of elements of each length."""
    poly = [1]
    for d in invariant_degrees(rs):
        out = [0] * (len(poly) + d - 1)
        for k, c in enumerate(poly):
            for j in range(d):
                out[k + j] += c
        poly = out
    return poly


def save(directory: str | os.PathLike, rs: RootSystem, elements: list[WeylElement]) -> Path:
    path = cache_path(directory, rs)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(dump(rs, elements), sort_keys=True, separators=(",", ":")))
    tmp.replace(path)
    return path


def load(directory: str | os.PathLike, rs: RootSystem) -> list[WeylElement] | None:
    """Validated elements, or None when no file exists.  Raises CorruptCache."""
    path = cache_path(directory, rs)
    if not path.exists():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CorruptCache(f"unreadable cache {path}: {exc}") from exc
    return parse(rs, data)


def load_or_compute(rs: RootSystem, directory: str | os.PathLike | None = None, cap: int = DEFAULT_WEYL_CAP) -> WeylGroup:
    """Weyl group via the cache when one is configured; registers the result."""
    directory = cache_dir(directory)
    elements = None
    if directory is not None:
        try:
            elements = load(directory, rs)
        except CorruptCache as exc:
            warnings.warn(f"discarding cache for {rs.name}: {exc}", CacheWarning, stacklevel=2)
    if elements is None:
        elements = enumerate_weyl(rs, cap)
        if directory is not None:
            save(directory, rs, elements)
    group = WeylGroup(rs, elements)
    register_group(group)
    return group
