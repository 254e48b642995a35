"""Built-in algebras.

A6 and A8 are the two running examples: A6 has two maximal filters that every
Gelfand criterion rejects, A8 is local and passes all of them. The chains carry
the Goedel structure (mul = min), the cubes are Boolean, MV3 is the
three-element MV-chain. Residuum tables are stored explicitly so that
re-derivation from mul can be checked bit-exactly against them.
"""
from __future__ import annotations

from .core import ResiduatedLattice, validate

_A6_NAMES = ("0", "a", "b", "c", "d", "1")
_A6_COVERS = (("0", "a"), ("a", "b"), ("0", "c"), ("c", "d"), ("b", "d"), ("d", "1"))
_A6_MUL = {
    ("0", "0"): "0", ("0", "a"): "0", ("0", "b"): "0",
    ("0", "c"): "0", ("0", "d"): "0", ("0", "1"): "0",
    ("a", "a"): "a", ("a", "b"): "a", ("a", "c"): "0",
    ("a", "d"): "a", ("a", "1"): "a",
    ("b", "b"): "a", ("b", "c"): "0", ("b", "d"): "a", ("b", "1"): "b",
    ("c", "c"): "c", ("c", "d"): "c", ("c", "1"): "c",
    ("d", "d"): "d", ("d", "1"): "d",
    ("1", "1"): "1",
}
_A6_RES = (
    ("1", "1", "1", "1", "1", "1"),
    ("c", "1", "1", "c", "1", "1"),
    ("c", "d", "1", "c", "1", "1"),
    ("b", "b", "b", "1", "1", "1"),
    ("0", "b", "b", "c", "1", "1"),
    ("0", "a", "b", "c", "d", "1"),
)

_A8_NAMES = ("0", "a", "b", "c", "d", "e", "f", "1")
_A8_COVERS = (
    ("0", "a"), ("0", "b"), ("b", "d"), ("d", "f"), ("f", "1"),
    ("a", "d"), ("a", "c"), ("c", "e"), ("d", "e"), ("e", "1"),
)
_A8_MUL = {
    ("0", "0"): "0", ("0", "a"): "0", ("0", "b"): "0", ("0", "c"): "0",
    ("0", "d"): "0", ("0", "e"): "0", ("0", "f"): "0", ("0", "1"): "0",
    ("a", "a"): "a", ("a", "b"): "0", ("a", "c"): "a", ("a", "d"): "a",
    ("a", "e"): "a", ("a", "f"): "a", ("a", "1"): "a",
    ("b", "b"): "0", ("b", "c"): "0", ("b", "d"): "0", ("b", "e"): "0",
    ("b", "f"): "b", ("b", "1"): "b",
    ("c", "c"): "c", ("c", "d"): "a", ("c", "e"): "c", ("c", "f"): "a",
    ("c", "1"): "c",
    ("d", "d"): "a", ("d", "e"): "a", ("d", "f"): "d", ("d", "1"): "d",
    ("e", "e"): "c", ("e", "f"): "d", ("e", "1"): "e",
    ("f", "f"): "f", ("f", "1"): "f",
    ("1", "1"): "1",
}
_A8_RES = (
    ("1", "1", "1", "1", "1", "1", "1", "1"),
    ("b", "1", "b", "1", "1", "1", "1", "1"),
    ("e", "e", "1", "e", "1", "1", "1", "1"),
    ("b", "f", "b", "1", "f", "1", "f", "1"),
    ("b", "e", "b", "e", "1", "1", "1", "1"),
    ("b", "d", "b", "e", "f", "1", "f", "1"),
    ("0", "c", "b", "c", "e", "e", "1", "1"),
    ("0", "a", "b", "c", "d", "e", "f", "1"),
)


def _sym_table(names, pairs):
    idx = {s: i for i, s in enumerate(names)}
    n = len(names)
    t = [[-1] * n for _ in range(n)]
    for (x, y), v in pairs.items():
        t[idx[x]][idx[y]] = idx[v]
        t[idx[y]][idx[x]] = idx[v]
    assert all(v >= 0 for row in t for v in row)
    return t


def _named_table(names, rows):
    idx = {s: i for i, s in enumerate(names)}
    return [[idx[v] for v in row] for row in rows]


def _cover_idx(names, covers):
    idx = {s: i for i, s in enumerate(names)}
    return [(idx[a], idx[b]) for a, b in covers]


def _a6() -> ResiduatedLattice:
    return validate(
        _A6_NAMES,
        _sym_table(_A6_NAMES, _A6_MUL),
        covers=_cover_idx(_A6_NAMES, _A6_COVERS),
        res=_named_table(_A6_NAMES, _A6_RES),
        label="A6",
    )


def _a8() -> ResiduatedLattice:
    return validate(
        _A8_NAMES,
        _sym_table(_A8_NAMES, _A8_MUL),
        covers=_cover_idx(_A8_NAMES, _A8_COVERS),
        res=_named_table(_A8_NAMES, _A8_RES),
        label="A8",
    )


def _chain(k: int) -> ResiduatedLattice:
    """Goedel chain of k elements: mul = min, res[x][y] = 1 if x<=y else y."""
    names = ("0",) + tuple(chr(ord("a") + i) for i in range(k - 2)) + ("1",)
    covers = [(i, i + 1) for i in range(k - 1)]
    mul = [[min(i, j) for j in range(k)] for i in range(k)]
    res = [[k - 1 if i <= j else j for j in range(k)] for i in range(k)]
    return validate(names[:k], mul, covers=covers, res=res, label=f"chain{k}")


def _cube(k: int) -> ResiduatedLattice:
    """Boolean algebra 2^k; element names are bitstrings, mul = meet."""
    n = 1 << k
    names = tuple(format(v, f"0{k}b") for v in range(n))
    top = n - 1
    covers = [
        (v, v | (1 << b)) for v in range(n) for b in range(k) if not (v >> b) & 1
    ]
    mul = [[i & j for j in range(n)] for i in range(n)]
    res = [[(i ^ top) | j for j in range(n)] for i in range(n)]
    return validate(names, mul, covers=covers, res=res, label=f"cube{k}")


def _mv3() -> ResiduatedLattice:
    names = ("0", "h", "1")
    covers = [(0, 1), (1, 2)]
    mul = [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
    res = [[2, 2, 2], [1, 2, 2], [0, 1, 2]]
    return validate(names, mul, covers=covers, res=res, label="MV3")


_BUILDERS = {
    "A6": _a6,
    "A8": _a8,
    "chain2": lambda: _chain(2),
    "chain3": lambda: _chain(3),
    "chain4": lambda: _chain(4),
    "chain5": lambda: _chain(5),
    "chain6": lambda: _chain(6),
    "cube1": lambda: _cube(1),
    "cube2": lambda: _cube(2),
    "cube3": lambda: _cube(3),
    "MV3": _mv3,
}
_CANONICAL = {name.lower(): name for name in _BUILDERS}
_built: dict[str, ResiduatedLattice] = {}


def catalog_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def get(name: str) -> ResiduatedLattice | None:
    """Catalog lookup, case insensitive; None when unknown."""
    canonical = _CANONICAL.get(name.lower())
    if canonical is None:
        return None
    if canonical not in _built:
        _built[canonical] = _BUILDERS[canonical]()
    return _built[canonical]
