"""Reading, writing and exporting algebras.

The text format is line based:

    name A6
    elements 0 a b c d 1
    covers 0<a 0<c a<b b<d c<d d<1
    mul
    0 0 0 0 0 0
    ...
    res
    1 1 1 1 1 1
    ...

The order section is either a single `covers` line or a `leq` marker followed
by n rows of 0/1. The `res` block is optional; when present it must match the
residuum derived from the order and multiplication. The JSON format carries
the same fields. serialize/parse round-trip byte for byte on canonical output.
"""
from __future__ import annotations

import json

from .core import ResiduatedLattice, bits, validate
from .errors import FormatError, ResiduumMismatch
from . import filters as flt


def _check_res(a: ResiduatedLattice, res_rows) -> None:
    for x in range(a.n):
        for y in range(a.n):
            if res_rows[x][y] != a.res[x][y]:
                raise ResiduumMismatch(
                    f"residuum at ({a.names[x]},{a.names[y]}) is "
                    f"{a.names[res_rows[x][y]]}, derived {a.names[a.res[x][y]]}"
                )


def parse_text(text: str) -> ResiduatedLattice:
    label = ""
    names: list[str] | None = None
    covers: list[tuple[int, int]] | None = None
    leq: list[list[int]] | None = None
    mul: list[list[int]] | None = None
    res: list[list[int]] | None = None
    index: dict[str, int] = {}
    rows_needed = 0
    target: list[list[int]] | None = None
    target_line = 0

    def lookup(tok: str, lineno: int) -> int:
        if tok not in index:
            raise FormatError(f"unknown element {tok!r}", lineno)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if rows_needed:
            toks = line.split()
            if names is None or len(toks) != len(names):
                raise FormatError(
                    f"expected {len(names or ())} entries in table row", lineno
                )
            if target is leq:
                if any(t not in ("0", "1") for t in toks):
                    raise FormatError("leq rows must contain 0 or 1", lineno)
                target.append([int(t) for t in toks])
            else:
                target.append([lookup(t, lineno) for t in toks])
            rows_needed -= 1
            continue
        word, _, rest = line.partition(" ")
        if word == "name":
            label = rest.strip()
        elif word == "elements":
            if names is not None:
                raise FormatError("duplicate elements line", lineno)
            names = rest.split()
            if not names:
                raise FormatError("elements line lists no elements", lineno)
            if len(set(names)) != len(names):
                raise FormatError("duplicate element names", lineno)
            index = {s: i for i, s in enumerate(names)}
        elif word == "covers":
            if names is None:
                raise FormatError("covers before elements", lineno)
            if covers is not None:
                raise FormatError("duplicate covers line", lineno)
            covers = []
            for tok in rest.split():
                lo, sep, hi = tok.partition("<")
                if not sep:
                    raise FormatError(f"malformed cover {tok!r}", lineno)
                covers.append((lookup(lo, lineno), lookup(hi, lineno)))
        elif word in ("leq", "mul", "res"):
            if names is None:
                raise FormatError(f"{word} before elements", lineno)
            if rest.strip():
                raise FormatError(f"{word} takes no arguments", lineno)
            if {"leq": leq, "mul": mul, "res": res}[word] is not None:
                raise FormatError(f"duplicate {word} block", lineno)
            block: list[list[int]] = []
            if word == "leq":
                leq = block
            elif word == "mul":
                mul = block
            else:
                res = block
            target = block
            rows_needed = len(names)
            target_line = lineno
        else:
            raise FormatError(f"unknown directive {word!r}", lineno)
    if rows_needed:
        raise FormatError(
            f"table starting here is missing {rows_needed} rows", target_line
        )
    if names is None:
        raise FormatError("no elements line")
    if (covers is None) == (leq is None):
        raise FormatError("need exactly one of covers or leq")
    if mul is None:
        raise FormatError("no mul table")
    a = validate(names, mul, leq=leq, covers=covers, label=label)
    if res is not None:
        _check_res(a, res)
    return a


def cover_pairs(a: ResiduatedLattice) -> tuple[tuple[int, int], ...]:
    out = []
    for x in range(a.n):
        for y in bits(a.up[x] & ~(1 << x)):
            between = a.up[x] & ~(1 << x) & ~(1 << y)
            if not any((a.up[z] >> y) & 1 for z in bits(between)):
                out.append((x, y))
    return tuple(sorted(out))


def serialize(a: ResiduatedLattice) -> str:
    lines = [f"name {a.label}", "elements " + " ".join(a.names)]
    lines.append(
        "covers "
        + " ".join(f"{a.names[x]}<{a.names[y]}" for x, y in cover_pairs(a))
    )
    lines.append("mul")
    for row in a.mul:
        lines.append(" ".join(a.names[v] for v in row))
    lines.append("res")
    for row in a.res:
        lines.append(" ".join(a.names[v] for v in row))
    return "\n".join(lines) + "\n"


def parse_json_text(text: str) -> ResiduatedLattice:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc.msg}", exc.lineno) from exc
    if not isinstance(data, dict):
        raise FormatError("top level must be an object")
    try:
        names = [str(s) for s in data["elements"]]
    except KeyError:
        raise FormatError("missing elements") from None
    index = {s: i for i, s in enumerate(names)}

    def table(key):
        rows = data[key]
        return [[index[str(v)] for v in row] for row in rows]

    try:
        if "covers" in data:
            covers = [(index[str(lo)], index[str(hi)]) for lo, hi in data["covers"]]
            leq = None
        elif "leq" in data:
            covers = None
            leq = [[int(v) for v in row] for row in data["leq"]]
        else:
            raise FormatError("need covers or leq")
        mul = table("mul")
    except KeyError as exc:
        raise FormatError(f"unknown element or missing field: {exc}") from None
    except (TypeError, ValueError) as exc:
        raise FormatError(f"malformed table: {exc}") from None
    a = validate(
        names, mul, leq=leq, covers=covers, label=str(data.get("name", ""))
    )
    if "res" in data:
        try:
            _check_res(a, table("res"))
        except KeyError as exc:
            raise FormatError(f"unknown element in res: {exc}") from None
    return a


def to_json(a: ResiduatedLattice) -> str:
    data = {
        "name": a.label,
        "elements": list(a.names),
        "covers": [[a.names[x], a.names[y]] for x, y in cover_pairs(a)],
        "mul": [[a.names[v] for v in row] for row in a.mul],
        "res": [[a.names[v] for v in row] for row in a.res],
    }
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def parse(text: str) -> ResiduatedLattice:
    """Dispatch on the leading character: '{' means JSON."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_json_text(text)
    return parse_text(text)


def load(path: str) -> ResiduatedLattice:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())


def _dot_name(label: str) -> str:
    return "".join(c if c.isalnum() else "_" for c in label) or "algebra"


def export_dot(a: ResiduatedLattice, kind: str = "hasse") -> str:
    """DOT text: the Hasse diagram, or the specialization order on primes."""
    lines = [f"digraph {_dot_name(a.label)} {{", "  rankdir=BT;"]
    if kind == "hasse":
        for name in a.names:
            lines.append(f'  "{name}";')
        for x, y in cover_pairs(a):
            lines.append(f'  "{a.names[x]}" -> "{a.names[y]}";')
    elif kind == "spec":
        primes = flt.prime_filters(a)
        for p in primes:
            lines.append(f'  "{a.set_repr(p)}";')
        for i, p in enumerate(primes):
            for j, q in enumerate(primes):
                if i == j or p & q != p:
                    continue
                between = [
                    r
                    for k, r in enumerate(primes)
                    if k not in (i, j) and p & r == p and r & q == r
                ]
                if not between:
                    lines.append(f'  "{a.set_repr(p)}" -> "{a.set_repr(q)}";')
    else:
        raise ValueError(f"unknown export kind {kind!r}")
    lines.append("}")
    return "\n".join(lines) + "\n"
