"""Exhaustive generation of small residuated lattices, two ways.

The fast route enumerates bounded lattices up to isomorphism (canonical-form
pruning over the interior elements) and fills multiplication tables by
backtracking with monotonicity pruning, deduplicating by lattice
automorphisms. The naive route regenerates everything without pruning and
deduplicates by explicit isomorphism search; tests compare the two.

Element 0 is always the bottom and element n-1 the top.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from itertools import permutations, product as iproduct

from .core import (
    ResiduatedLattice,
    _lattice_tables,
    bits,
    find_isomorphism,
    is_prelinear,
    mask_of,
    size_bound,
    validate,
)
from .errors import CarrierTooLarge, EquivalenceViolation
from .gelfand import classification, gelfand_verdict


def element_names(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("1",)
    middle = tuple(string.ascii_lowercase[i] for i in range(n - 2))
    return ("0",) + middle + ("1",)


def _middle_orders(m: int):
    """All strict partial orders on m points, as boolean matrices."""
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    for states in iproduct((0, 1, 2), repeat=len(pairs)):
        rel = [[i == j for j in range(m)] for i in range(m)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                rel[i][j] = True
            elif s == 2:
                rel[j][i] = True
        if all(
            rel[i][k]
            for i in range(m)
            for j in range(m)
            for k in range(m)
            if rel[i][j] and rel[j][k]
        ):
            yield rel


def _bounded_up(n: int, rel) -> tuple[int, ...]:
    """Attach bottom 0 and top n-1 to an interior order."""
    up = [0] * n
    up[0] = (1 << n) - 1
    up[n - 1] = 1 << (n - 1)
    for i in range(n - 2):
        m = (1 << (n - 1)) | (1 << (i + 1))
        for j in range(n - 2):
            if rel[i][j]:
                m |= 1 << (j + 1)
        up[i + 1] = m
    return tuple(up)


def _is_lattice(n: int, up) -> bool:
    try:
        _lattice_tables(n, list(up))
    except Exception:
        return False
    return True


def _apply_perm(n: int, up, p) -> tuple[int, ...]:
    new_up = [0] * n
    for i in range(n):
        m = 0
        for j in bits(up[i]):
            m |= 1 << p[j]
        new_up[p[i]] = m
    return tuple(new_up)


def _middle_perms(n: int):
    for perm in permutations(range(1, n - 1)):
        p = [0] * n
        p[n - 1] = n - 1
        for k, old in enumerate(range(1, n - 1)):
            p[old] = perm[k]
        yield tuple(p)


def canonical_up(n: int, up) -> tuple[int, ...]:
    return min(_apply_perm(n, up, p) for p in _middle_perms(n))


def enumerate_lattices(n: int, chains_only: bool = False):
    """Canonical bounded lattices on n elements, bottom first, top last."""
    if n < 1:
        raise ValueError("carrier size must be positive")
    if n > size_bound():
        raise CarrierTooLarge(f"carrier size {n} exceeds bound {size_bound()}")
    if n == 1:
        yield (1,)
        return
    if chains_only:
        yield tuple(mask_of(range(i, n)) for i in range(n))
        return
    for rel in _middle_orders(n - 2):
        up = _bounded_up(n, rel)
        if not _is_lattice(n, up):
            continue
        if up == canonical_up(n, up):
            yield up


def lattice_automorphisms(n: int, up) -> tuple[tuple[int, ...], ...]:
    up = tuple(up)
    return tuple(p for p in _middle_perms(n) if _apply_perm(n, up, p) == up)


def _structures_on(n: int, up):
    """Multiplication tables completing the lattice, by backtracking."""
    join, meet = _lattice_tables(n, list(up))
    top = n - 1

    def leq(x, y):
        return (up[x] >> y) & 1

    down = [mask_of(y for y in range(n) if leq(y, x)) for x in range(n)]
    mul = [[None] * n for _ in range(n)]
    for x in range(n):
        mul[x][top] = x
        mul[top][x] = x
        if n > 1:
            mul[x][0] = 0
            mul[0][x] = 0
    free = [(i, j) for i in range(1, n - 1) for j in range(i, n - 1)]

    def row_ok(i, j, v):
        for y in range(n):
            w = mul[i][y]
            if w is None:
                continue
            if leq(y, j) and not leq(w, v):
                return False
            if leq(j, y) and not leq(v, w):
                return False
        return True

    def complete():
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                        return False
                    if mul[x][join[y][z]] != join[mul[x][y]][mul[x][z]]:
                        return False
                    if not leq(mul[join[x][y]][join[x][z]], join[x][mul[y][z]]):
                        return False
        for x in range(n):
            for y in range(n):
                zs = [z for z in range(n) if leq(mul[x][z], y)]
                r = zs[0]
                for z in zs[1:]:
                    r = join[r][z]
                if not leq(mul[x][r], y):
                    return False
        return True

    def rec(k):
        if k == len(free):
            if complete():
                yield tuple(tuple(row) for row in mul)
            return
        i, j = free[k]
        for v in bits(down[meet[i][j]]):
            if not row_ok(i, j, v) or (i != j and not row_ok(j, i, v)):
                continue
            mul[i][j] = v
            mul[j][i] = v
            yield from rec(k + 1)
            mul[i][j] = None
            if i != j:
                mul[j][i] = None

    yield from rec(0)


def _permuted_mul(n: int, mul, p):
    new = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            new[p[x]][p[y]] = p[mul[x][y]]
    return tuple(tuple(r) for r in new)


def residuated_structures(n: int, chains_only: bool = False):
    """All residuated lattices on n elements, one per isomorphism class."""
    names = element_names(n)
    idx = 0
    for up in enumerate_lattices(n, chains_only):
        autos = lattice_automorphisms(n, up)
        rows = [[bool((up[i] >> j) & 1) for j in range(n)] for i in range(n)]
        for mul in _structures_on(n, up):
            if len(autos) > 1 and min(
                _permuted_mul(n, mul, p) for p in autos
            ) != mul:
                continue
            idx += 1
            yield validate(names, mul, leq=rows, label=f"n{n}.{idx}")


def _order_isomorphic(n: int, up1, up2) -> bool:
    return any(_apply_perm(n, up1, p) == tuple(up2) for p in _middle_perms(n))


def naive_lattices(n: int) -> tuple[tuple[int, ...], ...]:
    """Unpruned lattice enumeration deduplicated by isomorphism search."""
    if n == 1:
        return ((1,),)
    reps: list[tuple[int, ...]] = []
    for rel in _middle_orders(n - 2):
        up = _bounded_up(n, rel)
        if not _is_lattice(n, up):
            continue
        if not any(_order_isomorphic(n, up, r) for r in reps):
            reps.append(up)
    return tuple(reps)


def naive_structures(n: int) -> tuple[ResiduatedLattice, ...]:
    """Unpruned table enumeration deduplicated with the isomorphism finder."""
    names = element_names(n)
    reps: list[ResiduatedLattice] = []
    if n == 1:
        return (validate(names, [[0]], leq=[[True]], label="naive1.1"),)
    for rel in _middle_orders(n - 2):
        up = _bounded_up(n, rel)
        if not _is_lattice(n, up):
            continue
        join, meet = _lattice_tables(n, list(up))

        def leq(x, y, up=up):
            return (up[x] >> y) & 1

        down = [mask_of(y for y in range(n) if leq(y, x)) for x in range(n)]
        cells = [(i, j) for i in range(1, n - 1) for j in range(i, n - 1)]
        choices = [tuple(bits(down[meet[i][j]])) for i, j in cells]
        rows = [[bool(leq(i, j)) for j in range(n)] for i in range(n)]
        for picks in iproduct(*choices):
            mul = [[0] * n for _ in range(n)]
            for x in range(n):
                mul[x][n - 1] = x
                mul[n - 1][x] = x
            for (i, j), v in zip(cells, picks):
                mul[i][j] = v
                mul[j][i] = v
            ok = all(
                mul[mul[x][y]][z] == mul[x][mul[y][z]]
                and mul[x][join[y][z]] == join[mul[x][y]][mul[x][z]]
                and leq(mul[join[x][y]][join[x][z]], join[x][mul[y][z]])
                for x in range(n)
                for y in range(n)
                for z in range(n)
            )
            if ok:
                for x in range(n):
                    for y in range(n):
                        zs = [z for z in range(n) if leq(mul[x][z], y)]
                        r = zs[0]
                        for z in zs[1:]:
                            r = join[r][z]
                        if not leq(mul[x][r], y):
                            ok = False
            if not ok:
                continue
            cand = validate(names, mul, leq=rows, label=f"naive{n}.{len(reps) + 1}")
            if not any(find_isomorphism(cand, r) for r in reps):
                reps.append(cand)
    return tuple(reps)


@dataclass
class SweepReport:
    size: int
    lattice_count: int
    structure_count: int
    gelfand_count: int
    soft_count: int
    local_count: int
    semisimple_count: int
    rickart_count: int
    baer_count: int
    prelinear_count: int
    labels: tuple[str, ...]


def classify_all(n: int, deep: bool = False, chains_only: bool = False) -> SweepReport:
    """Run every model of size n through the full criteria machinery.

    Any EquivalenceViolation aborts the sweep, re-raised with the offending
    model serialized so it can be replayed.
    """
    from .fileformat import serialize
    from .report import run_laws

    lattice_count = sum(1 for _ in enumerate_lattices(n, chains_only))
    counts = {
        "gelfand": 0,
        "soft": 0,
        "local": 0,
        "semisimple": 0,
        "rickart": 0,
        "baer": 0,
    }
    prelinear_count = 0
    labels = []
    total = 0
    for a in residuated_structures(n, chains_only):
        total += 1
        labels.append(a.label)
        try:
            verdict = gelfand_verdict(a)
            flags = classification(a, verdict)
            if is_prelinear(a):
                prelinear_count += 1
                if not verdict.verdict:
                    raise EquivalenceViolation(
                        "prelinear model is not Gelfand", detail=a.label
                    )
            if deep:
                run_laws(a)
        except EquivalenceViolation as exc:
            raise EquivalenceViolation(
                f"sweep aborted on {a.label}", detail=serialize(a)
            ) from exc
        for key in counts:
            if flags[key]:
                counts[key] += 1
    return SweepReport(
        size=n,
        lattice_count=lattice_count,
        structure_count=total,
        gelfand_count=counts["gelfand"],
        soft_count=counts["soft"],
        local_count=counts["local"],
        semisimple_count=counts["semisimple"],
        rickart_count=counts["rickart"],
        baer_count=counts["baer"],
        prelinear_count=prelinear_count,
        labels=tuple(labels),
    )
