"""Finite residuated lattices: construction, validation, products, quotients.

Carriers are index sets 0..n-1; every subset is an int bitmask. An algebra is
immutable once validated, and all derived analysis (filters, spectra, ...) is
cached on the instance by the other modules.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product as iproduct

from .errors import (
    AdjunctionFails,
    CarrierTooLarge,
    EquivalenceViolation,
    NoResiduum,
    NotAFilter,
    NotALattice,
    NotCommutativeMonoid,
    NotResiduated,
    UsageError,
)

DEFAULT_MAX_SIZE = 64


def size_bound() -> int:
    """Carrier bound; RESLAT_MAX_SIZE overrides the default of 64."""
    raw = os.environ.get("RESLAT_MAX_SIZE")
    if raw is None:
        return DEFAULT_MAX_SIZE
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"RESLAT_MAX_SIZE must be an integer, got {raw!r}") from None


def bits(mask: int):
    """Indices of the set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    out = 0
    for i in indices:
        out |= 1 << i
    return out


@dataclass(frozen=True)
class ResiduatedLattice:
    """A finite residuated lattice with all operation tables materialized.

    `up[x]` is the bitmask of {y : x <= y}. The residuum table always satisfies
    the adjunction against `mul`; `validate` is the only intended constructor.
    """

    names: tuple[str, ...]
    up: tuple[int, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    res: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    label: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def neg(self, x: int) -> int:
        return self.res[x][self.zero]

    def power(self, x: int, k: int) -> int:
        """x^k with x^0 = 1."""
        out = self.one
        for _ in range(k):
            out = self.mul[out][x]
        return out

    def power_limit(self, x: int) -> int:
        """The idempotent where the decreasing power sequence stabilizes."""
        p = x
        while self.mul[p][x] != p:
            p = self.mul[p][x]
        return p

    def set_names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.names[i] for i in bits(mask))

    def set_repr(self, mask: int) -> str:
        return "{" + ",".join(self.set_names(mask)) + "}"

    def is_filter(self, mask: int) -> bool:
        """Non-empty, upward closed and closed under multiplication."""
        if not (mask >> self.one) & 1:
            return False
        for x in bits(mask):
            if self.up[x] & mask != self.up[x]:
                return False
            for y in bits(mask):
                if not (mask >> self.mul[x][y]) & 1:
                    return False
        return True


def _covers_to_leq(n: int, covers) -> list[list[bool]]:
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise NotALattice(f"cover ({lo},{hi}) out of range")
        leq[lo][hi] = True
    # transitive closure (Warshall)
    for k in range(n):
        rk = leq[k]
        for i in range(n):
            if leq[i][k]:
                ri = leq[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return leq


def _lattice_tables(n: int, up: list[int]):
    """Join/meet tables from the order, or a NotALattice witness."""
    down = [mask_of(y for y in range(n) if (up[y] >> x) & 1) for x in range(n)]
    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            ub = up[x] & up[y]
            least = [z for z in bits(ub) if up[z] & ub == ub]
            if len(least) != 1:
                raise NotALattice(f"elements {x},{y} have no join")
            join[x][y] = least[0]
            lb = down[x] & down[y]
            greatest = [z for z in bits(lb) if down[z] & lb == lb]
            if len(greatest) != 1:
                raise NotALattice(f"elements {x},{y} have no meet")
            meet[x][y] = greatest[0]
    return join, meet


def _residuum_table(n: int, up, join, mul):
    """res[x][y] = max{z : x*z <= y}, checking the full adjunction."""
    res = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            zs = [z for z in range(n) if (up[mul[x][z]] >> y) & 1]
            if not zs:
                raise NoResiduum(x, y)
            r = zs[0]
            for z in zs[1:]:
                r = join[r][z]
            if not (up[mul[x][r]] >> y) & 1:
                raise NoResiduum(x, y, f"{{z : {x}*z <= {y}}} has no maximum")
            res[x][y] = r
        for y in range(n):
            for z in range(n):
                if ((up[mul[x][z]] >> y) & 1) != ((up[z] >> res[x][y]) & 1):
                    raise AdjunctionFails(x, y, z)
    return res


def validate(
    names,
    mul,
    *,
    leq=None,
    covers=None,
    res=None,
    label: str = "",
) -> ResiduatedLattice:
    """Check every axiom and build the algebra, or raise a specific error.

    Order data comes either as a full <= matrix (`leq`, rows of truthy values)
    or as covering pairs of indices (`covers`). When `res` is omitted it is
    derived; when given, the adjunction is checked against it directly.
    """
    names = tuple(str(s) for s in names)
    n = len(names)
    if n == 0:
        raise NotALattice("empty carrier")
    if n > size_bound():
        raise CarrierTooLarge(f"carrier size {n} exceeds bound {size_bound()}")
    if len(set(names)) != n:
        raise NotALattice("duplicate element names")

    if (leq is None) == (covers is None):
        raise NotALattice("supply exactly one of leq matrix or covering pairs")
    rows = _covers_to_leq(n, covers) if covers is not None else [list(map(bool, r)) for r in leq]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NotALattice("order matrix must be n x n")
    for i in range(n):
        if not rows[i][i]:
            raise NotALattice(f"order not reflexive at {names[i]}")
        for j in range(n):
            if i != j and rows[i][j] and rows[j][i]:
                raise NotALattice(f"order not antisymmetric at {names[i]},{names[j]}")
            for k in range(n):
                if rows[i][j] and rows[j][k] and not rows[i][k]:
                    raise NotALattice(
                        f"order not transitive at {names[i]},{names[j]},{names[k]}"
                    )
    up = [mask_of(j for j in range(n) if rows[i][j]) for i in range(n)]
    full = (1 << n) - 1
    bottoms = [i for i in range(n) if up[i] == full]
    tops = [i for i in range(n) if all((up[j] >> i) & 1 for j in range(n))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise NotALattice("order has no unique bottom or top")
    zero, one = bottoms[0], tops[0]
    join, meet = _lattice_tables(n, up)

    mul = [list(map(int, row)) for row in mul]
    if len(mul) != n or any(len(r) != n for r in mul) or any(
        not 0 <= v < n for r in mul for v in r
    ):
        raise NotCommutativeMonoid("multiplication table must be n x n over the carrier")
    for x in range(n):
        if mul[x][one] != x or mul[one][x] != x:
            raise NotCommutativeMonoid(f"1 is not a unit at {names[x]}")
        for y in range(x + 1, n):
            if mul[x][y] != mul[y][x]:
                raise NotCommutativeMonoid(f"not commutative at {names[x]},{names[y]}")

    # Adjunction before associativity: a broken table should be reported
    # against the residuation first, matching how the axioms are layered.
    if res is not None:
        res = [list(map(int, row)) for row in res]
        if len(res) != n or any(len(r) != n for r in res):
            raise NotResiduated("residuum table must be n x n")
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if ((up[mul[x][z]] >> y) & 1) != ((up[z] >> res[x][y]) & 1):
                        raise AdjunctionFails(x, y, z)
    else:
        res = _residuum_table(n, up, join, mul)

    for x in range(n):
        for y in range(n):
            for z in range(n):
                if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
                    raise NotCommutativeMonoid(
                        f"not associative at {names[x]},{names[y]},{names[z]}"
                    )
                if mul[x][join[y][z]] != join[mul[x][y]][mul[x][z]]:
                    raise NotResiduated(
                        f"multiplication fails to distribute over join at "
                        f"{names[x]},{names[y]},{names[z]}"
                    )
                lhs = join[x][mul[y][z]]
                rhs = mul[join[x][y]][join[x][z]]
                if not (up[rhs] >> lhs) & 1:
                    raise NotResiduated(
                        f"join inequality fails at {names[x]},{names[y]},{names[z]}"
                    )

    return ResiduatedLattice(
        names=names,
        up=tuple(up),
        join=tuple(tuple(r) for r in join),
        meet=tuple(tuple(r) for r in meet),
        mul=tuple(tuple(r) for r in mul),
        res=tuple(tuple(r) for r in res),
        zero=zero,
        one=one,
        label=label or "unnamed",
    )


def derive_residuum(algebra: ResiduatedLattice) -> tuple[tuple[int, ...], ...]:
    """Recompute the residuum from mul and the order alone."""
    table = _residuum_table(algebra.n, algebra.up, algebra.join, algebra.mul)
    return tuple(tuple(r) for r in table)


@dataclass(frozen=True)
class ElementClassification:
    """Masks of the distinguished element classes of one algebra."""

    idempotents: int
    nilpotents: int
    nilpotence_order: tuple[tuple[int, int], ...]
    interior: int          # complement of the nilpotents
    boolean_center: int    # idempotents e with e v neg(e) = 1

    def order_of(self, x: int) -> int | None:
        return dict(self.nilpotence_order).get(x)


def is_prelinear(a: ResiduatedLattice) -> bool:
    """(x -> y) v (y -> x) = 1 everywhere."""
    return all(
        a.join[a.res[x][y]][a.res[y][x]] == a.one
        for x in range(a.n)
        for y in range(a.n)
    )


def classify_elements(a: ResiduatedLattice) -> ElementClassification:
    idem = mask_of(x for x in range(a.n) if a.mul[x][x] == x)
    nil = 0
    orders = []
    for x in range(a.n):
        p = a.one
        for k in range(1, a.n + 1):
            p = a.mul[p][x]
            if p == a.zero:
                nil |= 1 << x
                orders.append((x, k))
                break
            if a.mul[p][x] == p:
                break
    beta = mask_of(
        e for e in bits(idem) if a.join[e][a.neg(e)] == a.one
    )
    return ElementClassification(
        idempotents=idem,
        nilpotents=nil,
        nilpotence_order=tuple(orders),
        interior=a.full ^ nil,
        boolean_center=beta,
    )


def direct_product(a: ResiduatedLattice, b: ResiduatedLattice) -> ResiduatedLattice:
    """Componentwise product; raises CarrierTooLarge above the size bound."""
    n = a.n * b.n
    if n > size_bound():
        raise CarrierTooLarge(f"product size {n} exceeds bound {size_bound()}")
    pairs = list(iproduct(range(a.n), range(b.n)))
    index = {p: i for i, p in enumerate(pairs)}
    names = tuple(f"({a.names[x]},{b.names[y]})" for x, y in pairs)
    up = tuple(
        mask_of(index[x2, y2] for x2, y2 in pairs if a.leq(x, x2) and b.leq(y, y2))
        for x, y in pairs
    )

    def tab(fa, fb):
        return tuple(
            tuple(index[fa[x1][x2], fb[y1][y2]] for x2, y2 in pairs) for x1, y1 in pairs
        )

    return ResiduatedLattice(
        names=names,
        up=up,
        join=tab(a.join, b.join),
        meet=tab(a.meet, b.meet),
        mul=tab(a.mul, b.mul),
        res=tab(a.res, b.res),
        zero=index[a.zero, b.zero],
        one=index[a.one, b.one],
        label=f"{a.label}x{b.label}",
    )


def quotient(a: ResiduatedLattice, filter_mask: int):
    """Quotient by a filter; returns (algebra, projection old index -> new).

    Congruence: x ~ y iff x->y and y->x both lie in the filter. Every
    operation is checked to be well defined on the classes; a failure would
    mean the congruence claim itself is broken and raises EquivalenceViolation.
    """
    if not a.is_filter(filter_mask):
        raise NotAFilter(f"{a.set_repr(filter_mask)} is not a filter of {a.label}")
    n = a.n

    def related(x, y):
        return (filter_mask >> a.res[x][y]) & 1 and (filter_mask >> a.res[y][x]) & 1

    proj = [-1] * n
    reps: list[int] = []
    for x in range(n):
        for ci, r in enumerate(reps):
            if related(x, r):
                proj[x] = ci
                break
        else:
            proj[x] = len(reps)
            reps.append(x)
    m = len(reps)

    def build(table):
        out = [[0] * m for _ in range(m)]
        for i, x in enumerate(reps):
            for j, y in enumerate(reps):
                out[i][j] = proj[table[x][y]]
        for x in range(n):
            for y in range(n):
                if proj[table[x][y]] != out[proj[x]][proj[y]]:
                    raise EquivalenceViolation(
                        "operation not well defined on congruence classes",
                        detail=(a.label, a.set_repr(filter_mask), x, y),
                    )
        return tuple(tuple(r) for r in out)

    join = build(a.join)
    meet = build(a.meet)
    mul = build(a.mul)
    res = build(a.res)
    up = tuple(
        mask_of(j for j in range(m) if join[i][j] == j) for i in range(m)
    )
    names = tuple(a.names[r] for r in reps)
    alg = ResiduatedLattice(
        names=names,
        up=up,
        join=join,
        meet=meet,
        mul=mul,
        res=res,
        zero=proj[a.zero],
        one=proj[a.one],
        label=f"{a.label}/{a.set_repr(filter_mask)}",
    )
    return alg, tuple(proj)


def find_isomorphism(a: ResiduatedLattice, b: ResiduatedLattice):
    """A bijection preserving order, join, meet, mul (hence res), or None."""
    if a.n != b.n:
        return None
    n = a.n

    def profile(alg: ResiduatedLattice, x: int):
        down = sum(1 for y in range(n) if alg.leq(y, x))
        return (
            bin(alg.up[x]).count("1"),
            down,
            alg.mul[x][x] == x,
            x == alg.zero,
            x == alg.one,
        )

    prof_a = [profile(a, x) for x in range(n)]
    prof_b = [profile(b, x) for x in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None
    cand = [[y for y in range(n) if prof_b[y] == prof_a[x]] for x in range(n)]
    img = [-1] * n
    used = [False] * n

    def extend(x: int) -> bool:
        if x == n:
            return True
        for y in cand[x]:
            if used[y]:
                continue
            ok = True
            for x2 in range(x):
                y2 = img[x2]
                if (
                    a.leq(x, x2) != b.leq(y, y2)
                    or a.leq(x2, x) != b.leq(y2, y)
                    or (a.mul[x][x2] < x and img[a.mul[x][x2]] != b.mul[y][y2])
                    or (a.join[x][x2] < x and img[a.join[x][x2]] != b.join[y][y2])
                    or (a.meet[x][x2] < x and img[a.meet[x][x2]] != b.meet[y][y2])
                ):
                    ok = False
                    break
            if not ok:
                continue
            img[x] = y
            used[y] = True
            if extend(x + 1):
                return True
            img[x] = -1
            used[y] = False
        return False

    if not extend(0):
        return None
    # full verification on the completed map
    for x in range(n):
        for y in range(n):
            if (
                img[a.mul[x][y]] != b.mul[img[x]][img[y]]
                or img[a.join[x][y]] != b.join[img[x]][img[y]]
                or img[a.meet[x][y]] != b.meet[img[x]][img[y]]
                or img[a.res[x][y]] != b.res[img[x]][img[y]]
            ):
                return None
    return tuple(img)


def is_isomorphic(a: ResiduatedLattice, b: ResiduatedLattice) -> bool:
    return find_isomorphism(a, b) is not None
