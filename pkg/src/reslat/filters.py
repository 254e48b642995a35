"""Filters of a finite residuated lattice and everything built from them.

In the finite case every filter is principal: a filter F is upward closed and
closed under mul, so the product e of all its members lies in F, its
stabilized power e* is an idempotent member below every member, and
F = up(e*). The filter lattice is therefore {F(x) : x in A}, and meets/joins
reduce to F(x) n F(y) = F(x v y), F(x) v F(y) = F(x * y).

All filters are bitmasks over the carrier; collections are kept in the
canonical order (cardinality, then mask value), and "first witness" always
means first in that order.
"""
from __future__ import annotations

from .core import ResiduatedLattice, bits, classify_elements, mask_of
from .errors import (
    EquivalenceViolation,
    ImproperInput,
    NotAFilter,
    NotAnIdeal,
    Unsatisfiable,
)


def canonical_sort(masks) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: (bin(m).count("1"), m)))


class Analysis:
    """Cached per-algebra filter analysis; obtain via analysis(a)."""

    def __init__(self, a: ResiduatedLattice):
        self.algebra = a
        n = a.n
        self.one_mask = 1 << a.one
        self.principal = tuple(a.up[a.power_limit(x)] for x in range(n))
        self.filters = canonical_sort(self.principal)
        self.filter_id = {f: i for i, f in enumerate(self.filters)}
        gens = []
        for f in self.filters:
            e = a.one
            for x in bits(f):
                e = a.mul[e][x]
            g = a.power_limit(e)
            if a.up[g] != f:
                raise EquivalenceViolation(
                    "principal generator does not regenerate its filter",
                    detail=(a.label, a.set_repr(f)),
                )
            gens.append(g)
        self.generator = tuple(gens)
        self.proper = tuple(f for f in self.filters if f != a.full)
        self.maximals = tuple(
            f
            for f in self.proper
            if not any(g != f and g != a.full and g & f == f for g in self.proper)
        )
        primes = []
        for f in self.proper:
            outside = a.full ^ f
            if all(
                not (f >> a.join[x][y]) & 1
                for x in bits(outside)
                for y in bits(outside)
            ):
                primes.append(f)
        self.primes = tuple(primes)
        cls = classify_elements(a)
        self.nilpotents = cls.nilpotents
        self.interior = cls.interior
        self.beta = cls.boolean_center
        self.idempotents = cls.idempotents
        self.nilpotence_order = cls.nilpotence_order
        self._dpart: dict[int, int] = {}
        self._coann1: dict[int, int] = {}


def analysis(a: ResiduatedLattice) -> Analysis:
    ctx = a._cache.get("analysis")
    if ctx is None:
        ctx = Analysis(a)
        a._cache["analysis"] = ctx
    return ctx


def principal_filter(a: ResiduatedLattice, x: int) -> int:
    return analysis(a).principal[x]


def generated_filter(a: ResiduatedLattice, subset: int) -> int:
    """Least filter containing the subset (full product, then upward)."""
    e = a.one
    for x in bits(subset):
        e = a.mul[e][x]
    return a.up[a.power_limit(e)]


def all_filters(a: ResiduatedLattice) -> tuple[int, ...]:
    return analysis(a).filters


def proper_filters(a: ResiduatedLattice) -> tuple[int, ...]:
    return analysis(a).proper


def maximal_filters(a: ResiduatedLattice) -> tuple[int, ...]:
    return analysis(a).maximals


def prime_filters(a: ResiduatedLattice) -> tuple[int, ...]:
    return analysis(a).primes


def filter_join(a: ResiduatedLattice, f: int, g: int) -> int:
    ctx = analysis(a)
    gf = ctx.generator[ctx.filter_id[f]]
    gg = ctx.generator[ctx.filter_id[g]]
    return a.up[a.power_limit(a.mul[gf][gg])]


def filter_meet(a: ResiduatedLattice, f: int, g: int) -> int:
    return f & g


def join_family(a: ResiduatedLattice, family) -> int:
    out = 1 << a.one
    for f in family:
        out = filter_join(a, out, f)
    return out


def primes_over(a: ResiduatedLattice, subset: int) -> tuple[int, ...]:
    """Primes containing the subset (the hull, as filters)."""
    return tuple(p for p in analysis(a).primes if p & subset == subset)


def maximals_over(a: ResiduatedLattice, subset: int) -> tuple[int, ...]:
    return tuple(m for m in analysis(a).maximals if m & subset == subset)


def radical(a: ResiduatedLattice, f: int) -> int:
    """Intersection of the maximal filters containing f; proper input only."""
    if f == a.full:
        raise ImproperInput("radical of the improper filter is not defined")
    if not a.is_filter(f):
        raise NotAFilter(a.set_repr(f))
    over = maximals_over(a, f)
    if not over:
        raise EquivalenceViolation(
            "proper filter not below any maximal filter", detail=a.label
        )
    out = a.full
    for m in over:
        out &= m
    return out


def radical_total(a: ResiduatedLattice, f: int) -> int:
    """radical extended by Rad(A) = A (empty intersection convention)."""
    return a.full if f == a.full else radical(a, f)


def is_semisimple(a: ResiduatedLattice) -> bool:
    return radical_total(a, 1 << a.one) == 1 << a.one


def comaximal_routes(a: ResiduatedLattice, f: int, g: int):
    """(join is improper, zero product witness, negation witness)."""
    by_join = filter_join(a, f, g) == a.full
    by_zero = any(
        a.mul[x][y] == a.zero for x in bits(f) for y in bits(g)
    )
    by_neg = any((g >> a.neg(x)) & 1 for x in bits(f))
    return by_join, by_zero, by_neg


def is_comaximal(a: ResiduatedLattice, f: int, g: int) -> bool:
    """Three independent routes, which must agree on proper filters."""
    if f == a.full or g == a.full:
        raise ImproperInput("comaximality is about proper filters")
    routes = comaximal_routes(a, f, g)
    if len(set(routes)) != 1:
        raise EquivalenceViolation(
            "comaximality routes disagree",
            detail=(a.label, a.set_repr(f), a.set_repr(g), routes),
        )
    return routes[0]


def comaximal_witness(a: ResiduatedLattice, f: int, g: int):
    """First (x, y) with x in f, y in g, x*y = 0, or None."""
    for x in bits(f):
        for y in bits(g):
            if a.mul[x][y] == a.zero:
                return x, y
    return None


def is_maximal_by_powers(a: ResiduatedLattice, f: int) -> bool:
    """Power test: proper f is maximal iff every x outside has neg(x^k) in f."""
    if f == a.full:
        raise ImproperInput("maximality test is about proper filters")
    for x in bits(a.full ^ f):
        p = a.one
        hit = False
        while True:
            p = a.mul[p][x]
            if (f >> a.neg(p)) & 1:
                hit = True
                break
            if a.mul[p][x] == p:
                break
        if not hit:
            return False
    return True


def prime_extension(a: ResiduatedLattice, f: int, cone: int) -> int:
    """A filter containing f, maximal among those missing the join-closed
    cone; such filters are prime, and that is asserted for all of them.
    Returns the canonically first one."""
    if not a.is_filter(f):
        raise NotAFilter(a.set_repr(f))
    if cone == 0:
        raise ValueError("cone must be non-empty")
    for x in bits(cone):
        for y in bits(cone):
            if not (cone >> a.join[x][y]) & 1:
                raise ValueError("cone must be closed under joins")
    if f & cone:
        raise Unsatisfiable(
            f"filter {a.set_repr(f)} already meets {a.set_repr(cone)}"
        )
    avoiders = [g for g in analysis(a).filters if g & f == f and not g & cone]
    best = [
        g
        for g in avoiders
        if not any(h != g and h & g == g for h in avoiders)
    ]
    primes = set(analysis(a).primes)
    for g in best:
        if g not in primes:
            raise EquivalenceViolation(
                "maximal cone-avoiding filter is not prime",
                detail=(a.label, a.set_repr(g), a.set_repr(cone)),
            )
    return best[0]


def coannihilator(a: ResiduatedLattice, subset: int) -> int:
    """kernel of the primes omitting the subset; checked against the
    elementwise route {y : y v x = 1 for all x in the subset}."""
    via_primes = a.full
    for p in analysis(a).primes:
        if p & subset != subset:
            via_primes &= p
    via_joins = mask_of(
        y
        for y in range(a.n)
        if all(a.join[y][x] == a.one for x in bits(subset))
    )
    if via_primes != via_joins:
        raise EquivalenceViolation(
            "coannihilator routes disagree",
            detail=(a.label, a.set_repr(subset)),
        )
    return via_primes


def element_coannihilator(a: ResiduatedLattice, x: int) -> int:
    ctx = analysis(a)
    if x not in ctx._coann1:
        ctx._coann1[x] = coannihilator(a, 1 << x)
    return ctx._coann1[x]


def gamma(a: ResiduatedLattice) -> tuple[int, ...]:
    """The coannihilators of single elements, canonically ordered."""
    return canonical_sort(element_coannihilator(a, x) for x in range(a.n))


def big_gamma(a: ResiduatedLattice) -> tuple[int, ...]:
    """All coannihilators: intersections of element coannihilators, plus A."""
    base = set(gamma(a)) | {a.full}
    changed = True
    while changed:
        changed = False
        for u in list(base):
            for v in list(base):
                if u & v not in base:
                    base.add(u & v)
                    changed = True
    return canonical_sort(base)


def is_rickart(a: ResiduatedLattice) -> bool:
    """gamma is a Boolean sublattice of the filter lattice."""
    g = gamma(a)
    gs = set(g)
    if (1 << a.one) not in gs or a.full not in gs:
        return False
    for u in g:
        for v in g:
            if u & v not in gs or filter_join(a, u, v) not in gs:
                return False
    for u in g:
        if not any(
            u & v == 1 << a.one and filter_join(a, u, v) == a.full for v in g
        ):
            return False
    return True


def is_baer(a: ResiduatedLattice) -> bool:
    """big_gamma is a sublattice of the filter lattice (joins stay inside)."""
    g = big_gamma(a)
    gs = set(g)
    return all(
        u & v in gs and filter_join(a, u, v) in gs for u in g for v in g
    )


def is_ideal(a: ResiduatedLattice, subset: int) -> bool:
    """Non-empty, downward closed, join closed."""
    if subset == 0:
        return False
    down = [mask_of(y for y in range(a.n) if a.leq(y, x)) for x in range(a.n)]
    for x in bits(subset):
        if down[x] & subset != down[x]:
            return False
        for y in bits(subset):
            if not (subset >> a.join[x][y]) & 1:
                return False
    return True


def omega_filter(a: ResiduatedLattice, ideal: int) -> int:
    """{x : x v y = 1 for some y in the ideal}; always a filter."""
    if not is_ideal(a, ideal):
        raise NotAnIdeal(f"{a.set_repr(ideal)} is not an ideal of {a.label or 'the algebra'}")
    out = mask_of(
        x
        for x in range(a.n)
        if any(a.join[x][y] == a.one for y in bits(ideal))
    )
    if not a.is_filter(out):
        raise EquivalenceViolation(
            "omega of an ideal is not a filter", detail=(a.label, a.set_repr(ideal))
        )
    return out


def d_part(a: ResiduatedLattice, prime: int) -> int:
    """omega of the complement ideal of a prime, cross-checked against the
    kernel of its generalizations."""
    ctx = analysis(a)
    if prime in ctx._dpart:
        return ctx._dpart[prime]
    if prime not in ctx.primes:
        raise ImproperInput(f"{a.set_repr(prime)} is not a prime filter")
    via_omega = omega_filter(a, a.full ^ prime)
    via_kernel = a.full
    for q in ctx.primes:
        if q & prime == q:
            via_kernel &= q
    if via_omega != via_kernel:
        raise EquivalenceViolation(
            "d_part routes disagree", detail=(a.label, a.set_repr(prime))
        )
    ctx._dpart[prime] = via_omega
    return via_omega


def local_battery(a: ResiduatedLattice) -> dict[str, bool]:
    """Five equivalent readings of locality.

    They are equivalent for non-trivial algebras; on the one-element algebra
    the nilpotence reading holds vacuously while the others fail, so the
    unanimity check exempts that single degenerate case.
    """
    ctx = analysis(a)
    interior_is_filter = a.is_filter(ctx.interior)
    battery = {
        "unique_maximal_filter": len(ctx.maximals) == 1,
        "interior_is_filter": interior_is_filter,
        "interior_is_proper_filter": interior_is_filter and ctx.interior != a.full,
        "interior_is_the_maximal_filter": interior_is_filter
        and ctx.maximals == (ctx.interior,),
        "zero_products_have_nilpotent_factor": all(
            (ctx.nilpotents >> x) & 1 or (ctx.nilpotents >> y) & 1
            for x in range(a.n)
            for y in range(a.n)
            if (ctx.nilpotents >> a.mul[x][y]) & 1
        ),
    }
    if a.n > 1 and len(set(battery.values())) != 1:
        raise EquivalenceViolation(
            "local characterizations disagree", detail=(a.label, battery)
        )
    return battery


def is_local(a: ResiduatedLattice) -> bool:
    return len(analysis(a).maximals) == 1
