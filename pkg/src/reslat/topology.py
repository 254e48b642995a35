"""Finite topological spaces over collections of prime filters.

A space is a point tuple (each point carries a key, usually a filter mask)
plus the family of closed sets, stored as bitmasks over point indices. Every
constructor audits the axioms, so a malformed family is a bug, not a state.

The three spectral topologies on a prime collection are generated by element
hulls h(x), their complements d(x), or both (patch). In the finite setting
the hull-kernel closed sets are exactly the hulls of filters, equivalently
the up-sets of the inclusion (specialization) order, and the patch topology
is discrete; both facts fall out of the closure lemmas checked here.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import ResiduatedLattice, bits
from .errors import EquivalenceViolation
from . import filters as flt


@dataclass(frozen=True)
class FiniteSpace:
    label: str
    keys: tuple
    closed: frozenset[int]

    @property
    def npoints(self) -> int:
        return len(self.keys)

    @property
    def full(self) -> int:
        return (1 << self.npoints) - 1

    def opens(self) -> frozenset[int]:
        return frozenset(self.full ^ c for c in self.closed)

    def is_closed(self, mask: int) -> bool:
        return mask in self.closed

    def closure(self, mask: int) -> int:
        out = self.full
        for c in self.closed:
            if c & mask == mask:
                out &= c
        return out

    def index_of(self, key) -> int:
        return self.keys.index(key)


def audit_space(label: str, keys, closed) -> FiniteSpace:
    family = frozenset(closed)
    n = len(tuple(keys))
    full = (1 << n) - 1
    if 0 not in family or full not in family:
        raise EquivalenceViolation(f"{label}: family misses empty or full set")
    for c in family:
        for d in family:
            if c | d not in family or c & d not in family:
                raise EquivalenceViolation(
                    f"{label}: closed family not stable under union/intersection"
                )
    return FiniteSpace(label=label, keys=tuple(keys), closed=family)


def generate_space(label: str, keys, closed_basis) -> FiniteSpace:
    keys = tuple(keys)
    full = (1 << len(keys)) - 1
    family = {0, full} | set(closed_basis)
    frontier = list(family)
    while frontier:
        c = frontier.pop()
        for d in list(family):
            for e in (c | d, c & d):
                if e not in family:
                    family.add(e)
                    frontier.append(e)
    return audit_space(label, keys, family)


def hull_in(points: tuple[int, ...], subset: int) -> int:
    """Indices of the points containing the subset."""
    out = 0
    for i, p in enumerate(points):
        if p & subset == subset:
            out |= 1 << i
    return out


def cohull_in(points: tuple[int, ...], subset: int) -> int:
    return ((1 << len(points)) - 1) ^ hull_in(points, subset)


def kernel_of(a: ResiduatedLattice, points: tuple[int, ...], point_mask: int) -> int:
    """Intersection of the selected points; the whole carrier when none."""
    out = a.full
    for i in bits(point_mask):
        out &= points[i]
    return out


def specialization_mask(points: tuple[int, ...], point_mask: int) -> int:
    """Points lying above (containing) some selected point."""
    out = 0
    for i, p in enumerate(points):
        for j in bits(point_mask):
            if p & points[j] == points[j]:
                out |= 1 << i
                break
    return out


def generalization_mask(points: tuple[int, ...], point_mask: int) -> int:
    """Points lying below (contained in) some selected point."""
    out = 0
    for i, p in enumerate(points):
        for j in bits(point_mask):
            if p & points[j] == p:
                out |= 1 << i
                break
    return out


def spec_space(
    a: ResiduatedLattice,
    kind: str = "hull",
    points: tuple[int, ...] | None = None,
    label: str | None = None,
) -> FiniteSpace:
    """Hull-kernel, dual, or patch space over a prime collection."""
    if points is None:
        points = flt.prime_filters(a)
    basis: list[int] = []
    if kind in ("hull", "patch"):
        basis += [hull_in(points, 1 << x) for x in range(a.n)]
    if kind in ("dual", "patch"):
        basis += [cohull_in(points, 1 << x) for x in range(a.n)]
    if kind not in ("hull", "dual", "patch"):
        raise ValueError(f"unknown space kind {kind!r}")
    name = label or f"{a.label}:{kind}[{len(points)}pts]"
    return generate_space(name, points, basis)


def is_normal(space: FiniteSpace) -> bool:
    opens = tuple(space.opens())
    for c in space.closed:
        for d in space.closed:
            if c & d:
                continue
            if not any(
                c & u == c and d & v == d and not u & v
                for u in opens
                for v in opens
            ):
                return False
    return True


def is_hausdorff(space: FiniteSpace) -> bool:
    opens = tuple(space.opens())
    for i in range(space.npoints):
        for j in range(i + 1, space.npoints):
            if not any(
                (u >> i) & 1 and (v >> j) & 1 and not u & v
                for u in opens
                for v in opens
            ):
                return False
    return True


def is_t1(space: FiniteSpace) -> bool:
    return all((1 << i) in space.closed for i in range(space.npoints))


def is_discrete(space: FiniteSpace) -> bool:
    return len(space.closed) == 1 << space.npoints


def is_compact(space: FiniteSpace) -> bool:
    """Finite spaces are compact; kept explicit so reports can say so."""
    return True


def space_predicates(space: FiniteSpace) -> dict[str, bool]:
    return {
        "normal": is_normal(space),
        "hausdorff": is_hausdorff(space),
        "t1": is_t1(space),
        "discrete": is_discrete(space),
        "compact": is_compact(space),
    }


def subspace(space: FiniteSpace, point_mask: int, label: str) -> FiniteSpace:
    sel = list(bits(point_mask))
    keys = tuple(space.keys[i] for i in sel)

    def cut(c: int) -> int:
        out = 0
        for new, old in enumerate(sel):
            if (c >> old) & 1:
                out |= 1 << new
        return out

    return audit_space(label, keys, {cut(c) for c in space.closed})


def quotient_space(space: FiniteSpace, classes: tuple[int, ...], label: str) -> FiniteSpace:
    """Quotient by a partition of the points, with the final topology."""
    union = 0
    for c in classes:
        if union & c:
            raise ValueError("classes overlap")
        union |= c
    if union != space.full:
        raise ValueError("classes do not cover the space")
    closed = []
    for s in range(1 << len(classes)):
        pre = 0
        for i in bits(s):
            pre |= classes[i]
        if pre in space.closed:
            closed.append(s)
    keys = tuple(frozenset(space.keys[i] for i in bits(c)) for c in classes)
    return audit_space(label, keys, closed)


def is_continuous(func, source: FiniteSpace, target: FiniteSpace) -> bool:
    """func maps source point indices to target point indices."""
    for c in target.closed:
        pre = 0
        for i in range(source.npoints):
            if (c >> func(i)) & 1:
                pre |= 1 << i
        if pre not in source.closed:
            return False
    return True


def is_homeomorphism(func, source: FiniteSpace, target: FiniteSpace) -> bool:
    if source.npoints != target.npoints:
        return False
    image = [func(i) for i in range(source.npoints)]
    if len(set(image)) != source.npoints:
        return False
    mapped = set()
    for c in source.closed:
        m = 0
        for i in bits(c):
            m |= 1 << image[i]
        mapped.add(m)
    return mapped == set(target.closed)


def closure_lemmas(a: ResiduatedLattice, points: tuple[int, ...]) -> bool:
    """For every point set: hull-kernel closure = hull of kernel =
    specialization set, and dual closure = generalization set."""
    hspace = spec_space(a, "hull", points)
    dspace = spec_space(a, "dual", points)
    for pi in range(1 << len(points)):
        cl_h = hspace.closure(pi)
        hk = hull_in(points, kernel_of(a, points, pi))
        spc = specialization_mask(points, pi)
        cl_d = dspace.closure(pi)
        gen = generalization_mask(points, pi)
        if not (cl_h == hk == spc and cl_d == gen):
            raise EquivalenceViolation(
                "closure lemmas fail",
                detail=(a.label, [a.set_repr(points[i]) for i in bits(pi)]),
            )
    return True


def closed_iff_patch_and_stable(a: ResiduatedLattice, point_mask: int) -> bool:
    """A point set is hull-kernel closed iff it is patch closed and stable
    under specialization; asserted, then the left side is returned."""
    points = flt.prime_filters(a)
    hspace = spec_space(a, "hull", points)
    pspace = spec_space(a, "patch", points)
    lhs = hspace.is_closed(point_mask)
    rhs = pspace.is_closed(point_mask) and (
        specialization_mask(points, point_mask) == point_mask
    )
    if lhs != rhs:
        raise EquivalenceViolation(
            "patch/stability criterion disagrees with hull-kernel closedness",
            detail=(a.label, point_mask),
        )
    return lhs


def clopen_check(a: ResiduatedLattice) -> tuple[int, ...]:
    """Clopen sets of the spectrum = hulls of Boolean-center elements."""
    points = flt.prime_filters(a)
    hspace = spec_space(a, "hull", points)
    clopens = {c for c in hspace.closed if (hspace.full ^ c) in hspace.closed}
    beta_hulls = {hull_in(points, 1 << e) for e in bits(flt.analysis(a).beta)}
    if clopens != beta_hulls:
        raise EquivalenceViolation(
            "clopen sets differ from Boolean-center hulls",
            detail=(a.label, sorted(clopens), sorted(beta_hulls)),
        )
    return tuple(sorted(clopens))


def max_dense_iff_semisimple(a: ResiduatedLattice) -> bool:
    """Density of the maximals in the spectrum = semisimplicity; asserted."""
    points = flt.prime_filters(a)
    hspace = spec_space(a, "hull", points)
    maxmask = 0
    for i, p in enumerate(points):
        if p in flt.analysis(a).maximals:
            maxmask |= 1 << i
    dense = hspace.closure(maxmask) == hspace.full
    semi = flt.is_semisimple(a)
    if dense != semi:
        raise EquivalenceViolation(
            "density of maximals disagrees with semisimplicity", detail=a.label
        )
    return dense


def hull_closed_family_facts(a: ResiduatedLattice) -> bool:
    """The hull-kernel closed sets are exactly the filter hulls and exactly
    the specialization-stable sets; checked on the full spectrum."""
    points = flt.prime_filters(a)
    hspace = spec_space(a, "hull", points)
    filter_hulls = {hull_in(points, f) for f in flt.all_filters(a)}
    stable = {
        pi
        for pi in range(1 << len(points))
        if specialization_mask(points, pi) == pi
    }
    if not (set(hspace.closed) == filter_hulls == stable):
        raise EquivalenceViolation(
            "closed-set descriptions of the spectrum disagree", detail=a.label
        )
    return True
