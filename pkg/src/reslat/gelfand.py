"""Gelfand residuated lattices: fourteen independent characterizations.

Every criterion that is provably equivalent to "each prime filter lies under
exactly one maximal filter" is computed from scratch by its own route, and
the final verdict insists on unanimity: a single disagreement raises
EquivalenceViolation instead of producing an answer. The same policy covers
the soft/Hausdorff battery and the after-the-fact theorems (unique retraction,
discrete maximal spectrum, rho = sigma, ...) that are implied by a positive
or negative verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from .core import ResiduatedLattice, bits, mask_of, quotient
from .errors import EquivalenceViolation
from . import filters as flt
from . import pure as pr
from . import topology as top


def _power_list(a: ResiduatedLattice, x: int) -> list[int]:
    """x, x^2, ... up to and including the stabilized power."""
    out = [x]
    p = x
    while a.mul[p][x] != p:
        p = a.mul[p][x]
        out.append(p)
    return out


def unique_maximal_over_primes(a: ResiduatedLattice):
    """The definition; witness is the first prime under two maximals."""
    for p in flt.prime_filters(a):
        over = flt.maximals_over(a, p)
        if len(over) != 1:
            return False, (p, over)
    return True, None


def contessa_check(a: ResiduatedLattice):
    """Zero products admit powers whose negations join to 1.

    The power exponents range over the full (finite) power sequence of each
    factor, which is exhaustive because powers repeat beyond stabilization.
    """
    for x in range(a.n):
        for y in range(a.n):
            if a.mul[x][y] != a.zero:
                continue
            if not any(
                a.join[a.neg(px)][a.neg(py)] == a.one
                for px in _power_list(a, x)
                for py in _power_list(a, y)
            ):
                return False, (x, y)
    return True, None


def maximal_battery(a: ResiduatedLattice) -> dict[str, bool]:
    """Ten conditions about maximal filters and their d-parts."""
    ctx = flt.analysis(a)
    primes = ctx.primes
    maxima = ctx.maximals
    fs = ctx.filters
    full = a.full
    pairs = [(m, n) for m in maxima for n in maxima if m != n]

    separating_join = all(
        any(
            a.join[x][y] == a.one
            for x in bits(full ^ m)
            for y in bits(full ^ n)
        )
        for m, n in pairs
    )
    dpart_comaximal = all(
        flt.filter_join(a, flt.d_part(a, m), flt.d_part(a, n)) == full
        for m, n in pairs
    )
    dpart_negation_witness = all(
        any(
            (flt.d_part(a, n) >> a.neg(x)) & 1
            for x in bits(flt.d_part(a, m))
        )
        for m, n in pairs
    )
    dpart_prime_inclusion = all(
        not (flt.d_part(a, p) & m == flt.d_part(a, p)) or p & m == p
        for p in primes
        for m in maxima
    )
    dpart_proper_inclusion = all(
        not (flt.d_part(a, m) & f == flt.d_part(a, m)) or f & m == f
        for f in fs
        if f != full
        for m in maxima
    )
    comaximal_transfer = all(
        flt.filter_join(a, f, flt.d_part(a, m)) == full
        for f in fs
        if f != full
        for m in maxima
        if flt.filter_join(a, f, m) == full
    )
    dpart_unique_maximal = all(
        flt.maximals_over(a, flt.d_part(a, m)) == (m,) for m in maxima
    )
    generalization_is_hull = all(
        top.generalization_mask(primes, 1 << primes.index(m))
        == top.hull_in(primes, flt.d_part(a, m))
        for m in maxima
    )
    dpart_quotient_local = all(
        flt.is_local(quotient(a, flt.d_part(a, m))[0]) for m in maxima
    )
    power_negation_join = all(
        any(
            a.join[y][a.neg(px)] == a.one
            for px in _power_list(a, x)
            for y in bits(full ^ m)
        )
        for m in maxima
        for x in bits(full ^ m)
    )
    return {
        "separating_join": separating_join,
        "dpart_comaximal": dpart_comaximal,
        "dpart_negation_witness": dpart_negation_witness,
        "dpart_prime_inclusion": dpart_prime_inclusion,
        "dpart_proper_inclusion": dpart_proper_inclusion,
        "comaximal_transfer": comaximal_transfer,
        "dpart_unique_maximal": dpart_unique_maximal,
        "generalization_is_hull": generalization_is_hull,
        "dpart_quotient_local": dpart_quotient_local,
        "power_negation_join": power_negation_join,
    }


def _normal_over(a: ResiduatedLattice, family: tuple[int, ...]) -> bool:
    """Normality of a bounded filter family: comaximal pairs admit
    complementary-ish witnesses meeting in the bottom filter {1}."""
    one = 1 << a.one
    for f in family:
        for g in family:
            if flt.filter_join(a, f, g) != a.full:
                continue
            if not any(
                flt.filter_join(a, u, f) == a.full
                and flt.filter_join(a, v, g) == a.full
                and u & v == one
                for u in family
                for v in family
            ):
                return False
    return True


def normal_filter_lattice(a: ResiduatedLattice) -> dict[str, bool]:
    """Normality of the filter lattice and of the principal-filter lattice.

    Finite filters are all principal, so the two families coincide as sets;
    they are still assembled by their own routes and checked separately.
    """
    return {
        "all_filters": _normal_over(a, flt.all_filters(a)),
        "principal_filters": _normal_over(
            a, flt.canonical_sort(flt.analysis(a).principal)
        ),
    }


def spectral_separation(a: ResiduatedLattice) -> dict[str, bool]:
    primes = flt.prime_filters(a)
    maxima = flt.maximal_filters(a)
    hspace = top.spec_space(a, "hull", primes)
    opens = tuple(hspace.opens())
    sep = True
    for i, m in enumerate(maxima):
        for n in maxima[i + 1:]:
            pi, pj = primes.index(m), primes.index(n)
            if not any(
                (u >> pi) & 1 and (v >> pj) & 1 and not u & v
                for u in opens
                for v in opens
            ):
                sep = False
    gens_closed = all(
        top.generalization_mask(primes, 1 << primes.index(m)) in hspace.closed
        for m in maxima
    )
    return {
        "maximal_pairs_separated": sep,
        "generalizations_closed": gens_closed,
    }


def retractions(a: ResiduatedLattice) -> tuple[int, tuple[int, ...] | None]:
    """Count the continuous retractions Spec_h -> Max_h; keep the first.

    The map is forced to the identity on maximal points, so the search walks
    every assignment of the remaining primes to maximal filters.
    """
    primes = flt.prime_filters(a)
    maxima = flt.maximal_filters(a)
    hspace = top.spec_space(a, "hull", primes)
    mspace = pr.max_subspace(a)
    max_pos = {m: i for i, m in enumerate(maxima)}
    free = [i for i, p in enumerate(primes) if p not in max_pos]
    count = 0
    first = None
    for choice in iproduct(range(len(maxima)), repeat=len(free)):
        img = [0] * len(primes)
        for i, p in enumerate(primes):
            if p in max_pos:
                img[i] = max_pos[p]
        for slot, c in zip(free, choice):
            img[slot] = c
        if top.is_continuous(lambda i: img[i], hspace, mspace):
            count += 1
            if first is None:
                first = tuple(img)
    return count, first


def relation_closure(a: ResiduatedLattice, kind: str) -> tuple[int, ...]:
    """Classes of the transitive closure of a comaximality-failure relation.

    kind "comaximal": p ~ q when p v q is proper.
    kind "dpart": p ~ q when D(p) v D(q) is proper.
    """
    primes = flt.prime_filters(a)
    k = len(primes)

    def related(p, q):
        if kind == "comaximal":
            return flt.filter_join(a, p, q) != a.full
        if kind == "dpart":
            return flt.filter_join(a, flt.d_part(a, p), flt.d_part(a, q)) != a.full
        raise ValueError(f"unknown relation kind {kind!r}")

    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if related(primes[i], primes[j]):
                parent[find(i)] = find(j)
    groups: dict[int, int] = {}
    for i in range(k):
        groups[find(i)] = groups.get(find(i), 0) | (1 << i)
    return flt.canonical_sort(groups.values())


def relation_class_condition(a: ResiduatedLattice, kind: str) -> bool:
    """Every maximal filter's class equals its generalization set."""
    primes = flt.prime_filters(a)
    classes = relation_closure(a, kind)
    for m in flt.maximal_filters(a):
        mi = primes.index(m)
        cls = next(c for c in classes if (c >> mi) & 1)
        if cls != top.generalization_mask(primes, 1 << mi):
            return False
    return True


def quotient_space_homeo(a: ResiduatedLattice, kind: str) -> bool:
    """Does m -> class(m) give Max_h ~ Spec_h / closure classes?"""
    primes = flt.prime_filters(a)
    maxima = flt.maximal_filters(a)
    classes = relation_closure(a, kind)
    max_index = {primes.index(m) for m in maxima}
    for c in classes:
        if len(max_index & set(bits(c))) != 1:
            return False
    hspace = top.spec_space(a, "hull", primes)
    qspace = top.quotient_space(hspace, classes, f"{a.label}:spec/{kind}")
    img = []
    for m in maxima:
        mi = primes.index(m)
        img.append(next(ci for ci, c in enumerate(classes) if (c >> mi) & 1))
    return top.is_homeomorphism(lambda i: img[i], pr.max_subspace(a), qspace)


@dataclass
class GelfandVerdict:
    verdict: bool
    criteria: dict[str, bool]
    details: dict[str, dict[str, bool]] = field(default_factory=dict)
    witnesses: dict[str, str] = field(default_factory=dict)


CRITERIA = (
    "unique_maximal",
    "contessa",
    "maximal_battery",
    "normal_filter_lattice",
    "spectral_separation",
    "max_retract",
    "spectrum_normal",
    "comaximal_classes",
    "dpart_classes",
    "topologies_match_on_max",
    "pure_spectrum_homeo",
    "sigma_battery",
    "rho_battery",
    "rho_rad_adjoint",
)


def gelfand_verdict(a: ResiduatedLattice) -> GelfandVerdict:
    """Evaluate all fourteen criteria and assert their unanimity."""
    criteria: dict[str, bool] = {}
    details: dict[str, dict[str, bool]] = {}
    witnesses: dict[str, str] = {}
    leaves: list[bool] = []

    uniq, wit = unique_maximal_over_primes(a)
    criteria["unique_maximal"] = uniq
    leaves.append(uniq)
    if wit is not None:
        p, over = wit
        witnesses["unique_maximal"] = (
            f"prime {a.set_repr(p)} lies under "
            + " and ".join(a.set_repr(m) for m in over[:2])
        )

    cont, wit = contessa_check(a)
    criteria["contessa"] = cont
    leaves.append(cont)
    if wit is not None:
        x, y = wit
        witnesses["contessa"] = (
            f"{a.names[x]}*{a.names[y]} = 0 but no powers have "
            f"negations joining to 1"
        )

    battery = maximal_battery(a)
    details["maximal_battery"] = battery
    criteria["maximal_battery"] = all(battery.values())
    leaves.extend(battery.values())

    normal = normal_filter_lattice(a)
    details["normal_filter_lattice"] = normal
    criteria["normal_filter_lattice"] = all(normal.values())
    leaves.extend(normal.values())

    sep = spectral_separation(a)
    details["spectral_separation"] = sep
    criteria["spectral_separation"] = all(sep.values())
    leaves.extend(sep.values())

    count, first = retractions(a)
    criteria["max_retract"] = count >= 1
    leaves.append(count >= 1)

    criteria["spectrum_normal"] = top.is_normal(top.spec_space(a, "hull"))
    leaves.append(criteria["spectrum_normal"])

    for kind, name in (("comaximal", "comaximal_classes"), ("dpart", "dpart_classes")):
        cls_ok = relation_class_condition(a, kind)
        homeo_ok = quotient_space_homeo(a, kind)
        details[name] = {
            "classes_match_generalizations": cls_ok,
            "quotient_homeomorphic_to_max": homeo_ok,
        }
        criteria[name] = cls_ok and homeo_ok
        leaves.extend((cls_ok, homeo_ok))

    criteria["topologies_match_on_max"] = pr.d_topology_coincidence(a)
    leaves.append(criteria["topologies_match_on_max"])

    criteria["pure_spectrum_homeo"] = pr.spp_max_homeo(a)
    leaves.append(criteria["pure_spectrum_homeo"])

    sb = pr.sigma_battery(a)
    details["sigma_battery"] = sb
    criteria["sigma_battery"] = all(sb.values())
    leaves.extend(sb.values())

    rb = pr.rho_battery(a)
    details["rho_battery"] = rb
    criteria["rho_battery"] = all(rb.values())
    leaves.extend(rb.values())

    criteria["rho_rad_adjoint"] = pr.rho_rad_adjunction(a)
    leaves.append(criteria["rho_rad_adjoint"])

    if len(set(leaves)) != 1:
        raise EquivalenceViolation(
            "Gelfand criteria disagree",
            detail=(a.label, criteria, details),
        )
    verdict = leaves[0]

    # theorems implied by the verdict, asserted rather than reported
    if verdict:
        if count != 1:
            raise EquivalenceViolation(
                "Gelfand algebra without a unique retraction", detail=a.label
            )
        primes = flt.prime_filters(a)
        maxima = flt.maximal_filters(a)
        expected = tuple(
            maxima.index(flt.maximals_over(a, p)[0]) for p in primes
        )
        if first != expected:
            raise EquivalenceViolation(
                "unique retraction is not the unique-maximal map", detail=a.label
            )
        mspace = pr.max_subspace(a)
        if not (top.is_hausdorff(mspace) and top.is_discrete(mspace)):
            raise EquivalenceViolation(
                "Gelfand maximal spectrum is not discrete", detail=a.label
            )
        pr.gelfand_pure_laws(a)
    return GelfandVerdict(
        verdict=verdict, criteria=criteria, details=details, witnesses=witnesses
    )


def hausdorff_battery(a: ResiduatedLattice) -> dict[str, bool]:
    """Six equivalent statements about the maximal spectrum being Hausdorff.

    These are equivalent to each other on every algebra (asserted), and all
    six hold exactly when Max_h is Hausdorff; softness additionally needs
    semisimplicity.
    """
    primes = flt.prime_filters(a)
    rad = flt.radical_total(a, 1 << a.one)
    hrad_mask = top.hull_in(primes, rad)
    hrad_space = top.subspace(
        top.spec_space(a, "hull", primes), hrad_mask, f"{a.label}:h(Rad)"
    )
    hrad_points = tuple(primes[i] for i in bits(hrad_mask))
    maxima = flt.maximal_filters(a)
    max_in_hrad = [i for i, p in enumerate(hrad_points) if p in maxima]

    hausdorff = top.is_hausdorff(pr.max_subspace(a))
    unique_max = all(
        len(flt.maximals_over(a, p)) == 1 for p in hrad_points
    )

    mspace = pr.max_subspace(a)
    retract = False
    max_pos = {hrad_points[i]: k for k, i in enumerate(max_in_hrad)}
    free = [i for i in range(len(hrad_points)) if i not in max_in_hrad]
    for choice in iproduct(range(len(max_in_hrad)), repeat=len(free)):
        img = [0] * len(hrad_points)
        for i in max_in_hrad:
            img[i] = max_pos[hrad_points[i]]
        for slot, c in zip(free, choice):
            img[slot] = c
        if top.is_continuous(lambda i: img[i], hrad_space, mspace):
            retract = True
            break
    if not maxima and not hrad_points:
        retract = True

    normaletc = top.is_normal(hrad_space)
    gens_closed = True
    for m in maxima:
        gen = top.generalization_mask(primes, 1 << primes.index(m))
        cut = 0
        for new, old in enumerate(bits(hrad_mask)):
            if (gen >> old) & 1:
                cut |= 1 << new
        if cut not in hrad_space.closed:
            gens_closed = False

    negations_in_radical = all(
        any(
            (rad >> a.join[a.neg(px)][a.neg(py)]) & 1
            for px in _power_list(a, x)
            for py in _power_list(a, y)
        )
        for x in range(a.n)
        for y in range(a.n)
        if a.mul[x][y] == a.zero
    )

    battery = {
        "max_hausdorff": hausdorff,
        "radical_hull_unique_maximal": unique_max,
        "max_retract_of_radical_hull": retract,
        "radical_hull_normal": normaletc,
        "generalizations_closed_in_radical_hull": gens_closed,
        "negation_joins_in_radical": negations_in_radical,
    }
    if len(set(battery.values())) != 1:
        raise EquivalenceViolation(
            "Hausdorff battery disagrees", detail=(a.label, battery)
        )
    return battery


def is_soft(a: ResiduatedLattice, verdict: GelfandVerdict | None = None):
    """Three equivalent readings of softness, with unanimity asserted."""
    if verdict is None:
        verdict = gelfand_verdict(a)
    one = 1 << a.one
    rad = flt.radical_total(a, one)
    primes = flt.prime_filters(a)
    semis = flt.is_semisimple(a)
    by_definition = semis and all(
        len(flt.maximals_over(a, p)) == 1
        for p in primes
        if p & rad == rad
    )
    hspace = top.spec_space(a, "hull", primes)
    maxmask = 0
    for m in flt.maximal_filters(a):
        maxmask |= 1 << primes.index(m)
    by_topology = top.is_hausdorff(pr.max_subspace(a)) and (
        hspace.closure(maxmask) == hspace.full
    )
    by_gelfand = verdict.verdict and rad == one
    routes = {
        "semisimple_with_unique_maximals_over_radical": by_definition,
        "max_hausdorff_and_dense": by_topology,
        "gelfand_and_trivial_radical": by_gelfand,
    }
    if len(set(routes.values())) != 1:
        raise EquivalenceViolation(
            "softness routes disagree", detail=(a.label, routes)
        )
    return by_definition, routes


def classification(a: ResiduatedLattice, verdict: GelfandVerdict | None = None) -> dict[str, bool]:
    """The six classification flags used by reports and the search."""
    if verdict is None:
        verdict = gelfand_verdict(a)
    soft, _ = is_soft(a, verdict)
    return {
        "gelfand": verdict.verdict,
        "soft": soft,
        "local": flt.is_local(a),
        "semisimple": flt.is_semisimple(a),
        "rickart": flt.is_rickart(a),
        "baer": flt.is_baer(a),
    }
