"""Pure filters: the sigma and rho operators and the pure spectrum.

sigma(F) is computed two independent ways and the results are compared every
time: as the kernel of the generalizations of the hull of F, and elementwise
as {x : F v coann(x) = A}. rho(F) is the largest pure filter inside F, where
pure means sigma-fixed. The purely prime filters carry the pure spectrum,
whose closed sets are the pure hulls h_p(F).
"""
from __future__ import annotations

from .core import ResiduatedLattice, bits
from .errors import EquivalenceViolation
from . import filters as flt
from . import topology as top


def _ctx(a: ResiduatedLattice) -> dict:
    store = a._cache.setdefault("pure", {})
    return store


def sigma(a: ResiduatedLattice, f: int) -> int:
    """Pure closure data of a filter, by two routes that must agree."""
    cache = _ctx(a).setdefault("sigma", {})
    if f in cache:
        return cache[f]
    primes = flt.prime_filters(a)
    hf = top.hull_in(primes, f)
    gen = top.generalization_mask(primes, hf)
    via_kernel = top.kernel_of(a, primes, gen)
    via_joins = 0
    for x in range(a.n):
        if flt.filter_join(a, f, flt.element_coannihilator(a, x)) == a.full:
            via_joins |= 1 << x
    if via_kernel != via_joins:
        raise EquivalenceViolation(
            "sigma routes disagree",
            detail=(a.label, a.set_repr(f), a.set_repr(via_kernel), a.set_repr(via_joins)),
        )
    cache[f] = via_kernel
    return via_kernel


def pure_filters(a: ResiduatedLattice) -> tuple[int, ...]:
    ctx = _ctx(a)
    if "pure" not in ctx:
        ctx["pure"] = tuple(
            f for f in flt.all_filters(a) if sigma(a, f) == f
        )
    return ctx["pure"]


def is_pure(a: ResiduatedLattice, f: int) -> bool:
    return sigma(a, f) == f


def rho(a: ResiduatedLattice, f: int) -> int:
    """Join of the pure filters below f (the pure part of f)."""
    cache = _ctx(a).setdefault("rho", {})
    if f not in cache:
        cache[f] = flt.join_family(
            a, (p for p in pure_filters(a) if p & f == p)
        )
    return cache[f]


def purely_prime(a: ResiduatedLattice) -> tuple[int, ...]:
    """Proper pure filters prime with respect to meets of pure filters."""
    ctx = _ctx(a)
    if "spp" in ctx:
        return ctx["spp"]
    pure = pure_filters(a)
    out = []
    for cand in pure:
        if cand == a.full:
            continue
        good = True
        for f in pure:
            for g in pure:
                if (f & g) & cand == f & g and not (
                    f & cand == f or g & cand == g
                ):
                    good = False
                    break
            if not good:
                break
        if good:
            out.append(cand)
    ctx["spp"] = flt.canonical_sort(out)
    return ctx["spp"]


def purely_maximal(a: ResiduatedLattice) -> tuple[int, ...]:
    """Maximal elements among the proper pure filters."""
    proper = [f for f in pure_filters(a) if f != a.full]
    return flt.canonical_sort(
        f
        for f in proper
        if not any(g != f and g & f == f for g in proper)
    )


def pure_spectrum_space(a: ResiduatedLattice) -> top.FiniteSpace:
    """The purely prime filters with closed sets the pure hulls."""
    points = purely_prime(a)
    closed = {top.hull_in(points, f) for f in pure_filters(a)}
    closed |= {0, (1 << len(points)) - 1}
    return top.audit_space(f"{a.label}:pure-spectrum", points, closed)


def d_topology_space(a: ResiduatedLattice) -> top.FiniteSpace:
    """Spec with closed sets the hulls of pure filters (opens are d(F))."""
    points = flt.prime_filters(a)
    closed = {top.hull_in(points, f) for f in pure_filters(a)}
    closed |= {0, (1 << len(points)) - 1}
    return top.audit_space(f"{a.label}:d-topology", points, closed)


def pure_part_map(a: ResiduatedLattice) -> tuple[tuple[int, int], ...]:
    """rho restricted to the spectrum: (prime, rho(prime)) pairs."""
    return tuple((p, rho(a, p)) for p in flt.prime_filters(a))


def max_subspace(a: ResiduatedLattice) -> top.FiniteSpace:
    """The maximal filters with the relative hull-kernel topology."""
    primes = flt.prime_filters(a)
    mask = 0
    for m in flt.maximal_filters(a):
        mask |= 1 << primes.index(m)
    return top.subspace(top.spec_space(a, "hull"), mask, f"{a.label}:max")


def spp_max_homeo(a: ResiduatedLattice) -> bool:
    """Is rho a homeomorphism from the maximal spectrum onto the pure one?"""
    maxima = flt.maximal_filters(a)
    spp = purely_prime(a)
    if len(maxima) != len(spp):
        return False
    source = max_subspace(a)
    target = pure_spectrum_space(a)
    images = []
    for m in maxima:
        r = rho(a, m)
        if r not in spp:
            raise EquivalenceViolation(
                "pure part of a maximal filter is not purely prime",
                detail=(a.label, a.set_repr(m)),
            )
        images.append(spp.index(r))
    return top.is_homeomorphism(lambda i: images[i], source, target)


def d_topology_coincidence(a: ResiduatedLattice) -> bool:
    """Do the hull-kernel and d-topologies agree on the maximals?"""
    primes = flt.prime_filters(a)
    mask = 0
    for m in flt.maximal_filters(a):
        mask |= 1 << primes.index(m)
    via_hull = top.subspace(top.spec_space(a, "hull"), mask, "h")
    via_d = top.subspace(d_topology_space(a), mask, "d")
    return set(via_hull.closed) == set(via_d.closed)


def rho_rad_adjunction(a: ResiduatedLattice) -> bool:
    """rho(F) <= G iff F <= Rad(G), over all filter pairs."""
    fs = flt.all_filters(a)
    for f in fs:
        rf = rho(a, f)
        for g in fs:
            lhs = rf & g == rf
            rhs = f & flt.radical_total(a, g) == f
            if lhs != rhs:
                return False
    return True


def sigma_battery(a: ResiduatedLattice) -> dict[str, bool]:
    """Five sigma-side characterizations, each quantified exhaustively.

    The join-homomorphism condition is stated for arbitrary families; the
    filter lattice is finite and join-closed, so the pairwise law plus the
    empty family already forces the general one by induction on family size.
    """
    fs = flt.all_filters(a)
    maxima = flt.maximal_filters(a)
    one = 1 << a.one
    max_inclusion = all(
        not (sigma(a, f) & m == sigma(a, f)) or f & m == f
        for f in fs
        for m in maxima
    )
    same_maximals = all(
        flt.maximals_over(a, f) == flt.maximals_over(a, sigma(a, f)) for f in fs
    )
    same_radical = all(
        flt.radical_total(a, f) == flt.radical_total(a, sigma(a, f)) for f in fs
    )
    preserves_comax = all(
        flt.filter_join(a, sigma(a, f), sigma(a, g)) == a.full
        for f in fs
        for g in fs
        if flt.filter_join(a, f, g) == a.full
    )
    join_hom = sigma(a, one) == one and all(
        sigma(a, flt.filter_join(a, f, g))
        == flt.filter_join(a, sigma(a, f), sigma(a, g))
        for f in fs
        for g in fs
    )
    return {
        "max_inclusion_reflects": max_inclusion,
        "same_maximals": same_maximals,
        "same_radical": same_radical,
        "preserves_comaximal": preserves_comax,
        "join_homomorphism": join_hom,
    }


def rho_battery(a: ResiduatedLattice) -> dict[str, bool]:
    """Rho-side counterparts, plus comaximality of maximal pure parts."""
    fs = flt.all_filters(a)
    maxima = flt.maximal_filters(a)
    one = 1 << a.one
    max_inclusion = all(
        not (rho(a, f) & m == rho(a, f)) or f & m == f
        for f in fs
        for m in maxima
    )
    same_maximals = all(
        flt.maximals_over(a, f) == flt.maximals_over(a, rho(a, f)) for f in fs
    )
    same_radical = all(
        flt.radical_total(a, f) == flt.radical_total(a, rho(a, f)) for f in fs
    )
    preserves_comax = all(
        flt.filter_join(a, rho(a, f), rho(a, g)) == a.full
        for f in fs
        for g in fs
        if flt.filter_join(a, f, g) == a.full
    )
    join_hom = rho(a, one) == one and all(
        rho(a, flt.filter_join(a, f, g))
        == flt.filter_join(a, rho(a, f), rho(a, g))
        for f in fs
        for g in fs
    )
    max_parts_comax = all(
        flt.filter_join(a, rho(a, m), rho(a, n)) == a.full
        for m in maxima
        for n in maxima
        if m != n
    )
    return {
        "max_inclusion_reflects": max_inclusion,
        "same_maximals": same_maximals,
        "same_radical": same_radical,
        "preserves_comaximal": preserves_comax,
        "join_homomorphism": join_hom,
        "maximal_parts_comaximal": max_parts_comax,
    }


def pure_characterization_family(a: ResiduatedLattice) -> tuple[int, ...]:
    """{kernel of the generalization of the maximals inside a closed set},
    ranging over the closed sets of Spec_h; the generalization kernel of a
    maximal is its d-part, so this intersects d-parts."""
    primes = flt.prime_filters(a)
    hspace = top.spec_space(a, "hull", primes)
    maxset = set(flt.maximal_filters(a))
    family = set()
    for c in hspace.closed:
        k = a.full
        for i in bits(c):
            if primes[i] in maxset:
                k &= flt.d_part(a, primes[i])
        family.add(k)
    return flt.canonical_sort(family)


# ---------------------------------------------------------------- law suites


def _subfamilies(items, cap_bits=12):
    """All subfamilies when small, else a deterministic systematic sample."""
    k = len(items)
    if k <= cap_bits:
        for s in range(1 << k):
            yield [items[i] for i in range(k) if (s >> i) & 1]
        return
    for s in range(1 << cap_bits):
        yield [items[i] for i in range(cap_bits) if (s >> i) & 1]
    yield list(items)


def sigma_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """The unconditional sigma laws; every False is raised as a violation."""
    fs = flt.all_filters(a)
    laws = {}
    laws["routes_agree"] = all(sigma(a, f) is not None for f in fs)
    laws["contractive_filter"] = all(
        a.is_filter(sigma(a, f)) and sigma(a, f) & f == sigma(a, f) for f in fs
    )
    laws["monotone"] = all(
        sigma(a, f) & sigma(a, g) == sigma(a, f)
        for f in fs
        for g in fs
        if f & g == f
    )
    laws["below_d_part_on_primes"] = all(
        sigma(a, p) & flt.d_part(a, p) == sigma(a, p)
        for p in flt.prime_filters(a)
    )
    laws["equals_d_part_on_maximals"] = all(
        sigma(a, m) == flt.d_part(a, m) for m in flt.maximal_filters(a)
    )
    laws["meet_homomorphism"] = all(
        sigma(a, f & g) == sigma(a, f) & sigma(a, g) for f in fs for g in fs
    )
    laws["family_join_inequality"] = all(
        (lambda j: j & sigma(a, flt.join_family(a, fam)) == j)(
            flt.join_family(a, (sigma(a, f) for f in fam))
        )
        for fam in _subfamilies(fs)
    )
    _raise_failures(a, "sigma law", laws)
    return laws


def sigma_frame_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """The pure filters form a frame inside the filter lattice."""
    pure = pure_filters(a)
    pure_set = set(pure)
    laws = {
        "meet_closed": all(f & g in pure_set for f in pure for g in pure),
        "join_closed": all(
            flt.filter_join(a, f, g) in pure_set for f in pure for g in pure
        ),
        "bounds": (1 << a.one) in pure_set and a.full in pure_set,
        "frame_distributivity": all(
            f & flt.join_family(a, fam)
            == flt.join_family(a, (f & g for g in fam))
            for f in pure
            for fam in _subfamilies(pure)
        ),
    }
    _raise_failures(a, "sigma frame law", laws)
    return laws


def pure_intersection_law(a: ResiduatedLattice) -> dict[str, bool]:
    """Every pure filter is the meet of the d-parts of the maximals over it."""
    ok = True
    for f in pure_filters(a):
        k = a.full
        for m in flt.maximals_over(a, f):
            k &= flt.d_part(a, m)
        if k != f:
            ok = False
    laws = {"pure_is_meet_of_d_parts": ok}
    _raise_failures(a, "pure intersection law", laws)
    return laws


def rho_laws(a: ResiduatedLattice) -> dict[str, bool]:
    fs = flt.all_filters(a)
    pure = set(pure_filters(a))
    laws = {}
    laws["below_sigma"] = all(
        rho(a, f) & sigma(a, f) == rho(a, f) for f in fs
    )
    laws["kernel_operator"] = all(
        rho(a, f) & f == rho(a, f) and rho(a, rho(a, f)) == rho(a, f)
        for f in fs
    ) and all(
        rho(a, f) & rho(a, g) == rho(a, f) for f in fs for g in fs if f & g == f
    )
    laws["fixed_points_are_pure"] = {f for f in fs if rho(a, f) == f} == pure
    laws["meet_homomorphism"] = all(
        rho(a, f & g) == rho(a, f) & rho(a, g) for f in fs for g in fs
    )
    laws["pure_is_meet_of_maximal_parts"] = all(
        _meet_of_rho_maximals(a, f) == f for f in pure
    )
    laws["pure_recovered_from_radical"] = all(
        rho(a, flt.radical_total(a, f)) == f for f in pure
    )
    laws["same_part_as_d_part_on_primes"] = all(
        rho(a, p) == rho(a, flt.d_part(a, p)) for p in flt.prime_filters(a)
    )
    _raise_failures(a, "rho law", laws)
    return laws


def _meet_of_rho_maximals(a: ResiduatedLattice, f: int) -> int:
    out = a.full
    for m in flt.maximals_over(a, f):
        out &= rho(a, m)
    return out


def purely_prime_laws(a: ResiduatedLattice) -> dict[str, bool]:
    spp = set(purely_prime(a))
    laws = {}
    laws["pure_part_of_prime_is_purely_prime"] = all(
        rho(a, p) in spp for p in flt.prime_filters(a)
    )
    laws["purely_maximal_are_max_pure_parts"] = set(purely_maximal(a)) <= {
        rho(a, m) for m in flt.maximal_filters(a)
    }
    ok = True
    for f in pure_filters(a):
        k = a.full
        for cand in spp:
            if cand & f == f:
                k &= cand
        if k != f:
            ok = False
    laws["pure_is_meet_of_purely_primes_above"] = ok
    _raise_failures(a, "purely prime law", laws)
    return laws


def continuity_law(a: ResiduatedLattice) -> dict[str, bool]:
    """The pure part map reflects the pure-spectrum opens exactly:
    for pure F and prime p, F <= rho(p) iff F <= p."""
    ok = all(
        (f & rho(a, p) == f) == (f & p == f)
        for f in pure_filters(a)
        for p in flt.prime_filters(a)
    )
    laws = {"pure_part_map_reflects_opens": ok}
    _raise_failures(a, "continuity law", laws)
    return laws


def stable_open_law(a: ResiduatedLattice) -> dict[str, bool]:
    """Opens of Spec_h stable under specialization = duals of pure filters."""
    primes = flt.prime_filters(a)
    hspace = top.spec_space(a, "hull", primes)
    stable_opens = {
        o
        for o in hspace.opens()
        if top.specialization_mask(primes, o) == o
    }
    pure_duals = {
        hspace.full ^ top.hull_in(primes, f) for f in pure_filters(a)
    }
    laws = {"stable_opens_are_pure_duals": stable_opens == pure_duals}
    _raise_failures(a, "stable open law", laws)
    return laws


def gelfand_pure_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """Laws that hold under the Gelfand hypothesis; caller gates on it."""
    fs = flt.all_filters(a)
    spp = purely_prime(a)
    laws = {}
    laws["rho_equals_sigma"] = all(rho(a, f) == sigma(a, f) for f in fs)
    laws["purely_maximal_structure"] = (
        set(purely_maximal(a))
        == {rho(a, m) for m in flt.maximal_filters(a)}
        == set(spp)
    )
    space = pure_spectrum_space(a)
    laws["pure_spectrum_hausdorff"] = top.is_hausdorff(space)
    laws["pure_spectrum_discrete"] = top.is_discrete(space)
    laws["pure_family_from_closed_sets"] = (
        tuple(pure_characterization_family(a)) == pure_filters(a)
    )
    _raise_failures(a, "Gelfand pure law", laws)
    return laws


def _raise_failures(a: ResiduatedLattice, tag: str, laws: dict[str, bool]):
    bad = [k for k, v in laws.items() if not v]
    if bad:
        raise EquivalenceViolation(f"{tag} failed: {bad}", detail=a.label)
