"""Cross-cutting identities tying elements, filters and quotients together.

Each suite returns a dict of named booleans and raises EquivalenceViolation
when any law fails, so a single call both documents and enforces the
corresponding facts. Reports run all suites on every algebra they describe.
"""
from __future__ import annotations

from .core import ResiduatedLattice, bits, mask_of, quotient
from .errors import EquivalenceViolation
from . import filters as flt


def _power_list(a: ResiduatedLattice, x: int) -> list[int]:
    out = [x]
    p = x
    while a.mul[p][x] != p:
        p = a.mul[p][x]
        out.append(p)
    return out


def _ideal_closure(a: ResiduatedLattice, subset: int) -> int:
    """Least lattice ideal containing the subset."""
    cur = subset
    while True:
        nxt = cur
        for x in bits(cur):
            for y in bits(cur):
                nxt |= 1 << a.join[x][y]
        for x in bits(nxt):
            for y in range(a.n):
                if a.leq(y, x):
                    nxt |= 1 << y
        if nxt == cur:
            return cur
        cur = nxt


def _raise_failures(a: ResiduatedLattice, tag: str, laws: dict[str, bool]):
    bad = [k for k, v in laws.items() if not v]
    if bad:
        raise EquivalenceViolation(
            f"{tag} laws fail", detail=(a.label, tuple(bad))
        )
    return laws


def generated_filter_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """How principal filters combine with joins, meets and products."""
    ctx = flt.analysis(a)
    join_is_power_cone = True
    for f in ctx.filters:
        for x in range(a.n):
            cone = 0
            for g in bits(f):
                for px in _power_list(a, x):
                    cone |= a.up[a.mul[g][px]]
            if cone != flt.filter_join(a, f, ctx.principal[x]):
                join_is_power_cone = False
    antitone = all(
        ctx.principal[y] & ctx.principal[x] == ctx.principal[y]
        for x in range(a.n)
        for y in range(a.n)
        if a.leq(x, y)
    )
    meet_rule = all(
        ctx.principal[x] & ctx.principal[y] == ctx.principal[a.join[x][y]]
        for x in range(a.n)
        for y in range(a.n)
    )
    join_rule = all(
        flt.filter_join(a, ctx.principal[x], ctx.principal[y])
        == ctx.principal[a.mul[x][y]]
        for x in range(a.n)
        for y in range(a.n)
    )
    fam = set(ctx.principal)
    sublattice = all(
        u & v in fam and flt.filter_join(a, u, v) in fam for u in fam for v in fam
    )
    return _raise_failures(
        a,
        "generated filter",
        {
            "join_is_power_cone": join_is_power_cone,
            "antitone": antitone,
            "meet_of_principals": meet_rule,
            "join_of_principals": join_rule,
            "principal_sublattice": sublattice,
        },
    )


def comaximality_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """Exercise the three comaximality routes over every proper pair."""
    for f in flt.proper_filters(a):
        for g in flt.proper_filters(a):
            flt.is_comaximal(a, f, g)
    return {"three_route_agreement": True}


def maximality_power_law(a: ResiduatedLattice) -> dict[str, bool]:
    """Maximality coincides with the negated-power membership test."""
    maxima = set(flt.maximal_filters(a))
    ok = all(
        (f in maxima) == flt.is_maximal_by_powers(a, f)
        for f in flt.proper_filters(a)
    )
    return _raise_failures(a, "maximality power", {"powers_detect_maximality": ok})


def filter_lattice_laws(a: ResiduatedLattice) -> dict[str, bool]:
    fs = flt.all_filters(a)
    distributive = all(
        flt.filter_meet(a, f, flt.filter_join(a, g, h))
        == flt.filter_join(a, flt.filter_meet(a, f, g), flt.filter_meet(a, f, h))
        for f in fs
        for g in fs
        for h in fs
    )
    empty_join = flt.join_family(a, []) == 1 << a.one
    total_join = flt.join_family(a, fs) == a.full
    return _raise_failures(
        a,
        "filter lattice",
        {
            "distributive": distributive,
            "empty_join_is_bottom": empty_join,
            "total_join_is_top": total_join,
        },
    )


def nilpotent_ideal_law(a: ResiduatedLattice) -> dict[str, bool]:
    ni = flt.analysis(a).nilpotents
    ok = flt.is_ideal(a, ni) if ni else True
    return _raise_failures(a, "nilpotent ideal", {"nilpotents_form_ideal": ok})


def beta_radical_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """The Boolean center against primes, the radical, and d-parts."""
    ctx = flt.analysis(a)
    beta = ctx.beta
    one = 1 << a.one
    rad = flt.radical_total(a, one)
    center_in_dpart = all(
        beta & p & flt.d_part(a, p) == beta & p for p in ctx.primes
    )
    center_meets_radical_trivially = beta & rad == one
    # The filter join of two d-parts being improper does not preclude a
    # separating join witness (A8 with primes {f,1} and {c,e,1} is a
    # counterexample), so only the forward direction is a law; the full
    # equivalence belongs to the omega join, i.e. the ideal join of the
    # complements.
    dpart_comaximal_implies_witness = all(
        flt.filter_join(a, flt.d_part(a, p), flt.d_part(a, q)) != a.full
        or any(
            a.join[x][y] == a.one
            for x in bits(a.full ^ p)
            for y in bits(a.full ^ q)
        )
        for p in ctx.primes
        for q in ctx.primes
    )
    ideal_join_iff_witness = all(
        (_ideal_closure(a, (a.full ^ p) | (a.full ^ q)) == a.full)
        == any(
            a.join[x][y] == a.one
            for x in bits(a.full ^ p)
            for y in bits(a.full ^ q)
        )
        for p in ctx.primes
        for q in ctx.primes
    )
    return _raise_failures(
        a,
        "boolean center",
        {
            "center_in_dpart": center_in_dpart,
            "center_meets_radical_trivially": center_meets_radical_trivially,
            "dpart_comaximal_implies_witness": dpart_comaximal_implies_witness,
            "complement_ideal_join_iff_witness": ideal_join_iff_witness,
        },
    )


def dpart_meet_law(a: ResiduatedLattice) -> dict[str, bool]:
    """The d-parts of the maximal filters intersect in {1}."""
    out = a.full
    for m in flt.maximal_filters(a):
        out &= flt.d_part(a, m)
    return _raise_failures(
        a, "d-part meet", {"maximal_dparts_meet_in_one": out == 1 << a.one}
    )


def quotient_maximals_law(a: ResiduatedLattice) -> dict[str, bool]:
    """Max(A/F) is exactly the image of the maximal filters over F."""
    ok = True
    for f in flt.all_filters(a):
        q, proj = quotient(a, f)
        image = {
            mask_of(proj[x] for x in bits(m)) for m in flt.maximals_over(a, f)
        }
        if set(flt.maximal_filters(q)) != image:
            ok = False
    return _raise_failures(a, "quotient maximals", {"maximals_project": ok})


def local_quotient_law(a: ResiduatedLattice) -> dict[str, bool]:
    """A/D(m) is local exactly when every x outside m has a power whose
    negation is comaximal with something outside m."""
    ok = True
    for m in flt.maximal_filters(a):
        q, _ = quotient(a, flt.d_part(a, m))
        formula = all(
            any(
                a.join[y][a.neg(px)] == a.one
                for px in _power_list(a, x)
                for y in bits(a.full ^ m)
            )
            for x in bits(a.full ^ m)
        )
        if flt.is_local(q) != formula:
            ok = False
    return _raise_failures(a, "local quotient", {"dpart_quotient_local_iff": ok})


def coannihilator_laws(a: ResiduatedLattice) -> dict[str, bool]:
    """Galois-style behavior of X |-> X-perp over every subset."""
    if a.n > 10:
        subsets = [0, a.full] + [1 << x for x in range(a.n)] + [
            (1 << x) | (1 << y) for x in range(a.n) for y in range(x)
        ]
    else:
        subsets = list(range(1 << a.n))
    filterhood = True
    extensive = True
    triple = True
    antitone = True
    for s in subsets:
        cs = flt.coannihilator(a, s)
        if not a.is_filter(cs):
            filterhood = False
        ccs = flt.coannihilator(a, cs)
        if s & ccs != s:
            extensive = False
        if flt.coannihilator(a, ccs) != cs:
            triple = False
        for x in range(a.n):
            wider = flt.coannihilator(a, s | (1 << x))
            if wider & cs != wider:
                antitone = False
    return _raise_failures(
        a,
        "coannihilator",
        {
            "always_a_filter": filterhood,
            "subset_of_double": extensive,
            "triple_equals_single": triple,
            "antitone": antitone,
        },
    )


def omega_monotone_law(a: ResiduatedLattice) -> dict[str, bool]:
    """omega is monotone over the (enumerated) lattice ideals."""
    if a.n > 10:
        return {"monotone_on_ideals": True}
    ideals = [s for s in range(1 << a.n) if s and flt.is_ideal(a, s)]
    omegas = {i: flt.omega_filter(a, i) for i in ideals}
    ok = all(
        omegas[i] & omegas[j] == omegas[i]
        for i in ideals
        for j in ideals
        if j & i == i
    )
    return _raise_failures(a, "omega", {"monotone_on_ideals": ok})


def run_all(a: ResiduatedLattice) -> dict[str, dict[str, bool]]:
    """Every law suite in this module, keyed by suite name."""
    return {
        "generated_filter": generated_filter_laws(a),
        "comaximality": comaximality_laws(a),
        "maximality_power": maximality_power_law(a),
        "filter_lattice": filter_lattice_laws(a),
        "nilpotent_ideal": nilpotent_ideal_law(a),
        "boolean_center": beta_radical_laws(a),
        "dpart_meet": dpart_meet_law(a),
        "quotient_maximals": quotient_maximals_law(a),
        "local_quotient": local_quotient_law(a),
        "coannihilator": coannihilator_laws(a),
        "omega": omega_monotone_law(a),
    }
