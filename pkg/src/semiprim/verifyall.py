"""The shipped verification corpus.

A deterministic, ordered registry of named checks covering the whole
acceptance surface: engine-versus-oracle equivalence, the semidirect
criterion cross-validation corpus, the diagonal counterexample, the
quotient/Fitting/coprimality verifiers, structure-operator oracles, the
per-edge local-action suites and vacuity honesty.  ``verify_all`` runs
them serially or in a process pool; the report content is identical
either way.
"""

from __future__ import annotations

import math
import time
from typing import Callable

from . import __version__
from . import constructions as cons
from . import localaction as la
from . import oracle
from . import structure as st
from .caps import Caps, default_caps
from .criteria import (
    SemidirectSpec,
    decide_both,
    is_semiprimitive_definition,
    is_semiregular,
    regular_normal_analysis,
    verify_coprime_lemma,
    verify_fitting_lemma,
    verify_quotient_lemma,
)
from .groups import PermGroup
from .perms import Permutation
from .reports import FAIL, PASS, SKIP, CheckResult, VerdictReport, group_witness

#: the corpus needs more conjugacy-class room than the conservative default
#: (the diagonal fixture alone has 103 classes)
CORPUS_CAPS = default_caps().scaled(max_classes=512)


# ---------------------------------------------------------------------------
# fixture builders


def _engine_fixtures() -> list[tuple[str, Callable[[], PermGroup]]]:
    return [
        ("sym3", lambda: PermGroup.symmetric(3)),
        ("sym4", lambda: PermGroup.symmetric(4)),
        ("alt4", lambda: PermGroup.alternating(4)),
        ("alt5", lambda: PermGroup.alternating(5)),
        ("dihedral4", lambda: cons.dihedral(4)),
        ("dihedral5", lambda: cons.dihedral(5)),
        ("quaternion", cons.quaternion),
        ("cyclic9", lambda: PermGroup.cyclic(9)),
        ("klein", cons.klein_four),
        ("pgl27", cons.pgl_2_7),
        ("heawood-group", lambda: cons.heawood()[1]),
        ("tutte-coxeter-group", lambda: cons.tutte_coxeter()[1]),
        ("f16-group", lambda: cons.cayley_f16_quintic()[1]),
        ("petersen-group", lambda: cons.petersen()[1]),
        ("k33-group", lambda: cons.complete_bipartite(3)[1]),
        ("extraspecial27", lambda: cons.extraspecial_group(3, 1).group),
        ("extraspecial125", lambda: cons.extraspecial_group(5, 1).group),
        ("inversion-5-c5", lambda: cons.family_inversion(5, [1]).group),
        ("vector-2121", lambda: cons.family_vector(2, 1, 2, 1).group),
        ("vector-3121", lambda: cons.family_vector(3, 1, 2, 1).group),
        ("exfamily-3", lambda: cons.family_extraspecial(3, caps=CORPUS_CAPS).group),
        ("exfamily-5", lambda: cons.family_extraspecial(5, caps=CORPUS_CAPS).group),
        ("c3-2-5", lambda: cons.family_c3([2, 5], caps=CORPUS_CAPS).group),
    ]


def _semidirect_corpus() -> list[tuple[str, Callable[[], cons.GroupRecipe], bool]]:
    """(name, builder, expected_semiprimitive) for every recipe fixture."""
    caps = CORPUS_CAPS
    entries: list[tuple[str, Callable[[], cons.GroupRecipe], bool]] = []
    for q, shape in (
        (3, [1]), (3, [2]), (3, [1, 1]), (3, [2, 1]),
        (5, [1]), (5, [2]), (5, [1, 1]), (7, [1]),
    ):
        entries.append(
            (
                f"inversion-{q}-{'x'.join(map(str, shape))}",
                (lambda q=q, shape=shape: cons.family_inversion(q, shape, caps=caps)),
                True,
            )
        )
    for q, a, n, m in (
        (2, 1, 2, 1), (2, 1, 2, 2), (3, 1, 1, 1), (3, 1, 1, 2), (3, 1, 2, 1),
        (2, 2, 1, 1), (2, 1, 3, 1), (5, 1, 1, 1), (2, 2, 1, 2),
    ):
        entries.append(
            (
                f"vector-{q}-{a}-{n}-{m}",
                (lambda q=q, a=a, n=n, m=m: cons.family_vector(q, a, n, m, caps=caps)),
                True,
            )
        )
    for q in (3, 5):
        entries.append(
            (f"exfamily-{q}", (lambda q=q: cons.family_extraspecial(q, caps=caps)), True)
        )
    for primes in ([2], [5], [11], [2, 5]):
        entries.append(
            (
                "c3-" + "-".join(map(str, primes)),
                (lambda primes=primes: cons.family_c3(primes, caps=caps)),
                True,
            )
        )
    entries.append(("c4-inversion", _c4_inversion_recipe, False))
    return entries


def _c4_inversion_recipe() -> cons.GroupRecipe:
    c4 = PermGroup.cyclic(4)
    spec = SemidirectSpec(
        c4, [[g.inverse() for g in c4.generators]], name="C4:C2-inversion", caps=CORPUS_CAPS
    )
    return cons.GroupRecipe(
        family="custom",
        params={"kernel": "C4", "action": "inversion"},
        spec=spec,
        group=spec.point_group,
        expected_order=8,
        kernel_order=4,
        name="C4:C2-inversion",
    )


_SMALL_FOR_LATTICE_ORACLE: list[tuple[str, Callable[[], PermGroup]]] = [
    ("sym3", lambda: PermGroup.symmetric(3)),
    ("sym4", lambda: PermGroup.symmetric(4)),
    ("alt4", lambda: PermGroup.alternating(4)),
    ("alt5", lambda: PermGroup.alternating(5)),
    ("dihedral4", lambda: cons.dihedral(4)),
    ("dihedral5", lambda: cons.dihedral(5)),
    ("dihedral6", lambda: cons.dihedral(6)),
    ("quaternion", cons.quaternion),
    ("cyclic4", lambda: PermGroup.cyclic(4)),
    ("cyclic9", lambda: PermGroup.cyclic(9)),
    ("klein", cons.klein_four),
    ("extraspecial27", lambda: cons.extraspecial_group(3, 1).group),
    ("extraspecial125", lambda: cons.extraspecial_group(5, 1).group),
    ("sl23", lambda: cons.family_c3([2]).group),
    ("inversion-3-c9", lambda: cons.family_inversion(3, [2]).group),
]


# ---------------------------------------------------------------------------
# check implementations


def check_engine_oracle(name: str) -> list[CheckResult]:
    builder = dict(_engine_fixtures())[name]
    group = builder()
    target = f"{name}(order={group.order()})"
    if group.order() > 10**5:
        return [CheckResult("engine-oracle", target, SKIP, {"reason": "above oracle cap"})]
    elements = oracle.naive_element_set(group)
    problems: dict = {}
    if len(elements) != group.order():
        problems["order"] = {"chain": group.order(), "naive": len(elements)}
    if not all(group.contains_array(arr) for arr in elements.values()):
        problems["membership"] = "naive element rejected by the chain"
    streamed = 0
    for arr in group.element_arrays():
        if arr.tobytes() not in elements:
            problems["streaming"] = "chain streamed a foreign element"
            break
        streamed += 1
    else:
        if streamed != len(elements):
            problems["streaming"] = {"streamed": streamed, "naive": len(elements)}
    for x in range(min(group.degree, 4)):
        orb = group.orbit(x)
        if orb != oracle.naive_orbit(group, x):
            problems.setdefault("orbits", []).append(x)
        stab = group.point_stabilizer(x)
        if len(orb) * stab.order() != group.order():
            problems.setdefault("orbit-stabilizer", []).append(x)
    status = PASS if not problems else FAIL
    return [CheckResult("engine-oracle", target, status, problems or {"order": group.order()})]


def check_semidirect(name: str) -> list[CheckResult]:
    table = {entry[0]: entry for entry in _semidirect_corpus()}
    _, builder, expected = table[name]
    recipe = builder()
    spec = recipe.spec
    target = recipe.name
    out: list[CheckResult] = []
    verdict = decide_both(spec, CORPUS_CAPS)
    ok = verdict.semiprimitive == expected
    witness = {
        "expected": expected,
        "got": verdict.semiprimitive,
        "checked_by": verdict.checked_by,
        "order": recipe.group.order(),
        "degree": recipe.group.degree,
    }
    if not verdict.semiprimitive:
        if verdict.witness is None:
            ok = False
            witness["missing_witness"] = True
        else:
            w = verdict.witness["normal_subgroup"]
            sub = PermGroup(recipe.group.degree, [Permutation(g) for g in w["generators"]])
            independent = (
                sub.is_normal_in(recipe.group)
                and not sub.is_transitive()
                and not is_semiregular(sub)
            )
            witness["witness_reverified"] = independent
            ok = ok and independent
    out.append(CheckResult("semidirect-verdict", target, PASS if ok else FAIL, witness))

    # the realisation invariants: order product, regular normal kernel
    k = spec.k_point_group
    inv_ok = (
        recipe.group.order() == recipe.kernel_order * spec.h_point_group.order()
        and k.is_transitive()
        and is_semiregular(k)
        and k.is_normal_in(recipe.group)
    )
    out.append(
        CheckResult(
            "semidirect-realisation",
            target,
            PASS if inv_ok else FAIL,
            {"kernel_order": recipe.kernel_order, "point_group_order": recipe.group.order()},
        )
    )
    return out


def check_family_invariants() -> list[CheckResult]:
    """The extra structural facts the example families must satisfy."""
    out: list[CheckResult] = []
    caps = CORPUS_CAPS

    # inversion family: the complement normalises the Frattini subgroup of
    # P and inverts P modulo it
    recipe = cons.family_inversion(3, [2, 1], caps=caps)
    p_group = recipe.spec.kernel
    frat = st.frattini_p(p_group, caps)
    h = recipe.spec.h_point_group.generators[0]
    norm_ok = all(
        frat.contains_array(recipe.spec.apply_aut(h, m.images)) for m in frat.generators
    )
    invert_ok = all(
        frat.contains_array((Permutation(recipe.spec.apply_aut(h, g.images), _trusted=True) * g).images)
        for g in p_group.generators
    )
    out.append(
        CheckResult(
            "inversion-frattini",
            recipe.name,
            PASS if (norm_ok and invert_ok) else FAIL,
            {"frattini_order": frat.order()},
        )
    )

    # extraspecial family: H faithful on E, and irreducible on E modulo the
    # center (no proper invariant subgroup strictly between)
    recipe3 = cons.family_extraspecial(3, caps=caps)
    spec3 = recipe3.spec
    e_group = spec3.kernel
    faithful = spec3.h_point_group.order() == 24
    z = st.center(e_group, caps)
    lattice = st.all_normal_subgroups(e_group, caps)
    strictly_between = []
    for member in lattice.members:
        if z.order() < member.order() < e_group.order() and z.is_subgroup_of(member):
            if all(
                member.contains_array(spec3.apply_aut(hgen, m.images))
                for hgen in spec3.h_point_group.generators
                for m in member.generators
            ):
                strictly_between.append(member.order())
    out.append(
        CheckResult(
            "extraspecial-irreducible",
            recipe3.name,
            PASS if (faithful and not strictly_between) else FAIL,
            {"H_order": spec3.h_point_group.order(), "invariant_between": strictly_between},
        )
    )

    # c3 family arithmetic: K = Q8 x 5^(1+2) has order 1000, G order 3000
    recipe_c3 = cons.family_c3([2, 5], caps=caps)
    out.append(
        CheckResult(
            "c3-arithmetic",
            recipe_c3.name,
            PASS
            if (recipe_c3.group.degree == 1000 and recipe_c3.group.order() == 3000)
            else FAIL,
            {"degree": recipe_c3.group.degree, "order": recipe_c3.group.order()},
        )
    )
    return out


def check_d4_negative() -> list[CheckResult]:
    d4 = cons.dihedral(4)
    verdict = is_semiprimitive_definition(d4, CORPUS_CAPS)
    ok = not verdict.semiprimitive and verdict.witness is not None
    if ok:
        w = verdict.witness["normal_subgroup"]
        sub = PermGroup(4, [Permutation(g) for g in w["generators"]])
        ok = (
            sub.is_normal_in(d4)
            and not sub.is_transitive()
            and not is_semiregular(sub)
        )
    return [
        CheckResult(
            "semidirect-verdict",
            "D4-natural",
            PASS if ok else FAIL,
            verdict.witness,
        )
    ]


def check_diagonal() -> list[CheckResult]:
    recipe = cons.diagonal_counterexample(CORPUS_CAPS)
    group = recipe.group
    out = []
    verdict = is_semiprimitive_definition(group, CORPUS_CAPS)
    out.append(
        CheckResult(
            "diagonal-semiprimitive",
            recipe.name,
            PASS if verdict.semiprimitive else FAIL,
            {"regular_normal_orders": verdict.regular_normal_orders},
        )
    )
    analysis = regular_normal_analysis(group, CORPUS_CAPS)
    regs = analysis["regular_normal_orders"]
    ok = (
        analysis["regular_normal_count"] == 3
        and regs == [3600, 3600, 3600]
        and analysis["status"] == "no-soluble-regular-normal"
        and not analysis["soluble_flags"][0]
        and analysis["containments_between_regulars"] == []
    )
    out.append(
        CheckResult(
            "diagonal-three-regular-normals",
            recipe.name,
            PASS if ok else FAIL,
            {
                "count": analysis["regular_normal_count"],
                "orders": regs,
                "soluble": analysis["soluble_flags"],
                "status": analysis["status"],
            },
        )
    )
    return out


def check_quotient_lemma(name: str) -> list[CheckResult]:
    table = {entry[0]: entry for entry in _semidirect_corpus()}
    _, builder, expected = table[name]
    recipe = builder()
    group = recipe.group
    target = recipe.name
    if not expected:
        return [CheckResult("quotient-lemma", target, SKIP, {"reason": "fixture not semiprimitive"})]
    if group.order() > 10**4:
        return [CheckResult("quotient-lemma", target, SKIP, {"reason": "above the order cap 10^4"})]
    lattice = st.all_normal_subgroups(group, CORPUS_CAPS)
    ran = 0
    for member in lattice.members:
        if member.is_transitive() and not member.is_trivial():
            continue
        result = verify_quotient_lemma(group, member, CORPUS_CAPS, target=target)
        if result.status == FAIL:
            return [result]
        if result.status == PASS:
            ran += 1
    return [CheckResult("quotient-lemma", target, PASS, {"quotients_checked": ran})]


def check_fitting_lemma(name: str) -> list[CheckResult]:
    table = {entry[0]: entry for entry in _semidirect_corpus()}
    _, builder, _ = table[name]
    recipe = builder()
    target = recipe.name
    out = []
    fit = verify_fitting_lemma(recipe.group, CORPUS_CAPS)
    fit.target = target
    out.append(fit)
    analysis = regular_normal_analysis(recipe.group, CORPUS_CAPS)
    out.append(
        CheckResult(
            "kernel-containments",
            target,
            PASS if analysis["status"] == "pass" else FAIL,
            {"status": analysis["status"], "problems": analysis.get("problems")},
        )
    )
    return out


def check_coprime_lemma() -> list[CheckResult]:
    out = []
    recipe = cons.family_extraspecial(3, caps=CORPUS_CAPS)
    res = verify_coprime_lemma(recipe.spec, CORPUS_CAPS)
    o2 = st.core_p(recipe.spec.h_point_group, 2, CORPUS_CAPS)
    values_ok = o2.order() == 8 and recipe.kernel_order == 27 and 27 % 2 == 1
    out.append(
        CheckResult(
            "coprime-lemma",
            recipe.name,
            PASS if (res.status == PASS and values_ok) else FAIL,
            {"O_2(H)": o2.order(), "K_order": recipe.kernel_order},
        )
    )
    # the planar vector fixture: here O_3(H) is the rotation subgroup, so
    # the statement bites (3 must not divide |K| = 4) and F(G) = K
    recipe2 = cons.family_vector(2, 1, 2, 1)
    res2 = verify_coprime_lemma(recipe2.spec, CORPUS_CAPS)
    o3 = st.core_p(recipe2.spec.h_point_group, 3, CORPUS_CAPS)
    fit_g = st.fitting(recipe2.group, CORPUS_CAPS)
    bites = o3.order() == 3 and recipe2.kernel_order % 3 != 0
    out.append(
        CheckResult(
            "coprime-lemma",
            recipe2.name,
            PASS if (res2.status == PASS and bites and fit_g.order() == 4) else FAIL,
            {"O_3(H)": o3.order(), "F(G)": fit_g.order(), "K_order": recipe2.kernel_order},
        )
    )
    return out


def check_lattice_oracle(name: str) -> list[CheckResult]:
    builder = dict(_SMALL_FOR_LATTICE_ORACLE)[name]
    group = builder()
    target = f"{name}(order={group.order()})"
    naive = oracle.naive_normal_subgroups(group, cap_order=200)
    lattice = st.all_normal_subgroups(group, CORPUS_CAPS)
    ok = len(naive) == len(lattice.members)
    if ok:
        for member in lattice.members:
            if not any(
                member.order() == n.order() and member.is_subgroup_of(n) for n in naive
            ):
                ok = False
                break
    return [
        CheckResult(
            "lattice-oracle",
            target,
            PASS if ok else FAIL,
            {"naive": len(naive), "lattice": len(lattice.members)},
        )
    ]


def check_radical_oracle(name: str) -> list[CheckResult]:
    builder = dict(_SMALL_FOR_LATTICE_ORACLE)[name]
    group = builder()
    target = f"{name}(order={group.order()})"
    naive_normals = oracle.naive_normal_subgroups(group, cap_order=200)
    problems: dict = {}
    from .numutil import prime_factors

    for p in prime_factors(group.order()):
        op = st.core_p(group, p, CORPUS_CAPS)
        best = max(
            (n for n in naive_normals if n.order() == oracle_p_part(n.order(), p)),
            key=PermGroup.order,
        )
        if not (op.same_group(best)):
            problems[f"O_{p}"] = {"computed": op.order(), "naive": best.order()}
    fit = st.fitting(group, CORPUS_CAPS)
    nilpotents = [n for n in naive_normals if st.is_nilpotent(n)]
    best_nil = max(nilpotents, key=PermGroup.order)
    if not fit.same_group(best_nil):
        problems["fitting"] = {"computed": fit.order(), "naive": best_nil.order()}
    return [
        CheckResult(
            "radical-oracle", target, PASS if not problems else FAIL, problems or None
        )
    ]


def oracle_p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def check_pgroup_oracle(name: str) -> list[CheckResult]:
    builders = {
        "quaternion": cons.quaternion,
        "dihedral4": lambda: cons.dihedral(4),
        "cyclic9": lambda: PermGroup.cyclic(9),
        "extraspecial27": lambda: cons.extraspecial_group(3, 1).group,
        "extraspecial125": lambda: cons.extraspecial_group(5, 1).group,
        "sylow2-sym4": lambda: st.sylow(PermGroup.symmetric(4), 2),
    }
    group = builders[name]()
    target = f"{name}(order={group.order()})"
    from .numutil import prime_factors

    p = next(iter(prime_factors(group.order())))
    problems = {}
    subs = oracle.all_subgroups(group, cap_order=200)
    proper = [s for s in subs if s.order() < group.order()]
    maximal = [
        s
        for s in proper
        if not any(
            s.order() < t.order() < group.order() and s.is_subgroup_of(t) for t in proper
        )
    ]
    frat_naive = maximal[0]
    for m in maximal[1:]:
        frat_naive = frat_naive.intersection_with(m)
    frat = st.frattini_p(group, CORPUS_CAPS)
    if not frat.same_group(frat_naive):
        problems["frattini"] = {"computed": frat.order(), "naive": frat_naive.order()}
    omega = st.omega_center(group, CORPUS_CAPS)
    z = st.center(group, CORPUS_CAPS)
    naive_omega_gens = [
        Permutation(arr.copy(), _trusted=True)
        for arr in z.element_arrays()
        if not Permutation(arr, _trusted=True).is_identity()
        and (Permutation(arr, _trusted=True) ** p).is_identity()
    ]
    naive_omega = PermGroup(group.degree, naive_omega_gens, assume_order=z.order())
    if not omega.same_group(naive_omega):
        problems["omega-center"] = {"computed": omega.order(), "naive": naive_omega.order()}
    naive_max = oracle.naive_max_elementary_abelians(group, p, cap_order=200)
    mine = st.max_elementary_abelians(group, CORPUS_CAPS)
    match = len(naive_max) == len(mine) and all(
        any(a.same_group(b) for b in naive_max) for a in mine
    )
    if not match:
        problems["max-elementary-abelians"] = {
            "computed": sorted(a.order() for a in mine),
            "naive": sorted(a.order() for a in naive_max),
        }
    j_naive = naive_max[0]
    for a in naive_max[1:]:
        j_naive = j_naive.join(a, assume_order=group.order())
    j = st.thompson(group, CORPUS_CAPS)
    if not j.same_group(j_naive):
        problems["thompson"] = {"computed": j.order(), "naive": j_naive.order()}
    return [
        CheckResult("pgroup-oracle", target, PASS if not problems else FAIL, problems or None)
    ]


def check_spot_values() -> list[CheckResult]:
    s4 = PermGroup.symmetric(4)
    q8 = cons.quaternion()
    d4 = cons.dihedral(4)
    values = {
        "O_2(S4)": st.core_p(s4, 2, CORPUS_CAPS).order(),
        "J(Q8)": st.thompson(q8, CORPUS_CAPS).order(),
        "Z(Q8)": st.center(q8, CORPUS_CAPS).order(),
        "J(D4)": st.thompson(d4, CORPUS_CAPS).order(),
        "Phi(Q8)": st.frattini_p(q8, CORPUS_CAPS).order(),
    }
    ok = (
        values["O_2(S4)"] == 4
        and values["J(Q8)"] == 2
        and st.thompson(q8, CORPUS_CAPS).same_group(st.center(q8, CORPUS_CAPS))
        and values["J(D4)"] == 8
        and st.frattini_p(q8, CORPUS_CAPS).same_group(st.center(q8, CORPUS_CAPS))
    )
    return [CheckResult("structure-spot-values", "named-values", PASS if ok else FAIL, values)]


def _build_pair(fixture: str) -> la.ArcPair:
    graph, group = cons.named_fixture(fixture)
    return la.check_arc_transitive(graph, group, fixture)


def check_local_heawood() -> list[CheckResult]:
    pair = _build_pair("heawood")
    results, rep = la.edge_suite(pair, caps=CORPUS_CAPS, target="heawood")
    orders = rep.orders() if rep is not None else {}
    expected = {
        "G_x": 24,
        "G_x_kernel": 4,
        "edge_kernel": 2,
        "Q_x": 4,
        "QxQy": 8,
    }
    mismatches = {k: (orders.get(k), v) for k, v in expected.items() if orders.get(k) != v}
    quotient_ok = (
        rep is not None
        and rep.p == 2
        and rep.quotient_data.get("r") == 1
        and rep.quotient_data.get("factor_orders") == [6]
        and rep.quotient_data.get("commutator_part_orders") == [4]
    )
    results.append(
        CheckResult(
            "expected-values",
            "heawood",
            PASS if (not mismatches and quotient_ok) else FAIL,
            {"orders": orders, "mismatches": mismatches, "decomposition": rep.quotient_data if rep else None},
        )
    )
    return results


def check_local_tutte_coxeter() -> list[CheckResult]:
    pair = _build_pair("tutte-coxeter")
    results, rep = la.edge_suite(pair, caps=CORPUS_CAPS, target="tutte-coxeter")
    orders = rep.orders() if rep is not None else {}
    ok = (
        rep is not None
        and orders.get("G_x") == 48
        and orders.get("edge_kernel") == 4
        and rep.p == 2
        and all(f == 6 for f in rep.quotient_data.get("factor_orders", []))
    )
    results.append(
        CheckResult(
            "expected-values",
            "tutte-coxeter",
            PASS if ok else FAIL,
            {"orders": orders, "decomposition": rep.quotient_data if rep else None},
        )
    )
    return results


def check_order_bound_f16() -> list[CheckResult]:
    pair = _build_pair("f16")
    bound = la.verify_order_bound(pair, CORPUS_CAPS, target="f16")
    hyp = la.local_hypothesis(pair, 0, CORPUS_CAPS)
    extras_ok = (
        bound.status == PASS
        and pair.valency == 5
        and math.gcd(pair.valency, 6) == 1
        and hyp.holds
        and hyp.regular_nilpotent_local.order() == 5
        and hyp.local_order == 20
    )
    return [
        bound,
        CheckResult(
            "order-bound-context",
            "f16",
            PASS if extras_ok else FAIL,
            {
                "valency": pair.valency,
                "local_order": hyp.local_order,
                "regular_nilpotent_order": hyp.regular_nilpotent_local.order() if hyp.holds else None,
            },
        ),
    ]


def check_vacuity() -> list[CheckResult]:
    """No silent passes: trivial edge kernels and blocked valencies must
    come back vacuous/skip for every verifier that depends on them."""
    out = []
    for fixture in ("k4", "k33", "petersen", "f16"):
        pair = _build_pair(fixture)
        results, rep = la.edge_suite(pair, caps=CORPUS_CAPS, target=fixture)
        statuses = {r.check_id: r.status for r in results}
        anatomy_vacuous = all(
            statuses.get(check) == "vacuous"
            for check in ("anatomy", "statement-suite", "decomposition", "local-quotient-shape")
        )
        bound = la.verify_order_bound(pair, CORPUS_CAPS, target=fixture)
        if fixture == "f16":
            bound_ok = bound.status == PASS
        else:
            bound_ok = bound.status == SKIP
        ok = anatomy_vacuous and rep is None and bound_ok
        out.append(
            CheckResult(
                "vacuity-honesty",
                fixture,
                PASS if ok else FAIL,
                {"statuses": statuses, "order_bound": bound.status},
            )
        )
    return out


def check_determinism_rebuild() -> list[CheckResult]:
    """Identical inputs must give identical chains, orbits and reports."""
    problems = {}
    g1, grp1 = cons.heawood()
    g2, grp2 = cons.heawood()
    if [list(l.orbit) for l in grp1.chain.levels] != [list(l.orbit) for l in grp2.chain.levels]:
        problems["orbit-order"] = True
    if grp1.chain.base != grp2.chain.base:
        problems["base"] = True
    t1 = [
        lvl.transversal[p].tobytes() for lvl in grp1.chain.levels for p in lvl.orbit
    ]
    t2 = [
        lvl.transversal[p].tobytes() for lvl in grp2.chain.levels for p in lvl.orbit
    ]
    if t1 != t2:
        problems["transversals"] = True
    lat1 = st.all_normal_subgroups(PermGroup.symmetric(4), CORPUS_CAPS)
    lat2 = st.all_normal_subgroups(PermGroup.symmetric(4), CORPUS_CAPS)
    import json

    if json.dumps(lat1.to_json(), sort_keys=True) != json.dumps(lat2.to_json(), sort_keys=True):
        problems["lattice-json"] = True
    return [
        CheckResult(
            "determinism-rebuild",
            "heawood+sym4",
            PASS if not problems else FAIL,
            problems or None,
        )
    ]


# ---------------------------------------------------------------------------
# registry and runner


def registry() -> list[tuple[str, Callable[[], list[CheckResult]]]]:
    checks: list[tuple[str, Callable[[], list[CheckResult]]]] = []
    for name, _ in _engine_fixtures():
        checks.append((f"engine/{name}", lambda name=name: check_engine_oracle(name)))
    for name, _, _ in _semidirect_corpus():
        checks.append((f"semiprim/{name}", lambda name=name: check_semidirect(name)))
    checks.append(("semiprim/d4-natural", check_d4_negative))
    checks.append(("semiprim/family-invariants", check_family_invariants))
    checks.append(("counterexample/diagonal", check_diagonal))
    for name, _, expected in _semidirect_corpus():
        if expected:
            checks.append(
                (f"section2/quotient/{name}", lambda name=name: check_quotient_lemma(name))
            )
    for name in ("inversion-5-1", "inversion-3-2", "vector-2-1-2-1", "exfamily-3", "c3-2", "c3-2-5"):
        checks.append(
            (f"section2/fitting/{name}", lambda name=name: check_fitting_lemma(name))
        )
    checks.append(("section2/coprime", check_coprime_lemma))
    for name, _ in _SMALL_FOR_LATTICE_ORACLE:
        checks.append(
            (f"structure/lattice/{name}", lambda name=name: check_lattice_oracle(name))
        )
        checks.append(
            (f"structure/radicals/{name}", lambda name=name: check_radical_oracle(name))
        )
    for name in ("quaternion", "dihedral4", "cyclic9", "extraspecial27", "extraspecial125", "sylow2-sym4"):
        checks.append(
            (f"structure/pgroup/{name}", lambda name=name: check_pgroup_oracle(name))
        )
    checks.append(("structure/spot-values", check_spot_values))
    checks.append(("local/heawood", check_local_heawood))
    checks.append(("local/tutte-coxeter", check_local_tutte_coxeter))
    checks.append(("local/f16-bound", check_order_bound_f16))
    checks.append(("local/vacuity", check_vacuity))
    checks.append(("determinism/rebuild", check_determinism_rebuild))
    return checks


_REGISTRY_CACHE: dict[str, Callable[[], list[CheckResult]]] | None = None


def _registry_map() -> dict[str, Callable[[], list[CheckResult]]]:
    global _REGISTRY_CACHE
    if _REGISTRY_CACHE is None:
        _REGISTRY_CACHE = dict(registry())
    return _REGISTRY_CACHE


def run_check(check_id: str) -> list[CheckResult]:
    fn = _registry_map()[check_id]
    start = time.perf_counter()
    try:
        results = fn()
    except Exception as exc:  # a crash is a failed check, never a dead suite
        results = [
            CheckResult(
                check_id.split("/")[-1],
                check_id,
                FAIL,
                {"error": f"{type(exc).__name__}: {exc}"},
            )
        ]
    elapsed = (time.perf_counter() - start) * 1000.0
    for r in results:
        r.check_id = f"{check_id}::{r.check_id}"
        r.millis = elapsed / max(len(results), 1)
    return results


def verify_all(
    jobs: int = 1, filter_substr: str | None = None
) -> VerdictReport:
    ids = [check_id for check_id, _ in registry()]
    if filter_substr:
        ids = [i for i in ids if filter_substr in i]
    report = VerdictReport(version=__version__)
    if jobs <= 1:
        for check_id in ids:
            report.extend(run_check(check_id))
        return report
    import multiprocessing as mp

    with mp.Pool(processes=jobs) as pool:
        chunks = pool.map(run_check, ids)
    for chunk in chunks:
        report.extend(chunk)
    return report
