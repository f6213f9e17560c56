"""Local-action analysis of arc-transitive graph/group pairs.

Given a pair (graph, vertex group) this module checks arc-transitivity,
forms the local action of a vertex stabiliser on its neighbourhood, and
runs the whole vertex-stabiliser anatomy for one edge: the two kernels,
the p-radicals, the closure subgroup and its residue, omega-centers,
Thompson subgroups, and the statement suites built on top of them
(the statement-by-statement anatomy suite, the factorial order bound,
the reflection-group decomposition of the action on the closed
omega-center, and the local quotient shape).

Every verifier returns typed :class:`~semiprim.reports.CheckResult`
values; hypothesis failures yield ``skip`` and genuinely empty cases
(trivial edge kernel) yield ``vacuous``, never a silent pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .caps import Caps, default_caps
from .errors import (
    InconsistencyError,
    NotArcTransitive,
    ParameterError,
    SemiprimError,
)
from .graphs import Graph
from .groups import InducedAction, PairedHomomorphism, PermGroup, quotient_action
from .numutil import is_prime_power, p_part
from .perms import Permutation, identity_images, inv, is_identity, mul
from .reports import FAIL, PASS, SKIP, VACUOUS, CheckResult, group_witness
from .criteria import is_regular, is_semiprimitive_definition, is_semiregular
from .structure import (
    all_normal_subgroups,
    centralizer,
    center,
    commutator_subgroup,
    core_p,
    core_p_prime,
    is_nilpotent,
    max_elementary_abelians,
    normal_closure,
    normalizer_in,
    p_separability,
    subgroup_product_order,
    sylow,
    thompson,
    thompson_of_group,
)


class AnatomyObstruction(SemiprimError):
    """The computed subgroups contradict the expected structure; carries a
    serialisable finding instead of crashing verification suites."""

    def __init__(self, message: str, finding: dict):
        super().__init__(message)
        self.finding = finding


@dataclass
class ArcPair:
    graph: Graph
    group: PermGroup
    valency: int
    name: str = ""

    def neighbors(self, x: int) -> list[int]:
        return list(self.graph.neighbors(x))


def check_arc_transitive(graph: Graph, group: PermGroup, name: str = "") -> ArcPair:
    """Validate that the group is a vertex- and arc-transitive subgroup of
    the automorphism group of a connected regular graph."""
    if group.degree != graph.n:
        raise NotArcTransitive("group degree differs from the vertex count")
    if not graph.is_connected():
        raise NotArcTransitive("graph is not connected")
    if not graph.is_regular():
        raise NotArcTransitive("graph is not regular")
    edges = graph.edges()
    for g in group.generators:
        for u, v in edges:
            gu, gv = int(g.images[u]), int(g.images[v])
            if gu not in graph.neighbors(gv):
                raise NotArcTransitive("a generator does not preserve adjacency")
    if not group.is_transitive():
        raise NotArcTransitive("group is not vertex-transitive")
    x = 0
    y = graph.neighbors(0)[0]
    orbit = {(x, y)}
    queue = [(x, y)]
    gen_arrays = [g.images for g in group.generators]
    while queue:
        u, v = queue.pop()
        for g in gen_arrays:
            arc = (int(g[u]), int(g[v]))
            if arc not in orbit:
                orbit.add(arc)
                queue.append(arc)
    if len(orbit) != 2 * graph.edge_count:
        raise NotArcTransitive(
            f"arc orbit has size {len(orbit)}, expected {2 * graph.edge_count}"
        )
    return ArcPair(graph=graph, group=group, valency=graph.valency(), name=name)


def local_action(pair: ArcPair, x: int) -> InducedAction:
    """Action of the vertex stabiliser on the neighbourhood of x."""
    stab = pair.group.point_stabilizer(x)
    return stab.induced_action(pair.neighbors(x))


@dataclass
class LocalHypothesis:
    holds: bool
    semiprimitive: bool
    local_order: int
    regular_nilpotent_local: PermGroup | None
    reason: str = ""


def local_hypothesis(pair: ArcPair, x: int = 0, caps: Caps | None = None) -> LocalHypothesis:
    """The standing hypothesis: the local action is semiprimitive and has a
    (necessarily unique) regular normal nilpotent subgroup."""
    caps = caps or default_caps()
    act = local_action(pair, x)
    verdict = is_semiprimitive_definition(act.image, caps)
    lattice = all_normal_subgroups(act.image, caps)
    candidates = [m for m in lattice.members if is_regular(m) and is_nilpotent(m)]
    if verdict.semiprimitive and len(candidates) > 1:
        raise InconsistencyError("several regular nilpotent normal local subgroups")
    if not verdict.semiprimitive:
        return LocalHypothesis(False, False, act.image.order(), None, "local action not semiprimitive")
    if not candidates:
        return LocalHypothesis(
            False, True, act.image.order(), None, "no regular normal nilpotent local subgroup"
        )
    return LocalHypothesis(True, True, act.image.order(), candidates[0])


def kernels(pair: ArcPair, edge: tuple[int, int]) -> tuple[PermGroup, PermGroup]:
    """Pointwise stabilisers of the closed neighbourhood of x and of the
    union of the two closed neighbourhoods of an edge."""
    x, y = edge
    if y not in pair.graph.neighbors(x):
        raise ParameterError(f"({x},{y}) is not an edge")
    g_x1 = pair.group.pointwise_stabilizer([x] + pair.neighbors(x))
    both = [x, y] + pair.neighbors(x) + pair.neighbors(y)
    g_xy1 = pair.group.pointwise_stabilizer(list(dict.fromkeys(both)))
    return g_x1, g_xy1


def verify_order_bound(
    pair: ArcPair, caps: Caps | None = None, target: str = ""
) -> CheckResult:
    """The factorial bound: under the local hypothesis and valency coprime
    to six, the edge-kernel must vanish and |G_x| <= d!(d-1)!."""
    caps = caps or default_caps()
    d = pair.valency
    check = "order-bound"
    if math.gcd(d, 6) != 1:
        return CheckResult(check, target, SKIP, {"reason": "valency shares a factor with 6", "valency": d})
    hyp = local_hypothesis(pair, 0, caps)
    if not hyp.holds:
        return CheckResult(check, target, SKIP, {"reason": hyp.reason})
    x = 0
    y = pair.neighbors(0)[0]
    _, g_xy1 = kernels(pair, (x, y))
    g_x = pair.group.point_stabilizer(x)
    bound = math.factorial(d) * math.factorial(d - 1)
    witness = {
        "valency": d,
        "edge_kernel_order": g_xy1.order(),
        "vertex_stabilizer_order": g_x.order(),
        "bound": bound,
    }
    if g_xy1.order() != 1 or g_x.order() > bound:
        return CheckResult(check, target, FAIL, witness)
    return CheckResult(check, target, PASS, witness)


# ---------------------------------------------------------------------------
# anatomy


@dataclass
class AnatomyReport:
    """All subgroups attached to one oriented edge of the pair."""

    x: int
    y: int
    p: int
    companion_prime: int
    g_x: PermGroup
    g_y: PermGroup
    g_x1: PermGroup
    g_y1: PermGroup
    g_xy: PermGroup
    g_xy1: PermGroup
    q_x: PermGroup
    q_y: PermGroup
    qxqy: PermGroup
    l_x: PermGroup
    r0: PermGroup
    z_xy: PermGroup
    z_x: PermGroup
    r: PermGroup
    m_x: PermGroup
    j_lx: PermGroup
    j_x: PermGroup
    sylow_lx: PermGroup
    a_of_sylow: list[PermGroup]
    j_of_sylow: PermGroup
    local_act: InducedAction
    local_regular_nilpotent: PermGroup
    quotient_data: dict = field(default_factory=dict)

    def orders(self) -> dict:
        return {
            "G_x": self.g_x.order(),
            "G_x_kernel": self.g_x1.order(),
            "G_y_kernel": self.g_y1.order(),
            "G_xy": self.g_xy.order(),
            "edge_kernel": self.g_xy1.order(),
            "Q_x": self.q_x.order(),
            "Q_y": self.q_y.order(),
            "QxQy": self.qxqy.order(),
            "L_x": self.l_x.order(),
            "R0": self.r0.order(),
            "Z_xy": self.z_xy.order(),
            "Z_x": self.z_x.order(),
            "R": self.r.order(),
            "M_x": self.m_x.order(),
            "J(L_x)": self.j_lx.order(),
            "J_x": self.j_x.order(),
        }

    def to_json_obj(self) -> dict:
        obj = {
            "edge": [self.x, self.y],
            "p": self.p,
            "companion_prime": self.companion_prime,
            "orders": self.orders(),
            "subgroups": {
                name: group_witness(grp)
                for name, grp in (
                    ("Q_x", self.q_x),
                    ("Q_y", self.q_y),
                    ("L_x", self.l_x),
                    ("R0", self.r0),
                    ("Z_xy", self.z_xy),
                    ("Z_x", self.z_x),
                    ("R", self.r),
                    ("M_x", self.m_x),
                    ("J_x", self.j_x),
                )
            },
            "sylow_of_closure": group_witness(self.sylow_lx),
            "max_elementary_abelians": [group_witness(a) for a in self.a_of_sylow],
            "thompson_of_sylow": group_witness(self.j_of_sylow),
        }
        if self.quotient_data:
            obj["decomposition"] = self.quotient_data
        return obj


def anatomy(pair: ArcPair, edge: tuple[int, int], caps: Caps | None = None) -> AnatomyReport:
    """Compute every anatomy subgroup for one oriented edge.

    Preconditions (checked): the local hypothesis holds and the edge
    kernel is nontrivial.  A non-prime-power edge-kernel order is a
    structural contradiction and raises :class:`AnatomyObstruction`.
    """
    caps = caps or default_caps()
    x, y = edge
    hyp = local_hypothesis(pair, x, caps)
    if not hyp.holds:
        raise ParameterError(f"local hypothesis fails: {hyp.reason}")
    g_x1, g_xy1 = kernels(pair, (x, y))
    if g_xy1.order() == 1:
        raise ParameterError("edge kernel is trivial; anatomy is vacuous")
    ok, p = is_prime_power(g_xy1.order())
    if not ok:
        raise AnatomyObstruction(
            "edge-kernel order is not a prime power",
            {
                "finding": "edge-kernel order is not a prime power",
                "edge_kernel": group_witness(g_xy1),
            },
        )
    g_x = pair.group.point_stabilizer(x)
    g_y = pair.group.point_stabilizer(y)
    g_xy = pair.group.pointwise_stabilizer([x, y])
    g_y1 = pair.group.pointwise_stabilizer([y] + pair.neighbors(y))

    q_x = core_p(g_x1, p, caps)
    q_y = core_p(g_y1, p, caps)
    qxqy = PermGroup(
        pair.group.degree,
        list(q_x.generators) + list(q_y.generators),
        assume_order=pair.group.order(),
    )
    if qxqy.order() != p_part(qxqy.order(), p):
        raise AnatomyObstruction(
            "product of the two radicals is not a p-group",
            {"finding": "QxQy not a p-group", "order": qxqy.order()},
        )
    l_x = normal_closure(g_x, list(q_x.generators) + list(q_y.generators))
    r0 = core_p_prime(l_x, p, caps)
    from .structure import omega_center

    z_xy = omega_center(qxqy, caps)
    z_x = normal_closure(g_x, z_xy.generators)

    local_act = local_action(pair, x)
    n_local = hyp.regular_nilpotent_local
    l_x_local = local_act.image_of_subgroup(l_x)
    if not n_local.is_subgroup_of(l_x_local):
        raise InconsistencyError("closure misses the local regular nilpotent subgroup")
    act_lx = l_x.induced_action(pair.neighbors(x))
    r = act_lx.preimage_of_subgroup(n_local)

    m_x = centralizer(l_x, z_x.generators, caps)
    j_lx = thompson_of_group(l_x, p, caps)
    j_x = j_lx.join(m_x, assume_order=g_x.order())
    syl = sylow(l_x, p, caps)
    a_s = max_elementary_abelians(syl, caps)
    j_s = thompson(syl, caps)

    return AnatomyReport(
        x=x,
        y=y,
        p=p,
        companion_prime=5 - p,
        g_x=g_x,
        g_y=g_y,
        g_x1=g_x1,
        g_y1=g_y1,
        g_xy=g_xy,
        g_xy1=g_xy1,
        q_x=q_x,
        q_y=q_y,
        qxqy=qxqy,
        l_x=l_x,
        r0=r0,
        z_xy=z_xy,
        z_x=z_x,
        r=r,
        m_x=m_x,
        j_lx=j_lx,
        j_x=j_x,
        sylow_lx=syl,
        a_of_sylow=a_s,
        j_of_sylow=j_s,
        local_act=local_act,
        local_regular_nilpotent=n_local,
    )


def anatomy_invariants(pair: ArcPair, rep: AnatomyReport, target: str = "") -> CheckResult:
    """Containments, normality and counting facts every anatomy must satisfy."""
    problems = []

    def need(cond: bool, label: str):
        if not cond:
            problems.append(label)

    g_x = rep.g_x
    need(rep.g_x.order() == rep.local_act.image.order() * rep.g_x1.order(),
         "|G_x| = |local action| * |vertex kernel|")
    g_edge_setwise = pair.group.setwise_stabilizer([rep.x, rep.y])
    need(g_edge_setwise.order() == 2 * rep.g_xy.order(), "|G_{x,y}| = 2 |G_xy|")
    need(rep.q_x.is_subgroup_of(rep.l_x), "Q_x <= L_x")
    need(rep.r0.is_subgroup_of(rep.r), "R0 <= R")
    need(rep.r.is_subgroup_of(rep.l_x), "R <= L_x")
    lx_meet_gx1 = rep.l_x.pointwise_stabilizer([rep.x] + pair.neighbors(rep.x))
    need(lx_meet_gx1.is_subgroup_of(rep.r), "L_x meet vertex kernel <= R")
    from .structure import omega_center

    need(rep.z_x.is_subgroup_of(omega_center(rep.q_x)), "Z_x <= OmegaZ(Q_x)")
    need(rep.m_x.is_subgroup_of(rep.j_x), "M_x <= J_x")
    need(rep.j_x.is_subgroup_of(rep.l_x), "J_x <= L_x")
    for name, sub in (("L_x", rep.l_x), ("R0", rep.r0), ("Z_x", rep.z_x),
                      ("J_x", rep.j_x), ("M_x", rep.m_x), ("R", rep.r)):
        need(sub.is_normal_in(g_x), f"{name} normal in G_x")

    # a nontrivial subgroup fixed by both closed neighbourhoods cannot have
    # transitive normaliser images on both sides
    k = rep.g_xy1
    if k.order() > 1:
        n_x = normalizer_in(rep.g_x, k)
        n_y = normalizer_in(rep.g_y, k)
        img_x = rep.local_act.image_of_subgroup(n_x)
        act_y = local_action(pair, rep.y)
        img_y = act_y.image_of_subgroup(n_y)
        need(not (img_x.is_transitive() and img_y.is_transitive()),
             "normaliser images of the edge kernel both transitive")
    if problems:
        return CheckResult("anatomy-invariants", target, FAIL, {"violated": problems})
    return CheckResult("anatomy-invariants", target, PASS)


# ---------------------------------------------------------------------------
# the statement suite on one edge


def _img(rep: AnatomyReport, sub: PermGroup) -> PermGroup:
    return rep.local_act.image_of_subgroup(sub)


def anatomy_statements(
    pair: ArcPair, rep: AnatomyReport, caps: Caps | None = None, target: str = ""
) -> list[CheckResult]:
    """One pass/fail item per anatomy statement; failures carry witnesses."""
    caps = caps or default_caps()
    out: list[CheckResult] = []
    p = rep.p

    def add(check: str, ok: bool, witness: dict | None = None):
        out.append(CheckResult(check, target, PASS if ok else FAIL, witness))

    # semiregular local parts meet the arc stabiliser inside the kernel
    for label, sub in (("residue", rep.r), ("coprime-radical", rep.r0)):
        image = _img(rep, sub)
        if not is_semiregular(image):
            add(f"semiregular-intersection[{label}]", False,
                {"reason": "hypothesis: image not semiregular"})
            continue
        meet = sub.pointwise_stabilizer([rep.y])
        ok = meet.is_subgroup_of(rep.g_x1)
        add(f"semiregular-intersection[{label}]", ok,
            None if ok else {"meet": group_witness(meet)})

    # the opposite radical acts, and the closure is locally transitive
    q_y_img = _img(rep, rep.q_y)
    l_x_img = _img(rep, rep.l_x)
    add("opposite-radical-acts", q_y_img.order() > 1,
        {"image_order": q_y_img.order()})
    add("closure-locally-transitive", l_x_img.is_transitive(),
        {"image_order": l_x_img.order()})

    # the local residue has order coprime to p
    r_img = _img(rep, rep.r)
    add("residue-coprime", math.gcd(r_img.order(), p) == 1,
        {"residue_order": r_img.order(), "p": p})

    # vertex radical: O_p(G_x) = Q_x and the centraliser decomposition
    op_gx = core_p(rep.g_x, p, caps)
    cent = centralizer(rep.g_x, rep.q_x.generators, caps)
    cent_img = _img(rep, cent)
    zq = center(rep.q_x, caps)
    opp_gx = core_p_prime(rep.g_x, p, caps)
    decomposition = zq.join(opp_gx, assume_order=rep.g_x.order())
    add(
        "vertex-radical",
        op_gx.same_group(rep.q_x)
        and not cent_img.is_transitive()
        and cent.same_group(decomposition),
        {
            "O_p(G_x)": op_gx.order(),
            "Q_x": rep.q_x.order(),
            "centralizer": cent.order(),
            "Z(Q_x).O_p'(G_x)": decomposition.order(),
        },
    )

    # the commutator of the closure with the vertex kernel lands in Q_x
    comm = commutator_subgroup(rep.l_x, rep.g_x1)
    add("kernel-commutator-in-radical", comm.is_subgroup_of(rep.q_x),
        {"commutator_order": comm.order(), "Q_x": rep.q_x.order()})

    # Q_x is the Sylow p-subgroup of the residue
    add(
        "radical-is-sylow-of-residue",
        rep.q_x.is_subgroup_of(rep.r) and rep.q_x.order() == p_part(rep.r.order(), p),
        {"Q_x": rep.q_x.order(), "R": rep.r.order()},
    )

    # Z_x sits in OmegaZ(Q_x); Q_x is the Sylow p-subgroup of M_x
    from .structure import omega_center

    add(
        "center-closure-bounds",
        rep.z_x.is_subgroup_of(omega_center(rep.q_x))
        and rep.q_x.is_subgroup_of(rep.m_x)
        and rep.q_x.order() == p_part(rep.m_x.order(), p),
        {"Z_x": rep.z_x.order(), "M_x": rep.m_x.order(), "Q_x": rep.q_x.order()},
    )

    # closure factorisation: L_x = R Q_y, its Sylow is QxQy, and it is
    # p-separable
    meet = rep.r.intersection_with(rep.q_y, caps)
    product_order = rep.r.order() * rep.q_y.order() // meet.order()
    separable, _series = p_separability(rep.l_x, p, caps)
    add(
        "closure-factorization",
        product_order == rep.l_x.order()
        and rep.qxqy.order() == p_part(rep.l_x.order(), p)
        and rep.qxqy.is_subgroup_of(rep.l_x)
        and separable,
        {
            "R.Q_y": product_order,
            "L_x": rep.l_x.order(),
            "QxQy": rep.qxqy.order(),
            "p_separable": separable,
        },
    )

    # the radical survives the coprime quotient
    quot = quotient_action(rep.l_x, rep.r0, caps)
    qx_bar = quot.image_of_subgroup(rep.q_x)
    op_bar = core_p(quot.image, p, caps)
    add("radical-survives-quotient", op_bar.same_group(qx_bar),
        {"O_p(quotient)": op_bar.order(), "Q_x_image": qx_bar.order()})

    # the prime dichotomy: p in {2,3} and the companion prime divides the
    # local residue order
    lx_meet_gx1 = rep.l_x.pointwise_stabilizer([rep.x] + pair.neighbors(rep.x))
    ratio = rep.r.order() // lx_meet_gx1.order()
    q = rep.companion_prime
    add(
        "prime-dichotomy",
        p in (2, 3) and ratio % q == 0,
        {"p": p, "companion": q, "local_residue_order": ratio},
    )

    # the Thompson subgroup survives the coprime quotient
    j_bar = thompson_of_group(quot.image, p, caps)
    j_img = quot.image_of_subgroup(rep.j_lx)
    add("thompson-survives-quotient", j_bar.same_group(j_img),
        {"J(quotient)": j_bar.order(), "J_image": j_img.order()})

    # the quotient has no coprime radical and is not Thompson factorizable
    f_bar = quot.image
    opp_bar = core_p_prime(f_bar, p, caps)
    syl_bar = sylow(f_bar, p, caps)
    omega_bar = omega_center(syl_bar, caps)
    cent_bar = centralizer(f_bar, omega_bar.generators, caps)
    norm_bar = normalizer_in(f_bar, thompson(syl_bar, caps), caps)
    product_size = subgroup_product_order([opp_bar, cent_bar, norm_bar], caps)
    add(
        "no-thompson-factorization",
        opp_bar.is_trivial() and product_size < f_bar.order(),
        {
            "O_p'(quotient)": opp_bar.order(),
            "factorization_size": product_size,
            "quotient_order": f_bar.order(),
        },
    )

    # the Thompson part acts transitively on the neighbourhood
    j_x_img = _img(rep, rep.j_x)
    add("thompson-part-transitive", j_x_img.is_transitive(),
        {"image_order": j_x_img.order()})

    return out


# ---------------------------------------------------------------------------
# decomposition of the action on the closed omega-center


def _sl2_signature(group: PermGroup, p: int, caps: Caps) -> bool:
    if p == 2:
        if group.order() != 6:
            return False
        from .structure import derived_subgroup

        return derived_subgroup(group).order() == 3
    if p == 3:
        if group.order() != 24:
            return False
        from .structure import derived_subgroup

        der = derived_subgroup(group)
        if der.order() != 8:
            return False
        involutions = sum(
            1
            for arr in der.element_arrays()
            if not is_identity(arr) and is_identity(mul(arr, arr))
        )
        return involutions == 1 and center(group, caps).order() == 2
    return False


def _psl2_signature(group: PermGroup, p: int) -> bool:
    from .structure import derived_subgroup

    if p == 2:
        return group.order() == 6 and derived_subgroup(group).order() == 3
    if p == 3:
        return group.order() == 12 and derived_subgroup(group).order() == 4
    return False


def _conjugation_on_elements(actor: PermGroup, target: PermGroup, caps: Caps) -> tuple[PairedHomomorphism, list[np.ndarray]]:
    """Action of ``actor`` on the element list of ``target`` by conjugation."""
    caps.check_enumerate(target.order())
    elements = [arr.copy() for arr in target.element_arrays()]
    index = {arr.tobytes(): i for i, arr in enumerate(elements)}
    n = len(elements)
    dt = identity_images(max(n, 1)).dtype
    image_gens = []
    for g in actor.generators:
        garr = g.images
        ginv = inv(garr)
        out = np.empty(n, dtype=dt)
        for i, e in enumerate(elements):
            out[i] = index[mul(mul(ginv, e), garr).tobytes()]
        image_gens.append(Permutation(out, _trusted=True))
    return PairedHomomorphism(actor, n, image_gens), elements


def verify_decomposition(
    pair: ArcPair, rep: AnatomyReport, caps: Caps | None = None, target: str = ""
) -> list[CheckResult]:
    """The structure of H = J_x / M_x acting on V = Z_x: H must split into
    r commuting order-|SL2(p)| factors, V into the centralised part times
    r factors of order p^2, and every maximal elementary abelian subgroup
    A of a Sylow p-subgroup of H must split along the factors and satisfy
    |A| |C_V(A)| = |V|.
    """
    caps = caps or default_caps()
    out: list[CheckResult] = []
    p = rep.p

    out.append(
        CheckResult(
            "kernel-is-p-group",
            target,
            PASS if (is_prime_power(rep.g_xy1.order())[0] and p in (2, 3)) else FAIL,
            {"edge_kernel_order": rep.g_xy1.order(), "p": p},
        )
    )

    hom, v_elements = _conjugation_on_elements(rep.j_x, rep.z_x, caps)
    h_v = hom.image
    if hom.kernel.order() != rep.m_x.order() or not rep.m_x.is_subgroup_of(hom.kernel):
        out.append(
            CheckResult(
                "action-kernel-is-centralizer",
                target,
                FAIL,
                {"kernel": hom.kernel.order(), "M_x": rep.m_x.order()},
            )
        )
        return out
    out.append(CheckResult("action-kernel-is-centralizer", target, PASS,
                           {"H_order": h_v.order()}))

    sl2_order = 6 if p == 2 else 24
    lattice = all_normal_subgroups(h_v, caps)
    factors: list[PermGroup] = []
    for member in lattice.members:
        if member.order() != sl2_order or not _sl2_signature(member, p, caps):
            continue
        if any(
            not all(
                a.commutator(b).is_identity()
                for a in member.generators
                for b in chosen.generators
            )
            for chosen in factors
        ):
            continue
        if factors:
            current = factors[0]
            for extra in factors[1:]:
                current = current.join(extra, assume_order=h_v.order())
            if not member.intersection_with(current, caps).is_trivial():
                continue
        factors.append(member)
    product = PermGroup.trivial(h_v.degree)
    for f in factors:
        product = product.join(f, assume_order=h_v.order())
    split_ok = bool(factors) and product.order() == h_v.order() and product.order() == sl2_order ** len(factors)
    r = len(factors)
    out.append(
        CheckResult(
            "factor-split",
            target,
            PASS if split_ok else FAIL,
            {"r": r, "factor_orders": [f.order() for f in factors], "H_order": h_v.order()},
        )
    )
    if not split_ok:
        return out

    # pull the factors back to subgroups of J_x and form [V, E_i]
    factor_pre = [hom.preimage_of_subgroup(f) for f in factors]
    v = rep.z_x
    c_v_h = _centralized_part(v, rep.j_x, caps)
    commutator_parts = [commutator_subgroup(v, pre) for pre in factor_pre]

    running = c_v_h
    direct_ok = True
    for part in commutator_parts:
        if not running.intersection_with(part, caps).is_trivial():
            direct_ok = False
            break
        running = running.join(part, assume_order=v.order())
    direct_ok = direct_ok and running.order() == v.order()
    out.append(
        CheckResult(
            "omega-center-splits",
            target,
            PASS if direct_ok else FAIL,
            {
                "V": v.order(),
                "C_V(H)": c_v_h.order(),
                "commutator_orders": [w.order() for w in commutator_parts],
            },
        )
    )

    sizes_ok = all(w.order() == p * p for w in commutator_parts)
    cross_ok = True
    for i, pre in enumerate(factor_pre):
        for j, part in enumerate(commutator_parts):
            if i == j:
                continue
            if commutator_subgroup(part, pre).order() != 1:
                cross_ok = False
    faithful_ok = True
    for i, pre in enumerate(factor_pre):
        part = commutator_parts[i]
        sub_hom, _ = _conjugation_on_elements(pre, part, caps)
        if sub_hom.image.order() != factors[i].order():
            faithful_ok = False
    out.append(
        CheckResult(
            "factors-are-sl2-on-p2",
            target,
            PASS if (sizes_ok and cross_ok and faithful_ok) else FAIL,
            {
                "commutator_orders": [w.order() for w in commutator_parts],
                "p^2": p * p,
                "cross_action_trivial": cross_ok,
                "faithful_on_own_part": faithful_ok,
            },
        )
    )

    # maximal elementary abelian subgroups of a Sylow p-subgroup of H
    syl_h = sylow(h_v, p, caps)
    witnesses = []
    d_ok = True
    for a in max_elementary_abelians(syl_h, caps):
        meet_orders = []
        meet_join = PermGroup.trivial(h_v.degree)
        for f in factors:
            cap_part = a.intersection_with(f, caps)
            meet_orders.append(cap_part.order())
            meet_join = meet_join.join(cap_part, assume_order=a.order())
        splits = meet_join.order() == a.order()
        a_pre = hom.preimage_of_subgroup(a)
        c_v_a = _centralized_part(v, a_pre, caps)
        equation = a.order() * c_v_a.order() == v.order()
        witnesses.append(
            {
                "A_order": a.order(),
                "meet_orders": meet_orders,
                "splits": splits,
                "C_V(A)": c_v_a.order(),
                "equation": equation,
            }
        )
        if not (splits and equation):
            d_ok = False
    out.append(
        CheckResult(
            "abelian-offender-equation",
            target,
            PASS if d_ok else FAIL,
            {"convention": "maximal-order elementary abelians in a Sylow p-subgroup",
             "cases": witnesses},
        )
    )

    rep.quotient_data = {
        "r": r,
        "factor_orders": [f.order() for f in factors],
        "V_order": v.order(),
        "C_V(H)_order": c_v_h.order(),
        "commutator_part_orders": [w.order() for w in commutator_parts],
    }
    return out


def _centralized_part(v: PermGroup, actors: PermGroup, caps: Caps) -> PermGroup:
    """Subgroup of v centralised by every generator of ``actors``."""
    picked = []
    current = PermGroup.trivial(v.degree)
    for arr in v.element_arrays():
        if all(
            bool((mul(arr, g.images) == mul(g.images, arr)).all())
            for g in actors.generators
        ) and not current.contains_array(arr):
            picked.append(Permutation(arr.copy(), _trusted=True))
            current = PermGroup(v.degree, picked, assume_order=v.order())
    return current


# ---------------------------------------------------------------------------
# quotient shape of the local action


def verify_quotient_shape(
    pair: ArcPair, rep: AnatomyReport, caps: Caps | None = None, target: str = ""
) -> CheckResult:
    """Between the local residue and the image of the Thompson part there
    is a sandwich F < R < J inside the local action whose quotient J/F is
    a direct power of Sym(3) (p=2) or Alt(4) (p=3)."""
    caps = caps or default_caps()
    check = "local-quotient-shape"
    p = rep.p

    j_loc = _img(rep, rep.j_x)
    quot = quotient_action(rep.j_x, rep.m_x, caps)
    z_bar = center(quot.image, caps)
    f_pre = quot.preimage_of_subgroup(z_bar)
    f_loc = _img(rep, f_pre)
    r_loc = rep.local_regular_nilpotent

    chain_ok = (
        f_loc.is_subgroup_of(r_loc)
        and f_loc.order() < r_loc.order()
        and r_loc.is_subgroup_of(j_loc)
        and r_loc.order() < j_loc.order()
    )
    k_local = rep.local_act.image
    normal_ok = f_loc.is_normal_in(k_local) and j_loc.is_normal_in(k_local)

    quotient = quotient_action(j_loc, f_loc, caps).image
    factor_order = 6 if p == 2 else 12
    count = 0
    current = quotient
    shape_ok = True
    while current.order() > 1:
        lattice = all_normal_subgroups(current, caps)
        pick = None
        for member in lattice.members:
            if member.order() == factor_order and _psl2_signature(member, p):
                pick = member
                break
        if pick is None:
            shape_ok = False
            break
        rest = centralizer(current, pick.generators, caps)
        if (
            pick.order() * rest.order() != current.order()
            or not pick.intersection_with(rest, caps).is_trivial()
        ):
            shape_ok = False
            break
        count += 1
        current = rest
    shape_ok = shape_ok and quotient.order() == factor_order**count and count >= 1

    witness = {
        "p": p,
        "F_order": f_loc.order(),
        "R_order": r_loc.order(),
        "J_order": j_loc.order(),
        "quotient_order": quotient.order(),
        "direct_factors": count,
        "factor_order": factor_order,
    }
    ok = chain_ok and normal_ok and shape_ok
    return CheckResult(check, target, PASS if ok else FAIL, witness)


# ---------------------------------------------------------------------------
# the full per-edge pipeline


def edge_suite(
    pair: ArcPair,
    edge: tuple[int, int] | None = None,
    caps: Caps | None = None,
    target: str = "",
) -> tuple[list[CheckResult], AnatomyReport | None]:
    """Run every per-edge verifier on one edge (default: the first edge),
    including the orientation-agreement cross-check."""
    caps = caps or default_caps()
    if edge is None:
        edge = (0, pair.neighbors(0)[0])
    x, y = edge
    results: list[CheckResult] = []
    hyp = local_hypothesis(pair, x, caps)
    if not hyp.holds:
        results.append(
            CheckResult("local-hypothesis", target, SKIP, {"reason": hyp.reason})
        )
        return results, None
    results.append(
        CheckResult(
            "local-hypothesis",
            target,
            PASS,
            {
                "local_order": hyp.local_order,
                "regular_nilpotent_order": hyp.regular_nilpotent_local.order(),
            },
        )
    )
    _, g_xy1 = kernels(pair, (x, y))
    if g_xy1.order() == 1:
        for check in (
            "anatomy",
            "anatomy-invariants",
            "statement-suite",
            "decomposition",
            "local-quotient-shape",
        ):
            results.append(
                CheckResult(check, target, VACUOUS, {"reason": "edge kernel is trivial"})
            )
        return results, None
    try:
        rep = anatomy(pair, (x, y), caps)
    except AnatomyObstruction as exc:
        results.append(CheckResult("anatomy", target, FAIL, exc.finding))
        return results, None
    results.append(
        CheckResult("anatomy", target, PASS, {"p": rep.p, "orders": rep.orders()})
    )
    results.append(anatomy_invariants(pair, rep, target))
    results.extend(anatomy_statements(pair, rep, caps, target))
    results.extend(verify_decomposition(pair, rep, caps, target))
    results.append(verify_quotient_shape(pair, rep, caps, target))

    # orientation agreement: the same pipeline from the other end of the
    # edge must produce the same statuses
    try:
        rep_rev = anatomy(pair, (y, x), caps)
        rev: list[CheckResult] = [anatomy_invariants(pair, rep_rev, target)]
        rev.extend(anatomy_statements(pair, rep_rev, caps, target))
        rev.extend(verify_decomposition(pair, rep_rev, caps, target))
        rev.append(verify_quotient_shape(pair, rep_rev, caps, target))
        fwd = [r for r in results if r.check_id not in ("local-hypothesis", "anatomy")]
        agree = rep_rev.p == rep.p and [r.status for r in rev] == [
            r.status for r in fwd
        ]
        results.append(
            CheckResult(
                "orientation-agreement",
                target,
                PASS if agree else FAIL,
                {"p_forward": rep.p, "p_reverse": rep_rev.p},
            )
        )
    except SemiprimError as exc:
        results.append(
            CheckResult("orientation-agreement", target, FAIL, {"error": str(exc)})
        )
    return results, rep
