"""Semiprimitivity: the definition-level decision procedure, the
semidirect-product criterion, and the verifiers for the quotient,
kernel-containment, Fitting and coprimality statements.

A transitive group is semiprimitive when every normal subgroup is
transitive or semiregular.  For G = K x| H acting on the elements of K
(equivalently, on the cosets of H) the criterion route decides the same
property structurally: H must act faithfully on K/M for every proper
H-invariant normal subgroup M of K; equivalently K = [K,N] for every
nontrivial normal subgroup N of H.  Both routes are implemented and
cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .caps import Caps, default_caps
from .errors import (
    InconsistencyError,
    NotASubgroup,
    NotAutomorphism,
    NotTransitive,
    ParameterError,
)
from .groups import PermGroup, quotient_action
from .numutil import prime_factors
from .perms import Permutation, identity_images, inv, is_identity, mul
from .reports import FAIL, PASS, SKIP, CheckResult, group_witness
from .structure import (
    all_normal_subgroups,
    commutator_subgroup,
    core_p,
    fitting,
    is_nilpotent,
    is_soluble,
    normal_closure,
)


def is_semiregular(group: PermGroup) -> bool:
    """True iff every point stabiliser is trivial (all orbits of length |N|)."""
    n = group.order()
    return all(len(orb) == n for orb in group.orbits())


def is_regular(group: PermGroup) -> bool:
    return group.is_transitive() and group.order() == group.degree


@dataclass
class SpVerdict:
    semiprimitive: bool
    checked_by: str
    witness: dict | None = None
    regular_normal_orders: list[int] = field(default_factory=list)


# ---------------------------------------------------------------------------
# definition route


def is_semiprimitive_definition(group: PermGroup, caps: Caps | None = None) -> SpVerdict:
    """Quantify Definition-style over the full normal-subgroup lattice."""
    caps = caps or default_caps()
    if not group.is_transitive():
        raise NotTransitive("semiprimitivity is defined for transitive groups only")
    lattice = all_normal_subgroups(group, caps)
    regular_orders = []
    witness = None
    ok = True
    for member in lattice.members:
        transitive = member.is_transitive()
        semiregular = is_semiregular(member)
        if transitive and semiregular:
            regular_orders.append(member.order())
        if not transitive and not semiregular:
            ok = False
            if witness is None:
                bad_orbit = next(orb for orb in member.orbits() if len(orb) < member.order())
                witness = {
                    "normal_subgroup": group_witness(member),
                    "orbit_sizes": sorted(len(o) for o in member.orbits()),
                    "short_orbit_point": bad_orbit[0],
                    "stabilizer_order": member.point_stabilizer(bad_orbit[0]).order(),
                }
    return SpVerdict(
        semiprimitive=ok,
        checked_by="definition",
        witness=witness,
        regular_normal_orders=sorted(regular_orders),
    )


# ---------------------------------------------------------------------------
# semidirect specifications


class SemidirectSpec:
    """A recipe G = K x| H together with its point action on the elements of K.

    ``kernel`` is any faithful permutation realisation of K.  Each entry of
    ``aut_images`` lists the images of ``kernel.generators`` under one
    generating automorphism of H; the map is extended multiplicatively to
    all of K and verified to be an automorphism (raising
    :class:`NotAutomorphism` otherwise).

    The point set is the element list of K, ordered by breadth-first
    closure from the identity over right multiplication by the generators.
    K acts by right translation, so it is regular; automorphisms fix the
    identity point, so H is the stabiliser of point 0.
    """

    def __init__(
        self,
        kernel: PermGroup,
        aut_images: list[list[Permutation]],
        *,
        name: str | None = None,
        caps: Caps | None = None,
    ):
        caps = caps or default_caps()
        caps.check_coset_index(kernel.order())
        self.kernel = kernel
        self.name = name
        self.aut_images = aut_images

        gen_arrays = [g.images for g in kernel.generators]
        ident = identity_images(kernel.degree)
        elements: list[np.ndarray] = [ident]
        index: dict[bytes, int] = {ident.tobytes(): 0}
        parents: list[tuple[int, int]] = [(-1, -1)]
        qi = 0
        while qi < len(elements):
            e = elements[qi]
            for gi, g in enumerate(gen_arrays):
                t = mul(e, g)
                key = t.tobytes()
                if key not in index:
                    index[key] = len(elements)
                    elements.append(t)
                    parents.append((qi, gi))
            qi += 1
        if len(elements) != kernel.order():
            raise InconsistencyError("element closure disagrees with the chain order")
        self.elements = elements
        self._index = index
        n = len(elements)
        self.degree = n

        dt = identity_images(n).dtype
        translations = []
        for g in gen_arrays:
            rho = np.empty(n, dtype=dt)
            for i, e in enumerate(elements):
                rho[i] = index[mul(e, g).tobytes()]
            translations.append(Permutation(rho, _trusted=True))
        self._translation_gens = translations

        aut_perms = []
        for images in aut_images:
            if len(images) != len(gen_arrays):
                raise NotAutomorphism("one image required per kernel generator")
            img_arrays = []
            for im in images:
                if im.images.tobytes() not in index:
                    raise NotAutomorphism("generator image lies outside the kernel group")
                img_arrays.append(im.images)
            mapped: list[np.ndarray] = [ident]
            for i in range(1, n):
                pj, gj = parents[i]
                mapped.append(mul(mapped[pj], img_arrays[gj]))
            pi = np.empty(n, dtype=dt)
            seen = np.zeros(n, dtype=bool)
            for i in range(n):
                j = index.get(mapped[i].tobytes())
                if j is None:
                    raise NotAutomorphism("multiplicative extension left the kernel")
                pi[i] = j
                seen[j] = True
            if not seen.all():
                raise NotAutomorphism("generator images do not define a bijection")
            aut_perms.append(Permutation(pi, _trusted=True))
        # full homomorphism check: alpha(e*g) = alpha(e)*alpha(g) for all e, g
        for pi, images in zip(aut_perms, aut_images):
            for rho, im in zip(translations, images):
                rho_im = np.empty(n, dtype=dt)
                for i, e in enumerate(elements):
                    rho_im[i] = index[mul(e, im.images).tobytes()]
                left = mul(rho.images, pi.images)
                right = mul(pi.images, rho_im)
                if not bool((left == right).all()):
                    raise NotAutomorphism("images do not extend to an automorphism")
        self._aut_gens = aut_perms

        self.k_point_group = PermGroup(n, translations, name="K")
        self.h_point_group = PermGroup(n, aut_perms, name="H")
        self.point_group = PermGroup(
            n, translations + aut_perms, name=name or "K:H"
        )
        if self.k_point_group.order() != n:
            raise InconsistencyError("translation action is not regular")
        if self.point_group.order() != n * self.h_point_group.order():
            raise InconsistencyError("|G| != |K| * |H| in the point action")
        for h in aut_perms:
            if int(h.images[0]) != 0:
                raise InconsistencyError("automorphism moved the identity point")

    # -- plumbing ------------------------------------------------------

    def element_index(self, arr: np.ndarray) -> int:
        idx = self._index.get(arr.tobytes())
        if idx is None:
            raise NotASubgroup("element does not belong to the kernel group")
        return idx

    def apply_aut(self, h: Permutation, arr: np.ndarray) -> np.ndarray:
        """Image of a kernel element under the automorphism behind ``h``."""
        return self.elements[int(h.images[self.element_index(arr)])]

    def translation_of(self, arr: np.ndarray) -> Permutation:
        """Right-translation permutation of an arbitrary kernel element."""
        n = self.degree
        out = np.empty(n, dtype=identity_images(n).dtype)
        for i, e in enumerate(self.elements):
            out[i] = self._index[mul(e, arr).tobytes()]
        return Permutation(out, _trusted=True)

    def order(self) -> int:
        return self.point_group.order()


def is_semiprimitive_criterion(spec: SemidirectSpec, caps: Caps | None = None) -> SpVerdict:
    """Decide semiprimitivity structurally from the semidirect recipe.

    Quotient form: for every proper H-invariant normal subgroup M of K the
    kernel of H on K/M (elements h with [K,h] <= M) must be trivial.
    Rephrased form: K = [K,N] for every nontrivial normal subgroup N of H.
    The two forms are evaluated independently and must agree.
    """
    caps = caps or default_caps()
    k_lattice = all_normal_subgroups(spec.kernel, caps)
    kernel_gen_arrays = [g.images for g in spec.kernel.generators]

    def h_invariant(member: PermGroup) -> bool:
        for h in spec.h_point_group.generators:
            for m in member.generators:
                if not member.contains_array(spec.apply_aut(h, m.images)):
                    return False
        return True

    quotient_ok = True
    witness = None
    for member in k_lattice.members:
        if member.order() == spec.kernel.order() or not h_invariant(member):
            continue
        # kernel of H acting on K/M
        offenders = []
        for h_arr in spec.h_point_group.element_arrays():
            if is_identity(h_arr):
                continue
            h = Permutation(h_arr, _trusted=True)
            if all(
                member.contains_array(mul(inv(g), spec.apply_aut(h, g)))
                for g in kernel_gen_arrays
            ):
                offenders.append(h)
        if offenders:
            quotient_ok = False
            if witness is None:
                witness = _criterion_witness(spec, member, offenders, caps)
            break

    rephrased_ok = True
    h_lattice = all_normal_subgroups(spec.h_point_group, caps)
    for n_member in h_lattice.members:
        if n_member.is_trivial():
            continue
        kn = commutator_subgroup(spec.k_point_group, n_member)
        if kn.order() != spec.k_point_group.order():
            rephrased_ok = False
            break

    if quotient_ok != rephrased_ok:
        raise InconsistencyError(
            "the two forms of the semidirect criterion disagree; this is a bug"
        )
    return SpVerdict(
        semiprimitive=quotient_ok,
        checked_by="criterion",
        witness=witness,
        regular_normal_orders=[],
    )


def _criterion_witness(spec, member, offenders, caps) -> dict:
    """Materialise the violating normal subgroup B*M on the point set."""
    gens = list(offenders)
    for m in member.generators:
        gens.append(spec.translation_of(m.images))
    bm = normal_closure(spec.point_group, gens)
    if bm.is_transitive() or is_semiregular(bm):
        raise InconsistencyError("criterion witness failed its own re-check")
    return {
        "quotient_by_order": member.order(),
        "normal_subgroup": group_witness(bm),
        "orbit_sizes": sorted(len(o) for o in bm.orbits()),
    }


def decide_both(spec: SemidirectSpec, caps: Caps | None = None) -> SpVerdict:
    """Definition and criterion must agree; returns the merged verdict."""
    caps = caps or default_caps()
    by_def = is_semiprimitive_definition(spec.point_group, caps)
    by_crit = is_semiprimitive_criterion(spec, caps)
    if by_def.semiprimitive != by_crit.semiprimitive:
        raise InconsistencyError(
            f"definition ({by_def.semiprimitive}) and criterion "
            f"({by_crit.semiprimitive}) disagree on {spec.name}"
        )
    return SpVerdict(
        semiprimitive=by_def.semiprimitive,
        checked_by="both",
        witness=by_def.witness or by_crit.witness,
        regular_normal_orders=by_def.regular_normal_orders,
    )


# ---------------------------------------------------------------------------
# section-2 lemma verifiers


def verify_quotient_lemma(
    group: PermGroup,
    normal: PermGroup,
    caps: Caps | None = None,
    *,
    point: int = 0,
    check_id: str = "lemma-quotient",
    target: str = "",
) -> CheckResult:
    """Quotients of semiprimitive groups by intransitive normal subgroups
    stay faithful and semiprimitive (checked from scratch on the quotient).
    """
    caps = caps or default_caps()
    if not normal.is_normal_in(group):
        return CheckResult(check_id, target, SKIP, {"reason": "subgroup not normal"})
    if normal.is_transitive() and not normal.is_trivial():
        return CheckResult(check_id, target, SKIP, {"reason": "normal subgroup transitive"})
    stab = group.point_stabilizer(point)
    joined = PermGroup(
        group.degree,
        list(stab.generators) + list(normal.generators),
        assume_order=group.order(),
    )
    act = group.coset_action(joined, caps)
    faithful = act.kernel.order() == normal.order() and all(
        g in act.kernel for g in normal.generators
    )
    if not faithful:
        return CheckResult(
            check_id,
            target,
            FAIL,
            {"reason": "kernel differs from N", "kernel": group_witness(act.kernel)},
        )
    verdict = is_semiprimitive_definition(act.image, caps)
    if not verdict.semiprimitive:
        return CheckResult(check_id, target, FAIL, verdict.witness)
    return CheckResult(check_id, target, PASS, {"quotient_degree": act.image_degree})


def regular_normal_analysis(group: PermGroup, caps: Caps | None = None) -> dict:
    """List all regular normal subgroups; when a soluble one exists, check
    the containment statements (every transitive normal contains it, every
    semiregular normal lies inside it, and it is the unique regular normal).
    """
    caps = caps or default_caps()
    lattice = all_normal_subgroups(group, caps)
    regulars = [m for m in lattice.members if is_regular(m)]
    report: dict = {
        "regular_normal_count": len(regulars),
        "regular_normal_orders": [m.order() for m in regulars],
        "regular_normals": [group_witness(m) for m in regulars],
        "soluble_flags": [is_soluble(m) for m in regulars],
    }
    soluble = [m for m in regulars if is_soluble(m)]
    if not soluble:
        report["status"] = "no-soluble-regular-normal"
        mutual = [
            (i, j)
            for i, a in enumerate(regulars)
            for j, b in enumerate(regulars)
            if i != j and a.is_subgroup_of(b)
        ]
        report["containments_between_regulars"] = mutual
        return report
    k = soluble[0]
    problems = []
    for m in lattice.members:
        if m.is_transitive() and not k.is_subgroup_of(m):
            problems.append({"kind": "transitive-not-containing-K", "member": group_witness(m)})
        if is_semiregular(m) and not m.is_subgroup_of(k):
            problems.append({"kind": "semiregular-not-inside-K", "member": group_witness(m)})
    if len(regulars) != 1:
        problems.append({"kind": "regular-normal-not-unique", "count": len(regulars)})
    report["status"] = "pass" if not problems else "fail"
    report["problems"] = problems
    return report


def verify_fitting_lemma(group: PermGroup, caps: Caps | None = None) -> CheckResult:
    """F(G) = F(K) for a soluble regular normal K; every nilpotent normal
    subgroup must lie inside K."""
    caps = caps or default_caps()
    lattice = all_normal_subgroups(group, caps)
    soluble_regulars = [m for m in lattice.members if is_regular(m) and is_soluble(m)]
    if not soluble_regulars:
        return CheckResult(
            "lemma-fitting", "", SKIP, {"reason": "no soluble regular normal subgroup"}
        )
    k = soluble_regulars[0]
    for m in lattice.members:
        if is_nilpotent(m) and not m.is_subgroup_of(k):
            return CheckResult(
                "lemma-fitting", "", FAIL,
                {"reason": "nilpotent normal subgroup outside K", "member": group_witness(m)},
            )
    fg = fitting(group, caps)
    fk = fitting(k, caps)
    if not fg.same_group(fk):
        return CheckResult(
            "lemma-fitting", "", FAIL,
            {"reason": "F(G) != F(K)", "F(G)": group_witness(fg), "F(K)": group_witness(fk)},
        )
    return CheckResult("lemma-fitting", "", PASS, {"fitting_order": fg.order()})


def verify_coprime_lemma(spec: SemidirectSpec, caps: Caps | None = None) -> CheckResult:
    """If O_p(H) is nontrivial for some prime p, then p does not divide |K|."""
    caps = caps or default_caps()
    if not is_nilpotent(spec.k_point_group):
        return CheckResult(
            "lemma-coprime", spec.name or "", SKIP, {"reason": "K is not nilpotent"}
        )
    h = spec.h_point_group
    k_order = spec.kernel.order()
    checked = {}
    for p in prime_factors(h.order()):
        op = core_p(h, p, caps)
        checked[str(p)] = op.order()
        if op.order() > 1 and k_order % p == 0:
            return CheckResult(
                "lemma-coprime", spec.name or "", FAIL,
                {"prime": p, "O_p(H)_order": op.order(), "K_order": k_order},
            )
    return CheckResult(
        "lemma-coprime", spec.name or "", PASS,
        {"O_p_orders": checked, "K_order": k_order},
    )
