"""Builders: generic semidirect products, the four example families,
extraspecial groups, the diagonal counterexample, coset graphs and the
named graph fixtures.

Family parameter caps are validation, not performance guards: builders
reject parameters outside the supported desk scale with
:class:`~semiprim.errors.ParameterError`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .caps import Caps, default_caps
from .criteria import SemidirectSpec
from .errors import ConnectivityError, InconsistencyError, ParameterError
from .fields import GF, gl_generators
from .graphs import Graph
from .groups import CosetAction, PermGroup
from .numutil import is_prime
from .perms import Permutation, identity_images, mul


# ---------------------------------------------------------------------------
# small named groups


def pgl_2_7() -> PermGroup:
    """PGL(2,7) on the eight points of the projective line over F7
    (infinity is point 7), generated by z -> z+1 and z -> 1/z."""

    def moebius(a: int, b: int, c: int, d: int) -> Permutation:
        images = []
        for z in range(7):
            den = (c * z + d) % 7
            num = (a * z + b) % 7
            images.append(7 if den == 0 else (num * pow(den, 5, 7)) % 7)
        images.append(7 if c % 7 == 0 else (a * pow(c, 5, 7)) % 7)
        return Permutation(images)

    group = PermGroup(8, [moebius(1, 1, 0, 1), moebius(0, 1, 1, 0)], name="PGL(2,7)")
    if group.order() != 336:
        raise InconsistencyError("PGL(2,7) generators gave the wrong order")
    return group


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n acting naturally on n points."""
    if n < 3:
        raise ParameterError("dihedral wants n >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    refl = Permutation([(n - i) % n for i in range(n)])
    return PermGroup(n, [rot, refl], name=f"D{n}")


def quaternion() -> PermGroup:
    """Q8 in its regular representation on [1, i, j, k, -1, -i, -j, -k]."""
    right_i = Permutation([1, 4, 7, 2, 5, 0, 3, 6])
    right_j = Permutation([2, 3, 4, 5, 6, 7, 0, 1])
    return PermGroup(8, [right_i, right_j], name="Q8")


def klein_four() -> PermGroup:
    return PermGroup(
        4,
        [Permutation.from_cycles(4, [(0, 1), (2, 3)]), Permutation.from_cycles(4, [(0, 2), (1, 3)])],
        name="V4",
    )


def direct_product(groups: list[PermGroup], name: str | None = None) -> tuple[PermGroup, list[list[Permutation]]]:
    """Direct product on the disjoint union of the point sets.

    Returns the product plus, per factor, the embedded images of that
    factor's generators (in order).
    """
    total = sum(g.degree for g in groups)
    gens: list[Permutation] = []
    embedded: list[list[Permutation]] = []
    offset = 0
    for g in groups:
        block = []
        for p in g.generators:
            arr = identity_images(total).copy()
            arr[offset : offset + g.degree] = p.images.astype(arr.dtype) + offset
            q = Permutation(arr, _trusted=True)
            gens.append(q)
            block.append(q)
        embedded.append(block)
        offset += g.degree
    order = 1
    for g in groups:
        order *= g.order()
    prod = PermGroup(total, gens, name=name, assume_order=order)
    if prod.order() != order:
        raise InconsistencyError("direct product order mismatch")
    return prod, embedded


# ---------------------------------------------------------------------------
# abelian q-groups and extraspecial groups


def abelian_q_group(q: int, exponents: list[int]) -> PermGroup:
    """Product of cyclic groups C_{q^e} on disjoint blocks."""
    if not is_prime(q):
        raise ParameterError(f"{q} is not prime")
    if not exponents or any(e < 1 for e in exponents):
        raise ParameterError("exponent list must be nonempty positive integers")
    factors = [PermGroup.cyclic(q**e) for e in exponents]
    name = "x".join(f"C{q**e}" for e in exponents)
    prod, _ = direct_product(factors, name=name)
    return prod


class ExtraspecialWords:
    """Normal-form arithmetic for the exponent-q extraspecial group of
    plus type and order q^(1+2m) (q odd).

    Words are (a_1..a_m, b_1..b_m, c) standing for
    x_1^a_1 .. x_m^a_m  y_1^b_1 .. y_m^b_m  z^c with the single relation
    class [y_i, x_i] = z; multiplication adds exponents and picks up
    z^(b . a') when the y-block of the left factor crosses the x-block of
    the right one.
    """

    def __init__(self, q: int, m: int):
        if not is_prime(q) or q == 2:
            raise ParameterError("word construction wants an odd prime q")
        if m < 1:
            raise ParameterError("m >= 1 required")
        self.q = q
        self.m = m
        self.size = q ** (1 + 2 * m)

    def multiply(self, u: tuple, v: tuple) -> tuple:
        q, m = self.q, self.m
        a1, b1, c1 = u[:m], u[m : 2 * m], u[2 * m]
        a2, b2, c2 = v[:m], v[m : 2 * m], v[2 * m]
        cross = sum(b1[i] * a2[i] for i in range(m))
        return (
            tuple((x + y) % q for x, y in zip(a1, a2))
            + tuple((x + y) % q for x, y in zip(b1, b2))
            + ((c1 + c2 + cross) % q,)
        )

    def words(self) -> list[tuple]:
        return [
            tuple(w)
            for w in itertools.product(range(self.q), repeat=2 * self.m + 1)
        ]

    def x_gen(self, i: int) -> tuple:
        w = [0] * (2 * self.m + 1)
        w[i] = 1
        return tuple(w)

    def y_gen(self, i: int) -> tuple:
        w = [0] * (2 * self.m + 1)
        w[self.m + i] = 1
        return tuple(w)

    def z_gen(self) -> tuple:
        w = [0] * (2 * self.m + 1)
        w[-1] = 1
        return tuple(w)


@dataclass
class ExtraspecialGroup:
    """Regular permutation realisation plus a word -> element translator."""

    group: PermGroup
    words: ExtraspecialWords | None
    x_perms: list[Permutation]
    y_perms: list[Permutation]
    z_perm: Permutation
    translate: object = None  # word tuple -> right-translation Permutation


def extraspecial_group(q: int, m: int = 1) -> ExtraspecialGroup:
    """Extraspecial group of plus type and order q^(1+2m), realised
    regularly; q = 2 yields Q8 (m = 1 only)."""
    if q == 2:
        if m != 1:
            raise ParameterError("q = 2 supports m = 1 only (Q8)")
        g = quaternion()
        i_p, j_p = g.generators
        return ExtraspecialGroup(g, None, [i_p], [j_p], i_p * i_p)
    if not is_prime(q):
        raise ParameterError(f"{q} is not prime")
    words = ExtraspecialWords(q, m)
    if words.size > 3**5:
        raise ParameterError(f"|E| = {words.size} above the desk cap 3^5")
    all_words = words.words()
    index = {w: i for i, w in enumerate(all_words)}
    n = len(all_words)
    dt = identity_images(n).dtype

    def right_translation(w: tuple) -> Permutation:
        arr = np.empty(n, dtype=dt)
        for i, u in enumerate(all_words):
            arr[i] = index[words.multiply(u, w)]
        return Permutation(arr, _trusted=True)

    x_perms = [right_translation(words.x_gen(i)) for i in range(m)]
    y_perms = [right_translation(words.y_gen(i)) for i in range(m)]
    z_perm = right_translation(words.z_gen())
    group = PermGroup(
        n, x_perms + y_perms + [z_perm], name=f"{q}^(1+{2*m})", assume_order=n
    )
    if group.order() != n:
        raise InconsistencyError("extraspecial regular representation broke")
    return ExtraspecialGroup(group, words, x_perms, y_perms, z_perm, right_translation)


def _extraspecial_aut_images(es: ExtraspecialGroup, matrix) -> list[Permutation]:
    """Images of the generators (x, y, z) under the symplectic matrix
    [[alpha, beta], [gamma, delta]] acting on <x, y> mod center (m = 1):
    x -> x^alpha y^beta, y -> x^gamma y^delta, z -> z^det."""
    words = es.words
    if words is None or words.m != 1:
        raise ParameterError("matrix lifting implemented for odd q, m = 1")
    q = words.q
    (alpha, beta), (gamma, delta) = matrix
    det = (alpha * delta - beta * gamma) % q
    return [
        es.translate((alpha % q, beta % q, 0)),
        es.translate((gamma % q, delta % q, 0)),
        es.translate((0, 0, det)),
    ]


# ---------------------------------------------------------------------------
# recipes


@dataclass
class GroupRecipe:
    family: str
    params: dict
    spec: SemidirectSpec | None
    group: PermGroup
    expected_order: int
    kernel_order: int
    name: str = ""
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.group.order() != self.expected_order:
            raise InconsistencyError(
                f"{self.name or self.family}: realised order {self.group.order()} "
                f"!= closed form {self.expected_order}"
            )


def semidirect(
    kernel: PermGroup, aut_images: list[list[Permutation]], name: str | None = None,
    caps: Caps | None = None,
) -> SemidirectSpec:
    """Generic K x| H recipe; see :class:`SemidirectSpec`."""
    return SemidirectSpec(kernel, aut_images, name=name, caps=caps)


def family_inversion(q: int, shape: list[int], caps: Caps | None = None) -> GroupRecipe:
    """Example family one: an abelian q-group P (q odd) inverted by C2,
    acting on the cosets of the C2."""
    if not is_prime(q) or q == 2:
        raise ParameterError("inversion family wants an odd prime q")
    p_group = abelian_q_group(q, shape)
    if p_group.order() > 10**5:
        raise ParameterError("inversion family above the desk cap 10^5")
    inv_images = [[g.inverse() for g in p_group.generators]]
    name = f"inversion(q={q},P={p_group.name})"
    spec = SemidirectSpec(p_group, inv_images, name=name, caps=caps)
    return GroupRecipe(
        family="inversion",
        params={"q": q, "shape": list(shape)},
        spec=spec,
        group=spec.point_group,
        expected_order=2 * p_group.order(),
        kernel_order=p_group.order(),
        name=name,
    )


def family_vector(q: int, a: int, n: int, m: int, caps: Caps | None = None) -> GroupRecipe:
    """Example family two: W = V + ... + V (m copies of V = F_{q^a}^n)
    with GL(V) acting diagonally; the point set is W."""
    if not is_prime(q):
        raise ParameterError(f"{q} is not prime")
    if min(a, n, m) < 1:
        raise ParameterError("a, n, m must be positive")
    if q ** (a * n * m) > 10**5:
        raise ParameterError("vector family above the desk cap 10^5")
    fld = GF(q, a)
    rank = a * n * m
    w_group = abelian_q_group(q, [1] * rank)

    # basis generator order: copy-major, coordinate-next, field-basis-last
    def slot(c: int, i: int, b: int) -> int:
        return (c * n + i) * a + b

    gens = w_group.generators
    gl_mats = gl_generators(fld, n)
    aut_images: list[list[Permutation]] = []
    for mat in gl_mats:
        images = []
        for c in range(m):
            for i in range(n):
                for b in range(a):
                    vec = fld.basis(b)
                    img = identity_images(w_group.degree)
                    acc = Permutation(img, _trusted=True)
                    for j in range(n):
                        coef = fld.mul(mat[j][i], vec)
                        for bb in range(a):
                            e = coef[bb]
                            if e:
                                acc = acc * (gens[slot(c, j, bb)] ** e)
                    images.append(acc)
        aut_images.append(images)
    name = f"vector(q={q},a={a},n={n},m={m})"
    spec = SemidirectSpec(w_group, aut_images, name=name, caps=caps)
    gl_order = 1
    size = q**a
    for k in range(n):
        gl_order *= size**n - size**k
    return GroupRecipe(
        family="vector",
        params={"q": q, "a": a, "n": n, "m": m},
        spec=spec,
        group=spec.point_group,
        expected_order=q ** (a * n * m) * gl_order,
        kernel_order=q ** (a * n * m),
        name=name,
    )


def family_extraspecial(q: int, m: int = 1, caps: Caps | None = None) -> GroupRecipe:
    """Example family three: extraspecial E = q^(1+2m) with Sp_2m(q)
    acting; realised for m = 1 where Sp_2(q) = SL_2(q) is generated by the
    two standard transvections."""
    if m != 1:
        raise ParameterError("symplectic action realised for m = 1 only")
    if not is_prime(q) or q == 2:
        raise ParameterError("extraspecial family wants an odd prime q")
    es = extraspecial_group(q, m)
    t_upper = ((1, 1), (0, 1))
    t_lower = ((1, 0), (1, 1))
    aut_images = [
        _extraspecial_aut_images(es, t_upper),
        _extraspecial_aut_images(es, t_lower),
    ]
    name = f"extraspecial(q={q},m={m})"
    spec = SemidirectSpec(es.group, aut_images, name=name, caps=caps)
    sl2_order = q * (q * q - 1)
    return GroupRecipe(
        family="extraspecial",
        params={"q": q, "m": m},
        spec=spec,
        group=spec.point_group,
        expected_order=es.group.order() * sl2_order,
        kernel_order=es.group.order(),
        name=name,
    )


def family_c3(primes: list[int], caps: Caps | None = None) -> GroupRecipe:
    """Example family four: V_1 x ... x V_r (extraspecial of order p_i^3,
    with Q8 for p = 2) under a diagonal automorphism of order three; every
    p_i must be congruent to -1 mod 3."""
    primes = sorted(set(primes))
    if not primes:
        raise ParameterError("need at least one prime")
    for p in primes:
        if not is_prime(p) or p % 3 != 2:
            raise ParameterError(f"{p} is not a prime congruent to -1 mod 3")
    factors: list[PermGroup] = []
    factor_images: list[list[Permutation]] = []
    order3 = ((0, -1), (1, -1))  # companion matrix of x^2 + x + 1
    for p in primes:
        if p == 2:
            g = quaternion()
            i_p, j_p = g.generators
            factors.append(g)
            # order-3 rotation i -> j -> k = i*j
            factor_images.append([j_p, i_p * j_p])
        else:
            es = extraspecial_group(p, 1)
            factors.append(es.group)
            factor_images.append(_extraspecial_aut_images(es, order3))
    product, embedded = direct_product(factors)
    total = product.degree

    def embed(perm: Permutation, offset: int, size: int) -> Permutation:
        arr = identity_images(total).copy()
        arr[offset : offset + size] = perm.images.astype(arr.dtype) + offset
        return Permutation(arr, _trusted=True)

    images: list[Permutation] = []
    offset = 0
    for grp, imgs in zip(factors, factor_images):
        for im in imgs:
            images.append(embed(im, offset, grp.degree))
        offset += grp.degree
    name = f"c3(primes={primes})"
    spec = SemidirectSpec(product, [images], name=name, caps=caps)
    return GroupRecipe(
        family="c3",
        params={"primes": list(primes)},
        spec=spec,
        group=spec.point_group,
        expected_order=3 * product.order(),
        kernel_order=product.order(),
        name=name,
    )


def diagonal_counterexample(caps: Caps | None = None) -> GroupRecipe:
    """The (Alt5 x Alt5 x Alt5) : 2 action on 3600 points with three
    distinct regular normal subgroups and no soluble one.

    Built as the coset action of T1 x T2 x T3 extended by a simultaneous
    outer involution, on a subgroup generated by a full diagonal and that
    involution.
    """
    caps = caps or default_caps()
    blocks = [(0, 1, 2, 3, 4), (5, 6, 7, 8, 9), (10, 11, 12, 13, 14)]
    gens = []
    for blk in blocks:
        gens.append(Permutation.from_cycles(15, [blk]))
        gens.append(Permutation.from_cycles(15, [blk[:3]]))
    outer = Permutation.from_cycles(15, [(0, 1), (5, 6), (10, 11)])
    big = PermGroup(15, gens + [outer], name="A5^3:2")
    if big.order() != 2 * 60**3:
        raise InconsistencyError("A5^3:2 seed group has the wrong order")
    diag_a = Permutation.from_cycles(15, [blocks[0], blocks[1], blocks[2]])
    diag_b = Permutation.from_cycles(15, [blocks[0][:3], blocks[1][:3], blocks[2][:3]])
    h = big.subgroup([diag_a, diag_b, outer])
    if h.order() != 120:
        raise InconsistencyError("diagonal point stabiliser has the wrong order")
    act = big.coset_action(h, caps)
    if not act.kernel.is_trivial():
        raise InconsistencyError("diagonal action is not faithful")
    return GroupRecipe(
        family="diagonal",
        params={},
        spec=None,
        group=act.image,
        expected_order=432000,
        kernel_order=3600,
        name="diagonal-A5^3:2",
        notes={"point_stabilizer_order": 120},
    )


# ---------------------------------------------------------------------------
# coset graphs


def coset_graph(
    group: PermGroup, subgroup: PermGroup, arc_rep: Permutation, caps: Caps | None = None
) -> tuple[Graph, PermGroup, CosetAction]:
    """Arc-transitive graph on the cosets of ``subgroup`` with adjacency
    through the double coset of ``arc_rep``.

    Requires arc_rep^2 in the subgroup and <subgroup, arc_rep> = group
    (connectivity); returns the graph, the embedded vertex action and the
    underlying coset action.
    """
    caps = caps or default_caps()
    if arc_rep * arc_rep not in subgroup:
        raise ParameterError("arc representative squared must lie in the subgroup")
    generated = PermGroup(
        group.degree,
        list(subgroup.generators) + [arc_rep],
        assume_order=group.order(),
    )
    if generated.order() != group.order():
        raise ConnectivityError("subgroup and arc representative do not generate the group")
    act = group.coset_action(subgroup, caps)
    n = act.image_degree

    conj = subgroup.conjugated_by(arc_rep)
    meet = subgroup.intersection_with(conj, caps)
    valency = subgroup.order() // meet.order()

    # transversal of (H meet H^a) in H by breadth-first closure
    reps = [Permutation.identity(group.degree)]
    seen_keys = {act.coset_index(mul(arc_rep.images, reps[0].images))}
    queue = [reps[0]]
    while queue:
        r = queue.pop(0)
        for g in subgroup.generators:
            cand = r * g
            key = act.coset_index(mul(arc_rep.images, cand.images))
            if key not in seen_keys:
                seen_keys.add(key)
                reps.append(cand)
                queue.append(cand)
    if len(reps) != valency:
        raise InconsistencyError("double-coset transversal has the wrong size")

    edges = set()
    for i in range(n):
        rep_i = act.reps[i]
        for h in reps:
            j = act.coset_index(mul(mul(arc_rep.images, h.images), rep_i))
            if i == j:
                raise InconsistencyError("coset graph produced a loop")
            edges.add((min(i, j), max(i, j)))
    graph = Graph.from_edges(n, sorted(edges))
    if not graph.is_connected():
        raise ConnectivityError("coset graph came out disconnected")
    if graph.valency() != valency:
        raise InconsistencyError("coset graph valency mismatch")
    return graph, act.image, act


# ---------------------------------------------------------------------------
# named graph fixtures (graph, vertex group); groups are constructed from
# explicit matrix/combinatorial data and verified by order, never searched


def heawood() -> tuple[Graph, PermGroup]:
    """Point/line incidence graph of the Fano plane with its full
    collineation-plus-duality group of order 336."""
    points = list(range(1, 8))  # nonzero vectors of F2^3 as bitmasks
    vec_idx = {v: i for i, v in enumerate(points)}
    cov_idx = {v: 7 + i for i, v in enumerate(points)}

    def dot(u: int, v: int) -> int:
        return bin(u & v).count("1") % 2

    edges = [
        (vec_idx[p], cov_idx[l]) for p in points for l in points if dot(p, l) == 0
    ]
    graph = Graph.from_edges(14, edges)

    def apply_mat(mat: tuple[int, int, int], v: int) -> int:
        out = 0
        for row in range(3):
            bit = bin(mat[row] & v).count("1") % 2
            out |= bit << row
        return out

    def transpose(mat):
        out = [0, 0, 0]
        for r in range(3):
            for c in range(3):
                if (mat[r] >> c) & 1:
                    out[c] |= 1 << r
        return tuple(out)

    def mat_inverse(mat):
        # Gauss-Jordan over F2 on 3x3 bitmask rows
        m = list(mat)
        inv = [1, 2, 4]
        for col in range(3):
            pivot = next(r for r in range(col, 3) if (m[r] >> col) & 1)
            m[col], m[pivot] = m[pivot], m[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
            for r in range(3):
                if r != col and (m[r] >> col) & 1:
                    m[r] ^= m[col]
                    inv[r] ^= inv[col]
        return tuple(inv)

    gl_gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            rows = [1, 2, 4]
            rows[i] |= 1 << j
            gl_gens.append(tuple(rows))

    perms = []
    for mat in gl_gens:
        inv_t = transpose(mat_inverse(mat))
        images = [0] * 14
        for p in points:
            images[vec_idx[p]] = vec_idx[apply_mat(mat, p)]
            images[cov_idx[p]] = cov_idx[apply_mat(inv_t, p)]
        perms.append(Permutation(images))
    duality = Permutation([(i + 7) % 14 for i in range(14)])
    group = PermGroup(14, perms + [duality], name="Heawood-Aut")
    if group.order() != 336:
        raise InconsistencyError("Heawood group order is not 336")
    return graph, group


def tutte_coxeter() -> tuple[Graph, PermGroup]:
    """Duad/syntheme incidence graph (the Levi graph of the Cremona-
    Richmond configuration) with its full group of order 1440.

    The side-swapping polarity is built from the outer automorphism of
    Sym(6) realised on synthematic totals: each duad stabiliser maps to a
    subgroup fixing exactly one syntheme and vice versa.  Incidence of a
    duad and a syntheme is characterised by the order of the intersection
    of their stabilisers, which the automorphism preserves, so the
    resulting swap is adjacency-preserving by construction (and checked).
    """
    duads = [frozenset(p) for p in itertools.combinations(range(6), 2)]
    duad_idx = {d: i for i, d in enumerate(duads)}
    synthemes = [frozenset(part) for part in _partitions_into_duads(frozenset(range(6)))]
    synthemes.sort(key=lambda s: sorted(tuple(sorted(d)) for d in s))
    syn_pos = {s: i for i, s in enumerate(synthemes)}
    edges = []
    for s in synthemes:
        for d in s:
            edges.append((duad_idx[d], 15 + syn_pos[s]))
    graph = Graph.from_edges(30, edges)

    def act_duad(point_map, d: frozenset) -> frozenset:
        return frozenset(point_map[p] for p in d)

    def act_syntheme(point_map, s: frozenset) -> frozenset:
        return frozenset(act_duad(point_map, d) for d in s)

    def vertex_perm(point_map) -> Permutation:
        images = [0] * 30
        for d, i in duad_idx.items():
            images[i] = duad_idx[act_duad(point_map, d)]
        for s, i in syn_pos.items():
            images[15 + i] = 15 + syn_pos[act_syntheme(point_map, s)]
        return Permutation(images)

    # synthematic totals: the six 5-sets of synthemes covering all 15 duads
    totals = []
    for combo in itertools.combinations(range(15), 5):
        cover: set = set()
        for ci in combo:
            cover |= synthemes[ci]
        if len(cover) == 15:
            totals.append(frozenset(combo))
    if len(totals) != 6:
        raise InconsistencyError(f"expected 6 synthematic totals, found {len(totals)}")
    totals.sort(key=sorted)
    total_pos = {t: i for i, t in enumerate(totals)}

    def outer(point_map) -> dict:
        """The outer automorphism: a point permutation read off the totals."""
        out = {}
        for ti, t in enumerate(totals):
            image = frozenset(syn_pos[act_syntheme(point_map, synthemes[si])] for si in t)
            out[ti] = total_pos[image]
        return out

    def maps_of(perm6: Permutation) -> dict:
        return {p: int(perm6.images[p]) for p in range(6)}

    s6 = PermGroup.symmetric(6)
    # stabiliser generators for every duad and every syntheme, as 6-point maps
    combined_gens = []
    for g in s6.generators:
        pm = maps_of(g)
        arr = list(pm[p] for p in range(6))
        arr += [6 + duad_idx[act_duad(pm, d)] for d in duads]
        arr += [21 + syn_pos[act_syntheme(pm, s)] for s in synthemes]
        combined_gens.append(Permutation(arr))
    combined = PermGroup(36, combined_gens, name="S6-on-points-duads-synthemes")

    def six_point_stab_gens(vertex: int) -> list[dict]:
        stab = combined.point_stabilizer(vertex)
        return [{p: int(g.images[p]) for p in range(6)} for g in stab.generators]

    def unique_fixed_syntheme(maps: list[dict]) -> int:
        fixed = [
            si
            for si, s in enumerate(synthemes)
            if all(act_syntheme(m, s) == s for m in maps)
        ]
        if len(fixed) != 1:
            raise InconsistencyError("outer image of a duad stabiliser fixes != 1 syntheme")
        return fixed[0]

    def unique_fixed_duad(maps: list[dict]) -> int:
        fixed = [
            di
            for di, d in enumerate(duads)
            if all(act_duad(m, d) == d for m in maps)
        ]
        if len(fixed) != 1:
            raise InconsistencyError("outer image of a syntheme stabiliser fixes != 1 duad")
        return fixed[0]

    images = [0] * 30
    for di, d in enumerate(duads):
        outer_maps = [outer(m) for m in six_point_stab_gens(6 + di)]
        images[di] = 15 + unique_fixed_syntheme(outer_maps)
    for si, s in enumerate(synthemes):
        outer_maps = [outer(m) for m in six_point_stab_gens(21 + si)]
        images[15 + si] = unique_fixed_duad(outer_maps)
    polarity = Permutation(images)

    for u, v in graph.edges():
        pu, pv = int(polarity.images[u]), int(polarity.images[v])
        if pu not in graph.neighbors(pv):
            raise InconsistencyError("polarity does not preserve adjacency")
    transp = vertex_perm({0: 1, 1: 0, 2: 2, 3: 3, 4: 4, 5: 5})
    cyc = vertex_perm({i: (i + 1) % 6 for i in range(6)})
    group = PermGroup(30, [transp, cyc, polarity], name="TutteCoxeter-Aut")
    if group.order() != 1440:
        raise InconsistencyError("Tutte-Coxeter group order is not 1440")
    return graph, group


def _partitions_into_duads(points: frozenset) -> list[list[frozenset]]:
    if not points:
        return [[]]
    pts = sorted(points)
    first = pts[0]
    out = []
    for other in pts[1:]:
        duad = frozenset((first, other))
        for rest in _partitions_into_duads(points - duad):
            out.append([duad] + rest)
    return out


def complete_graph(n: int) -> tuple[Graph, PermGroup]:
    graph = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    return graph, PermGroup.symmetric(n)


def complete_bipartite(n: int) -> tuple[Graph, PermGroup]:
    import math

    edges = [(i, n + j) for i in range(n) for j in range(n)]
    graph = Graph.from_edges(2 * n, edges)
    side_cycles = [[(0, 1)]]
    if n > 2:
        side_cycles.append([tuple(range(n))])
    gens = []
    for cycles in side_cycles:
        gens.append(Permutation.from_cycles(2 * n, cycles))
        gens.append(Permutation.from_cycles(2 * n, [tuple(p + n for p in c) for c in cycles]))
    gens.append(Permutation([(i + n) % (2 * n) for i in range(2 * n)]))
    group = PermGroup(2 * n, gens, name=f"Aut(K{n}{n})")
    if group.order() != 2 * math.factorial(n) ** 2:
        raise InconsistencyError("complete bipartite group order mismatch")
    return graph, group


def petersen() -> tuple[Graph, PermGroup]:
    pairs = list(itertools.combinations(range(5), 2))
    idx = {frozenset(p): i for i, p in enumerate(pairs)}
    edges = [
        (idx[frozenset(p)], idx[frozenset(q)])
        for p in pairs
        for q in pairs
        if idx[frozenset(p)] < idx[frozenset(q)] and not (set(p) & set(q))
    ]
    graph = Graph.from_edges(10, edges)

    def induced(point_map) -> Permutation:
        return Permutation(
            [idx[frozenset(point_map[p] for p in pair)] for pair in pairs]
        )

    group = PermGroup(
        10,
        [induced({0: 1, 1: 0, 2: 2, 3: 3, 4: 4}), induced({i: (i + 1) % 5 for i in range(5)})],
        name="Aut(Petersen)",
    )
    if group.order() != 120:
        raise InconsistencyError("Petersen group order is not 120")
    return graph, group


def cayley_f16_quintic() -> tuple[Graph, PermGroup]:
    """Cayley graph of the additive group of GF(16) with connection set
    the multiplicative subgroup of order 5, together with the order-320
    group generated by translations, multiplications by that subgroup and
    the squaring automorphism."""

    def gf16_mul(u: int, v: int) -> int:
        # F2[t]/(t^4 + t + 1) on bitmasks
        out = 0
        while v:
            if v & 1:
                out ^= u
            v >>= 1
            u <<= 1
            if u & 16:
                u ^= 0b10011
        return out

    gen = 2  # t is primitive for t^4 + t + 1
    cube = gf16_mul(gf16_mul(gen, gen), gen)
    connection = set()
    acc = 1
    for _ in range(5):
        connection.add(acc)
        acc = gf16_mul(acc, cube)
    if len(connection) != 5 or acc != 1:
        raise InconsistencyError("order-5 multiplicative subgroup has wrong size")
    edges = [(u, u ^ s) for u in range(16) for s in connection if u < (u ^ s)]
    graph = Graph.from_edges(16, edges)

    gens = [Permutation([v ^ b for v in range(16)]) for b in (1, 2, 4, 8)]
    gens.append(Permutation([gf16_mul(v, cube) for v in range(16)]))
    gens.append(Permutation([gf16_mul(v, v) for v in range(16)]))
    group = PermGroup(16, gens, name="F16-quintic-Aut")
    if group.order() != 320:
        raise InconsistencyError("cayley_f16_quintic group order is not 320")
    return graph, group


FIXTURE_BUILDERS = {
    "heawood": heawood,
    "tutte-coxeter": tutte_coxeter,
    "k4": lambda: complete_graph(4),
    "k33": lambda: complete_bipartite(3),
    "petersen": petersen,
    "f16": cayley_f16_quintic,
}


def named_fixture(name: str) -> tuple[Graph, PermGroup]:
    try:
        builder = FIXTURE_BUILDERS[name]
    except KeyError:
        raise ParameterError(
            f"unknown fixture {name!r}; available: {sorted(FIXTURE_BUILDERS)}"
        ) from None
    return builder()
