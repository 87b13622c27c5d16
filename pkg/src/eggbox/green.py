"""Green's relations, minimal ideals, maximal subgroups, Rees coordinates.

The classification works by explicit ideal comparison, which is exact and
fast at desk scale: the right ideal xM and left ideal Mx are materialized
for every element (2|M|^2 products total), classes are equal-ideal groups,
and the two-sided ideal MxM is assembled as a union of already-known right
ideals, so the J-classification costs no further products.  Orders between
classes are pairwise ideal containment over class representatives.

A minimal ideal is the least J-class; the library re-verifies I = MxM for
every x in I before handing the ideal out.
"""

from __future__ import annotations

import random
from typing import Optional

from .core import (
    FiniteGroup,
    FiniteMonoid,
    MonoidHom,
    SubSemigroup,
    generate_monoid,
    omega_power,
    underlying,
)
from .elements import Element
from .errors import (
    InternalInconsistency,
    NoIdempotents,
    NotIdempotent,
    NotInMinimalIdeal,
    NotSurjective,
)
from .report import Check, ConstructionReport

REES_EXHAUSTIVE_LIMIT = 2000
REES_SAMPLE_COUNT = 20_000


class GreenStructure:
    """Eggbox data of a monoid: the four partitions plus class ideals."""

    __slots__ = (
        "monoid",
        "r_classes",
        "l_classes",
        "j_classes",
        "h_classes",
        "r_class_of",
        "l_class_of",
        "j_class_of",
        "h_class_of",
        "r_ideal",
        "l_ideal",
        "j_ideal",
    )

    def __init__(self, monoid, r, l, j, h, r_ideal, l_ideal, j_ideal):
        self.monoid = monoid
        self.r_classes, self.r_class_of = r
        self.l_classes, self.l_class_of = l
        self.j_classes, self.j_class_of = j
        self.h_classes, self.h_class_of = h
        self.r_ideal = r_ideal
        self.l_ideal = l_ideal
        self.j_ideal = j_ideal

    def class_counts(self):
        return (
            len(self.r_classes),
            len(self.l_classes),
            len(self.j_classes),
            len(self.h_classes),
        )

    # preorders: x below y means the ideal of x is contained in the ideal
    # of y, tested by membership since ideals are closed downward
    def r_leq(self, x: Element, y: Element) -> bool:
        return x in self.r_ideal[y]

    def l_leq(self, x: Element, y: Element) -> bool:
        return x in self.l_ideal[y]

    def j_leq(self, x: Element, y: Element) -> bool:
        return x in self.j_ideal[self.j_class_of[y]]

    def j_class_leq(self, ci: int, cj: int) -> bool:
        """Containment of class ideals, compared on representatives."""
        return self.j_classes[ci][0] in self.j_ideal[cj]


def _group_classes(elements, value_of):
    """Group elements by a computed value; classes ordered by first member,
    members kept in element order."""
    class_of = {}
    classes = []
    seen = {}
    for x in elements:
        v = value_of(x)
        ci = seen.get(v)
        if ci is None:
            ci = len(classes)
            seen[v] = ci
            classes.append([x])
        else:
            classes[ci].append(x)
        class_of[x] = ci
    return tuple(tuple(c) for c in classes), class_of


def green_structure(m: FiniteMonoid) -> GreenStructure:
    """Classify M under Green's relations R, L, J, H (cached on M)."""
    if m._green is not None:
        return m._green
    els = m.elements
    mul = m.mul
    r_ideal = {x: frozenset(mul(x, u) for u in els) for x in els}
    l_ideal = {x: frozenset(mul(u, x) for u in els) for x in els}
    r = _group_classes(els, r_ideal.__getitem__)
    l = _group_classes(els, l_ideal.__getitem__)

    # MxM = union of uM over u in Mx; constant on R-classes, so compute
    # once per R-class and share
    r_classes, r_class_of = r
    rep_two_sided = []
    for cls in r_classes:
        rep = cls[0]
        two = set()
        for u in l_ideal[rep]:
            two |= r_ideal[u]
        rep_two_sided.append(frozenset(two))
    j = _group_classes(els, lambda x: rep_two_sided[r_class_of[x]])
    j_classes, j_class_of = j
    j_ideal = tuple(rep_two_sided[r_class_of[cls[0]]] for cls in j_classes)

    l_class_of = l[1]
    h = _group_classes(els, lambda x: (r_class_of[x], l_class_of[x]))
    gs = GreenStructure(m, r, l, j, h, r_ideal, l_ideal, j_ideal)
    m._green = gs
    return gs


class MinimalIdeal:
    """The least J-class of a monoid, with its idempotents."""

    __slots__ = ("monoid", "elements", "member", "idempotents", "semigroup")

    def __init__(self, monoid, elements, idempotents):
        self.monoid = monoid
        self.elements = tuple(elements)
        self.member = frozenset(self.elements)
        self.idempotents = tuple(idempotents)
        # ideals are closed under the product, no quadratic re-check needed
        self.semigroup = SubSemigroup(monoid, self.elements, check=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.member

    def __repr__(self):
        return f"MinimalIdeal({len(self.elements)} elements of {self.monoid.name!r})"


def minimal_ideal(m: FiniteMonoid) -> MinimalIdeal:
    """The unique minimal two-sided ideal, re-verified as MxM for every x."""
    gs = green_structure(m)
    best = min(range(len(gs.j_classes)), key=lambda ci: len(gs.j_ideal[ci]))
    for ci in range(len(gs.j_classes)):
        if not gs.j_ideal[best] <= gs.j_ideal[ci]:
            raise InternalInconsistency("no least J-class; minimal ideal not unique")
    members = gs.j_classes[best]
    ideal_set = gs.j_ideal[best]
    if set(members) != ideal_set:
        raise InternalInconsistency("least J-class does not equal its own ideal")
    # I = MxM for every x in I, assembled from the cached right ideals
    for x in members:
        two = set()
        for u in gs.l_ideal[x]:
            two |= gs.r_ideal[u]
        if two != ideal_set:
            raise InternalInconsistency(f"MxM differs from the minimal ideal at {x!r}")
    mul = m.mul
    idem = [x for x in members if mul(x, x) == x]
    if not idem:
        raise NoIdempotents("minimal ideal of a finite monoid must contain an idempotent")
    return MinimalIdeal(m, members, idem)


def maximal_subgroup(m: FiniteMonoid, e: Element, ideal: Optional[MinimalIdeal] = None) -> FiniteGroup:
    """Group of units of the local monoid eMe.

    When ``e`` lies in a supplied minimal ideal, eMe is cross-checked
    against eIe (the two agree for kernel idempotents).
    """
    mul = m.mul
    if mul(e, e) != e:
        raise NotIdempotent(f"{e!r} is not idempotent")
    order = m.index
    local = sorted({mul(mul(e, x), e) for x in m.elements}, key=order.__getitem__)
    units = []
    for u in local:
        for v in local:
            if mul(u, v) == e and mul(v, u) == e:
                units.append(u)
                break
    if ideal is not None and e in ideal:
        eie = {mul(mul(e, x), e) for x in ideal.elements}
        if eie != set(local) or eie != set(units):
            raise InternalInconsistency("eMe, eIe and the unit group disagree at a kernel idempotent")
    gm = generate_monoid(units, mul, identity=e, name=f"G[{m.name}]")
    if len(gm.elements) != len(units):
        raise InternalInconsistency("unit set of eMe is not closed")
    return FiniteGroup.from_monoid(gm)


class ReesCoordinates:
    """Normalized Rees coordinates of a minimal ideal.

    ``coord`` maps each element of I to (a, g, b) with a indexing R-classes,
    b indexing L-classes and g in the maximal subgroup at the base
    idempotent; ``point`` is the inverse map.  Row b0 = 0 and column a0 = 0
    of the sandwich matrix are the identity, and the base idempotent sits at
    (0, 1, 0).  The rescaled class representatives that realize the
    normalization are kept in ``row_reps`` and ``col_reps``.
    """

    __slots__ = (
        "monoid",
        "ideal",
        "base",
        "group",
        "n_a",
        "n_b",
        "a0",
        "b0",
        "row_reps",
        "col_reps",
        "sandwich",
        "coord",
        "point",
    )

    def __init__(self, monoid, ideal, base, group, row_reps, col_reps, sandwich, coord, point):
        self.monoid = monoid
        self.ideal = ideal
        self.base = base
        self.group = group
        self.n_a = len(row_reps)
        self.n_b = len(col_reps)
        self.a0 = 0
        self.b0 = 0
        self.row_reps = row_reps
        self.col_reps = col_reps
        self.sandwich = sandwich
        self.coord = coord
        self.point = point

    def __repr__(self):
        return f"ReesCoordinates({self.n_a}x{self.n_b}, group order {len(self.group)})"

    def product_by_coordinates(self, cx, cy):
        a, g, b = cx
        a2, g2, b2 = cy
        gmul = self.group.mul
        return (a, gmul(gmul(g, self.sandwich[(b, a2)]), g2), b2)


def rees_coordinates(m: FiniteMonoid, ideal: MinimalIdeal, e: Element) -> ReesCoordinates:
    """Coordinatize the minimal ideal as a normalized Rees matrix semigroup."""
    mul = m.mul
    if e not in ideal:
        raise NotInMinimalIdeal(f"{e!r} is not in the minimal ideal")
    if mul(e, e) != e:
        raise NotIdempotent(f"{e!r} is not idempotent")
    group = maximal_subgroup(m, e, ideal=ideal)
    gset = set(group.elements)

    # row label of x: the idempotent of the cell (R-class of x, L-class of e);
    # column label: the idempotent of (R-class of e, L-class of x)
    a_labels = []
    b_labels = []
    a_of = {}
    b_of = {}
    for x in ideal.elements:
        ra = omega_power(m, mul(x, e))
        if ra not in a_of:
            a_of[ra] = len(a_labels)
            a_labels.append(ra)
        lb = omega_power(m, mul(e, x))
        if lb not in b_of:
            b_of[lb] = len(b_labels)
            b_labels.append(lb)

    def to_front(labels, lab):
        i = labels.index(lab)
        return [labels[i]] + labels[:i] + labels[i + 1 :]

    a_labels = to_front(a_labels, e)
    b_labels = to_front(b_labels, e)

    # rescale so row b0 and column a0 of the sandwich matrix become 1
    row_reps = []
    for ua in a_labels:
        g = mul(e, ua)
        if g not in gset:
            raise InternalInconsistency("row rescaling factor escapes the maximal subgroup")
        row_reps.append(mul(ua, group.inverse(g)))
    col_reps = []
    for vb in b_labels:
        g = mul(vb, e)
        if g not in gset:
            raise InternalInconsistency("column rescaling factor escapes the maximal subgroup")
        col_reps.append(mul(group.inverse(g), vb))

    sandwich = {}
    for b, vb in enumerate(col_reps):
        for a, ua in enumerate(row_reps):
            c = mul(vb, ua)
            if c not in gset:
                raise InternalInconsistency("sandwich entry escapes the maximal subgroup")
            sandwich[(b, a)] = c
    for a in range(len(row_reps)):
        if sandwich[(0, a)] != e:
            raise InternalInconsistency("row b0 of the sandwich matrix is not the identity")
    for b in range(len(col_reps)):
        if sandwich[(b, 0)] != e:
            raise InternalInconsistency("column a0 of the sandwich matrix is not the identity")

    coord = {}
    point = {}
    for a, ua in enumerate(row_reps):
        for g in group.elements:
            uag = mul(ua, g)
            for b, vb in enumerate(col_reps):
                x = mul(uag, vb)
                if x not in ideal or x in coord:
                    raise InternalInconsistency("cell enumeration is not a bijection onto I")
                coord[x] = (a, g, b)
                point[(a, g, b)] = x
    if len(coord) != len(ideal.elements):
        raise InternalInconsistency("coordinate map misses part of the ideal")
    if coord[e] != (0, group.identity, 0):
        raise InternalInconsistency("base idempotent is not at (a0, 1, b0)")

    rc = ReesCoordinates(m, ideal, e, group, tuple(row_reps), tuple(col_reps), sandwich, coord, point)

    els = ideal.elements
    n = len(els)
    if n <= REES_EXHAUSTIVE_LIMIT:
        pairs = ((x, y) for x in els for y in els)
    else:
        rnd = random.Random(0)
        pairs = ((els[rnd.randrange(n)], els[rnd.randrange(n)]) for _ in range(REES_SAMPLE_COUNT))
    for x, y in pairs:
        if coord[mul(x, y)] != rc.product_by_coordinates(coord[x], coord[y]):
            raise InternalInconsistency(f"coordinates are not multiplicative on ({x!r}, {y!r})")
    return rc


def is_simple(s: SubSemigroup) -> bool:
    """True iff SxS = S for every x in S.

    SxS = S(xS) depends only on the right ideal xS, so the span is built
    once per distinct right ideal with an early exit once it fills up.
    """
    els = s.elements
    mul = s.monoid.mul
    n = len(els)
    full = s.member
    right = {x: frozenset(mul(x, u) for u in els) for x in els}
    reps = {}
    for x in els:
        reps.setdefault(right[x], x)
    for x in reps.values():
        sx = {mul(u, x) for u in els}
        sxs: set = set()
        for u in sx:
            sxs |= right[u]
            if len(sxs) == n:
                break
        if sxs != full:
            return False
    return True


def naive_is_simple(s: SubSemigroup) -> bool:
    """Cubic oracle: materialize every SxS by direct triple products."""
    els = s.elements
    mul = s.monoid.mul
    full = set(els)
    for x in els:
        if {mul(mul(u, x), v) for u in els for v in els} != full:
            return False
    return True


def idempotent_generated(s: SubSemigroup) -> SubSemigroup:
    """The subsemigroup generated by the idempotents of S."""
    idem = s.idempotents()
    if not idem:
        raise NoIdempotents("no idempotents to generate from")
    mul = s.monoid.mul
    closed = set(idem)
    frontier = list(idem)
    while frontier:
        fresh = []
        for u in frontier:
            for f in idem:
                v = mul(u, f)
                if v not in closed:
                    closed.add(v)
                    fresh.append(v)
        frontier = fresh
    # products of idempotent words are closed under concatenation
    return SubSemigroup(s.monoid, closed, check=False)


def check_min_ideal_image(
    phi: MonoidHom,
    source_ideal: Optional[MinimalIdeal] = None,
    source_rees: Optional["ReesCoordinates"] = None,
) -> ConstructionReport:
    """Verify that a surjection carries the minimal ideal onto the minimal
    ideal and each kernel maximal subgroup onto its counterpart.

    Callers that already hold the source's minimal ideal, or a Rees
    coordinatisation of it, can pass them in; the subgroup comparison then
    reads each maximal subgroup off its coordinate cell instead of
    rescanning the source monoid, which matters when the source is large.
    """
    if not phi.is_surjective():
        raise NotSurjective("minimal ideal image check needs a surjective map")
    src = underlying(phi.source)
    tgt = underlying(phi.target)
    ideal_s = source_ideal if source_ideal is not None else minimal_ideal(src)
    ideal_t = minimal_ideal(tgt)
    report = ConstructionReport(
        "min-ideal-image",
        params=[
            ("source", src.name),
            ("target", tgt.name),
            ("ideal", len(ideal_s)),
            ("target_ideal", len(ideal_t)),
        ],
    )

    image = {phi(x) for x in ideal_s.elements}
    if image == ideal_t.member:
        report.add(Check("ideal-image", "pass"))
    else:
        extra = sorted(image - ideal_t.member, key=repr)
        missing = sorted(ideal_t.member - image, key=repr)
        report.add(Check("ideal-image", "fail", f"extra={extra[:3]!r} missing={missing[:3]!r}"))

    bad = None
    target_groups = {}  # many source idempotents share one image
    for e in ideal_s.idempotents:
        if source_rees is not None:
            # the H-class of e is the cell through its coordinates
            a, _, b = source_rees.coord[e]
            cell = (source_rees.point[(a, g, b)] for g in source_rees.group.elements)
            image_ge = {phi(x) for x in cell}
        else:
            ge = maximal_subgroup(src, e, ideal=ideal_s)
            image_ge = {phi(x) for x in ge.elements}
        f = phi(e)
        if f not in target_groups:
            target_groups[f] = set(maximal_subgroup(tgt, f, ideal=ideal_t).elements)
        if image_ge != target_groups[f]:
            bad = e
            break
    if bad is None:
        report.add(Check("subgroup-image", "pass", f"idempotents={len(ideal_s.idempotents)}"))
    else:
        report.add(Check("subgroup-image", "fail", f"at idempotent {bad!r}"))
    return report


# ---------------------------------------------------------------------------
# naive oracles, computed per element with no class sharing


def naive_green_partitions(m: FiniteMonoid):
    """Partitions as frozensets of frozensets, from per-element ideals."""
    els = m.elements
    mul = m.mul
    rid = {x: frozenset(mul(x, u) for u in els) for x in els}
    lid = {x: frozenset(mul(u, x) for u in els) for x in els}
    jid = {}
    for x in els:
        two = set()
        for u in lid[x]:
            two |= rid[u]
        jid[x] = frozenset(two)

    def partition(key):
        groups = {}
        for x in els:
            groups.setdefault(key(x), []).append(x)
        return frozenset(frozenset(g) for g in groups.values())

    return {
        "R": partition(rid.__getitem__),
        "L": partition(lid.__getitem__),
        "J": partition(jid.__getitem__),
        "H": partition(lambda x: (rid[x], lid[x])),
    }


def naive_minimal_ideal_elements(m: FiniteMonoid) -> frozenset:
    """Intersection of all principal two-sided ideals."""
    els = m.elements
    mul = m.mul
    rid = {x: frozenset(mul(x, u) for u in els) for x in els}
    lid = {x: frozenset(mul(u, x) for u in els) for x in els}
    kernel = None
    for x in els:
        two = set()
        for u in lid[x]:
            two |= rid[u]
        kernel = two if kernel is None else (kernel & two)
    return frozenset(kernel)


def green_counts_agree(m: FiniteMonoid) -> bool:
    """Compare the fast classification against the naive oracle classwise."""
    gs = green_structure(m)
    oracle = naive_green_partitions(m)
    fast = {
        "R": frozenset(frozenset(c) for c in gs.r_classes),
        "L": frozenset(frozenset(c) for c in gs.l_classes),
        "J": frozenset(frozenset(c) for c in gs.j_classes),
        "H": frozenset(frozenset(c) for c in gs.h_classes),
    }
    return fast == oracle
