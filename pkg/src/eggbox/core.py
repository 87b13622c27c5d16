"""Finite monoids, groups, homomorphisms, sections, and pullbacks.

A :class:`FiniteMonoid` is a fully enumerated monoid: a tuple of elements
with the identity first, a product function, a distinguished generator list,
and for every element a witness word over the generators.  Monoids are built
either by :func:`generate_monoid` (breadth-first closure of a seed list) or
by :func:`monoid_from_elements` (direct enumeration of a known closed set);
both validate what they return.

Element order is deterministic: breadth-first level, then canonical key
within a level.  Nothing downstream iterates over raw sets, so all derived
data (Green's classes, coordinates, reports) is reproducible bit for bit.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

from .elements import (
    Element,
    identity_transformation,
    make_tuple_mul,
    same_shape,
    tuple_element,
)
from .errors import (
    CapExceeded,
    InconsistentProduct,
    NotClosed,
    NotSurjective,
    NotWellDefined,
    SizeExceeded,
)

DEFAULT_CAP = 500_000

# Validation policy: exhaustive checks up to this many elements (or pairs of
# a product structure), deterministic sampling above.
EXHAUSTIVE_LIMIT = 200
SAMPLE_COUNT = 10_000


class FiniteMonoid:
    """A fully enumerated finite monoid with generator witness words."""

    __slots__ = (
        "name",
        "elements",
        "mul",
        "identity",
        "generators",
        "index",
        "words",
        "_idempotents",
        "_green",
    )

    def __init__(self, name, elements, mul, identity, generators, words):
        self.name = name
        self.elements = tuple(elements)
        self.mul = mul
        self.identity = identity
        self.generators = tuple(generators)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.words = words
        self._idempotents = None
        self._green = None

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"FiniteMonoid({self.name!r}, {len(self.elements)} elements)"

    def __contains__(self, x):
        return x in self.index

    def eval_word(self, word) -> Element:
        """Fold a tuple of generator indices into an element."""
        acc = self.identity
        for gi in word:
            acc = self.mul(acc, self.generators[gi])
        return acc

    def power(self, x: Element, k: int) -> Element:
        acc = self.identity
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def is_idempotent(self, x: Element) -> bool:
        return self.mul(x, x) == x

    def idempotents(self):
        if self._idempotents is None:
            self._idempotents = tuple(x for x in self.elements if self.is_idempotent(x))
        return self._idempotents



def _check_identity(mul, identity, elements):
    for x in elements:
        if mul(identity, x) != x or mul(x, identity) != x:
            raise InconsistentProduct(f"identity is not neutral on {x!r}")


def _check_associativity(mul, elements, seed=0):
    """Associativity policy: exhaustive up to 200 elements via an index
    table, 10 000 seeded random triples above."""
    n = len(elements)
    if n == 0:
        return
    if n <= EXHAUSTIVE_LIMIT:
        idx = {x: i for i, x in enumerate(elements)}
        table = [[idx[mul(a, b)] for b in elements] for a in elements]
        rng = range(n)
        for i in rng:
            ti = table[i]
            for j in rng:
                row_l = table[ti[j]]
                tj = table[j]
                for k in rng:
                    if row_l[k] != ti[tj[k]]:
                        raise InconsistentProduct(
                            f"associativity fails on indices ({i}, {j}, {k})"
                        )
        return
    rnd = random.Random(seed)
    for _ in range(SAMPLE_COUNT):
        a = elements[rnd.randrange(n)]
        b = elements[rnd.randrange(n)]
        c = elements[rnd.randrange(n)]
        if mul(mul(a, b), c) != mul(a, mul(b, c)):
            raise InconsistentProduct(f"associativity fails on ({a!r}, {b!r}, {c!r})")


def generate_monoid(
    seeds,
    product_rule: Callable[[Element, Element], Element],
    cap: int = DEFAULT_CAP,
    identity: Optional[Element] = None,
    name: Optional[str] = None,
) -> FiniteMonoid:
    """Breadth-first closure of ``seeds`` under ``product_rule``.

    Returns the smallest product-closed set containing the seeds and the
    identity, as a :class:`FiniteMonoid` whose element order is breadth-first
    by word length with ties broken by canonical encoding.  The witness word
    recorded for each element is its first discovery.

    The identity is inferred for transformation seeds and must be supplied
    for the other element kinds.  Raises :class:`CapExceeded` when the
    closure grows past ``cap`` and :class:`InconsistentProduct` when the
    product rule yields a value of the wrong shape.
    """
    seeds = list(seeds)
    if identity is None:
        if seeds and seeds[0].kind == "transf":
            identity = identity_transformation(len(seeds[0].data))
        else:
            raise InconsistentProduct("identity element required for these seeds")
    for s in seeds:
        if not same_shape(identity, s):
            raise InconsistentProduct(f"seed {s!r} has the wrong shape")

    elements = [identity]
    words = {identity: ()}
    index = {identity: 0}

    level = []
    for gi, s in enumerate(seeds):
        if s not in index:
            index[s] = -1  # placeholder, fixed after sorting
            words[s] = (gi,)
            level.append(s)
    level.sort()
    for s in level:
        index[s] = len(elements)
        elements.append(s)

    while level:
        fresh = []
        for x in level:
            wx = words[x]
            for gi, g in enumerate(seeds):
                y = product_rule(x, g)
                if not isinstance(y, Element) or not same_shape(identity, y):
                    raise InconsistentProduct(f"product of {x!r} and {g!r} is {y!r}")
                if y not in index:
                    index[y] = -1
                    words[y] = wx + (gi,)
                    fresh.append(y)
        if len(elements) + len(fresh) > cap:
            raise CapExceeded(cap, len(elements) + len(fresh))
        fresh.sort()
        for y in fresh:
            index[y] = len(elements)
            elements.append(y)
        level = fresh

    _check_identity(product_rule, identity, elements)
    _check_associativity(product_rule, elements)
    return FiniteMonoid(name or "monoid", elements, product_rule, identity, seeds, words)


def monoid_from_elements(
    elements,
    product_rule: Callable[[Element, Element], Element],
    identity: Element,
    name: Optional[str] = None,
    check_closure: bool = True,
) -> FiniteMonoid:
    """Monoid over an explicitly enumerated element set.

    The set must contain the identity and be closed under the product; every
    non-identity element doubles as a generator with a length-1 witness word.
    """
    rest = sorted(set(elements) - {identity})
    if identity not in set(elements):
        raise InconsistentProduct("identity not among the listed elements")
    ordered = [identity] + rest
    if check_closure:
        member = set(ordered)
        for a in ordered:
            for b in ordered:
                if product_rule(a, b) not in member:
                    raise NotClosed(f"product of {a!r} and {b!r} escapes the set")
    words = {identity: ()}
    for i, x in enumerate(rest):
        words[x] = (i,)
    _check_identity(product_rule, identity, ordered)
    _check_associativity(product_rule, ordered)
    return FiniteMonoid(name or "monoid", ordered, product_rule, identity, rest, words)


def omega_power(m: FiniteMonoid, x: Element) -> Element:
    """The unique idempotent positive power of ``x``."""
    p = x
    for _ in range(len(m.elements) + 1):
        if m.mul(p, p) == p:
            return p
        p = m.mul(p, x)
    raise InconsistentProduct(f"no idempotent power of {x!r} found")


def naive_omega_power(m: FiniteMonoid, x: Element) -> Element:
    """Scan oracle: the unique idempotent among x, x^2, ..., x^|M|."""
    powers = []
    p = x
    for _ in range(len(m.elements)):
        powers.append(p)
        p = m.mul(p, x)
    idems = {q for q in powers if m.mul(q, q) == q}
    if len(idems) != 1:
        raise InconsistentProduct(f"{len(idems)} idempotent powers of {x!r}")
    return idems.pop()


class FiniteGroup:
    """A finite group wrapping a :class:`FiniteMonoid` plus an inverse map."""

    __slots__ = ("monoid", "_inverse", "_orders")

    def __init__(self, monoid: FiniteMonoid, inverse: dict):
        self.monoid = monoid
        self._inverse = inverse
        self._orders = None

    @classmethod
    def from_monoid(cls, m: FiniteMonoid) -> "FiniteGroup":
        inverse = {}
        for x in m.elements:
            inv = None
            for y in m.elements:
                if m.mul(x, y) == m.identity and m.mul(y, x) == m.identity:
                    inv = y
                    break
            if inv is None:
                raise InconsistentProduct(f"{x!r} has no two-sided inverse")
            inverse[x] = inv
        return cls(m, inverse)

    @property
    def name(self):
        return self.monoid.name

    @property
    def elements(self):
        return self.monoid.elements

    @property
    def identity(self):
        return self.monoid.identity

    @property
    def mul(self):
        return self.monoid.mul

    @property
    def generators(self):
        return self.monoid.generators

    @property
    def index(self):
        return self.monoid.index

    def __len__(self):
        return len(self.monoid.elements)

    def __contains__(self, x):
        return x in self.monoid.index

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order {len(self)})"

    def inverse(self, x: Element) -> Element:
        return self._inverse[x]

    def order_of(self, x: Element) -> int:
        k = 1
        p = x
        while p != self.identity:
            p = self.mul(p, x)
            k += 1
        return k

    def order_profile(self):
        """Sorted tuple of element orders, an isomorphism invariant."""
        if self._orders is None:
            self._orders = tuple(sorted(self.order_of(x) for x in self.elements))
        return self._orders


def underlying(obj) -> FiniteMonoid:
    return obj.monoid if isinstance(obj, FiniteGroup) else obj


class MonoidHom:
    """A verified homomorphism stored as a total element map."""

    __slots__ = ("source", "target", "map", "_image")

    def __init__(self, source, target, mapping: dict, check: bool = True):
        self.source = source
        self.target = target
        self.map = mapping
        self._image = None
        if check:
            self._validate()

    def _validate(self):
        src = underlying(self.source)
        tgt = underlying(self.target)
        for x in src.elements:
            y = self.map.get(x)
            if y is None:
                raise NotWellDefined(f"no image recorded for {x!r}")
            if y not in tgt.index:
                raise NotWellDefined(f"image of {x!r} is outside the target")
        if self.map[src.identity] != tgt.identity:
            raise NotWellDefined("identity does not map to identity")
        n = len(src.elements)
        if n <= EXHAUSTIVE_LIMIT:
            pairs = ((a, b) for a in src.elements for b in src.elements)
        else:
            rnd = random.Random(0)
            pairs = (
                (src.elements[rnd.randrange(n)], src.elements[rnd.randrange(n)])
                for _ in range(SAMPLE_COUNT)
            )
        for a, b in pairs:
            if self.map[src.mul(a, b)] != tgt.mul(self.map[a], self.map[b]):
                raise NotWellDefined(f"map breaks on the pair ({a!r}, {b!r})")

    @classmethod
    def from_generator_images(cls, source, target, images, check: bool = True):
        """Extend generator images along witness words.

        Raises :class:`NotWellDefined` when two words for one element force
        different images.
        """
        src = underlying(source)
        tgt = underlying(target)
        images = list(images)
        if len(images) != len(src.generators):
            raise NotWellDefined(
                f"{len(images)} images for {len(src.generators)} generators"
            )
        for y in images:
            if y not in tgt.index:
                raise NotWellDefined(f"generator image {y!r} is outside the target")
        mapping = {}
        for x in src.elements:
            acc = tgt.identity
            for gi in src.words[x]:
                acc = tgt.mul(acc, images[gi])
            mapping[x] = acc
        for x in src.elements:
            fx = mapping[x]
            for gi, g in enumerate(src.generators):
                if mapping[src.mul(x, g)] != tgt.mul(fx, images[gi]):
                    raise NotWellDefined(
                        f"two words for {src.mul(x, g)!r} yield different images"
                    )
        return cls(source, target, mapping, check=check)

    def __call__(self, x: Element) -> Element:
        return self.map[x]

    def __repr__(self):
        s = underlying(self.source)
        t = underlying(self.target)
        return f"MonoidHom({s.name!r} -> {t.name!r})"

    def image_elements(self):
        """Distinct image elements in target order."""
        if self._image is None:
            tgt = underlying(self.target)
            seen = set(self.map.values())
            self._image = tuple(x for x in tgt.elements if x in seen)
        return self._image

    def is_surjective(self) -> bool:
        return len(self.image_elements()) == len(underlying(self.target).elements)

    def then(self, other: "MonoidHom") -> "MonoidHom":
        """Composite map: first self, then other."""
        mapping = {x: other.map[y] for x, y in self.map.items()}
        return MonoidHom(self.source, other.target, mapping, check=False)

    def kernel(self):
        """Preimage of the target identity, as a frozenset."""
        tgt = underlying(self.target)
        return frozenset(x for x, y in self.map.items() if y == tgt.identity)


def identity_hom(g) -> MonoidHom:
    m = underlying(g)
    return MonoidHom(g, g, {x: x for x in m.elements}, check=False)


class Section:
    """A choice of preimages for a surjective group homomorphism."""

    __slots__ = ("alpha", "map")

    def __init__(self, alpha: MonoidHom, mapping: dict):
        self.alpha = alpha
        self.map = mapping

    def __call__(self, k: Element) -> Element:
        return self.map[k]


def canonical_section(alpha: MonoidHom) -> Section:
    """Deterministic section of a surjective homomorphism.

    The identity lifts to the identity; every other element lifts to its
    preimage least in the source element order.
    """
    if not alpha.is_surjective():
        raise NotSurjective("cannot take a section of a non-surjective map")
    src = underlying(alpha.source)
    tgt = underlying(alpha.target)
    mapping = {}
    for h in src.elements:
        k = alpha.map[h]
        if k not in mapping:
            mapping[k] = h
    if mapping[tgt.identity] != src.identity:
        raise NotWellDefined("identity is not the first preimage of the identity")
    for k, h in mapping.items():
        if alpha.map[h] != k:
            raise NotWellDefined("section disagrees with the map")
    return Section(alpha, {k: mapping[k] for k in tgt.elements})


def pullback(alpha: MonoidHom, rho: MonoidHom):
    """Fiber product of two surjections onto a common group.

    Returns ``(P, p1, p2)`` where P is the subgroup of pairs (h, k) with
    alpha(h) = rho(k) and p1, p2 are the coordinate projections, both
    surjective.
    """
    k_a = underlying(alpha.target)
    k_r = underlying(rho.target)
    if k_a.elements != k_r.elements:
        raise NotWellDefined("the two maps have different codomains")
    if not alpha.is_surjective() or not rho.is_surjective():
        raise NotSurjective("pullback requires surjective maps")
    src_a = underlying(alpha.source)
    src_r = underlying(rho.source)
    pairs = [
        tuple_element((h, k))
        for h in src_a.elements
        for k in src_r.elements
        if alpha.map[h] == rho.map[k]
    ]
    mul = make_tuple_mul((src_a.mul, src_r.mul))
    ident = tuple_element((src_a.identity, src_r.identity))
    name = f"pullback({src_a.name},{src_r.name})"
    pm = monoid_from_elements(pairs, mul, ident, name=name)
    group = FiniteGroup.from_monoid(pm)
    p1 = MonoidHom(pm, alpha.source, {x: x.data[0] for x in pm.elements})
    p2 = MonoidHom(pm, rho.source, {x: x.data[1] for x in pm.elements})
    if not p1.is_surjective() or not p2.is_surjective():
        raise NotSurjective("pullback projection failed to be onto")
    return group, p1, p2


def small_generating_set(g: FiniteGroup):
    """Greedy generating set: repeatedly adjoin the least element outside
    the subgroup generated so far."""
    gens = []
    closed = {g.identity}
    for x in g.elements:
        if x not in closed:
            gens.append(x)
            frontier = [g.identity]
            closed = {g.identity}
            while frontier:
                fresh = []
                for u in frontier:
                    for h in gens:
                        v = g.mul(u, h)
                        if v not in closed:
                            closed.add(v)
                            fresh.append(v)
                frontier = fresh
    return gens


def _close_with_map(g1: FiniteGroup, g2: FiniteGroup, gen_images):
    """Close the partial assignment; None when it breaks injectivity or
    well-definedness on some (element, generator) pair."""
    emap = {g1.identity: g2.identity}
    used = {g2.identity}
    elems = [g1.identity]
    i = 0
    while i < len(elems):
        x = elems[i]
        i += 1
        fx = emap[x]
        for g, y in gen_images:
            xg = g1.mul(x, g)
            fxy = g2.mul(fx, y)
            cur = emap.get(xg)
            if cur is None:
                if fxy in used:
                    return None
                emap[xg] = fxy
                used.add(fxy)
                elems.append(xg)
            elif cur != fxy:
                return None
    return emap


def is_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> Optional[MonoidHom]:
    """Search for an isomorphism; returns a verified MonoidHom or None.

    Exhaustive backtracking over generator images filtered by element order,
    bounded at 200 elements.
    """
    if len(g1) > EXHAUSTIVE_LIMIT or len(g2) > EXHAUSTIVE_LIMIT:
        raise SizeExceeded(f"isomorphism search above {EXHAUSTIVE_LIMIT} elements")
    if len(g1) != len(g2):
        return None
    if g1.order_profile() != g2.order_profile():
        return None
    gens = small_generating_set(g1)
    by_order = {}
    for y in g2.elements:
        by_order.setdefault(g2.order_of(y), []).append(y)

    def dfs(chosen):
        emap = _close_with_map(g1, g2, list(zip(gens, chosen)))
        if emap is None:
            return None
        if len(chosen) == len(gens):
            return emap if len(emap) == len(g1) else None
        g = gens[len(chosen)]
        for y in by_order.get(g1.order_of(g), ()):
            result = dfs(chosen + [y])
            if result is not None:
                return result
        return None

    emap = dfs([])
    if emap is None:
        return None
    return MonoidHom(g1, g2, emap)


def product_group(groups, name: Optional[str] = None) -> FiniteGroup:
    """Direct product with componentwise tuple elements."""
    groups = list(groups)
    muls = make_tuple_mul(tuple(g.mul for g in groups))
    ident = tuple_element(tuple(g.identity for g in groups))
    seeds = []
    for i, g in enumerate(groups):
        for gen in g.generators:
            parts = [h.identity for h in groups]
            parts[i] = gen
            seeds.append(tuple_element(parts))
    label = name or "x".join(underlying(g).name for g in groups)
    pm = generate_monoid(seeds, muls, identity=ident, name=label)
    return FiniteGroup.from_monoid(pm)


def direct_product(g1: FiniteGroup, g2: FiniteGroup, name=None) -> FiniteGroup:
    return product_group([g1, g2], name=name)


def direct_power(g: FiniteGroup, k: int, name=None) -> FiniteGroup:
    if k == 0:
        ident = tuple_element(())
        pm = generate_monoid([], make_tuple_mul(()), identity=ident, name=name or "1")
        return FiniteGroup.from_monoid(pm)
    return product_group([g] * k, name=name or f"{underlying(g).name}^{k}")


class SubSemigroup:
    """A product-closed subset of an ambient monoid."""

    __slots__ = ("monoid", "elements", "member", "_gens")

    def __init__(self, monoid: FiniteMonoid, elements, check: bool = True):
        self.monoid = monoid
        order = monoid.index
        self.elements = tuple(sorted(set(elements), key=lambda x: order[x]))
        self.member = frozenset(self.elements)
        self._gens = None
        if check:
            mul = monoid.mul
            for a in self.elements:
                for b in self.elements:
                    if mul(a, b) not in self.member:
                        raise NotClosed(f"product of {a!r} and {b!r} escapes the subset")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.member

    def __repr__(self):
        return f"SubSemigroup({len(self.elements)} of {self.monoid.name!r})"

    def idempotents(self):
        mul = self.monoid.mul
        return tuple(x for x in self.elements if mul(x, x) == x)

    def generating_set(self):
        """Greedy small generating set of the subsemigroup."""
        if self._gens is not None:
            return self._gens
        mul = self.monoid.mul
        gens = []
        closed = set()
        for x in self.elements:
            if x not in closed:
                gens.append(x)
                closed = set(gens)
                frontier = list(gens)
                while frontier:
                    fresh = []
                    for u in frontier:
                        for g in gens:
                            v = mul(u, g)
                            if v not in closed:
                                closed.add(v)
                                fresh.append(v)
                    frontier = fresh
        self._gens = tuple(gens)
        return self._gens
