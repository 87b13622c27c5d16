"""Wreath products as row-monomial matrices.

A wreath product S ≀ ([n], T) is realized as the monoid of n×n matrices
with exactly one non-zero entry per row, entries drawn from S; the pair
(f, t) corresponds to the matrix whose row i holds f(i) in column t(i).
Zero is implicit in the row-monomial storage, never an entry value.

Iterated wreath products are matrices whose entries are themselves
row-monomial matrices, with an explicit flatten used as a multiplicativity
oracle.  The module also hosts the group-to-wreath dictionary: constant
wreaths G ≀ (B, constants) with the projection psi of the local monoid at
an idempotent onto G, the RLM action on the L-classes of a minimal ideal,
and the Schützenberger representation built from Rees coordinates.
"""

from __future__ import annotations

from itertools import product as iter_product
from typing import Optional

from .core import (
    DEFAULT_CAP,
    FiniteGroup,
    FiniteMonoid,
    MonoidHom,
    SubSemigroup,
    generate_monoid,
    monoid_from_elements,
)
from .elements import (
    Element,
    compose_transformations,
    identity_row_monomial,
    make_rowmono_mul,
    row_monomial,
    transformation,
)
from .errors import (
    CapExceeded,
    InternalInconsistency,
    NotIdempotent,
    NotInLocalMonoid,
    NotRowMonomial,
    SizeMismatch,
)
from .green import ReesCoordinates, green_structure, is_simple, minimal_ideal


class RowMonomialMatrix:
    """A size-n matrix with one non-zero entry per row, over an entry monoid."""

    __slots__ = ("entry_monoid", "element")

    def __init__(self, entry_monoid: FiniteMonoid, rows):
        self.entry_monoid = entry_monoid
        elem = rows if isinstance(rows, Element) else row_monomial(rows)
        if elem.kind != "rowmono":
            raise NotRowMonomial(f"{elem!r} is not a row-monomial element")
        for _, v in elem.data:
            if v not in entry_monoid.index:
                raise NotRowMonomial(f"entry {v!r} is outside the entry monoid")
        self.element = elem

    @property
    def size(self) -> int:
        return len(self.element.data)

    @property
    def rows(self):
        return self.element.data

    def row(self, i: int):
        """(column, entry) of row i."""
        return self.element.data[i]

    def __eq__(self, other):
        return isinstance(other, RowMonomialMatrix) and self.element == other.element

    def __hash__(self):
        return hash(self.element)

    def __repr__(self):
        return f"RowMonomialMatrix({self.element!r})"


def rm_multiply(x: RowMonomialMatrix, y: RowMonomialMatrix) -> RowMonomialMatrix:
    """Matrix product; row i is (c_Y(c_X(i)), v_X(i)·v_Y(c_X(i)))."""
    if x.size != y.size:
        raise SizeMismatch(f"sizes {x.size} and {y.size} differ")
    if x.entry_monoid.elements != y.entry_monoid.elements:
        raise SizeMismatch("entry monoids differ")
    mul = make_rowmono_mul(x.entry_monoid.mul)
    return RowMonomialMatrix(x.entry_monoid, mul(x.element, y.element))


class WreathElement:
    """The (f, t) form of a wreath product element."""

    __slots__ = ("entry_monoid", "f", "t")

    def __init__(self, entry_monoid: FiniteMonoid, f, t):
        self.entry_monoid = entry_monoid
        self.f = tuple(f)
        self.t = tuple(t)
        if len(self.f) != len(self.t):
            raise NotRowMonomial("f and t have different lengths")

    def __eq__(self, other):
        return (
            isinstance(other, WreathElement)
            and self.f == other.f
            and self.t == other.t
        )

    def __repr__(self):
        return f"WreathElement(f={self.f!r}, t={self.t!r})"


def wreath_to_rm(w: WreathElement) -> RowMonomialMatrix:
    """Matrix with row i holding f(i) in column t(i)."""
    return RowMonomialMatrix(w.entry_monoid, tuple(zip(w.t, w.f)))


def rm_to_wreath(x: RowMonomialMatrix) -> WreathElement:
    if not isinstance(x, RowMonomialMatrix):
        raise NotRowMonomial(f"{x!r} is not a row-monomial matrix")
    cols = tuple(c for c, _ in x.rows)
    vals = tuple(v for _, v in x.rows)
    return WreathElement(x.entry_monoid, vals, cols)


class BlockRowMonomialMatrix:
    """A row-monomial matrix whose entries are row-monomial matrices.

    Block entry means an inner matrix; entry always means an element of the
    underlying entry monoid.  Flattening to size outer·inner commutes with
    multiplication.
    """

    __slots__ = ("entry_monoid", "inner_size", "element")

    def __init__(self, entry_monoid: FiniteMonoid, inner_size: int, rows):
        self.entry_monoid = entry_monoid
        self.inner_size = inner_size
        elem = rows if isinstance(rows, Element) else row_monomial(rows)
        if elem.kind != "rowmono":
            raise NotRowMonomial(f"{elem!r} is not a row-monomial element")
        for _, blk in elem.data:
            if blk.kind != "rowmono" or len(blk.data) != inner_size:
                raise NotRowMonomial(f"block {blk!r} has the wrong shape")
            for _, v in blk.data:
                if v not in entry_monoid.index:
                    raise NotRowMonomial(f"entry {v!r} is outside the entry monoid")
        self.element = elem

    @property
    def outer_size(self) -> int:
        return len(self.element.data)

    def block(self, i: int):
        """(block column, inner matrix) of outer row i."""
        c, blk = self.element.data[i]
        return c, RowMonomialMatrix(self.entry_monoid, blk)

    def block_entries(self):
        """All inner matrices, one per outer row."""
        return tuple(RowMonomialMatrix(self.entry_monoid, blk) for _, blk in self.element.data)

    def flatten(self) -> RowMonomialMatrix:
        """The (outer·inner)-sized matrix; global row J·b+i of a block row
        (C, blk) maps to column C·b + c_blk(i) with entry v_blk(i)."""
        b = self.inner_size
        rows = []
        for block_col, blk in self.element.data:
            for c, v in blk.data:
                rows.append((block_col * b + c, v))
        return RowMonomialMatrix(self.entry_monoid, tuple(rows))

    def __eq__(self, other):
        return isinstance(other, BlockRowMonomialMatrix) and self.element == other.element

    def __repr__(self):
        return f"BlockRowMonomialMatrix({self.outer_size}x{self.inner_size} blocks)"


def block_rm_multiply(x: BlockRowMonomialMatrix, y: BlockRowMonomialMatrix) -> BlockRowMonomialMatrix:
    if x.outer_size != y.outer_size or x.inner_size != y.inner_size:
        raise SizeMismatch("block shapes differ")
    mul = make_rowmono_mul(make_rowmono_mul(x.entry_monoid.mul))
    return BlockRowMonomialMatrix(x.entry_monoid, x.inner_size, mul(x.element, y.element))


def constant_transformation(n: int, target: int) -> Element:
    return transformation([target] * n)


def augmented_monoid(n: int, transformations, cap: int = DEFAULT_CAP, name=None) -> FiniteMonoid:
    """Transformation monoid on [n] generated by the given maps together
    with all n constant maps."""
    seeds = list(transformations) + [constant_transformation(n, i) for i in range(n)]
    return generate_monoid(seeds, compose_transformations, cap=cap, name=name or f"aug[{n}]")


def augmented_cyclic(n: int, cap: int = DEFAULT_CAP) -> FiniteMonoid:
    """The cyclic rotation of [n] together with all constants."""
    cycle = transformation([(i + 1) % n for i in range(n)])
    return augmented_monoid(n, [cycle], cap=cap, name=f"augC{n}")


class ConstantWreath:
    """G ≀ (B, constants) with an identity adjoined; the simple part (all
    matrices with a constant column) is tracked separately."""

    __slots__ = ("group", "points", "monoid", "simple")

    def __init__(self, group, points, monoid, simple):
        self.group = group
        self.points = points
        self.monoid = monoid
        self.simple = simple

    def __repr__(self):
        return f"ConstantWreath({self.group.name!r}, {self.points} points)"


def constant_wreath(g: FiniteGroup, points, cap: int = DEFAULT_CAP) -> ConstantWreath:
    """Enumerate G ≀ (B, B̄) directly: all (f, constant) pairs."""
    b = points if isinstance(points, int) else len(points)
    total = (len(g) ** b) * b + 1
    if total > cap:
        raise CapExceeded(cap, total)
    mul = make_rowmono_mul(g.mul)
    simple_elems = [
        row_monomial((k, fi) for fi in f)
        for f in iter_product(g.elements, repeat=b)
        for k in range(b)
    ]
    ident = identity_row_monomial(b, g.identity)
    monoid = monoid_from_elements(
        [ident] + simple_elems, mul, ident, name=f"{g.name}w{b}"
    )
    # the simple part is closed structurally: a product of constant-column
    # matrices is again constant-column
    simple = SubSemigroup(monoid, simple_elems, check=False)
    if not is_simple(simple):
        raise InternalInconsistency("constant wreath simple part is not simple")
    return ConstantWreath(g, b, monoid, simple)


def psi(w: ConstantWreath, e: Element, s: Element) -> Element:
    """Value of the local-monoid isomorphism eSe → G at s.

    For e = (f, b̄) idempotent and s = (f', b̄) in eSe, returns f'(b); psi is
    a bijective homomorphism onto the entry group with psi(e) = 1.
    """
    mul = w.monoid.mul
    if e not in w.simple or mul(e, e) != e:
        raise NotIdempotent(f"{e!r} is not an idempotent of the simple part")
    if s not in w.simple or mul(e, s) != s or mul(s, e) != s:
        raise NotInLocalMonoid(f"{s!r} is not in the local monoid at {e!r}")
    b = e.data[0][0]
    return s.data[b][1]


def local_monoid(m: FiniteMonoid, e: Element):
    """Elements s with es = s = se, in element order."""
    mul = m.mul
    return tuple(s for s in m.elements if mul(e, s) == s and mul(s, e) == s)


def rlm(m: FiniteMonoid, rees: Optional[ReesCoordinates] = None):
    """Action of M on the right of the L-classes of its minimal ideal.

    Returns (transformation monoid on B, MonoidHom onto it).  Elements of
    the minimal ideal act as constants and every constant map arises.

    With a precomputed Rees coordinatisation of the minimal ideal, class
    labels are read off coordinates instead of a full Green computation;
    pass one when M is large.
    """
    mul = m.mul
    if rees is not None:
        ideal = rees.ideal
        b_classes = list(rees.col_reps)
        nb = rees.n_b

        def label(x: Element) -> int:
            return rees.coord[x][2]

        def alternates():
            top = rees.group.elements[-1]
            for b in range(nb):
                yield b, rees.point[(rees.n_a - 1, top, b)]
    else:
        ideal = minimal_ideal(m)
        gs = green_structure(m)
        b_classes = []
        b_of = {}
        for x in ideal.elements:
            ci = gs.l_class_of[x]
            if ci not in b_of:
                b_of[ci] = len(b_classes)
                b_classes.append(x)
        nb = len(b_classes)

        def label(x: Element) -> int:
            return b_of[gs.l_class_of[x]]

        def alternates():
            for b, rep in enumerate(b_classes):
                yield b, gs.l_classes[gs.l_class_of[rep]][-1]

    def action(u: Element) -> Element:
        return transformation(label(mul(rep, u)) for rep in b_classes)

    # well-definedness spot check: two members of each class must act
    # identically
    for b, alt in alternates():
        rep = b_classes[b]
        for u in m.generators:
            if label(mul(rep, u)) != label(mul(alt, u)):
                raise InternalInconsistency("L-classes are not a right congruence")

    seeds = [action(g) for g in m.generators]
    target = generate_monoid(
        seeds, compose_transformations, identity=transformation(range(nb)),
        name=f"rlm[{m.name}]",
    )
    hom = MonoidHom(m, target, {u: action(u) for u in m.elements})
    for x in ideal.elements:
        img = hom(x).data
        if any(t != img[0] for t in img):
            raise InternalInconsistency("minimal ideal element does not act as a constant")
    for k in range(nb):
        if constant_transformation(nb, k) not in target.index:
            raise InternalInconsistency("a constant map is missing from the RLM image")
    return target, hom


def schutz_rep(m: FiniteMonoid, rc: ReesCoordinates) -> MonoidHom:
    """Schützenberger representation by row-monomial matrices over G.

    s maps to the matrix whose row b' holds the G-coordinate of v_{b'}·s in
    the column of its L-class; the representation is a homomorphism,
    faithful on the maximal subgroup at the base idempotent.
    """
    mul = m.mul
    g = rc.group

    def matrix_of(u: Element) -> Element:
        rows = []
        for vb in rc.col_reps:
            a, gg, b = rc.coord[mul(vb, u)]
            if a != rc.a0:
                raise InternalInconsistency("column representative left its R-class")
            rows.append((b, gg))
        return row_monomial(rows)

    ident = matrix_of(m.identity)
    if ident != identity_row_monomial(rc.n_b, g.identity):
        raise InternalInconsistency("identity does not map to the identity matrix")
    seeds = [matrix_of(x) for x in m.generators]
    target = generate_monoid(
        seeds, make_rowmono_mul(g.mul), identity=ident, name=f"schutz[{m.name}]"
    )
    hom = MonoidHom(m, target, {u: matrix_of(u) for u in m.elements})
    if len({hom(x) for x in g.elements}) != len(g):
        raise InternalInconsistency("representation is not faithful on the maximal subgroup")
    return hom


def is_faithful_on_min_ideal(m: FiniteMonoid) -> bool:
    """True iff the Schützenberger representation separates all of M."""
    rep = _schutz_at_first_idempotent(m)
    return len(set(rep.map.values())) == len(m.elements)


def _schutz_at_first_idempotent(m: FiniteMonoid) -> MonoidHom:
    ideal = minimal_ideal(m)
    from .green import rees_coordinates

    rc = rees_coordinates(m, ideal, ideal.idempotents[0])
    return schutz_rep(m, rc)


def schutz_faithful_quotient(m: FiniteMonoid):
    """Image of M under the Schützenberger representation, with the quotient
    map; the image is always faithful on its own minimal ideal."""
    rep = _schutz_at_first_idempotent(m)
    target = rep.target
    if not is_faithful_on_min_ideal(target):
        raise InternalInconsistency("Schützenberger image is not faithful")
    return target, rep
