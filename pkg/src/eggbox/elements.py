"""Concrete element values and their structural products.

Every semigroup element in the library is an :class:`Element`, a small
immutable value of one of four kinds:

``transf``
    a total transformation of ``[n]``, stored as the tuple of 0-based
    images ``(0f, 1f, ..., (n-1)f)``; composition acts on the right.
``table``
    an abstract element of a multiplication-table monoid, stored as a
    ``(label, index)`` pair so elements of distinct tables never compare
    equal.
``rowmono``
    a row-monomial matrix of size ``n`` over some entry monoid: every row
    holds exactly one non-zero entry, stored as ``(column, entry)`` with a
    0-based column and an :class:`Element` entry.
``tuple``
    a componentwise product of elements, used for direct products and
    pullbacks.

Elements order and hash by a canonical nested-tuple key, which is also the
basis of the byte encoding used for deterministic tie-breaking.  Iteration
order of results throughout the library is derived from these keys and from
breadth-first discovery order, never from Python set iteration, so output is
stable across processes and hash seeds.
"""

from __future__ import annotations

from .errors import InconsistentProduct, NotRowMonomial


class Element:
    __slots__ = ("kind", "data", "key", "_hash")

    def __init__(self, kind: str, data, key):
        self.kind = kind
        self.data = data
        self.key = key
        self._hash = hash(key)

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return self is other or (isinstance(other, Element) and self.key == other.key)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __lt__(self, other):
        return self.key < other.key

    def __le__(self, other):
        return self.key <= other.key

    def encoding(self) -> bytes:
        """Canonical byte encoding; equal elements encode identically."""
        return repr(self.key).encode("ascii")

    def __repr__(self):
        return f"<{short_str(self)}>"


def transformation(images) -> Element:
    """Transformation of [n] from a tuple of 0-based images."""
    images = tuple(images)
    n = len(images)
    for i in images:
        if not isinstance(i, int) or not 0 <= i < n:
            raise InconsistentProduct(f"image {i!r} out of range for degree {n}")
    return Element("transf", images, ("t", images))


def table_element(label: str, index: int) -> Element:
    """Abstract element ``index`` of the table monoid named ``label``."""
    return Element("table", (label, index), ("i", label, index))


def row_monomial(rows) -> Element:
    """Row-monomial matrix from a sequence of (column, entry) rows."""
    rows = tuple(rows)
    n = len(rows)
    for col, entry in rows:
        if not isinstance(col, int) or not 0 <= col < n:
            raise NotRowMonomial(f"column {col!r} out of range for size {n}")
        if not isinstance(entry, Element):
            raise NotRowMonomial(f"entry {entry!r} is not an Element")
    return Element("rowmono", rows, ("m", n, tuple((c, e.key) for c, e in rows)))


def tuple_element(components) -> Element:
    """Componentwise product element."""
    components = tuple(components)
    return Element("tuple", components, ("p", tuple(e.key for e in components)))


def compose_transformations(a: Element, b: Element) -> Element:
    """(a*b) maps i to (i a) b; right action."""
    fa, fb = a.data, b.data
    if len(fa) != len(fb):
        raise InconsistentProduct("transformation degrees differ")
    return transformation(tuple(fb[i] for i in fa))


def make_table_mul(table, label: str):
    """Product rule for a table monoid: ``table[i][j]`` is the index of the
    product of elements i and j."""
    k = len(table)
    cache = [table_element(label, i) for i in range(k)]

    def mul(a: Element, b: Element) -> Element:
        if a.kind != "table" or b.kind != "table":
            raise InconsistentProduct("table product on non-table elements")
        la, ia = a.data
        lb, ib = b.data
        if la != label or lb != label:
            raise InconsistentProduct(f"elements of table {la!r}/{lb!r} fed to table {label!r}")
        return cache[table[ia][ib]]

    return mul


def make_rowmono_mul(entry_mul):
    """Product rule for row-monomial matrices over a given entry product.

    Row i of X*Y: if row i of X is (c, v) and row c of Y is (d, w) then row i
    of the product is (d, v*w).
    """

    def mul(x: Element, y: Element) -> Element:
        if x.kind != "rowmono" or y.kind != "rowmono":
            raise InconsistentProduct("row-monomial product on non-matrix elements")
        rx, ry = x.data, y.data
        if len(rx) != len(ry):
            raise InconsistentProduct("matrix sizes differ")
        out = []
        for c, v in rx:
            d, w = ry[c]
            out.append((d, entry_mul(v, w)))
        return row_monomial(out)

    return mul


def make_tuple_mul(muls):
    """Componentwise product rule."""
    muls = tuple(muls)

    def mul(a: Element, b: Element) -> Element:
        if a.kind != "tuple" or b.kind != "tuple":
            raise InconsistentProduct("componentwise product on non-tuple elements")
        ca, cb = a.data, b.data
        if len(ca) != len(muls) or len(cb) != len(muls):
            raise InconsistentProduct("component counts differ")
        return tuple_element(tuple(f(x, y) for f, x, y in zip(muls, ca, cb)))

    return mul


def identity_transformation(n: int) -> Element:
    return transformation(range(n))


def identity_row_monomial(n: int, entry_identity: Element) -> Element:
    return row_monomial((i, entry_identity) for i in range(n))


def same_shape(a: Element, b: Element) -> bool:
    """True when b is structurally compatible with a (same kind and size)."""
    if a.kind != b.kind:
        return False
    if a.kind == "transf":
        return len(a.data) == len(b.data)
    if a.kind == "rowmono":
        return len(a.data) == len(b.data)
    if a.kind == "tuple":
        return len(a.data) == len(b.data)
    if a.kind == "table":
        return a.data[0] == b.data[0]
    return True


def short_str(e: Element) -> str:
    """Compact human-readable rendering, 1-based where points appear."""
    if e.kind == "transf":
        return "[" + " ".join(str(i + 1) for i in e.data) + "]"
    if e.kind == "table":
        return f"{e.data[0]}#{e.data[1]}"
    if e.kind == "rowmono":
        rows = ", ".join(f"{c + 1}:{short_str(v)}" for c, v in e.data)
        return "{" + rows + "}"
    if e.kind == "tuple":
        return "(" + ", ".join(short_str(c) for c in e.data) + ")"
    return repr(e.data)
