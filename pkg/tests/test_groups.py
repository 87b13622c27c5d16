import pytest

from eggbox.core import is_isomorphic
from eggbox.errors import InconsistentProduct, UnknownObject
from eggbox.groups import (
    alternating,
    builtin_group,
    cyclic,
    dicyclic,
    dihedral,
    group_from_table,
    identify,
    symmetric,
)


def test_builtin_orders():
    for name, order in [
        ("1", 1), ("C2", 2), ("C3", 3), ("C4", 4), ("C2xC2", 4),
        ("S3", 6), ("C6", 6), ("D4", 8), ("Q8", 8), ("A4", 12),
        ("C3xC3", 9), ("S4", 24),
    ]:
        assert len(builtin_group(name).elements) == order, name


def test_alternating_orders():
    # even degrees once picked two equal generators; keep the guard honest
    assert [len(alternating(n).elements) for n in (1, 2, 3, 4, 5)] == [
        1, 1, 3, 12, 60,
    ]


def test_symmetric_and_dihedral():
    assert len(symmetric(4).elements) == 24
    assert len(dihedral(6).elements) == 12
    assert is_isomorphic(dihedral(3), symmetric(3)) is not None


def test_dicyclic_q8_has_single_involution():
    q8 = dicyclic(2)
    invs = [x for x in q8.elements if x != q8.identity and q8.mul(x, x) == q8.identity]
    assert len(invs) == 1


def test_unknown_name_raises():
    with pytest.raises(UnknownObject):
        builtin_group("F99")


def test_builtin_products():
    v8 = builtin_group("C2xC2xC2")
    assert len(v8.elements) == 8
    assert all(v8.mul(x, x) == v8.identity for x in v8.elements)


def test_group_from_table_validates():
    # C3 as a table, 0-based entries
    c3 = group_from_table("Z3", [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    assert len(c3.elements) == 3
    with pytest.raises(InconsistentProduct):
        group_from_table("bad", [[0, 0], [0, 0]])


def test_identify_small_library():
    assert identify(builtin_group("C4")) == "C4"
    assert identify(builtin_group("C2xC2")) == "C2xC2"
    assert identify(symmetric(3)) == "S3"
    assert identify(dicyclic(2)) == "Q8"
    assert identify(cyclic(1)) == "C1"
