import pytest

from eggbox.elements import (
    compose_transformations,
    identity_row_monomial,
    make_rowmono_mul,
    make_table_mul,
    row_monomial,
    table_element,
    transformation,
    tuple_element,
)
from eggbox.errors import InconsistentProduct, NotRowMonomial


def test_transformation_composition_order():
    # s then t: (s*t)(i) = t(s(i))
    s = transformation([1, 2, 0])
    t = transformation([0, 0, 2])
    st = compose_transformations(s, t)
    assert st.data == (0, 2, 0)


def test_transformation_identity():
    e = transformation(range(4))
    s = transformation([3, 3, 1, 0])
    assert compose_transformations(e, s) == s
    assert compose_transformations(s, e) == s


def test_table_elements_multiply_by_lookup():
    mul = make_table_mul([[0, 1], [1, 0]], "z2")
    a = table_element("z2", 0)
    b = table_element("z2", 1)
    assert mul(a, b) == b
    assert mul(b, b) == a


def test_table_mul_rejects_foreign_elements():
    mul = make_table_mul([[0]], "one")
    alien = table_element("other", 0)
    with pytest.raises(InconsistentProduct):
        mul(alien, alien)


def test_row_monomial_shape_checks():
    g = table_element("g", 0)
    with pytest.raises(NotRowMonomial):
        row_monomial([(2, g)])  # column out of range for a 1-row matrix
    with pytest.raises(NotRowMonomial):
        row_monomial([(0, "not an element")])


def test_row_monomial_multiplication():
    gmul = make_table_mul([[0, 1], [1, 0]], "z2")
    one = table_element("z2", 0)
    g = table_element("z2", 1)
    mul = make_rowmono_mul(gmul)
    # x: row i -> column (i+1) mod 2 with entry g
    x = row_monomial([(1, g), (0, g)])
    xx = mul(x, x)
    # row i of xx: column (i+2) mod 2 = i, entry g*g = 1
    assert xx == identity_row_monomial(2, one)


def test_rowmono_mul_size_mismatch():
    gmul = make_table_mul([[0]], "one")
    one = table_element("one", 0)
    mul = make_rowmono_mul(gmul)
    with pytest.raises(InconsistentProduct):
        mul(identity_row_monomial(2, one), identity_row_monomial(3, one))


def test_tuple_element_pairs():
    a = tuple_element((table_element("t", 0), table_element("t", 1)))
    b = tuple_element((table_element("t", 0), table_element("t", 1)))
    assert a == b and hash(a) == hash(b)
