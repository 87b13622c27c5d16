import pytest

from eggbox.constructions import build_idempotent_cover
from eggbox.core import MonoidHom, SubSemigroup, generate_monoid, underlying
from eggbox.elements import compose_transformations, transformation
from eggbox.errors import NotIdempotent, NotInMinimalIdeal, NotSurjective
from eggbox.green import (
    check_min_ideal_image,
    green_counts_agree,
    green_structure,
    idempotent_generated,
    is_simple,
    maximal_subgroup,
    minimal_ideal,
    naive_is_simple,
    naive_minimal_ideal_elements,
    rees_coordinates,
)
from eggbox.groups import builtin_group


def t3():
    return generate_monoid(
        [
            transformation([1, 0, 2]),
            transformation([1, 2, 0]),
            transformation([0, 1, 1]),
        ],
        compose_transformations,
        name="T3",
    )


def test_green_counts_on_full_transformation_monoid():
    m = t3()
    gs = green_structure(m)
    # classic T3 eggbox: ranks 3, 2, 1 give three J-classes; the three
    # constants share one right ideal but have singleton left ideals
    assert len(gs.j_classes) == 3
    assert len(gs.r_classes) == 1 + 3 + 1
    assert len(gs.l_classes) == 1 + 3 + 3
    assert green_counts_agree(m)


def test_minimal_ideal_of_t3_is_constants():
    m = t3()
    ideal = minimal_ideal(m)
    assert len(ideal) == 3
    assert set(ideal.elements) == naive_minimal_ideal_elements(m)
    assert all(x.data in {(0, 0, 0), (1, 1, 1), (2, 2, 2)} for x in ideal.elements)


def test_maximal_subgroup_at_constant_is_trivial():
    m = t3()
    ideal = minimal_ideal(m)
    e = ideal.idempotents[0]
    g = maximal_subgroup(m, e, ideal=ideal)
    assert len(g.elements) == 1
    with pytest.raises(NotIdempotent):
        maximal_subgroup(m, m.generators[1], ideal=ideal)


def test_rees_coordinates_cover_ideal():
    c = build_idempotent_cover(builtin_group("C2"), 3)
    rc = c.rees
    assert rc.n_a == 3 and rc.n_b == 3
    assert len(rc.group.elements) == 2
    # coordinates are a bijection onto A x G x B
    assert len(rc.coord) == 18
    assert len({rc.point[k] for k in rc.point}) == 18
    # base point is the chosen idempotent with trivial coordinates
    a0, g0, b0 = rc.coord[c.y]
    assert (a0, b0) == (0, 0) and g0 == rc.group.identity
    with pytest.raises(NotInMinimalIdeal):
        rees_coordinates(c.monoid, c.ideal, c.monoid.identity)


def test_rees_multiplication_rule():
    c = build_idempotent_cover(builtin_group("C2"), 3)
    rc = c.rees
    mul = c.monoid.mul
    for u in c.ideal.elements[:6]:
        for v in c.ideal.elements[:6]:
            a, g, b = rc.coord[u]
            ap, gp, bp = rc.coord[v]
            h = rc.group.mul(rc.group.mul(g, rc.sandwich[(b, ap)]), gp)
            assert rc.coord[mul(u, v)] == (a, h, bp)


def test_is_simple_matches_naive():
    m = t3()
    ideal = minimal_ideal(m)
    sub = SubSemigroup(m, ideal.elements, check=False)
    assert is_simple(sub)
    assert naive_is_simple(sub)
    whole = SubSemigroup(m, m.elements, check=False)
    assert not is_simple(whole)
    assert not naive_is_simple(whole)


def test_idempotent_generated_of_band_is_everything():
    m = t3()
    ideal = minimal_ideal(m)
    sub = SubSemigroup(m, ideal.elements, check=False)
    span = idempotent_generated(sub)
    assert set(span.elements) == set(ideal.elements)


def test_check_min_ideal_image_requires_surjectivity():
    c2 = builtin_group("C2")
    triv = builtin_group("1")
    up = MonoidHom.from_generator_images(triv, c2, [c2.identity])
    with pytest.raises(NotSurjective):
        check_min_ideal_image(up)


def test_check_min_ideal_image_on_group_quotient():
    c4 = builtin_group("C4")
    c2 = builtin_group("C2")
    alpha = MonoidHom.from_generator_images(c4, c2, [c2.generators[0]])
    report = check_min_ideal_image(alpha)
    assert report.passed
