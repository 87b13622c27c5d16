import pytest

from eggbox.core import (
    FiniteGroup,
    MonoidHom,
    canonical_section,
    direct_power,
    generate_monoid,
    is_isomorphic,
    monoid_from_elements,
    naive_omega_power,
    omega_power,
)
from eggbox.elements import compose_transformations, transformation
from eggbox.errors import (
    CapExceeded,
    InconsistentProduct,
    NotClosed,
    NotSurjective,
    NotWellDefined,
)
from eggbox.groups import builtin_group, cyclic, symmetric


def full_transformation_monoid(n):
    gens = [transformation([1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(transformation([(i + 1) % n for i in range(n)]))
    gens.append(transformation([0] + list(range(1, n - 1)) + [n - 2]))
    return generate_monoid(gens, compose_transformations, name=f"T{n}")


def test_generate_full_transformation_monoid_sizes():
    # |T_n| = n^n
    assert len(full_transformation_monoid(2).elements) == 4
    assert len(full_transformation_monoid(3).elements) == 27
    assert len(full_transformation_monoid(4).elements) == 256


def test_generate_monoid_words_reproduce_elements():
    m = full_transformation_monoid(3)
    for x in m.elements:
        assert m.eval_word(m.words[x]) == x


def test_generate_monoid_cap():
    gens = [
        transformation([1, 0, 2, 3]),
        transformation([1, 2, 3, 0]),
        transformation([0, 1, 2, 2]),
    ]
    with pytest.raises(CapExceeded) as exc:
        generate_monoid(gens, compose_transformations, cap=100)
    assert exc.value.reached > exc.value.cap == 100


def test_generate_monoid_keeps_duplicate_seeds():
    swap = transformation([1, 0])
    m = generate_monoid([swap, swap], compose_transformations)
    assert len(m.elements) == 2
    assert len(m.generators) == 2  # duplicates are part of the interface


def test_group_from_monoid_rejects_non_group():
    m = generate_monoid(
        [transformation([0, 0])], compose_transformations
    )
    with pytest.raises(InconsistentProduct):
        FiniteGroup.from_monoid(m)


def test_monoid_from_elements_closure_check():
    ident = transformation([0, 1, 2])
    cyc = transformation([1, 2, 0])
    # {1, c} misses c^2, so the closure check must object
    with pytest.raises(NotClosed):
        monoid_from_elements([ident, cyc], compose_transformations, ident)
    ok = monoid_from_elements(
        [ident, cyc, compose_transformations(cyc, cyc)],
        compose_transformations,
        ident,
    )
    assert len(ok.elements) == 3


def test_hom_from_generator_images_validates():
    c4 = builtin_group("C4")
    c2 = builtin_group("C2")
    good = MonoidHom.from_generator_images(c4, c2, [c2.generators[0]])
    assert good.is_surjective()
    assert len(good.kernel()) == 2
    c3 = builtin_group("C3")
    with pytest.raises(NotWellDefined):
        # g has order 4, image would need order dividing 4 in C3
        MonoidHom.from_generator_images(c4, c3, [c3.generators[0]])


def test_hom_then_composes():
    c4 = builtin_group("C4")
    c2 = builtin_group("C2")
    triv = builtin_group("1")
    a = MonoidHom.from_generator_images(c4, c2, [c2.generators[0]])
    b = MonoidHom.from_generator_images(c2, triv, [triv.identity])
    ab = a.then(b)
    assert all(ab(x) == triv.identity for x in c4.elements)


def test_canonical_section_picks_least_preimages():
    c4 = builtin_group("C4")
    c2 = builtin_group("C2")
    alpha = MonoidHom.from_generator_images(c4, c2, [c2.generators[0]])
    sec = canonical_section(alpha)
    assert sec(c2.identity) == c4.identity
    for k in c2.elements:
        assert alpha(sec(k)) == k
    with pytest.raises(NotSurjective):
        canonical_section(
            MonoidHom.from_generator_images(
                builtin_group("1"), c2, [c2.identity]
            )
        )


def test_is_isomorphic_positive_and_negative():
    assert is_isomorphic(builtin_group("C2xC2"), builtin_group("C2xC2")) is not None
    assert is_isomorphic(builtin_group("C4"), builtin_group("C2xC2")) is None
    assert is_isomorphic(symmetric(3), builtin_group("S3")) is not None
    assert is_isomorphic(symmetric(3), cyclic(6)) is None


def test_direct_power_sizes():
    c2 = builtin_group("C2")
    assert len(direct_power(c2, 0).elements) == 1
    assert len(direct_power(c2, 3).elements) == 8


def test_omega_power_matches_naive():
    m = full_transformation_monoid(3)
    for x in m.elements:
        w = omega_power(m, x)
        assert m.mul(w, w) == w
        assert w == naive_omega_power(m, x)
