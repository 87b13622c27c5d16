import pytest

from eggbox.core import generate_monoid, underlying
from eggbox.elements import compose_transformations, transformation
from eggbox.errors import NotIdempotent, NotInLocalMonoid
from eggbox.green import minimal_ideal, rees_coordinates
from eggbox.groups import builtin_group
from eggbox.wreath import (
    BlockRowMonomialMatrix,
    constant_wreath,
    is_faithful_on_min_ideal,
    local_monoid,
    psi,
    rlm,
    schutz_faithful_quotient,
    schutz_rep,
)


def test_constant_wreath_sizes():
    # |simple| = |G|^b * b; the adjoined identity is new except when b = 1
    for gname, b, expected in [("1", 3, 3), ("C2", 2, 8), ("C3", 2, 18), ("S3", 1, 6)]:
        w = constant_wreath(builtin_group(gname), b)
        assert len(w.simple.elements) == expected
        assert len(w.monoid.elements) == expected + (1 if b > 1 else 0)


def test_psi_is_iso_on_local_monoid():
    w = constant_wreath(builtin_group("C3"), 2)
    g = w.group
    for e in w.simple.idempotents():
        local = [s for s in local_monoid(w.monoid, e) if s in w.simple]
        values = {s: psi(w, e, s) for s in local}
        assert sorted(values.values()) == sorted(g.elements)
        assert values[e] == g.identity


def test_psi_input_validation():
    w = constant_wreath(builtin_group("C2"), 2)
    e = w.simple.idempotents()[0]
    with pytest.raises(NotIdempotent):
        psi(w, w.monoid.identity, e)
    other = next(
        s for s in w.simple.elements if w.monoid.mul(e, s) != s
    )
    with pytest.raises(NotInLocalMonoid):
        psi(w, e, other)


def unit_zero():
    return generate_monoid(
        [transformation([0, 1]), transformation([0, 0])],
        compose_transformations,
        name="unit-zero",
    )


def test_faithfulness_verdicts():
    # the unit-zero monoid acts trivially on its singleton minimal ideal
    assert not is_faithful_on_min_ideal(unit_zero())
    c = builtin_group("C2")
    w = constant_wreath(c, 2)
    assert is_faithful_on_min_ideal(w.monoid)


def test_schutz_quotient_collapses_unit_zero():
    target, proj = schutz_faithful_quotient(unit_zero())
    assert len(target.elements) == 1
    assert proj.is_surjective()
    assert is_faithful_on_min_ideal(target)


def test_schutz_rep_is_faithful_on_group():
    w = constant_wreath(builtin_group("C2"), 2)
    m = w.monoid
    rc = rees_coordinates(m, minimal_ideal(m), minimal_ideal(m).idempotents[0])
    rep = schutz_rep(m, rc)
    imgs = {rep(x) for x in m.elements}
    assert len(imgs) == len(m.elements)  # faithful here


def test_rlm_action_and_fast_path_agree():
    w = constant_wreath(builtin_group("C2"), 3)
    m = w.monoid
    slow_target, slow = rlm(m)
    ideal = minimal_ideal(m)
    rc = rees_coordinates(m, ideal, ideal.idempotents[0])
    fast_target, fast = rlm(m, rees=rc)
    assert len(slow_target.elements) == len(fast_target.elements)
    # both are full constant-plus-identity actions on 3 classes
    assert slow.is_surjective() and fast.is_surjective()


def test_block_matrix_flatten_multiplicative():
    from eggbox.wreath import block_rm_multiply, rm_multiply

    g = builtin_group("C2")
    w = constant_wreath(g, 2)
    inner = list(w.simple.elements)[:3]
    x = BlockRowMonomialMatrix(g, 2, [(1, inner[0]), (0, inner[1])])
    y = BlockRowMonomialMatrix(g, 2, [(0, inner[1]), (0, inner[2])])
    assert block_rm_multiply(x, y).flatten() == rm_multiply(x.flatten(), y.flatten())
    assert x.flatten().size == 4
    assert x.block(0)[0] == 1
    assert len(x.block_entries()) == 2
