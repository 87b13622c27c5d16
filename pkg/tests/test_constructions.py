import pytest

from eggbox.constructions import (
    EmbeddingProblem,
    assemble_embedding,
    build_idempotent_cover,
    cover_idempotent_witnesses,
    cover_modulus_bound,
    prepare_base,
    solve_embedding,
    verify_cover,
    verify_embedding,
)
from eggbox.core import MonoidHom, generate_monoid, is_isomorphic
from eggbox.elements import compose_transformations, row_monomial, transformation
from eggbox.errors import (
    CapExceeded,
    KMismatch,
    NTooSmall,
    NonSurjectiveAlpha,
    PrimeBoundViolated,
    TooFewGenerators,
)
from eggbox.groups import builtin_group


def test_cover_modulus_bound():
    assert cover_modulus_bound(builtin_group("1")) == 2
    assert cover_modulus_bound(builtin_group("C2")) == 3
    assert cover_modulus_bound(builtin_group("C2xC2")) == 7


def test_cover_rejects_small_modulus():
    with pytest.raises(NTooSmall) as exc:
        build_idempotent_cover(builtin_group("C3"), 4)
    assert exc.value.bound == 5


def test_cover_x_and_y_shapes():
    c = build_idempotent_cover(builtin_group("C2"), 3)
    mul = c.mul
    # x has order n, y is idempotent
    p = c.x
    for _ in range(2):
        p = mul(p, c.x)
    assert p == c.monoid.identity
    assert mul(c.y, c.y) == c.y


def test_cover_witness_products_hit_every_group_element():
    h = builtin_group("C2xC2")
    c = build_idempotent_cover(h, 7)
    witnesses = cover_idempotent_witnesses(c)
    assert set(witnesses) == set(h.elements)
    mul = c.mul
    for target, word in witnesses.items():
        for t in word:
            assert mul(t, t) == t  # every factor is idempotent
        prod = word[0]
        for t in word[1:]:
            prod = mul(prod, t)
        cols = {col for col, _ in prod.data}
        assert len(cols) == 1  # the product is a constant matrix
        assert prod.data[0][1] == target  # its first row entry names h_{j+1}


def test_cover_ideal_is_rectangular_over_h():
    h = builtin_group("C3")
    c = build_idempotent_cover(h, 5)
    assert len(c.ideal) == 5 * len(h.elements) * 5
    assert len(c.ideal.idempotents) == 25
    report = verify_cover(c)
    assert report.passed and not any(ch.status == "skipped" for ch in report.checks)


def test_cover_cheap_mode_skips_enumeration():
    c = build_idempotent_cover(builtin_group("S3"), 11, mode="cheap")
    assert c.monoid is None and c.ideal is None
    report = verify_cover(c)
    assert report.passed
    assert any(ch.status == "skipped" for ch in report.checks)


def test_cover_auto_mode_respects_cap():
    # the candidate bound for S3 at n = 11 dwarfs any usable cap
    c = build_idempotent_cover(builtin_group("S3"), 11)
    assert c.mode == "cheap"
    with pytest.raises(CapExceeded):
        build_idempotent_cover(builtin_group("S3"), 11, mode="full")


def test_cover_certified_ideal_at_scale():
    # n = 40 pushes |M| past the exact-Green limit and |J| past the
    # exhaustive decomposition limit, forcing the certified code paths;
    # the a-priori size bound is loose, so the cap must be lifted to
    # reach the (much smaller) actual closure
    h = builtin_group("C2")
    c = build_idempotent_cover(h, 40, mode="full", cap=10**14)
    # n cyclic units (identity included) plus the n x |H| x n ideal
    assert len(c.monoid.elements) == 40 + 40 * 2 * 40
    report = verify_cover(c)
    assert report.passed
    names = {ch.name: ch for ch in report.checks}
    assert "certified" in names["ideal-is-constants"].witness
    assert "sampled" in names["idempotent-closure"].witness
    assert "idempotent-closure-exhaustive" not in names


def test_check_min_ideal_image_fast_paths_at_scale():
    from eggbox.green import check_min_ideal_image
    from eggbox.wreath import rlm

    c = build_idempotent_cover(builtin_group("C2"), 40, mode="full", cap=10**14)
    _, onto = rlm(c.monoid, rees=c.rees)
    report = check_min_ideal_image(onto, source_ideal=c.ideal, source_rees=c.rees)
    assert report.passed


def unit_zero():
    return generate_monoid(
        [transformation([0, 1]), transformation([0, 0])],
        compose_transformations,
        name="unit-zero",
    )


def doubled_swap():
    return generate_monoid(
        [transformation([1, 0]), transformation([1, 0])],
        compose_transformations,
        name="doubled-swap",
    )


def test_prepare_base_quotients_unfaithful_base():
    pb = prepare_base(unit_zero())
    # the action on the singleton minimal ideal collapses everything
    assert len(pb.monoid.elements) == 1
    assert pb.original is not pb.monoid and pb.to_faithful is not None
    assert len(pb.group.elements) == 1
    assert pb.b == 1
    assert len(pb.word) == 2  # one slot per listed generator


def test_prepare_base_keeps_faithful_base():
    pb = prepare_base(doubled_swap())
    assert pb.to_faithful is None and pb.original is pb.monoid
    assert len(pb.monoid.elements) == 2
    assert len(pb.group.elements) == 2
    assert pb.b == 1
    # the anchored idempotent's matrix is the first-column identity
    assert all(col == 0 and val == pb.group.identity for col, val in pb.m_f.data)


def test_prepare_base_needs_two_generators():
    single = generate_monoid(
        [transformation([1, 0])], compose_transformations
    )
    with pytest.raises(TooFewGenerators):
        prepare_base(single)


def embedding_problems():
    c2 = builtin_group("C2")
    c4 = builtin_group("C4")
    triv = builtin_group("1")
    swap = c2.generators[0]
    pb1 = prepare_base(unit_zero())
    pb2 = prepare_base(doubled_swap())
    return {
        "E1": EmbeddingProblem(
            MonoidHom.from_generator_images(c2, triv, [triv.identity]), pb1
        ),
        "E2": EmbeddingProblem(
            MonoidHom.from_generator_images(c4, c2, [swap]), pb2
        ),
        "E3": EmbeddingProblem(
            MonoidHom.from_generator_images(c2, c2, [swap]), pb2
        ),
    }


def test_problem_validation():
    c2 = builtin_group("C2")
    c4 = builtin_group("C4")
    pb1 = prepare_base(unit_zero())
    with pytest.raises(KMismatch):
        EmbeddingProblem(
            MonoidHom.from_generator_images(c4, c2, [c2.generators[0]]), pb1
        )
    gsq = c4.mul(c4.generators[0], c4.generators[0])
    inward = MonoidHom.from_generator_images(c4, c4, [gsq])
    pb2 = prepare_base(doubled_swap())
    with pytest.raises(NonSurjectiveAlpha):
        EmbeddingProblem(inward, pb2)


FROZEN = {
    # p, nu, ell, m, |M'|, subgroup
    "E1": (3, 2, 2, 1, 21, "C2"),
    "E2": (5, 2, 2, 4, 120, "C4"),
    "E3": (3, 1, 1, 2, 12, "C2"),
}


def test_embedding_solutions_match_frozen_parameters():
    probs = embedding_problems()
    for key, (p, nu, ell, m, size, gname) in FROZEN.items():
        sol = solve_embedding(probs[key], require_full=True)
        assert (sol.p, sol.nu, sol.ell, sol.m) == (p, nu, ell, m), key
        assert len(sol.mprime.elements) == size, key
        assert is_isomorphic(sol.group, builtin_group(gname)) is not None, key
        report = verify_embedding(sol)
        assert report.passed, report.text()
        assert not any(c.status == "skipped" for c in report.checks)


def test_e2_diagonal_lifts():
    probs = embedding_problems()
    sol = solve_embedding(probs["E2"])
    # kernel of C4 ->> C2 is {1, g^2}; its 1-block diagonals seed the rows
    assert len(sol.nbt) == sol.nu  # b = 1 here, so nu^b = nu
    assert set(sol.n_elements) <= set(sol.problem.alpha.source.elements)
    c4 = sol.problem.alpha.source
    gsq = c4.mul(c4.generators[0], c4.generators[0])
    entries = {blk.data[0][1] for blk in sol.nbt}
    assert entries == {c4.identity, gsq}


def test_prime_override_rules():
    probs = embedding_problems()
    sol = solve_embedding(probs["E2"], p_override=7)
    assert sol.p == 7
    assert verify_embedding(sol).passed
    with pytest.raises(PrimeBoundViolated):
        solve_embedding(probs["E2"], p_override=3)  # not above max(m, ell) = 4
    with pytest.raises(PrimeBoundViolated):
        solve_embedding(probs["E2"], p_override=9)  # not prime
    sol11 = solve_embedding(probs["E2"], allowed_primes=[11, 13])
    assert sol11.p == 11
    with pytest.raises(PrimeBoundViolated):
        solve_embedding(probs["E2"], allowed_primes=[2, 3])


def test_capped_solve_degrades_gracefully():
    probs = embedding_problems()
    sol = solve_embedding(probs["E2"], cap=50)
    assert sol.mode == "capped"
    assert sol.capnote
    assert sol.mprime is None
    report = verify_embedding(sol)
    assert report.passed  # skipped checks are not failures
    skipped = {c.name for c in report.checks if c.status == "skipped"}
    assert "rho-ideal-image" in skipped
    with pytest.raises(CapExceeded):
        solve_embedding(probs["E2"], cap=50, require_full=True)


def test_mutation_is_detected():
    probs = embedding_problems()
    sol = solve_embedding(probs["E2"])
    c4 = probs["E2"].alpha.source
    g = c4.generators[0]
    raw = [getattr(t, "element", t) for t in sol.tilde_x]
    rows = list(raw[1].data)
    col0, blk = rows[0]
    bcol, bval = blk.data[0]
    rows[0] = (col0, row_monomial([(bcol, c4.mul(bval, g))] + list(blk.data)[1:]))
    raw[1] = row_monomial(rows)
    bad = assemble_embedding(probs["E2"], sol.p, raw, strict=False, cap=3000)
    report = verify_embedding(bad)
    failures = [c for c in report.checks if c.status == "fail"]
    assert failures and all(c.witness for c in failures)
