from pathlib import Path

import pytest

from eggbox.constructions import build_idempotent_cover
from eggbox.core import is_isomorphic
from eggbox.defs import (
    cover_as_lines,
    group_as_lines,
    load_definitions,
    parse_definitions,
    write_cover_definition,
)
from eggbox.errors import ParseError, UnknownObject
from eggbox.green import maximal_subgroup, minimal_ideal
from eggbox.groups import builtin_group, identify

DEFS_DIR = Path(__file__).resolve().parent.parent / "definitions"


def test_all_declaration_forms():
    defs = parse_definitions(
        """
        # a comment line
        group G perm 3: (1 2), (1 2 3)
        group T table 2: 1 2; 2 1

        monoid M transf 2: [1 2], [1 1]
        monoid R rowmono 2 over T: 2 #1; 1 #2, 1 #1; 1 #1
        hom a from T to G: (1 2)
        problem P base M alpha a
        """
    )
    assert len(defs.groups["G"].elements) == 6
    assert len(defs.groups["T"].elements) == 2
    assert len(defs.monoids["M"].elements) == 2
    assert len(defs.monoids["R"].elements) > 2
    assert defs.homs["a"].is_surjective() is False
    assert defs.problems["P"]["base"] is defs.monoids["M"]


def test_hash_names_elements_not_comments():
    # '#1' in a payload is the first element, never a trailing comment
    defs = parse_definitions("group T table 1: 1\nmonoid R rowmono 2 over T: 2 #1; 1 #1")
    assert len(defs.monoids["R"].elements) == 2


def test_resolution():
    defs = parse_definitions("group T table 1: 1")
    assert defs.resolve("T") is defs.groups["T"]
    assert len(defs.resolve("C4").elements) == 4  # built-in fallback
    with pytest.raises(UnknownObject):
        defs.resolve("T2", builtin=False)
    with pytest.raises(UnknownObject):
        defs.resolve_container("no-such-group")


def parse_error(text):
    with pytest.raises(ParseError) as exc:
        parse_definitions(text)
    return exc.value


def test_parse_error_positions():
    err = parse_error("group G perm 2 (1 2)")
    assert err.line == 1 and err.column == len("group G perm 2 (1 2)") + 1
    err = parse_error("group T table 1: 1\nwidget W: 1")
    assert err.line == 2 and err.column == 1


def test_bad_declarations_raise():
    assert "unknown group form" in str(parse_error("group G cayley 2: 1 2; 2 1"))
    assert "table rows" in str(parse_error("group T table 2: 1 2"))
    assert "does not list" in str(parse_error("group T table 2: 1 2; 2 3"))
    assert "images for" in str(parse_error(
        "group G perm 2: (1 2)\nhom a from G to G: (1 2), (1 2)"))
    assert "already declared" in str(parse_error(
        "group T table 1: 1\nmonoid T transf 1: [1]"))
    assert "out of range" in str(parse_error(
        "group T table 1: 1\nmonoid R rowmono 2 over T: 3 #1; 1 #1"))
    assert "COL ENTRY" in str(parse_error(
        "group T table 1: 1\nmonoid R rowmono 2 over T: 2; 1 #1"))
    assert "element index" in str(parse_error(
        "group T table 1: 1\nmonoid R rowmono 2 over T: 2 #9; 1 #1"))
    assert "not declared" in str(parse_error(
        "monoid M transf 2: [1 2], [1 1]\nproblem P base M alpha nope"))
    assert "not an element" in str(parse_error(
        "group G perm 3: (1 2 3)\nhom a from G to G: (1 2)"))


def test_group_round_trip():
    c4 = builtin_group("C4")
    name, lines = group_as_lines(c4)
    defs = parse_definitions("\n".join(lines))
    assert is_isomorphic(defs.groups[name], c4) is not None


def test_cover_round_trip(tmp_path):
    c = build_idempotent_cover(builtin_group("C2"), 3)
    mname, lines = cover_as_lines(c)
    defs = parse_definitions("\n".join(lines))
    reloaded = defs.monoids[mname]
    assert len(reloaded.elements) == len(c.monoid.elements) == 21
    ideal = minimal_ideal(reloaded)
    sub = maximal_subgroup(reloaded, ideal.idempotents[0], ideal=ideal)
    assert identify(sub) == "C2"

    path = tmp_path / "cover.defs"
    assert write_cover_definition(c, str(path)) == mname
    again = load_definitions(str(path))
    assert len(again.monoids[mname].elements) == 21


def test_shipped_definition_files():
    covers = load_definitions(str(DEFS_DIR / "covers.defs"))
    assert set(covers.groups) == {"T", "C2", "C3", "C4", "V4", "S3"}
    e1 = load_definitions(str(DEFS_DIR / "unit-zero.defs"))
    assert "E1" in e1.problems
    e23 = load_definitions(str(DEFS_DIR / "doubled-swap.defs"))
    assert {"E2", "E3"} <= set(e23.problems)
    assert e23.homs["a"].is_surjective()
