"""Tour: covering a finite group by an idempotent-generated kernel.

Builds the two-generator cover of the Klein group, verifies every claimed
property, round-trips it through a definition file, and reads the Green
structure back off the reloaded monoid.
"""

from eggbox import (
    build_idempotent_cover,
    builtin_group,
    cover_idempotent_witnesses,
    green_structure,
    identify,
    load_definitions,
    maximal_subgroup,
    minimal_ideal,
    verify_cover,
    write_cover_definition,
)

h = builtin_group("C2xC2")
n = 7  # smallest legal modulus: max(2, 2|H| - 1)

print(f"covering {identify(h)} with modulus {n}")
cover = build_idempotent_cover(h, n)
print(f"  closure has {len(cover.monoid.elements)} elements,"
      f" ideal {len(cover.ideal.elements)}")

report = verify_cover(cover)
print(report.text())

print("idempotent factorizations of the maximal subgroup cell:")
for target, factors in cover_idempotent_witnesses(cover).items():
    word = " * ".join("y" if f == cover.y else "x^j y x^-j" for f in factors)
    print(f"  {target} <- product of {len(factors)} idempotents ({word})")

path = "/tmp/klein-cover.defs"
mname = write_cover_definition(cover, path)
print(f"wrote {path}, reloading {mname!r}")

defs = load_definitions(path)
m = defs.monoids[mname]
gs = green_structure(m)
ideal = minimal_ideal(m)
sub = maximal_subgroup(m, ideal.idempotents[0], ideal=ideal)
print(f"  reloaded: {len(m.elements)} elements, {len(gs.j_classes)} J-classes,"
      f" minimal ideal {len(ideal.elements)}, subgroup {identify(sub)}")
