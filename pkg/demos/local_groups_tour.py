"""Tour: reading a group off the local monoids of its constant extension.

Adjoining the constant maps to a group acting on b points gives a monoid
whose kernel is b copies of G side by side.  At any idempotent e of that
kernel, psi projects the local monoid eMe isomorphically back onto G.
"""

from eggbox import builtin_group, constant_wreath, green_structure, identify, psi

g = builtin_group("C3")
w = constant_wreath(g, 2)
m = w.monoid

gs = green_structure(m)
print(f"{m.name}: {len(m.elements)} elements,"
      f" {len(gs.j_classes)} J-classes, kernel {len(w.simple.elements)}")

idempotents = [e for e in w.simple.elements if m.mul(e, e) == e]
print(f"kernel idempotents: {len(idempotents)}")

for e in idempotents:
    local = sorted({m.mul(m.mul(e, s), e) for s in m.elements}, key=str)
    image = sorted({psi(w, e, s) for s in local}, key=str)
    assert set(image) == set(g.elements)
    print(f"  at e with column {e.data[0][0] + 1}:"
          f" |eMe| = {len(local)}, psi(eMe) = all of {identify(g)}")
