"""Tour: how many independent copies of a simple group a group maps onto.

r_S(G) is the largest k with a surjection G ->> S^k.  It is computed from
the intersection of all kernels of surjections onto S and certified by an
explicit isomorphism of the quotient with S^k.  Surjections can only
lower it, never raise it.
"""

from eggbox import MonoidHom, builtin_group, check_rank_monotone, r_s

c2 = builtin_group("C2")
c3 = builtin_group("C3")

print("r_C2 over a few groups:")
for name in ("C2", "C2xC2", "C2xC2xC2", "C4", "S3", "D4", "Q8", "A4"):
    res = r_s(builtin_group(name), c2)
    print(f"  r_C2({name}) = {res.rank}"
          f"   (kernel {len(res.kernel)}, quotient {len(res.quotient.elements)})")

print("r_C3 over a few groups:")
for name in ("C3", "C3xC3", "C6", "S3", "A4"):
    print(f"  r_C3({name}) = {r_s(builtin_group(name), c3).rank}")

print("surjections never raise the rank:")
c6 = builtin_group("C6")
onto = MonoidHom.from_generator_images(c6, c3, [c3.generators[0]])
report = check_rank_monotone(onto, c3)
print(f"  C6 ->> C3 with S = C3: {report.checks[0].witness}")
