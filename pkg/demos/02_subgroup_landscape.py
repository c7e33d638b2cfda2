"""Subgroup structure of a finite group: the full lattice, normality,
chief series, and the named subgroups (Sylow, Hall, Frattini).
"""

from collections import Counter

from sigmagroups import (all_subgroups, builtin_entry, chief_series,
                         derived_subgroup, frattini_subgroup, hall_subgroup,
                         is_normal, minimal_normal_subgroups, normal_subgroups,
                         quotient_group, supplements, sylow_subgroup)

S4 = builtin_entry("S4").build()

# --- the full subgroup lattice ----------------------------------------------

subs = all_subgroups(S4)
print("S4 has", len(subs), "subgroups; count by order:")
for order, count in sorted(Counter(s.order for s in subs).items()):
    print(f"    order {order:3d}: {count}")

normals = normal_subgroups(S4)
print("normal subgroups have orders",
      sorted(n.order for n in normals))
print("minimal normal subgroups:",
      [sorted(str(p) for p in n.elements()) for n in minimal_normal_subgroups(S4)])

# --- chief series ------------------------------------------------------------

print("\nchief series of S4 (factor orders, bottom up):")
for f in chief_series(S4):
    print(f"    {f.upper.order:3d} / {f.lower.order:<3d} "
          f"factor order {f.order}, primes {sorted(f.prime_support)}")

print("derived subgroup of S4 has order", derived_subgroup(S4).order)

# --- Sylow and Hall subgroups ------------------------------------------------

print("\nSylow subgroups of S4: ",
      {p: sylow_subgroup(S4, p).order for p in (2, 3)})

A5 = builtin_entry("A5").build()
for pi in [{2, 3}, {2, 5}, {3, 5}]:
    h = hall_subgroup(A5, pi)
    label = f"order {h.order}" if h else "none"
    print(f"Hall {sorted(pi)}-subgroup of A5: {label}")
# A5 is insoluble, and Hall subgroups may simply fail to exist there.

# --- Frattini subgroup and supplements ---------------------------------------

Q8 = builtin_entry("Q8").build()
print("\nFrattini subgroup of Q8 has order", frattini_subgroup(Q8).order)

A4 = builtin_entry("A4").build()
V4 = next(n for n in normal_subgroups(A4) if n.order == 4)
print("supplements of the order-4 normal subgroup in A4 have orders",
      sorted(t.order for t in supplements(A4, V4)))

# --- quotients ----------------------------------------------------------------

q = quotient_group(S4, next(n for n in normals if n.order == 4))
print("S4 / V4 is a group of order", q.group.order,
      "| kernel is normal:", is_normal(S4, q.kernel))
x = S4.elements()[5]
print("projection of", x, "is", q.project(x))
