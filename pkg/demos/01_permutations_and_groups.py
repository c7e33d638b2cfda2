"""Permutation arithmetic and group construction.

Permutations act on the points 1..n and are written in cycle notation.
Products read left to right: (p * q) applies p first, then q.
"""

from sigmagroups import Perm, PermGroup, Subgroup, conjugate_subgroup

# --- single permutations ---------------------------------------------------

a = Perm.parse("(1 2 3)", 4)
b = Perm.parse("(3 4)", 4)

print("a          =", a)
print("b          =", b)
print("a * b      =", a * b, "  (apply a, then b)")
print("b * a      =", b * a)
print("a inverse  =", a.inverse())
print("a ** b     =", a ** b, "  (conjugate: b-inverse * a * b)")
print("order of a =", a.order())
# Cycle text is 1-based; internally points are stored 0-based, so the
# callable form a(i) and the images tuple index from 0.
print("a.images   =", a.images, "  (a(0) =", str(a(0)) + ", point 1 -> 2)")

# The identity fixes everything and is the multiplicative unit.
e = Perm.identity(4)
assert a * e == a and a * a.inverse() == e
print("identity   =", e)

# --- groups generated by permutations ---------------------------------------

S4 = PermGroup(4, [Perm.parse("(1 2 3 4)", 4), Perm.parse("(1 2)", 4)])
print("\nS4 from two generators: order", S4.order, "on", S4.degree, "points")

odd = Perm.parse("(1 2)", 4)
even = Perm.parse("(1 2 3)", 4)
A4 = PermGroup(4, [even, Perm.parse("(2 3 4)", 4)])
print("A4: order", A4.order)
print("(1 2) in A4?", odd in A4, "   (1 2 3) in A4?", even in A4)

print("elements of a small group, sorted:")
C6 = PermGroup(6, [Perm.parse("(1 2 3 4 5 6)", 6)])
for g in C6.elements():
    print("   ", g, " order", g.order())

# --- subgroups inside an ambient group --------------------------------------

H = Subgroup(S4, [Perm.parse("(1 2)", 4)])
print("\nsubgroup <(1 2)> of S4: order", H.order)

# Conjugation moves a subgroup to an isomorphic copy.
x = Perm.parse("(1 3 4)", 4)
print("conjugate by (1 3 4):", [str(p) for p in
                                conjugate_subgroup(H, x).elements()])
