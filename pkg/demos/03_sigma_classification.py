"""Classifying groups relative to a partition of the primes.

A partition sigma chops the primes into blocks; writing [2,3][5] means
{2,3} is one block and {5} another.  The classical case sigma1 puts every
prime in its own block.  Relative to sigma a group can be sigma-primary
(all its primes in one block), sigma-nilpotent, or sigma-soluble, and the
sigma-nilpotent residual measures how far from sigma-nilpotent it is.
"""

from sigmagroups import (SigmaPartition, builtin_entry, complete_hall_sigma_set,
                         is_sigma_nilpotent, is_sigma_primary, is_sigma_soluble,
                         parse_sigma, partitions_of_primes, quotient_group,
                         sigma_nilpotent_residual, sigma_of_group)

SIGMA1 = SigmaPartition.sigma1()

# --- all partitions of a prime spectrum ---------------------------------------

print("partitions of {2, 3, 5}:")
for sigma in partitions_of_primes({2, 3, 5}):
    print("   ", sigma.text())

# --- one group, several partitions --------------------------------------------

A5 = builtin_entry("A5").build()
print("\nA5 (order 60) under each partition, plus sigma1:")
print(f"    {'sigma':12s} {'primary':8s} {'nilpotent':10s} {'soluble':8s} Hall set")
for sigma in list(partitions_of_primes({2, 3, 5})) + [SIGMA1]:
    hs = complete_hall_sigma_set(A5, sigma)
    hall = f"orders {hs.member_orders()}" if hs else "none"
    print(f"    {sigma.text():12s} {is_sigma_primary(A5.order, sigma)!s:8s} "
          f"{is_sigma_nilpotent(A5, sigma)!s:10s} "
          f"{is_sigma_soluble(A5, sigma)!s:8s} {hall}")
# Under the one-block partition every group is sigma-primary, so even the
# simple group A5 lands in every class; sigma1 is the finest and hardest.

# --- the dividing line shifts with the partition --------------------------------

F20 = builtin_entry("F20").build()
print("\nF20 (order 20):")
for text in ["sigma1", "[2,5]", "[2][5]"]:
    sigma = parse_sigma(text)
    print(f"    {text:8s} sigma(G) = {sorted(sigma_of_group(F20, sigma))}, "
          f"nilpotent: {is_sigma_nilpotent(F20, sigma)}")

# --- the sigma-nilpotent residual ----------------------------------------------

print("\nsigma1-nilpotent residuals (smallest normal subgroup with "
      "sigma-nilpotent quotient):")
for name in ["S3", "A4", "S4", "SL(2,3)", "Q8", "F21"]:
    G = builtin_entry(name).build()
    D = sigma_nilpotent_residual(G, SIGMA1)
    print(f"    {name:8s} |G| = {G.order:3d}   |residual| = {D.order}")

S4 = builtin_entry("S4").build()
D = sigma_nilpotent_residual(S4, SIGMA1)
Q = quotient_group(S4, D).group
print("\nquotient of S4 by its residual has order", Q.order,
      "and is sigma1-nilpotent:", is_sigma_nilpotent(Q, SIGMA1))
