"""A guided tour of one small monoid: S = <6, 9, 20>.

Walks through every invariant the library computes, using the monoid
generated by 6, 9 and 20 (the classic "box sizes" example).  Run it
directly:

    python demos/worked_example.py
"""

from numfac import (
    NumericalMonoid,
    brute_force_factorizations,
    bullets_brute_force,
    bullets_via_apery,
    delta_of_lengths,
    dynamic_bullets,
    factorizations,
    length_set,
    max_length,
    omega,
)

S = NumericalMonoid([6, 9, 20])
print(f"S = {S}")
print(f"Frobenius number F(S) = {S.frobenius}  (largest integer outside S)")
print(f"43 in S? {S.contains(43)}   44 in S? {S.contains(44)}")

# Every element factors into generators, usually in several ways.
print("\nFactorizations of 60 (exponent vectors over (6, 9, 20)):")
for a in sorted(factorizations(S, 60), reverse=True):
    terms = " + ".join(f"{c}*{g}" for c, g in zip(a, S.generators) if c)
    print(f"  {a}  ->  {terms}")

# Lengths are what most invariants actually consume.
L = length_set(S, 60)
print(f"\nLength set L(60) = {set(L)}")
print(f"Delta set Delta(60) = {set(delta_of_lengths(L))}  (gaps between lengths)")
print(f"Longest factorization M(60) = {max_length(S, 60)}")

# The Apery set of s collects the smallest monoid element per residue class.
ap = S.apery_set(9)
print(f"\nApery set of 9: {ap.elements}")
print(f"Intersection over all three generators: {S.apery_intersection((6, 9, 20))}")

# Bullets measure how far an element is from being prime.
print(f"\nBullets of 60 (two independent methods agree):")
assert bullets_brute_force(S, 60) == bullets_via_apery(S, 60)
for b in sorted(bullets_brute_force(S, 60), reverse=True):
    print(f"  {b}")
print(f"omega(60) = {omega(S, 60)}  (longest bullet)")
print(f"Dynamic bullets of 60 (the compressed pairs the scan stores): "
      f"{dynamic_bullets(S, 60)}")

# omega extends to all integers; below -F(S) it vanishes.
print(f"\nomega(-43) = {omega(S, -43)}  (43 is pseudo-Frobenius: {S.pseudo_frobenius()})")
print(f"omega(-44) = {omega(S, -44)}")

# The Apery-set route expresses bullets through restricted factorizations.
print("\nbul(60) assembled from factorization sets:")
print(f"  full support, target 60:   {sorted(factorizations(S, 60), reverse=True)}")
print(f"  support {{9}}, target 72:    {sorted(brute_force_factorizations(S, 72, support={9}))}")
