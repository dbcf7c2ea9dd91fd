"""Degrees on G(2, n) by exact Schubert calculus.

Two facts feed the geometric constructions: the locus of lines on a
smooth quadric threefold has degree 8 inside G(2,5), and G(2,6) itself
has degree 14, so its codimension-7 linear sections are canonical curves
of genus 8.
"""

from spincalc import (catalan_degree, degree, grassmannian_degree, multiply,
                      pieri, sigma, vq_dimension)

print("Pieri steps from the fundamental class in G(2,5):")
c = sigma(5, 0, 0)
for k in range(7):
    print(f"  sigma_1^{k}: {c}")
    c = pieri(c)

print()
print("degrees of G(2,n) via repeated Pieri vs the Catalan closed form:")
for n in range(4, 9):
    print(f"  G(2,{n}): {grassmannian_degree(n):>4} "
          f"(closed form {catalan_degree(n)})")

print()
print("the lines-on-a-quadric locus in G(2,5):")
vq = sigma(5, 2, 1, 4)
print(f"  class 4*s(2,1), degree {degree(vq)}")
print(f"  dimension {vq_dimension(4)} inside the 6-dimensional G(2,5)")
print(f"  tangent-line complex: a quadric section, degree "
      f"{2 * grassmannian_degree(5)}")

print()
print("a product expanded through the two-row rule:")
a, b = sigma(6, 2, 1), sigma(6, 3, 1)
print(f"  ({a}) * ({b}) = {multiply(a, b)} in G(2,6)")
