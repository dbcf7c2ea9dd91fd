"""Pencils on Nikulin surfaces and the divisors they pin down.

A Lefschetz pencil on a polarized Nikulin surface of genus g sweeps a
rational curve through the Prym moduli space.  Its intersection numbers
with the boundary depend only on g, which makes it a precision
instrument: pairing it against a divisor class reads off a linear
combination of that class's coefficients, and a negative pairing pins
the whole family inside the divisor.
"""

from math import comb

from spincalc import canonical_class, pair, prym_green, prym_nikulin_g6, \
    rbar, xi_curve
from spincalc.picard import D0P, D0PP, D0RAM, LAMBDA

print("pencil pairings against the Prym boundary")
print(f"{'g':>3} {'lambda':>7} {'d0pr':>6} {'d0sec':>6} {'d0ram':>6} {'K':>4}")
for g in range(2, 13):
    c = xi_curve(g)
    k = pair(c, canonical_class(rbar(g)))
    print(f"{g:>3} {str(c.pairing(LAMBDA)):>7} {str(c.pairing(D0P)):>6} "
          f"{str(c.pairing(D0PP)):>6} {str(c.pairing(D0RAM)):>6} "
          f"{str(k):>4}")
print("the canonical pairing g-15 stays negative far past the range")
print("where the pencils dominate moduli")

print()
print("pairings with the Prym-Green virtual class at genus 2i+6")
for i in range(7):
    g = 2 * i + 6
    value = pair(xi_curve(g), prym_green(i))
    print(f"  i={i} (genus {g:>2}): {value}  (= -C({2 * i + 3},{i}) "
          f"= {-comb(2 * i + 3, i)})")
print("every pairing is negative, so each pencil lies inside the locus:")
print("curves on Nikulin surfaces carry extra Prym-canonical syzygies")

print()
n6 = prym_nikulin_g6()
print(f"genus-6 Nikulin-section divisor: {n6}")
print(f"pencil pairing: {pair(xi_curve(6), n6)}  -> the divisor is "
      "swept by its own pencils, hence extremal in the effective cone")
