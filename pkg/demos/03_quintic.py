"""A smooth plane quintic whose moduli point is real but which has no real model.

C: X^5 + Y^5 + Z^5 + i a X Y^2 Z^2 + i b X^3 Y Z = 0, with a, b rational and nonzero.

The walk-through:
  1. smoothness, via the resultant of F_Y and F_Z in X together with a gcd
     check on each fiber z^5 = 1;
  2. the dihedral group of order 10 acts on C;
  3. none of the 50 candidate maps sends C to its conjugate curve, so the
     field of moduli computation hits the expected obstruction.
"""
import sys
from fractions import Fraction

from pseudoreal import (QuinticFamilyMember, aut_contains, dihedral10, format_polynomial,
                        moduli_obstruction_quintic, smoothness_check_quintic)

a, b = (Fraction(x) for x in sys.argv[1:3]) if len(sys.argv) > 2 else (Fraction(1), Fraction(2))
m = QuinticFamilyMember(a, b)
F = m.polynomial
print("F =", format_polynomial(F))

cert = smoothness_check_quintic(m)
print("resultant matches -125 i b^3 (Z^5 - 1)^3:", cert.resultant_matches)
for f in cert.fibers:
    print(f"  z = zeta5^{f['k']}: deg gcd(F_Y, F_Z) = {f['gcd_FY_FZ_degree']}, "
          f"with F: {f['with_F_degree']}, with F_X: {f['with_FX_degree']}")
print("smooth:", cert.smooth)

print("D10 acts:", aut_contains(F, dihedral10()))

trace = moduli_obstruction_quintic(m)
print(f"candidates tried: {len(trace.candidates)}, matches: {len(trace.matches)}")
print("obstructed:", trace.obstructed)
