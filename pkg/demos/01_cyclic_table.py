"""Which cyclic groups <diag(1, z^a, z^b)> of PGL(3, C) can be moved into PGL(3, R)?

Every such group has a real field of moduli, since complex conjugation sends
diag(1, z^a, z^b) to diag(1, z^-a, z^-b), which generates a conjugate group.
Being *definable* over R is a stronger condition. This script prints the
verdict for every normal form with n <= 9, then shows an explicit real model
for one definable case and the obstruction for a pseudo-real one.
"""
from pseudoreal import CyclicNormalForm, numeric_string, real_model_cyclic, verdict_from_normal_form
from pseudoreal.acceptance import normal_forms

print(f"{'(n,a,b)':>10}  definable  reason")
for n, a, b in normal_forms(9):
    v = verdict_from_normal_form(n, a, b)
    mark = "yes" if v.definable_over_R == "yes" else "no "
    print(f"{str((n, a, b)):>10}  {mark:9}  {v.reason}")

print()
print("a real model for (5, 1, 4), a rotation by 2pi/5 up to scale:")
m = real_model_cyclic(CyclicNormalForm(5, 1, 4))
for row in m.matrix.rows():
    print("   ", "  ".join(f"{numeric_string(x, 8):>12}" for x in row))
print("checks:", m.verify())

print()
v = verdict_from_normal_form(7, 1, 3)
print("(7, 1, 3): pseudo-real =", v.pseudo_real, "| obstruction:", v.obstruction)
