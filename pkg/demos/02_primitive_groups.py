"""The Hessian groups, A5 and friends.

The Hessian group of order 216 and its subgroups of orders 72 and 36 are
recomputed by closure from their generators.  All three turn out to have a
real field of moduli but no real model.  A5 on the other hand has an explicit
real model, built here and checked to regenerate a group of order 60.
"""
from pseudoreal import catalog, closure, fingerprint, real_model_a5

print(f"{'group':8} {'order':>5}  moduli  definable  pseudo-real  mode")
for e in catalog():
    r = e.row()
    print(f"{r['name']:8} {r['order']:>5}  {r['moduli']:6}  {r['definable']:9}  {str(r['pseudo_real']):11}  {r['mode']}")

print()
m = real_model_a5()
G = closure(m.generators())
fp = fingerprint(G)
print("real A5 model: order", G.order, "histogram", dict(sorted(fp.order_histogram.items())))
print("all generators real:", all(M.is_real() for M in (m.A, m.B, m.C)))
