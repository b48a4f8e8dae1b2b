"""Primitive idempotents from root classes, and the CRT split they induce."""

# %%
from polycyclic import build_ctx, crt_decompose, idempotent_census, primitive_idempotents, root_partition
from polycyclic.idempotents import idempotent_complement_identity, idempotent_complement_ideal
from polycyclic.poly import Poly

ctx = build_ctx("F3", "x^2-1", 3)
P = root_partition(ctx)
print(ctx)
for i, cls in enumerate(P.classes):
    print(f"class {i}: roots {[int(ctx.roots[j]) for j in sorted(cls)]}  factor {P.factors[i]}")

# %%
ids = primitive_idempotents(P)
for i, E in enumerate(ids.E):
    print(f"E{i} =", E)

# %% Every idempotent of the ambient ring is a sum of these.
found, predicted = idempotent_census(P, "R")
print(len(found), "idempotents found,", len(predicted), "predicted, equal:", found == predicted)

# %% f_i^(p^k) is not literally 1 - E_i, but both generate the same ideal.
for i in range(P.r):
    print(i, "literal:", idempotent_complement_identity(P, i, None), " as ideals:", idempotent_complement_ideal(P, i, None))

# %% CRT: project onto the components and recombine.
crt = crt_decompose(ctx, P)
g = Poly.parse(ctx.R, "1+x+2x^4")
parts = crt.project(g)
print([str(p) for p in parts], "->", crt.combine(parts))
