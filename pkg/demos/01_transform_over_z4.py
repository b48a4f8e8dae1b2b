"""A repeated-root transform over Z4, evaluated in Z16."""

# %%
from polycyclic import z4_example, gdft, hasse_derivative, ms_forward, ms_inverse, ms_star_mul
from polycyclic.poly import Poly, poly_divmod

ctx = z4_example()
print(ctx)
print("F =", ctx.F, " roots in", ctx.Rprime.spec, "->", [int(a) for a in ctx.roots])

# %% Hasse derivatives carry the information that repeated roots hide from evaluation.
g = Poly.parse(ctx.R, "1+2x^3+x^4+3x^5")
for k in range(ctx.m):
    print(f"g^[{k}] =", hasse_derivative(g, k))

# %% The GDFT evaluates those derivatives at each root; rows are orders, columns are roots.
for row in gdft(g, ctx):
    print(" ".join(f"{int(v.value):>3}" for v in row))

# %% Packaged as one element of (Z16[y]/y^3)[x]/<f>.
e = ms_forward(g, ctx)
print("MS(g) =", e)
# %% The preimage over Z16 is not the integer lift of g, but it reduces to g.
pre = ms_inverse(e)
print("preimage over Z16:", pre)
back = Poly(ctx.R, [ctx.lift.reduce(c) for c in pre.coeffs])
print("reduced mod 4:", back, " equals g:", back == g)

# %% Z4 -> Z16 is not a ring map, so products are not preserved in general.
h = Poly.parse(ctx.R, "x+1")
gh = poly_divmod(g * h, ctx.F)[1]
print("MS(gh) =", ms_forward(gh, ctx))
print("MS(g)*MS(h) =", ms_star_mul(e, ms_forward(h, ctx)))
