"""Repeated-root codes as matrix-product codes, and where the plain form needs a twist."""

# %%
from polycyclic import MpContext, code_from_generator, cyc_matrices, min_distance, ring_make, theorem_t2_decompose
from polycyclic.matrix_product import distance_bound, distance_bound_digits, divisor_codes, twist_blocks
from polycyclic.poly import Poly

print(cyc_matrices(2, 2).CYC)

# %% x^3+1 over F3 is (x+1)^3; f = x+1 has order 2, so the blocks pick up a sign.
K = ring_make("F3")
ctx = MpContext(K, Poly.parse(K, "x+1"), 1)
C = code_from_generator(ctx.ambient, Poly.parse(K, "x^2+2x+1"))
rep = theorem_t2_decompose(C, ctx)
print("constituents:", [str(c.generator) for c in rep.decomposition.components])
print("sigma(C):        ", rep.sigma_image.basis)
print("[..]CYC:         ", rep.mp_code.code.basis)
print("twisted [..]CYC: ", twist_blocks(ctx, rep.mp_code.code).basis)

# %% Over F2 with q = 4 the (t+1) distance weights overshoot; digit products do not.
K2 = ring_make("F2")
ctx2 = MpContext(K2, Poly.parse(K2, "x+1"), 2)
for exps, C in divisor_codes(ctx2):
    if C.is_zero():
        continue
    dec = theorem_t2_decompose(C, ctx2).decomposition
    print(f"<{C.generator}>  d={min_distance(C)}  (t+1) bound={distance_bound(dec)}  digits={distance_bound_digits(dec)}")
