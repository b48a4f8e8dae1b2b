"""Codes, their zero-term duals and minimum distances."""

# %%
from polycyclic import QuotientCtx, code_from_generator, dual_zero, min_distance, ring_make
from polycyclic.codes import orthogonal_bruteforce
from polycyclic.poly import Poly, monic_divisors, poly_factor_field

K = ring_make("F2")
A = QuotientCtx(K, Poly.parse(K, "x^7-1"))
print(A, "factors:", [str(g) for g, _ in poly_factor_field(A.modulus).factors])

# %% Every monic divisor generates a code; the dual is the annihilator.
for _, g in monic_divisors(poly_factor_field(A.modulus)):
    C = code_from_generator(A, g)
    D = dual_zero(C)
    d = min_distance(C) if not C.is_zero() else "-"
    print(f"<{g}>: |C|={C.cardinality:>3} d={d}  dual <{D.generator}>  brute force agrees: "
          f"{orthogonal_bruteforce(C) == D.word_keys}")

# %% A chain-ring example: duals still exist without a generator of the usual shape.
Z4 = ring_make("Z4")
B = QuotientCtx(Z4, Poly.parse(Z4, "x^2-1"))
C = code_from_generator(B, Poly.parse(Z4, "2"))
print(B, "|<2>| =", C.cardinality, " |dual| =", dual_zero(C).cardinality)
