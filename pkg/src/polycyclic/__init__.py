"""Exact arithmetic for repeated-root polycyclic codes over finite local rings.

Rings, polynomials and Hasse derivatives; the generalized Mattson-Solomon
transform with its idempotents; polycyclic codes with their duals; and the
matrix-product presentation of repeated-root codes over fields.
"""

from .codes import (
    LinearCode,
    PolycyclicCode,
    annihilator,
    code_enumerate,
    code_from_generator,
    code_from_generators,
    dual_ms,
    dual_zero,
    inner_product_zero,
    min_distance,
    nondegeneracy_check,
    parse_code_description,
)
from .contexts import build_ctx, z4_example
from .errors import PolycyclicError
from .hasse import hasse_derivative, hasse_table, hasse_taylor
from .idempotents import (
    crt_decompose,
    idempotent_census,
    idempotent_complement_identity,
    idempotent_generated_code,
    primitive_idempotents,
    root_partition,
)
from .matrix_product import (
    MatrixProductCode,
    MpContext,
    cyc_matrices,
    distance_bound,
    mp_dual,
    mu,
    phi,
    psi,
    sigma_dual_identity,
    sigma_perm,
    theorem_t2_decompose,
    x_adic_decompose,
)
from .poly import Poly, QuotientCtx, poly_divmod, poly_eval, poly_factor_field, poly_order
from .rings import LiftMap, RingElem, ring_make
from .transform import (
    MsElement,
    TransformCtx,
    gdft,
    jordan_reduction,
    make_transform_ctx,
    ms_forward,
    ms_inverse,
    ms_star_mul,
    vandermonde,
)

__version__ = "0.1.0"
