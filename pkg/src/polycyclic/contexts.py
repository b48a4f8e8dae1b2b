"""Named transform contexts used by the verification suite, the CLI and the demos."""

from __future__ import annotations

from .poly import Poly
from .rings import IntegerModRing, LiftMap, identity_lift, ring_make
from .transform import make_transform_ctx


def lift_between(R, Rp):
    """``IntegerLift`` between two ``Z_{p^r}``, otherwise the canonical inclusion."""
    if R == Rp:
        return identity_lift(R)
    if isinstance(R, IntegerModRing) and isinstance(Rp, IntegerModRing) and R.kind == Rp.kind == "Zpr":
        return LiftMap(R, Rp, "IntegerLift")
    return LiftMap(R, Rp, "CanonicalInclusion")


def build_ctx(ring, f, m, eval_ring=None, roots=None):
    """Transform context from spec strings; ``roots`` are element strings of the evaluation ring."""
    R = ring_make(ring)
    fp = Poly.parse(R, f)
    if eval_ring is None:
        if roots is not None:
            roots = [R.elem(r) for r in roots]
        return make_transform_ctx(fp, m, roots=roots)
    Rp = ring_make(eval_ring)
    lift = lift_between(R, Rp)
    if roots is not None:
        roots = [Rp.elem(r) for r in roots]
    return make_transform_ctx(fp, m, roots=roots, Rprime=Rp, lift=lift)


def z4_example():
    """``f = x^2 - x`` over Z4, ``m = 3``, roots ``(1, 12)`` in Z16."""
    return build_ctx("Z4", "x^2-x", 3, eval_ring="Z16", roots=["1", "12"])


def homomorphism_contexts():
    """The four contexts of the homomorphism and Jordan checks, by name."""
    return {
        "F2 n=2 m=2": build_ctx("F2", "x^2+x+1", 2),
        "F3 n=2 m=3": build_ctx("F3", "x^2-1", 3),
        "F4 n=3 m=2": build_ctx("F4", "x^3-1", 2),
        "Z4->Z16 n=2 m=3": z4_example(),
    }
