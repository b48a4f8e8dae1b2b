"""Command-line front end: ``python -m polycyclic <command> [options]``.

Commands: ring-info, factor, gdft, ms, idempotents, code, dual, distance,
mp-decompose, verify.

Polynomial options accept ``@path`` to read one polynomial per line (blank
lines and ``#`` comments skipped).  ``POLYRING_ENUM_CAP`` overrides the
enumeration cap.

Machine format (``--format machine``)
-------------------------------------
One record per line::

    line    := key "=" value
    key     := word ("." word)*        e.g. "gdft.row.0", "code.cardinality"
    value   := token (" " token)*      tokens are integers, ring elements or polynomials
    matrix  := one "key.row.<i>" line per row, entries separated by single spaces
    verdict := "PASS" | "FAIL"

The first line is always ``command=<name>``; the last is ``status=ok``.  On
failure nothing is written to stdout; stderr gets ``error=<ErrorClass>:
<message>`` and the exit status is 2 for parse errors, 1 otherwise.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .codes import (
    code_from_generators,
    dual_ms,
    dual_zero,
    min_distance,
    parse_code_description,
)
from .contexts import build_ctx
from .errors import ParseError, PolycyclicError, ZeroCode
from .idempotents import (
    idempotent_complement_identity,
    idempotent_identities,
    primitive_idempotents,
    root_partition,
)
from .matrix_product import (
    MpContext,
    blockwise_dual,
    cyc_dual_form,
    cyc_matrices,
    distance_bound,
    distance_bound_digits,
    mp_dual,
    sigma_dual_identity,
    sigma_perm,
    theorem_t2_decompose,
    twist_blocks,
)
from .poly import Poly, QuotientCtx, poly_factor_field, poly_order, poly_squarefree_check
from .rings import ring_make
from .transform import gdft, ms_forward


class Report:
    """Ordered key/value lines rendered as text or machine format."""

    def __init__(self, command):
        self.items = [("command", command)]

    def add(self, key, value):
        self.items.append((key, str(value)))

    def matrix(self, key, rows):
        for i, row in enumerate(rows):
            self.add(f"{key}.row.{i}", " ".join(str(v) for v in row))

    def render(self, fmt):
        if fmt == "machine":
            lines = [f"{k}={v}" for k, v in self.items] + ["status=ok"]
        else:
            lines, last = [], None
            for k, v in self.items[1:]:
                head = k.rsplit(".row.", 1)[0] if ".row." in k else None
                if head:
                    if head != last:
                        lines.append(f"{head}:")
                    lines.append(f"  {v}")
                else:
                    lines.append(f"{k}: {v}")
                last = head
        return "\n".join(lines) + "\n"


def read_polys(value):
    """A list of polynomial strings from a comma list or an ``@file``."""
    if value is None:
        return []
    if value.startswith("@"):
        path = Path(value[1:])
        if not path.exists():
            raise ParseError(f"no such file: {path}")
        lines = [ln.split("#", 1)[0].strip() for ln in path.read_text().splitlines()]
        return [ln for ln in lines if ln]
    return [value]


def one_poly(value, name):
    polys = read_polys(value)
    if len(polys) != 1:
        raise ParseError(f"--{name} needs exactly one polynomial, got {len(polys)}")
    return polys[0]


def _require(args, *names):
    for n in names:
        if getattr(args, n.replace("-", "_")) is None:
            raise ParseError(f"--{n} is required for {args.command}")


def _ctx(args):
    _require(args, "ring", "f")
    roots = args.roots.split(",") if args.roots else None
    return build_ctx(args.ring, one_poly(args.f, "f"), args.m, eval_ring=args.eval_ring, roots=roots)


def _fmt(R, a):
    return R.format(a)


# -- commands -------------------------------------------------------------------------


def cmd_ring_info(args, rep):
    _require(args, "ring")
    R = ring_make(args.ring)
    rep.add("spec", R.spec)
    rep.add("size", R.size)
    rep.add("characteristic", R.char)
    rep.add("residue_size", R.residue_size)
    rep.add("length", R.length)
    rep.add("is_field", R.is_field)
    if R.size <= 4096:
        rep.add("units", sum(1 for a in R.elements() if R.is_unit(a)))


def cmd_factor(args, rep):
    _require(args, "ring", "f")
    R = ring_make(args.ring)
    f = Poly.parse(R, one_poly(args.f, "f"))
    fac = poly_factor_field(f)
    rep.add("poly", f)
    rep.add("unit", fac.unit)
    for i, (g, mult) in enumerate(fac.factors):
        rep.add(f"factor.{i}", f"{g} ^{mult}")
    rep.add("squarefree", poly_squarefree_check(f))
    if f.coeff(0) != 0:
        rep.add("order", poly_order(f))


def cmd_gdft(args, rep):
    _require(args, "g")
    ctx = _ctx(args)
    g = Poly.parse(ctx.R, one_poly(args.g, "g"))
    rep.add("context", ctx)
    rep.matrix("gdft", [[_fmt(ctx.Rprime, v.value) for v in row] for row in gdft(g, ctx)])


def cmd_ms(args, rep):
    _require(args, "g")
    ctx = _ctx(args)
    g = Poly.parse(ctx.R, one_poly(args.g, "g"))
    e = ms_forward(g, ctx)
    rep.add("context", ctx)
    rep.add("ms", e)
    rep.matrix("table", [[_fmt(ctx.Rprime, v) for v in row] for row in e.table])


def cmd_idempotents(args, rep):
    ctx = _ctx(args)
    P = root_partition(ctx)
    ids = primitive_idempotents(P)
    rep.add("context", ctx)
    for i, (cls, E, d) in enumerate(zip(P.classes, ids.E, ids.descended)):
        rep.add(f"class.{i}.roots", " ".join(_fmt(ctx.Rprime, ctx.roots[j]) for j in sorted(cls)))
        rep.add(f"class.{i}.E", E)
        rep.add(f"class.{i}.descends", d is not None)
    for k, v in idempotent_identities(ids).items():
        rep.add(f"identity.{k}", "PASS" if v else "FAIL")
    try:
        lit = all(idempotent_complement_identity(P, i, None) for i in range(P.r))
        rep.add("identity.complement_literal", "PASS" if lit else "FAIL")
    except PolycyclicError as exc:
        rep.add("identity.complement_literal", f"n/a {type(exc).__name__}")


def _code(args):
    if args.code:
        return parse_code_description(Path(args.code).read_text())
    _require(args, "ring", "f", "g")
    R = ring_make(args.ring)
    F = Poly.parse(R, one_poly(args.f, "f")) ** args.m
    A = QuotientCtx(R, F)
    return code_from_generators(A, [Poly.parse(R, s) for s in read_polys(args.g)])


def _describe_code(rep, key, C):
    R = C.ambient.base
    rep.add(f"{key}.ambient", C.ambient)
    if R.is_field:
        rep.add(f"{key}.generator", C.generator)
        rep.add(f"{key}.dimension", C.dimension)
    else:
        for i, g in enumerate(C.generators):
            rep.add(f"{key}.generator.{i}", g)
    rep.add(f"{key}.cardinality", C.cardinality)


def _distance_field(rep, key, C):
    try:
        rep.add(key, min_distance(C))
    except ZeroCode:
        rep.add(key, "undefined ZeroCode")


def cmd_code(args, rep):
    C = _code(args)
    _describe_code(rep, "code", C)
    _distance_field(rep, "code.distance", C)


def cmd_dual(args, rep):
    C = _code(args)
    _describe_code(rep, "code", C)
    if args.ms:
        ctx = build_ctx(args.ring, one_poly(args.f, "f"), args.m, eval_ring=args.eval_ring,
                        roots=args.roots.split(",") if args.roots else None)
        D = dual_ms(C, ctx)
    else:
        D = dual_zero(C)
    _describe_code(rep, "dual", D)


def cmd_distance(args, rep):
    rep.add("distance", min_distance(_code(args)))


def _verdict(v):
    return "PASS" if v else "FAIL"


def cmd_mp_decompose(args, rep):
    _require(args, "ring", "f", "g")
    K = ring_make(args.ring)
    ctx = MpContext(K, Poly.parse(K, one_poly(args.f, "f")), args.k)
    g = Poly.parse(K, one_poly(args.g, "g"))
    from .codes import code_from_generator

    C = code_from_generator(ctx.ambient, g)
    r = theorem_t2_decompose(C, ctx)
    rep.add("context", ctx)
    rep.add("order_e", ctx.e)
    rep.add("e_prime", ctx.e_prime)
    rep.add("code.generator", C.generator)
    rep.add("sigma", " ".join(map(str, sigma_perm(ctx))))
    cyc = cyc_matrices(ctx.p, ctx.k)
    rep.matrix("cyc", cyc.CYC)
    for i, h in enumerate(r.decomposition.generators):
        rep.add(f"constituent.{i}", h)
    rep.add("verdict.structure_literal", _verdict(r.holds))
    rep.add("verdict.structure_twisted", _verdict(twist_blocks(ctx, r.mp_code.code) == r.sigma_image))
    if not C.is_zero():
        d = min_distance(C)
        rep.add("distance.bruteforce", d)
        rep.add("distance.formula", distance_bound(r.decomposition))
        rep.add("verdict.distance_literal", _verdict(distance_bound(r.decomposition) == d))
        rep.add("verdict.distance_digits",
                _verdict(distance_bound_digits(r.decomposition) == min_distance(r.mp_code.code)))
    bd = blockwise_dual(r.mp_code, ctx.f)
    rep.add("verdict.dual_inverse_transpose", _verdict(mp_dual(r.mp_code).code == bd))
    rep.add("verdict.dual_cyc", _verdict(cyc_dual_form(r.mp_code).code == bd))
    rep.add("verdict.sigma_dual", _verdict(sigma_dual_identity(C, ctx, r.decomposition)))


def cmd_verify(args, rep):
    from .verify import run_suite

    failed = 0
    for name, o in run_suite(args.grid, args.only):
        rep.add(f"property.{name}", f"{_verdict(o.ok)} {o.passed}/{o.total}" + (f" [{o.note}]" if o.note else ""))
        failed += not o.ok
    rep.add("failed", failed)
    return 0 if failed == 0 else 3


COMMANDS = {
    "ring-info": cmd_ring_info,
    "factor": cmd_factor,
    "gdft": cmd_gdft,
    "ms": cmd_ms,
    "idempotents": cmd_idempotents,
    "code": cmd_code,
    "dual": cmd_dual,
    "distance": cmd_distance,
    "mp-decompose": cmd_mp_decompose,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser():
    p = _Parser(prog="polycyclic", description="Repeated-root polycyclic codes over finite local rings.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--ring", help="ring spec, e.g. Z4, F9, GR(4,2), F2[u]/u^2, Jet(F3,2)")
    p.add_argument("--eval-ring", help="evaluation ring R' (default: splitting ring of f)")
    p.add_argument("--f", help="polynomial f (or @file)")
    p.add_argument("--m", type=int, default=1, help="multiplicity, F = f^m")
    p.add_argument("--roots", help="comma-separated roots in R'")
    p.add_argument("--g", help="polynomial or generator list (@file)")
    p.add_argument("--k", type=int, default=1, help="q = p^k for mp-decompose")
    p.add_argument("--code", help="code description file")
    p.add_argument("--ms", action="store_true", help="dual: use the MS-product dual")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.add_argument("--only", action="append", help="verify: property name prefix (repeatable)")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--out", help="also write the report to this file")
    return p


def run(argv):
    """Run one job; returns ``(exit_status, stdout_text, stderr_text)``."""
    try:
        args = build_parser().parse_args(argv)
        rep = Report(args.command)
        status = COMMANDS[args.command](args, rep) or 0
    except PolycyclicError as exc:
        code = 2 if isinstance(exc, ParseError) else 1
        return code, "", f"error={type(exc).__name__}: {exc}\n"
    out = rep.render(args.format)
    if args.out:
        Path(args.out).write_text(out)
    return status, out, ""


def main(argv=None):
    status, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
