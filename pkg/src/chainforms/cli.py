"""Batch command-line front end.

Subcommands: homology, steenrod, wu, linkform, verify, qr, product, lens.
Exit codes: 0 success, 1 usage, 2 parse error, 3 topology precondition,
4 size bound exceeded, 5 verification checks failed.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cochains import cup
from .cohomology import cohomology
from .complexes import (
    ComplexFormatError,
    SizeBoundExceeded,
    TopologyError,
    closed_pseudomanifold_check,
    parse_complex,
    product_complex,
)
from .duality import linking_form, wu_report
from .fixtures import builtin_fixtures, lens_space, load_external_complex
from .quadratic import epsilon, odd_primes_below, reciprocity_scan
from .reports import complex_header, dump_json, render_text
from .rings import F2, parse_ring
from .steenrod import sq
from .verify import VerificationConfig, run_verification

USAGE_ERROR, PARSE_ERROR, TOPOLOGY_ERROR, SIZE_ERROR, CHECKS_FAILED = 1, 2, 3, 4, 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _load(args) -> "SimplicialComplex":
    name = args.input
    fixtures = builtin_fixtures()
    if name in fixtures:
        return fixtures[name]
    if args.fixtures:
        ext = load_external_complex(args.fixtures, name)
        if ext is not None:
            return ext
        candidate = Path(args.fixtures) / f"{name}.cplx"
        if candidate.is_file():
            return parse_complex(candidate.read_text())
    path = Path(name)
    if not path.is_file():
        raise ComplexFormatError(
            f"no such fixture or file: {name} "
            f"(builtins: {', '.join(sorted(fixtures))})"
        )
    return parse_complex(path.read_text())


def _emit(args, payload: dict) -> None:
    text = dump_json(payload) if args.json else render_text(payload)
    sys.stdout.write(text)


def cmd_homology(args) -> int:
    K = _load(args)
    ring = parse_ring(args.ring)
    degrees = [args.degree] if args.degree is not None else range(K.dim + 1)
    groups = []
    for k in degrees:
        b = cohomology(K, k, ring)
        groups.append({
            "degree": k,
            "free_rank": b.free_rank,
            "torsion_invariants": b.torsion_invariants,
        })
    _emit(args, {"command": "homology", "complex": complex_header(K),
                 "ring": str(ring), "groups": groups})
    return 0


def cmd_steenrod(args) -> int:
    K = _load(args)
    table = []
    for r in range(K.dim + 1):
        for x in cohomology(K, r, F2).classes():
            row = {"degree": r, "coords": list(x.coords), "squares": []}
            for i in range(0, K.dim - r + 1):
                row["squares"].append(
                    {"i": i, "coords": list(sq(i, x).coords)})
            table.append(row)
    _emit(args, {"command": "steenrod", "complex": complex_header(K),
                 "ring": "Z/2", "classes": table})
    return 0


def cmd_wu(args) -> int:
    K = _load(args)
    rep = wu_report(K)
    _emit(args, {"command": "wu", "complex": complex_header(K),
                 "wu_classes": rep.wu_coords,
                 "stiefel_whitney": rep.sw_coords})
    return 0


def cmd_linkform(args) -> int:
    K = _load(args)
    if K.dim % 2 == 0:
        raise TopologyError("linking form needs an odd-dimensional complex")
    k = (K.dim - 1) // 2
    form = linking_form(K, k)
    _emit(args, {"command": "linkform", "complex": complex_header(K),
                 "degree": form.degree, "orders": form.orders,
                 "gram": form.gram,
                 "alternating": form.is_alternating,
                 "skew_symmetric": form.is_skew_symmetric,
                 "nondegenerate": form.is_nondegenerate})
    return 0


def cmd_verify(args) -> int:
    K = _load(args)
    if not closed_pseudomanifold_check(K):
        raise TopologyError("input is not a closed pseudomanifold")
    cfg = VerificationConfig(seed=args.seed)
    checks = run_verification(K, cfg)
    payload = {"command": "verify", "complex": complex_header(K),
               "seed": args.seed,
               "checks": [c.as_dict() for c in checks],
               "all_pass": all(c.status != "fail" for c in checks)}
    _emit(args, payload)
    return 0 if payload["all_pass"] else CHECKS_FAILED


def cmd_qr(args) -> int:
    bound = args.bound
    if bound < 5:
        violations = []
    else:
        violations = reciprocity_scan(bound)
    # the symmetry defect predicted by the reciprocity law: eps(p)*eps(q)
    law_breaks = [
        (p, q) for (p, q) in violations if epsilon(p) * epsilon(q) == 0
    ]
    n_pairs = len(odd_primes_below(bound))
    payload = {"command": "qr", "bound": bound,
               "odd_primes": n_pairs,
               "symmetry_violations": len(violations),
               "law_violations": len(law_breaks),
               "note": ("symmetry fails exactly when both primes are "
                        "3 mod 4; law_violations counts genuine breaks of "
                        "reciprocity and must be 0")}
    _emit(args, payload)
    return 0 if not law_breaks else CHECKS_FAILED


def cmd_product(args) -> int:
    fixtures = builtin_fixtures()
    Ks = []
    for name in (args.left, args.right):
        if name in fixtures:
            Ks.append(fixtures[name])
        else:
            Ks.append(parse_complex(Path(name).read_text()))
    P = product_complex(Ks[0], Ks[1], bound=args.bound)
    sys.stdout.write(P.emit())
    return 0


def cmd_lens(args) -> int:
    L = lens_space(args.p, args.q)
    sys.stdout.write(L.emit())
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="chainforms",
                description="exact simplicial cohomology operations")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_input=True):
        if with_input:
            sp.add_argument("input", help="builtin fixture name or complex file")
        sp.add_argument("--ring", default="mod:2",
                        help="coefficients: 'z' or 'mod:<m>' (default mod:2)")
        sp.add_argument("--degree", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--bound", type=int, default=1_000_000,
                        help="size bound for product computations")
        sp.add_argument("--fixtures", default=None,
                        help="directory with external fixture files")

    for name, fn in (("homology", cmd_homology), ("steenrod", cmd_steenrod),
                     ("wu", cmd_wu), ("linkform", cmd_linkform),
                     ("verify", cmd_verify)):
        sp = sub.add_parser(name)
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("qr")
    common(sp, with_input=False)
    sp.set_defaults(fn=cmd_qr)

    sp = sub.add_parser("product")
    sp.add_argument("left")
    sp.add_argument("right")
    common(sp, with_input=False)
    sp.set_defaults(fn=cmd_product)

    sp = sub.add_parser("lens")
    sp.add_argument("p", type=int)
    sp.add_argument("q", type=int, nargs="?", default=1)
    common(sp, with_input=False)
    sp.set_defaults(fn=cmd_lens)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE_ERROR
    try:
        return args.fn(args)
    except ComplexFormatError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE_ERROR
    except (TopologyError,) as e:
        print(f"topology error: {e}", file=sys.stderr)
        return TOPOLOGY_ERROR
    except SizeBoundExceeded as e:
        print(f"size bound: {e}", file=sys.stderr)
        return SIZE_ERROR
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
