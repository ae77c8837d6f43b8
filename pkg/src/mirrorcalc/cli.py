"""Command-line front end: every capability behind one subcommand, with
deterministic JSON (default) or CSV output.  Rationals always serialize
as strings "p/q"; floats appear only where the quantity itself is
numeric (Petersson norms, Green potentials).

Exit codes: 0 success, 1 domain error (a violated precondition), 2
argument errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import divisor, gw, lattice, modular, quintic
from .deltacoeff import delta, delta_row
from .series import SeriesError

ENV_ORDER = "MIRRORCALC_ORDER"


class UsageError(Exception):
    """Bad flags or environment; maps to exit code 2."""


def _default_order() -> int:
    env = os.environ.get(ENV_ORDER)
    if env is not None:
        try:
            v = int(env)
        except ValueError:
            raise UsageError(f"invalid {ENV_ORDER}={env!r}")
        if v < 1:
            raise UsageError(f"invalid {ENV_ORDER}={env!r}")
        return v
    return quintic.DEFAULT_ORDER


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def _emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["key", "value"])
    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k in sorted(obj):
                walk(f"{prefix}.{k}" if prefix else str(k), obj[k])
        elif isinstance(obj, (list, tuple)):
            for i, v in enumerate(obj):
                walk(f"{prefix}[{i}]", v)
        else:
            writer.writerow([prefix, obj])
    walk("", payload)
    return buf.getvalue()


def _cmd_mirror_map(args) -> dict:
    chart = quintic.mirror_map(args.order)
    return {
        "order": chart.order,
        "y0": chart.y0.to_json_dict(),
        "q_of_x": chart.q_of_x.to_json_dict(),
        "x_of_q": chart.x_of_q.to_json_dict(),
        "u_of_q": chart.u_of_q.to_json_dict(),
    }


def _cmd_f1(args) -> dict:
    # G at order N needs a chart one order higher
    chart = quintic.mirror_map(max(args.order + 1, 2))
    G = quintic.f1_log_derivative(chart).G.truncate(args.order)
    return {"G": G.to_json_dict()}


def _cmd_extract_gw(args) -> dict:
    chart = quintic.mirror_map(max(args.order + 1, 2))
    G = quintic.f1_log_derivative(chart).G.truncate(args.order)
    if args.n0_file:
        with open(args.n0_file) as fh:
            n0 = gw.n0_map_from_json_dict(json.load(fh))
    else:
        n0 = dict(gw.genus0_pipeline(chart, args.order).n0)
    table = gw.extract_n1(G, n0)
    return gw.table_to_json_dict(table)


def _cmd_delta(args) -> dict:
    if args.table is not None:
        row = delta_row(args.table)
        return {"n": args.table, "row": [str(v) for v in row]}
    if args.n is None or args.p is None:
        raise UsageError("delta needs either --table N or both --n and --p")
    return {"value": str(delta(args.n, args.p))}


def _load_lattice(path: str) -> lattice.CubicLattice:
    with open(path) as fh:
        data = json.load(fh)
    entries = {(int(i), int(j), int(k)): Fraction(v)
               for i, j, k, v in data["cubic"]}
    return lattice.CubicLattice.from_entries(
        rank=int(data["rank"]), entries=entries,
        kappa=[Fraction(v) for v in data["kappa"]])


def _cmd_covolume(args) -> dict:
    L = _load_lattice(args.lattice)
    res = lattice.covolume(L)
    return {
        "rank": L.rank,
        "gram": [[str(v) for v in row] for row in res.gram],
        "covolume": {"mantissa": str(res.covolume.mantissa),
                     "pi_exponent": res.covolume.pi_exponent},
    }


def _cmd_fhsv(args) -> dict:
    with open(args.gram) as fh:
        A = json.load(fh)
    h = json.loads(args.h)
    res = lattice.fhsv_covolume(A, h)
    vol = lattice.fhsv_volume(A, h)
    const = lattice.fhsv_constant_check(A, h)
    return {
        "covolume": {"mantissa": str(res.covolume.mantissa),
                     "pi_exponent": res.covolume.pi_exponent},
        "volume": {"mantissa": str(vol.mantissa),
                   "pi_exponent": vol.pi_exponent},
        "constant_check": {"mantissa": str(const.mantissa),
                           "pi_exponent": const.pi_exponent},
    }


def _cmd_modular(args) -> dict:
    tau = _parse_complex(args.tau)
    val = modular.petersson_delta(tau, args.terms)
    return val.to_json_dict()


def _cmd_bcov_factor(args) -> dict:
    with open(args.family) as fh:
        data = divisor.family_from_json_dict(json.load(fh))
    factor = divisor.assemble_factor(data)
    out = {"factor": factor.to_json_dict()}
    if args.eval_at:
        psi = _parse_complex(args.eval_at)
        out["green_potential"] = divisor.green_potential(data, psi)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mirrorcalc",
        description="Exact closed-form invariants of the quintic mirror "
                    "family and related lattices and modular forms.")
    parser.add_argument("--output", choices=["json", "csv"], default="json")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("mirror-map", help="period, mirror map and inverse")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=_cmd_mirror_map)

    p = sub.add_parser("f1", help="genus-one amplitude log-derivative G(q)")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(fn=_cmd_f1)

    p = sub.add_parser("extract-gw", help="extract N1(d) from G(q)")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--n0-file", default=None,
                   help="JSON file with genus-0 invariants; default uses "
                        "the built-in genus-0 pipeline")
    p.set_defaults(fn=_cmd_extract_gw)

    p = sub.add_parser("delta", help="double-point coefficients delta(n,p)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--table", type=int, default=None,
                   help="print the full row for dimension N")
    p.set_defaults(fn=_cmd_delta)

    p = sub.add_parser("covolume", help="L2 Gram matrix and covolume")
    p.add_argument("--lattice", required=True)
    p.set_defaults(fn=_cmd_covolume)

    p = sub.add_parser("fhsv", help="rank-11 covolume from rank-10 data")
    p.add_argument("--gram", required=True)
    p.add_argument("--h", required=True, help='JSON vector, e.g. "[1,1,0,...]"')
    p.set_defaults(fn=_cmd_fhsv)

    p = sub.add_parser("modular", help="Petersson norm of the discriminant")
    p.add_argument("--delta-norm", action="store_true")
    p.add_argument("--tau", required=True, help='complex, e.g. "0.5+2i"')
    p.add_argument("--terms", type=int, default=200)
    p.set_defaults(fn=_cmd_modular)

    p = sub.add_parser("bcov-factor", help="assemble the divisor factor")
    p.add_argument("--family", required=True)
    p.add_argument("--eval-at", default=None)
    p.set_defaults(fn=_cmd_bcov_factor)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if getattr(args, "order", "absent") is None:
            args.order = _default_order()
        payload = args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (SeriesError, lattice.LatticeError, divisor.FamilyError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(_emit(payload, args.output))
    return 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
