"""Command line front end.

Four subcommands:

    mbt info <monoid.json> [<rep.json>]
    mbt verify <monoid.json> <rep.json> --which all|tensor|symmetric|positive|steinberg
    mbt scan-nt --from 2 --to 12 --mode tensor|symmetric
    mbt molien <monoid.json> <rep.json> --idempotent L --weights 'L:c,...' -N 6

Exit codes: 0 all checks hold, 1 a verified theorem failed (which means
the implementation is broken -- the JSON witness is printed for
auditing), 2 malformed input.  All output is deterministic; pass --json
for machine-readable reports.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .algebra import (
    Subspace,
    _power_chain,
    minimal_covering_power,
    radical_basis,
    subspace_leq,
    verify_positive_power_refinement,
    verify_steinberg_bound,
    verify_symmetric_theorem,
    verify_tensor_theorem,
)
from .fileio import format_rational, load_monoid, load_representation
from .linalg import format_polynomial
from .molien import series_prefix, weighted_series
from .monoids import has_zero, idempotents, local_ideal, local_monoid, unit_group
from .representations import (
    distinct_character_values,
    distinct_charpolys,
    is_faithful,
    nt_paper_representation,
    restrict_to_local,
    sym_power_character,
)


def _emit_json(payload):
    print(json.dumps(payload, indent=2, sort_keys=True))


def _table(headers, rows):
    """Fixed-width aligned text table."""
    cells = [headers] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def cmd_info(args):
    m = load_monoid(args.monoid)
    z = has_zero(m)
    idem = idempotents(m)
    payload = {
        "size": m.size,
        "identity": m.label(m.identity),
        "zero": None if z is None else m.label(z),
        "idempotents": [
            {
                "label": m.label(e),
                "local_monoid_size": len(local_monoid(m, e)),
                "unit_group_size": len(unit_group(m, e)),
                "ideal_size": len(local_ideal(m, e)),
            }
            for e in idem
        ],
    }
    rep_payload = None
    polys = ()
    if args.representation:
        rho = load_representation(args.representation, m)
        ok, _ = is_faithful(rho)
        values = distinct_character_values(rho)
        polys = distinct_charpolys(rho)
        rep_payload = {
            "dim": rho.dim,
            "faithful": ok,
            "r": len(values),
            "character_values": [format_rational(v) for v in values],
            "s": len(polys),
            "charpolys": [[format_rational(c) for c in p.coeffs] for p in polys],
        }
    if args.json:
        _emit_json({"monoid": payload, "representation": rep_payload})
        return 0
    print(f"monoid: size={m.size} identity={payload['identity']!r} "
          f"zero={payload['zero']!r}")
    print(f"idempotents ({len(idem)}):")
    print(_table(["label", "|eMe|", "|G_e|", "|I_e|"],
                 [[d["label"], d["local_monoid_size"], d["unit_group_size"],
                   d["ideal_size"]] for d in payload["idempotents"]]))
    if rep_payload:
        print(f"representation: dim={rep_payload['dim']} "
              f"faithful={'yes' if rep_payload['faithful'] else 'no'}")
        print(f"character values (r={rep_payload['r']}): "
              + ", ".join(rep_payload["character_values"]))
        print(f"characteristic polynomials (s={rep_payload['s']}): "
              + ", ".join(format_polynomial(p) for p in polys))
    return 0


def cmd_verify(args):
    m = load_monoid(args.monoid)
    rho = load_representation(args.representation, m)
    radical = Subspace(m.size) if args.corrupt_radical else radical_basis(m, force=args.force)
    cap = args.powers_cap

    which = args.which
    reports = []
    skipped = []
    sharpness = {}
    if which in ("all", "tensor"):
        rep = verify_tensor_theorem(rho, powers_cap=cap, radical=radical)
        reports.append(rep)
        if rep.holds:
            sharpness["tensor"] = minimal_covering_power(rho, "tensor", radical=radical)
    if which in ("all", "symmetric"):
        rep = verify_symmetric_theorem(rho, powers_cap=cap, radical=radical)
        reports.append(rep)
        if rep.holds:
            sharpness["symmetric"] = minimal_covering_power(rho, "symmetric",
                                                            radical=radical)
    if which in ("all", "positive"):
        if has_zero(m) is None:
            reports.append(verify_positive_power_refinement(rho, powers_cap=cap,
                                                            radical=radical))
        elif which == "positive":
            raise ValueError(
                f"monoid has a zero element ({m.label(has_zero(m))!r}); the "
                "positive-power refinement does not apply")
        else:
            skipped.append("positive-refinement: monoid has a zero element")
    if which in ("all", "steinberg"):
        reports.append(verify_steinberg_bound(rho, radical=radical))

    ok = all(rep.holds for rep in reports)
    if args.json:
        _emit_json({
            "reports": [rep.to_json_dict() for rep in reports],
            "sharpness": sharpness,
            "skipped": skipped,
            "ok": ok,
        })
    else:
        for rep in reports:
            bits = [f"{rep.theorem}:", "HOLDS" if rep.holds else "VIOLATED"]
            if rep.r is not None:
                bits.append(f"r={rep.r}")
            if rep.s is not None:
                bits.append(f"s={rep.s}")
            bits.append(f"bound={rep.bound}")
            bits.append(f"powers={rep.powers_used[0]}..{rep.powers_used[-1]}")
            bits.append(f"dim_rad={rep.dim_rad}")
            bits.append(f"dim_ann={rep.dim_ann}")
            if rep.theorem in sharpness:
                bits.append(f"minimal_k={sharpness[rep.theorem]}")
            print(" ".join(bits))
            if not rep.holds:
                print("  witness: "
                      + json.dumps([format_rational(x) for x in rep.witness]))
        for note in skipped:
            print(f"{note} (skipped)")
        print("overall: OK" if ok else "overall: THEOREM VIOLATION")
    return 0 if ok else 1


def _scan_row(t, mode, cap):
    rho = nt_paper_representation(t)
    m = rho.monoid
    rad = radical_basis(m)
    if mode == "tensor":
        bound = len(distinct_character_values(rho)) - 1
        w_dim = sum(rho.dim ** i for i in range(bound + 1))
    else:
        bound = rho.dim * len(distinct_charpolys(rho)) - 1
        w_dim = sum(d + 1 for d in range(bound + 1))
    row = {
        "t": t,
        "r": len(distinct_character_values(rho)),
        "s": len(distinct_charpolys(rho)),
        "bound": bound,
        "dim_rad": rad.dim,
        "dim_ann": None,
        "holds": None,
        "min_covering": None,
        "min_faithful": None,
        "note": "",
    }
    kmax = max(bound, cap)
    for k, ann in _power_chain(rho, mode, kmax):
        contained, _ = subspace_leq(ann, rad)
        if contained and row["min_covering"] is None:
            row["min_covering"] = k
        if ann.dim == 0 and row["min_faithful"] is None:
            row["min_faithful"] = k
        if k == bound:
            row["dim_ann"] = ann.dim
            row["holds"] = contained
        if (row["min_covering"] is not None and row["min_faithful"] is not None
                and k >= bound):
            break
    if w_dim * w_dim < m.size:
        row["note"] = (f"dim forces Ann != 0: W dim {w_dim}, "
                       f"{w_dim}^2 = {w_dim * w_dim} < |M| = {m.size}")
    return row


def cmd_scan_nt(args):
    if args.t_from < 2 or args.t_to < args.t_from:
        raise ValueError(f"bad range: from={args.t_from} to={args.t_to}")
    ts = list(range(args.t_from, args.t_to + 1))
    if args.parallel:
        with ThreadPoolExecutor() as pool:
            rows = list(pool.map(lambda t: _scan_row(t, args.mode, args.cap), ts))
    else:
        rows = [_scan_row(t, args.mode, args.cap) for t in ts]
    ok = all(r["holds"] for r in rows)
    if args.json:
        _emit_json({"mode": args.mode, "rows": rows, "ok": ok})
    else:
        print(_table(
            ["t", "r", "dim_rad", "dim_ann", "holds", "min_covering",
             "min_faithful", "note"],
            [[r["t"], r["r"], r["dim_rad"], r["dim_ann"],
              "yes" if r["holds"] else "NO",
              r["min_covering"],
              "none" if r["min_faithful"] is None else r["min_faithful"],
              r["note"]] for r in rows]))
        print("overall: OK" if ok else "overall: THEOREM VIOLATION")
    return 0 if ok else 1


def _split_top_level(s, sep=","):
    """Split on separators that are not nested inside brackets."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([{":
            depth += 1
        elif ch in ")]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p for p in parts if p.strip()]


def parse_weights(spec, m):
    """Parse 'label:rational,label:rational' into a coefficient vector."""
    weights = [Fraction(0)] * m.size
    for part in _split_top_level(spec):
        if ":" not in part:
            raise ValueError(f"bad weight {part!r}: expected label:rational")
        label, _, value = part.rpartition(":")
        idx = m.index_of_label(label.strip())
        try:
            weights[idx] += Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad rational {value.strip()!r} in weights") from None
    return tuple(weights)


def cmd_molien(args):
    m = load_monoid(args.monoid)
    rho = load_representation(args.representation, m)
    e = m.index_of_label(args.idempotent)
    weights = parse_weights(args.weights, m)
    f = weighted_series(rho, e, weights)
    prefix = series_prefix(f, args.terms)

    # cross-check every coefficient against the symmetric-power characters
    local = restrict_to_local(rho, e)
    members = local_monoid(m, e)
    pos = {x: i for i, x in enumerate(members)}
    for d, coeff in enumerate(prefix):
        direct = sum((weights[x] * sym_power_character(local, pos[x], d)
                      for x in range(m.size) if weights[x]), Fraction(0))
        if direct != coeff:
            raise RuntimeError(
                f"series coefficient {d} disagrees with the symmetric-power "
                f"character sum: {coeff} vs {direct}")

    if args.json:
        _emit_json({
            "num": [format_rational(c) for c in f.num.coeffs],
            "den": [format_rational(c) for c in f.den.coeffs],
            "series": [format_rational(c) for c in prefix],
        })
    else:
        print(f"g(t) = ({format_polynomial(f.num)}) / ({format_polynomial(f.den)})")
        print("series: " + ", ".join(format_rational(c) for c in prefix))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="mbt",
        description="Exact verification of tensor/symmetric power coverage "
                    "bounds for representations of finite monoids.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("info", help="structure report for a monoid (and representation)")
    sp.add_argument("monoid")
    sp.add_argument("representation", nargs="?", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("verify", help="run the coverage verifiers")
    sp.add_argument("monoid")
    sp.add_argument("representation")
    sp.add_argument("--which", default="all",
                    choices=["all", "tensor", "symmetric", "positive", "steinberg"])
    sp.add_argument("--powers-cap", type=int, default=12,
                    help="refuse tensor/symmetric exponents above this bound")
    sp.add_argument("--force", action="store_true",
                    help="override the size guard on exact radical computation")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--corrupt-radical", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan-nt", help="scan the N_t family")
    sp.add_argument("--from", dest="t_from", type=int, required=True)
    sp.add_argument("--to", dest="t_to", type=int, required=True)
    sp.add_argument("--mode", default="tensor", choices=["tensor", "symmetric"])
    sp.add_argument("--cap", type=int, default=32,
                    help="largest power probed for faithfulness")
    sp.add_argument("--parallel", action="store_true",
                    help="compute rows in a thread pool (same output)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan_nt)

    sp = sub.add_parser("molien", help="weighted symmetric-power generating function")
    sp.add_argument("monoid")
    sp.add_argument("representation")
    sp.add_argument("--idempotent", required=True, help="label of the idempotent e")
    sp.add_argument("--weights", required=True,
                    help="comma-separated label:rational pairs, support inside eMe")
    sp.add_argument("-N", "--terms", type=int, default=6,
                    help="number of series coefficients beyond the constant term")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_molien)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RuntimeError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return 1


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
