"""Command-line interface.

    numfac <command> --gens <comma-separated positive ints>
           [--n INT] [--horizon INT] [--bound INT]
           [--domain monoid|quotient] [--format plain|json|csv]
           [--stream] [--method dp|apery|brute]

Results are printed to stdout; diagnostics go to stderr.  JSON output is
one canonical document (sorted keys, no whitespace) wrapping the
command payload in an envelope that echoes the minimal generators and
the Frobenius number.  ``--stream`` switches the up-to commands to JSON
Lines, one element per line.  All numbers are integers except the
quasilinear offsets, which are exact fractions rendered as "p/q".

Exit codes: 0 success, 1 usage or precondition error, 2 invalid monoid,
3 arithmetic overflow, 4 required element not in the monoid.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time

from . import __version__
from .delta import delta_of_lengths, delta_periodicity, delta_set
from .errors import Int64Overflow, MonoidInputError, NotInMonoid
from .factorization import (
    _combo_grid,
    _length_masks_up_to,
    _mask_to_lengths,
    _sorted_grid,
    brute_force_factorizations,
    factorizations,
    factorizations_up_to,
    length_set,
)
from .monoid import NumericalMonoid
from .omega import (
    _scan,
    bullets_brute_force,
    bullets_via_apery,
    dynamic_bullets,
    omega,
    omega_up_to,
    quasilinear_model,
)
from .verify import run_suite

COMMANDS = (
    "info",
    "contains",
    "apery",
    "pseudo-frobenius",
    "factorizations",
    "factorizations-up-to",
    "lengths",
    "delta",
    "delta-set",
    "delta-periodicity",
    "omega",
    "omega-up-to",
    "bullets",
    "quasilinear",
    "dissonance",
    "plotdata",
    "verify",
    "bench",
)

_NEEDS_N = {
    "contains",
    "apery",
    "factorizations",
    "factorizations-up-to",
    "lengths",
    "delta",
    "omega",
    "omega-up-to",
    "bullets",
}


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1 (argparse defaults to 2, which is reserved
    # for invalid monoids)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser():
    parser = _Parser(prog="numfac", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"numfac {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name, prog=f"numfac {name}")
        if name == "plotdata":
            p.add_argument("kind", choices=("delta", "omega"))
        p.add_argument("--gens", required=True, help="comma-separated positive integers")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--horizon", type=int, default=None)
        p.add_argument("--bound", type=int, default=None)
        p.add_argument("--domain", choices=("monoid", "quotient"), default="monoid")
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--stream", action="store_true")
        p.add_argument("--method", choices=("dp", "apery", "brute"), default="dp")
    return parser


def _parse_gens(text, parser):
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        return [int(p) for p in parts]
    except ValueError:
        parser.error(f"--gens expects comma-separated integers, got {text!r}")


def _fraction_str(f):
    return f"{f.numerator}/{f.denominator}"


def _dumps(doc):
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _desc_lex(vectors):
    return sorted(vectors, reverse=True)


# ---------------------------------------------------------------- handlers
# each returns (payload_dict, csv_header, csv_rows, plain_lines)


def _cmd_info(S, args):
    payload = {
        "generators": list(S.generators),
        "k": S.k,
        "frobenius": S.frobenius,
        "period_hint": S.period_hint,
        "removed_generators": list(S.removed_generators),
    }
    header = ["generators", "k", "frobenius", "period_hint", "removed_generators"]
    rows = [[
        ";".join(map(str, S.generators)),
        S.k,
        S.frobenius,
        S.period_hint,
        ";".join(map(str, S.removed_generators)),
    ]]
    plain = [
        f"generators: {' '.join(map(str, S.generators))}",
        f"k: {S.k}",
        f"frobenius: {S.frobenius}",
        f"period_hint: {S.period_hint}",
        f"removed_generators: {' '.join(map(str, S.removed_generators))}",
    ]
    return payload, header, rows, plain


def _cmd_contains(S, args):
    member = S.contains(args.n)
    payload = {"n": args.n, "member": member}
    return payload, ["n", "member"], [[args.n, int(member)]], [str(member).lower()]


def _cmd_apery(S, args):
    ap = S.apery_set(args.n)
    payload = {"base": ap.base, "elements": list(ap.elements)}
    rows = [[v] for v in ap.elements]
    return payload, ["element"], rows, [" ".join(map(str, ap.elements))]


def _cmd_pseudo_frobenius(S, args):
    pf = S.pseudo_frobenius()
    payload = {"pseudo_frobenius": list(pf)}
    return payload, ["value"], [[v] for v in pf], [" ".join(map(str, pf))]


def _cmd_factorizations(S, args):
    Z = _desc_lex(factorizations(S, args.n))
    payload = {"n": args.n, "count": len(Z), "factorizations": [list(a) for a in Z]}
    header = [f"a{i + 1}" for i in range(S.k)]
    plain = [",".join(map(str, a)) for a in Z]
    return payload, header, [list(a) for a in Z], plain


def _cmd_factorizations_up_to(S, args):
    elements = []
    for m, Z in factorizations_up_to(S, args.n):
        vecs = _desc_lex(tuple(int(v) for v in row) for row in Z)
        elements.append({"m": m, "count": len(vecs), "factorizations": [list(a) for a in vecs]})
    payload = {"elements": elements}
    header = ["m"] + [f"a{i + 1}" for i in range(S.k)]
    rows = [[e["m"], *a] for e in elements for a in e["factorizations"]]
    plain = [f"{e['m']}: " + " ".join(",".join(map(str, a)) for a in e["factorizations"]) for e in elements]
    return payload, header, rows, plain


def _cmd_lengths(S, args):
    L = length_set(S, args.n)
    payload = {"n": args.n, "lengths": list(L)}
    return payload, ["length"], [[v] for v in L], [" ".join(map(str, L))]


def _cmd_delta(S, args):
    L = length_set(S, args.n)
    d = delta_of_lengths(L) if L else ()
    payload = {"n": args.n, "delta": list(d)}
    return payload, ["gap"], [[v] for v in d], [" ".join(map(str, d))]


def _cmd_delta_set(S, args):
    d = delta_set(S, bound_override=args.bound)
    payload = {"delta_set": list(d)}
    return payload, ["gap"], [[v] for v in d], [" ".join(map(str, d))]


def _cmd_delta_periodicity(S, args):
    horizon = args.horizon
    if horizon is None:
        horizon = S.period_hint + S.generators[-1]
    rep = delta_periodicity(S, horizon)
    payload = {
        "dissonance_start": rep.dissonance_start,
        "period": rep.period,
        "verified_up_to": rep.verified_up_to,
    }
    header = ["dissonance_start", "period", "verified_up_to"]
    row = [rep.dissonance_start, rep.period, rep.verified_up_to]
    plain = [f"dissonance_start: {rep.dissonance_start}", f"period: {rep.period}",
             f"verified_up_to: {rep.verified_up_to}"]
    return payload, header, [row], plain


def _cmd_omega(S, args):
    w = omega(S, args.n)
    payload = {"n": args.n, "omega": w}
    return payload, ["n", "omega"], [[args.n, w]], [str(w)]


def _cmd_omega_up_to(S, args):
    values = omega_up_to(S, args.n, domain=args.domain)
    pairs = sorted(values.items())
    payload = {"values": [[m, w] for m, w in pairs]}
    plain = [f"{m} {w}" for m, w in pairs]
    return payload, ["n", "omega"], [list(p) for p in pairs], plain


def _cmd_bullets(S, args):
    if args.method == "dp":
        pairs = dynamic_bullets(S, args.n)
        w = max(l for _, l in pairs)
        payload = {"n": args.n, "method": "dp", "omega": w,
                   "dynamic_bullets": [list(p) for p in pairs]}
        rows = [list(p) for p in pairs]
        plain = [f"{v},{l}" for v, l in pairs]
        return payload, ["value", "length"], rows, plain
    fn = bullets_via_apery if args.method == "apery" else bullets_brute_force
    bullets = _desc_lex(fn(S, args.n))
    w = max(sum(b) for b in bullets)
    payload = {"n": args.n, "method": args.method, "omega": w,
               "bullets": [list(b) for b in bullets]}
    header = [f"b{i + 1}" for i in range(S.k)]
    plain = [",".join(map(str, b)) for b in bullets]
    return payload, header, [list(b) for b in bullets], plain


def _model_payload(model):
    return {
        "n1": model.n1,
        "threshold": model.threshold,
        "offsets": [_fraction_str(o) for o in model.offsets],
        "dissonance": model.dissonance,
        "dissonance_in_monoid": model.dissonance_in_monoid,
    }


def _cmd_quasilinear(S, args):
    model = quasilinear_model(S)
    payload = _model_payload(model)
    header = ["n1", "threshold", "dissonance", "dissonance_in_monoid", "offsets"]
    row = [model.n1, model.threshold, model.dissonance, model.dissonance_in_monoid,
           ";".join(payload["offsets"])]
    plain = [f"n1: {model.n1}", f"threshold: {model.threshold}",
             f"offsets: {' '.join(payload['offsets'])}",
             f"dissonance: {model.dissonance}",
             f"dissonance_in_monoid: {model.dissonance_in_monoid}"]
    return payload, header, [row], plain


def _cmd_dissonance(S, args):
    model = quasilinear_model(S)
    payload = {"dissonance": model.dissonance,
               "dissonance_in_monoid": model.dissonance_in_monoid}
    header = ["dissonance", "dissonance_in_monoid"]
    return payload, header, [[model.dissonance, model.dissonance_in_monoid]], [
        f"dissonance: {model.dissonance}",
        f"dissonance_in_monoid: {model.dissonance_in_monoid}",
    ]


def _plot_rows(S, kind, horizon):
    if kind == "delta":
        for m, mask in _length_masks_up_to(S, horizon):
            lengths = _mask_to_lengths(mask)
            if len(lengths) < 2 or m == 0:
                continue
            for d in delta_of_lengths(lengths):
                yield (m, d)
    else:
        base, values, _ = _scan(S, horizon)
        for m in range(-S.frobenius - 1, horizon + 1):
            w = int(values[m - base]) if m >= base else 0
            yield (m, w, int(S.contains(m)))


def _cmd_plotdata(S, args):
    horizon = args.horizon
    if horizon is None:
        horizon = args.n
    if horizon is None:
        raise ValueError("plotdata requires --horizon")
    rows = [list(r) for r in _plot_rows(S, args.kind, horizon)]
    payload = {"kind": args.kind, "rows": rows}
    header = ["n", "d"] if args.kind == "delta" else ["n", "omega", "in_monoid"]
    plain = [" ".join(map(str, r)) for r in rows]
    return payload, header, rows, plain


def _cmd_verify(S, args):
    n = args.n if args.n is not None else 200
    results = run_suite(S, n=n)
    payload = {
        "properties": [
            {"name": r.name, "checked": r.checked, "failures": r.failures}
            for r in results
        ],
        "ok": all(r.ok for r in results),
    }
    header = ["property", "checked", "failures"]
    rows = [[r.name, r.checked, r.failures] for r in results]
    plain = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: checked {r.checked}, failures {r.failures}"
             for r in results]
    return payload, header, rows, plain


def _cmd_bench(S, args):
    n = args.n if args.n is not None else 300

    t0 = time.perf_counter()
    for _ in factorizations_up_to(S, n):
        pass
    dyn_z = time.perf_counter() - t0

    # the naive route restarts per element: drop the memoized
    # enumeration grids each time so the restart is real
    t0 = time.perf_counter()
    for m in range(n + 1):
        _combo_grid.cache_clear()
        _sorted_grid.cache_clear()
        brute_force_factorizations(S, m)
    naive_z = time.perf_counter() - t0

    t0 = time.perf_counter()
    _scan(S, n)
    dyn_w = time.perf_counter() - t0

    t0 = time.perf_counter()
    for x in range(-S.frobenius, n + 1):
        bullets_brute_force(S, x)
    naive_w = time.perf_counter() - t0

    results = [
        {"name": "factorizations dynamic", "ms": int(dyn_z * 1000)},
        {"name": "factorizations naive", "ms": int(naive_z * 1000)},
        {"name": "omega dynamic", "ms": int(dyn_w * 1000)},
        {"name": "omega naive", "ms": int(naive_w * 1000)},
    ]
    payload = {"results": results,
               "dynamic_faster": dyn_z < naive_z and dyn_w < naive_w}
    header = ["name", "ms"]
    rows = [[r["name"], r["ms"]] for r in results]
    plain = [f"{r['name']}: {r['ms']} ms" for r in results] + [
        f"dynamic_faster: {str(payload['dynamic_faster']).lower()}"
    ]
    return payload, header, rows, plain


_HANDLERS = {
    "info": _cmd_info,
    "contains": _cmd_contains,
    "apery": _cmd_apery,
    "pseudo-frobenius": _cmd_pseudo_frobenius,
    "factorizations": _cmd_factorizations,
    "factorizations-up-to": _cmd_factorizations_up_to,
    "lengths": _cmd_lengths,
    "delta": _cmd_delta,
    "delta-set": _cmd_delta_set,
    "delta-periodicity": _cmd_delta_periodicity,
    "omega": _cmd_omega,
    "omega-up-to": _cmd_omega_up_to,
    "bullets": _cmd_bullets,
    "quasilinear": _cmd_quasilinear,
    "dissonance": _cmd_dissonance,
    "plotdata": _cmd_plotdata,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
}


def _stream(S, args):
    """JSON Lines for the big scans: one element per line, no envelope."""
    if args.command == "factorizations-up-to":
        for m, Z in factorizations_up_to(S, args.n):
            vecs = _desc_lex(tuple(int(v) for v in row) for row in Z)
            print(_dumps({"m": m, "count": len(vecs),
                          "factorizations": [list(a) for a in vecs]}))
    elif args.command == "omega-up-to":
        for m, w in sorted(omega_up_to(S, args.n, domain=args.domain).items()):
            print(_dumps({"m": m, "omega": w}))
    elif args.command == "plotdata":
        horizon = args.horizon if args.horizon is not None else args.n
        if horizon is None:
            raise ValueError("plotdata requires --horizon")
        for row in _plot_rows(S, args.kind, horizon):
            print(_dumps(list(row)))
    else:
        raise ValueError(f"--stream is not supported for {args.command}")
    return 0


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code or 0
    if args.command in _NEEDS_N and args.n is None:
        parser.print_usage(sys.stderr)
        print(f"numfac {args.command}: error: --n is required", file=sys.stderr)
        return 1

    started = time.perf_counter()
    try:
        S = NumericalMonoid(_parse_gens(args.gens, parser))
        if args.stream:
            return _stream(S, args)
        payload, header, rows, plain = _HANDLERS[args.command](S, args)
    except MonoidInputError as exc:
        print(f"numfac: invalid monoid: {exc}", file=sys.stderr)
        return 2
    except Int64Overflow as exc:
        print(f"numfac: overflow: {exc}", file=sys.stderr)
        return 3
    except NotInMonoid as exc:
        print(f"numfac: {exc}", file=sys.stderr)
        return 4
    except (ValueError, SystemExit) as exc:
        if isinstance(exc, SystemExit):
            return exc.code or 0
        print(f"numfac: {exc}", file=sys.stderr)
        return 1
    timing_ms = int((time.perf_counter() - started) * 1000)

    if args.format == "json":
        envelope = {
            "command": args.command,
            "monoid": {"generators": list(S.generators), "frobenius": S.frobenius},
            "payload": payload,
            "timing_ms": timing_ms,
        }
        print(_dumps(envelope))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    else:
        for line in plain:
            print(line)

    if args.command == "verify" and not payload["ok"]:
        return 1
    if args.command == "bench" and not payload["dynamic_faster"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
