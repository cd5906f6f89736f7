"""Command-line front end.

Subcommands chain the pipeline: diagram -> Alexander/spectrum -> marked
partial resolutions and smallness -> reduced complex -> surgery invariants,
plus Maslov-index queries on cellulation fixtures.  Every subcommand has a
--json mode emitting exactly one JSON document on stdout.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

SCHEMA_VERSION = 1


class CliError(Exception):
    pass


def _load_diagram(args):
    from . import table
    from .diagrams import parse_pd

    if args.knot and args.pd:
        raise CliError("give either --knot or --pd, not both")
    if args.knot:
        return table.lookup(args.knot)
    if args.pd:
        if args.pd == "-":
            text = sys.stdin.read()
        else:
            with open(args.pd) as f:
                text = f.read()
        return parse_pd(text)
    raise CliError("a diagram is required: --knot <name> or --pd <file|->")


def _emit(args, payload, plain):
    if args.json:
        payload = {"schema": SCHEMA_VERSION, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _trace(args, name, text):
    if args.trace:
        os.makedirs(args.trace, exist_ok=True)
        with open(os.path.join(args.trace, name), "w") as f:
            f.write(text)


def cmd_alexander(args):
    from .fox import alexander

    d = _load_diagram(args)
    delta = alexander(d)
    _trace(args, "alexander.json", delta.to_json())
    _emit(args, {"alexander": delta.to_json_obj(), "text": delta.to_text()}, delta.to_text())


def cmd_signature(args):
    from .signature import signature

    d = _load_diagram(args)
    s = signature(d)
    _emit(args, {"signature": s}, str(s))


def cmd_spectrum(args):
    from .fox import generator_spectrum, wirtinger

    d = _load_diagram(args)
    p = wirtinger(d)
    _trace(
        args,
        "presentation.json",
        json.dumps({"generators": p.g, "relators": [list(r) for r in p.relators]}),
    )
    spec, delta = generator_spectrum(p)
    spec = sorted(spec)
    _trace(args, "spectrum.json", json.dumps(spec))
    plain = " ".join("%+d*t^%d" % (s, e) for e, s in spec)
    _emit(
        args,
        {"spectrum": [[e, s] for e, s in spec], "alexander": delta.to_json_obj()},
        plain,
    )


def cmd_mprs(args):
    from . import altgen

    d = _load_diagram(args)
    c1 = args.c1 if args.c1 is not None else 0
    ms = altgen.enumerate_mprs(d, c1)
    listing = [
        {
            "assignment": list(m.assignment),
            "exponent": m.alexander_exponent,
            "sign": m.sign,
            "components": [sorted(c) for c in m.marked_components],
        }
        for m in ms
    ]
    _emit(
        args,
        {"c1": c1, "count": len(ms), "mprs": listing},
        "\n".join(
            "%s  t^%d %+d" % (",".join(str(t) for t in m.assignment), m.alexander_exponent, m.sign)
            for m in ms
        ),
    )


def cmd_small(args):
    from . import altgen

    d = _load_diagram(args)
    cert = altgen.certify_small(d)
    payload = {"small": cert.verdict, "c1": cert.c1}
    if not cert.verdict and cert.witness:
        payload["witness_component"] = sorted(cert.witness[1])
    _emit(args, payload, "true" if cert.verdict else "false")


def cmd_cfr(args):
    from . import altgen
    from .surgery import input_from_alternating

    d = _load_diagram(args)
    cert = altgen.certify_small(d)
    if not cert.verdict:
        raise CliError("diagram is not certified small; no reduced complex")
    ranks = altgen.reduced_ranks(d, cert)
    inp = input_from_alternating(d, args.field)
    _trace(args, "cfr.json", inp.cfr.to_json())
    payload = {
        "ranks": {str(k): v for k, v in sorted(ranks.items())},
        "small": True,
        "c1": cert.c1,
        "s": inp.s,
        "complex": inp.cfr.to_json_obj(),
    }
    plain = "s=%d ranks=%s" % (
        inp.s,
        " ".join("%d:%d" % kv for kv in sorted(ranks.items())),
    )
    _emit(args, payload, plain)


def cmd_surgery(args):
    from .surgery import input_from_alternating, integer_surgery

    d = _load_diagram(args)
    if args.m is None:
        raise CliError("surgery needs --m")
    k = args.k or 0
    if args.m < 0:
        d = d.mirror()
    inp = input_from_alternating(d, args.field)
    ans = integer_surgery(inp, args.m, k)
    obj = ans.to_json_obj()
    _emit(
        args,
        obj,
        "m=%d k=%d h=%d d_shift=%d reduced_rank=%d"
        % (args.m, k, ans.h, ans.d_shift, ans.reduced_total),
    )


def cmd_hk(args):
    from .surgery import h_invariant, input_from_alternating

    d = _load_diagram(args)
    k = args.k or 0
    inp = input_from_alternating(d, args.field)
    h = h_invariant(inp, k)
    _emit(args, {"k": k, "h": h}, str(h))


def cmd_maslov(args):
    from .maslov import DomainChain, HeegaardCellulation, classify_differential, maslov_index

    if not args.cellulation or not args.domain:
        raise CliError("maslov needs --cellulation <file> and --domain <file>")
    cell = HeegaardCellulation.load(args.cellulation)
    with open(args.domain) as f:
        dom = DomainChain.from_json_obj(cell, json.load(f))
    mu = maslov_index(dom)
    verdict = classify_differential(dom)
    _emit(
        args,
        {"maslov": mu, "classification": str(verdict)},
        "mu=%d %s" % (mu, verdict),
    )


def cmd_table(args):
    from . import table

    names = table.names()
    rows = []
    for n in names:
        e = table.entry(n)
        rows.append({"name": n, "alternating": e["alternating"], "crossings": len(e["pd"])})
    _emit(
        args,
        {"knots": rows},
        "\n".join(
            "%-8s %2d crossings%s" % (r["name"], r["crossings"], " alternating" if r["alternating"] else "")
            for r in rows
        ),
    )


def build_parser():
    ap = argparse.ArgumentParser(
        prog="knotfloer",
        description="Knot invariants from planar diagrams",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    commands = {
        "alexander": cmd_alexander,
        "signature": cmd_signature,
        "spectrum": cmd_spectrum,
        "mprs": cmd_mprs,
        "small": cmd_small,
        "cfr": cmd_cfr,
        "surgery": cmd_surgery,
        "hk": cmd_hk,
        "maslov": cmd_maslov,
        "table": cmd_table,
    }
    for name, fn in commands.items():
        p = sub.add_parser(name)
        p.add_argument("--knot", help="table lookup by name")
        p.add_argument("--pd", help="PD text from a file or - for stdin")
        p.add_argument("--k", type=int, default=None, help="spin-c level")
        p.add_argument("--m", type=int, default=None, help="surgery coefficient")
        p.add_argument("--c1", type=int, default=None, help="distinguished crossing")
        p.add_argument("--field", choices=["Q", "F2"], default="F2")
        p.add_argument("--json", action="store_true")
        p.add_argument("--trace", help="directory for intermediate artifacts")
        p.add_argument("--cellulation", help="cellulation JSON (maslov)")
        p.add_argument("--domain", help="domain JSON (maslov)")
        p.set_defaults(fn=fn)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        args.fn(args)
        return 0
    except CliError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except Exception as e:  # domain errors from the library
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
