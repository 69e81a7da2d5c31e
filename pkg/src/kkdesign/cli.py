"""Command line interface: ``kkdesign <subcommand> ...``.

Exit codes: 0 success / property holds, 1 property fails, 2 usage error,
3 input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, codes, constructions, search

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nrange(s: str) -> range:
    if ":" in s:
        a, b = s.split(":", 1)
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(s)
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad range {s!r}; use N or LO:HI")
    return range(lo, hi + 1)


def cmd_verify(args) -> int:
    code = codes.read_code(args.file)
    mv = codes.moments(code)
    out = {
        "n": code.n,
        "size": len(code),
        "moments": [bounds.frac_str(v) for v in mv.values],
        "design_strength": codes.design_strength(code, mv),
        "kk_level": codes.kk_level(code, mv),
        "antipodal": codes.is_antipodal(code),
        "antipodal_pair": codes.has_antipodal_pair(code),
    }
    status = EXIT_OK
    if args.k is not None:
        div = codes.divisibility_check(code, args.k, mv)
        out["divisibility"] = {
            "applicable": div.applicable,
            "divisible": div.divisible,
            "modulus": div.modulus,
            "note": div.note,
        }
        cert = bounds.tightness_certificate(code, args.k)
        out["tightness"] = cert.to_dict()
        out["tight"] = cert.ok
        holds = out["kk_level"] >= args.k if args.kk else cert.ok
        status = EXIT_OK if holds else EXIT_FAIL
    print(_dump(out))
    return status


def cmd_moments(args) -> int:
    code = codes.read_code(args.file)
    mv = codes.moments(code)
    print(_dump({"n": code.n, "size": len(code), "moments": {str(i): bounds.frac_str(v) for i, v in mv.as_dict().items()}}))
    return EXIT_OK


def cmd_bound(args) -> int:
    if args.lp or args.degree is not None:
        rep = bounds.lp_optimize(args.n, args.k, args.degree)
    else:
        rep = bounds.universal_certificate(args.n, args.k)
    d = rep.to_dict()
    d["universal_bound"] = bounds.universal_bound(args.n, args.k)
    print(_dump(d))
    return EXIT_OK


def cmd_lp(args) -> int:
    args.lp = True
    return cmd_bound(args)


def cmd_screen(args) -> int:
    rows = []
    for n in args.n:
        if not 1 <= args.k <= n // 2:
            continue
        rows.append(bounds.screen_tight(n, args.k))
    if args.format == "table":
        print(f"{'n':>6} {'k':>3} {'bound':>12}  verdict   failed screens")
        for r in rows:
            failed = [c.name for c in r.checks if c.counts and not c.passed]
            print(f"{r.n:>6} {r.k:>3} {bounds.universal_bound(r.n, r.k):>12}  {r.verdict:<9} {', '.join(failed)}")
    else:
        for r in rows:
            print(_dump(r.to_dict()))
    return EXIT_OK


def _emit_code(code, comments, report, out):
    if out:
        codes.write_code(code, out, comments)
        print(_dump(report))
    else:
        sys.stdout.write(codes.format_code(code, comments))


def cmd_construct(args) -> int:
    fam = args.family
    if args.full:
        if fam == "even-weight":
            code = constructions.even_weight_code(args.n)
        elif fam == "golay":
            code = constructions.golay24()
        else:
            raise ValueError("--full applies to even-weight and golay only")
        report = {"family": fam, "n": code.n, "size": len(code), "strength": codes.design_strength(code), "antipodal": codes.is_antipodal(code)}
        _emit_code(code, [f"{fam} code, n={code.n}, {len(code)} words"], report, args.out)
        return EXIT_OK
    internal = {"even-weight": "even_weight", "hadamard": "hadamard", "golay": "golay"}[fam]
    code, k, cert = constructions.construct_tight_kk(internal, n=args.n)
    report = {"family": fam, "k": k, **cert.to_dict()}
    comments = [f"tight ({k},{k})-design from {fam}, n={code.n}, {len(code)} words, certificate {'passes' if cert.ok else 'FAILS'}"]
    _emit_code(code, comments, report, args.out)
    return EXIT_OK if cert.ok else EXIT_FAIL


def cmd_search(args) -> int:
    rep = search.search_tight(args.n, args.k, budget=args.budget, target=args.target)
    d = rep.to_dict()
    if rep.code is not None:
        d["code"] = rep.code.strings()
        if args.out:
            codes.write_code(rep.code, args.out, [f"clique search result, n={args.n}, k={args.k}"])
    print(_dump(d))
    return EXIT_OK if rep.status == "found" else EXIT_FAIL


def cmd_golay_selfcheck(args) -> int:
    code = constructions.golay24(verify=False)
    rep = constructions.golay_selfcheck(code)
    half = codes.antipodal_halve(code)
    cert = bounds.tightness_certificate(half, 3)
    out = {
        "checks": rep["checks"],
        "weights": {str(w): c for w, c in rep["weights"].items()},
        "min_distance": rep["min_distance"],
        "strength": rep["strength"],
        "halved": cert.to_dict(),
        "ok": rep["ok"] and cert.ok,
    }
    print(_dump(out))
    return EXIT_OK if out["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kkdesign", description="Bounds, checks and constructions for binary (k,k)-designs.")
    p.add_argument("--threads", type=_positive, default=1, help="worker cap (all pipelines are single-threaded)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", help="moments, strength, (k,k)-level and tightness of a code file")
    s.add_argument("file")
    s.add_argument("--k", type=_positive)
    s.add_argument("--kk", action="store_true", help="exit 0 when the code is a (k,k)-design, tight or not")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("moments", help="exact moment vector of a code file")
    s.add_argument("file")
    s.set_defaults(func=cmd_moments)

    for name, func in (("bound", cmd_bound), ("lp", cmd_lp)):
        s = sub.add_parser(name, help="universal bound with its certificate" if name == "bound" else "exact LP optimum")
        s.add_argument("n", type=_positive)
        s.add_argument("k", type=_positive)
        if name == "bound":
            s.add_argument("--lp", action="store_true", help="run the LP optimizer instead")
        s.add_argument("--degree", type=_positive, help="degree cap D (2k <= D <= n; default 2k)")
        s.set_defaults(func=func, lp=False)

    s = sub.add_parser("screen", help="necessary conditions for tight designs")
    s.add_argument("--n", type=_nrange, required=True, help="N or LO:HI")
    s.add_argument("--k", type=_positive, required=True)
    s.add_argument("--format", choices=("jsonl", "table"), default="jsonl")
    s.set_defaults(func=cmd_screen)

    s = sub.add_parser("construct", help="build a design family")
    s.add_argument("family", choices=("even-weight", "hadamard", "golay"))
    s.add_argument("--n", type=_positive)
    s.add_argument("--full", action="store_true", help="emit the antipodal source code instead of its half")
    s.add_argument("--out")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="clique search for a tight design")
    s.add_argument("n", type=_positive)
    s.add_argument("k", type=_positive)
    s.add_argument("--budget", type=_positive, default=1_000_000)
    s.add_argument("--target", type=_positive)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("golay-selfcheck", help="verify the Golay code and its halved design")
    s.set_defaults(func=cmd_golay_selfcheck)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except codes.CodeFormatError as exc:
        print(f"kkdesign: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"kkdesign: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"kkdesign: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
