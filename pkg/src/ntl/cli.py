"""Command line interface.

Exit codes: 0 success, 1 invalid input, 2 infeasible size,
3 internal verification failure.  Probabilities are printed as exact
fractions alongside exact decimal renderings; partitions are printed
comma-joined.  NTL_JOBS provides the default worker count.
"""

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from ntl import bounds, expansion, matrixlab, novelty
from ntl.core import Partition, complement, r_lambda
from ntl.errors import InfeasibleSizeError, NotFairlyDivisibleError, VerificationError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFICATION = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the contract wants 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _default_jobs():
    try:
        return max(1, int(os.environ.get("NTL_JOBS", "1")))
    except ValueError:
        return 1


def _fraction_arg(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a fraction: %r" % text)


def _partition_arg(text):
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _frac_str(f):
    f = Fraction(f)
    return "%d/%d" % (f.numerator, f.denominator)


def _record(p, provenance="proved"):
    cert = novelty.is_novel(p)
    r = r_lambda(p)
    return {
        "parts": list(p.parts),
        "len": p.k,
        "p": cert.p,
        "r": str(r),
        "novel": cert.novel,
        "rank": cert.rank,
        "gcd": cert.gcd,
        "provenance": provenance,
    }


def build_parser():
    top = _Parser(prog="ntl", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    novel = sub.add_parser("novel", help="novelty checks and enumeration")
    novel_sub = novel.add_subparsers(dest="subcommand", required=True)
    chk = novel_sub.add_parser("check", help="novelty certificate for a partition")
    chk.add_argument("parts", type=_partition_arg)
    chk.add_argument("--format", choices=("json", "text"), default="json")
    enum = novel_sub.add_parser("enum", help="all novel partitions of a length")
    enum.add_argument("--len", dest="length", type=int, required=True)
    enum.add_argument("--jobs", type=int, default=None)
    enum.add_argument("--format", choices=("json", "text"), default="json")

    rp = sub.add_parser("r", help="exact r for a partition")
    rp.add_argument("parts", type=_partition_arg)

    comp = sub.add_parser("complement", help="normalized complement columns")
    comp.add_argument("parts", type=_partition_arg)

    table = sub.add_parser("table", help="ranked tables")
    table_sub = table.add_subparsers(dest="subcommand", required=True)
    tr = table_sub.add_parser("r", help="novel partitions ranked by r")
    tr.add_argument("--min", dest="r_min", type=_fraction_arg, required=True)
    tr.add_argument("--max-len", type=int, default=bounds.CATALOG_MAX_LEN)
    tr.add_argument("--format", choices=("csv", "json"), default="csv")

    exp = sub.add_parser("expansion", help="expansion terms and estimates")
    exp.add_argument("--n", type=int, required=True)

    mom = sub.add_parser("moments", help="printed moment formulas")
    mom.add_argument("--n", type=int, required=True)
    mom.add_argument("--oracle", action="store_true",
                     help="include exhaustive oracle values (n <= 6)")

    pn = sub.add_parser("pn", help="singularity probability")
    pn_sub = pn.add_subparsers(dest="subcommand", required=True)
    pe = pn_sub.add_parser("exact", help="exact value by enumeration")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--jobs", type=int, default=None)
    ps = pn_sub.add_parser("survey", help="seeded Monte Carlo survey")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--samples", type=int, required=True)
    ps.add_argument("--seed", type=int, required=True)
    ps.add_argument("--jobs", type=int, default=None)

    wit = sub.add_parser("witness", help="corank-1 witness matrix")
    wit.add_argument("parts", type=_partition_arg)
    wit.add_argument("--verify", action="store_true")

    bnd = sub.add_parser("bounds", help="anticoncentration bounds")
    bnd_sub = bnd.add_subparsers(dest="subcommand", required=True)
    be = bnd_sub.add_parser("elo", help="central binomial bound")
    be.add_argument("--k", type=int, required=True)
    br = bnd_sub.add_parser("runners", help="bounded runners-up scan")
    br.add_argument("--k", type=int, required=True)
    br.add_argument("--max-part", type=int, required=True)

    rat = sub.add_parser("ratio", help="conditional probability ratios")
    rat_sub = rat.add_subparsers(dest="subcommand", required=True)
    r1 = rat_sub.add_parser("r11", help="(p)_n / p^n at n = len")
    r1.add_argument("parts", type=_partition_arg)
    r2 = rat_sub.add_parser("r11r1111", help="two-term ratio at n = len + 1")
    r2.add_argument("parts", type=_partition_arg)
    return top


def _print_json(obj, out):
    out.write(json.dumps(obj) + "\n")


def _cmd_novel(args, out):
    if args.subcommand == "check":
        rec = _record(args.parts)
        if args.format == "json":
            _print_json(rec, out)
        else:
            out.write("novel=%s rank=%d gcd=%d p=%d\n"
                      % (str(rec["novel"]).lower(), rec["rank"], rec["gcd"], rec["p"]))
        return EXIT_OK
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    found = novelty.enumerate_novel(args.length, jobs=jobs)
    for p in found:
        if args.format == "json":
            _print_json(_record(p), out)
        else:
            out.write("%s\n" % p)
    return EXIT_OK


def _cmd_r(args, out):
    r = r_lambda(args.parts)
    out.write("%s = %s\n" % (r, r.decimal()))
    return EXIT_OK


def _cmd_complement(args, out):
    comp = complement(args.parts)
    _print_json({
        "parts": list(args.parts.parts),
        "p": comp.p,
        "size": comp.size,
        "columns": [str(v) for v in comp.vectors],
    }, out)
    return EXIT_OK


def _cmd_table(args, out):
    rows = bounds.ranked_table(args.r_min, max_len=args.max_len)
    if args.format == "json":
        for row in rows:
            rec = _record(row.partition, provenance=row.provenance)
            rec["index"] = row.index
            rec["r256"] = row.scaled
            _print_json(rec, out)
    else:
        w = csv.writer(out)
        w.writerow(["index", "partition", "len", "r", "r256"])
        for row in rows:
            w.writerow([row.index, str(row.partition), row.length,
                        str(row.r), row.scaled])
    return EXIT_OK


def _cmd_expansion(args, out):
    if args.n < 2:
        raise ValueError("need n >= 2")
    terms = expansion.expansion_terms(args.n)
    est = expansion.e8_estimate(args.n)
    d11 = expansion.d11_lower_bound(args.n)
    _print_json({
        "n": args.n,
        "q": [t.coefficient for t in terms],
        "terms": [{"rate": _frac_str(t.rate),
                   "coefficient": t.coefficient,
                   "value": _frac_str(t.coefficient * t.rate ** args.n)}
                  for t in terms],
        "e8_estimate": _frac_str(est),
        "e8_estimate_decimal": float(est),
        "d11_lower_bound": _frac_str(d11),
        "d11_lower_bound_decimal": float(d11),
    }, out)
    return EXIT_OK


def _cmd_moments(args, out):
    if args.n < 2:
        raise ValueError("need n >= 2")
    trip = expansion.ie_moments(args.n)
    rec = {
        "n": args.n,
        "formula": {"ew": _frac_str(trip.ew), "ew2": _frac_str(trip.ew2),
                    "ew3": _frac_str(trip.ew3)},
    }
    if args.oracle:
        stats = matrixlab.exact_event_stats(args.n)
        rec["oracle"] = {"ew": _frac_str(stats["ew"]), "ew2": _frac_str(stats["ew2"]),
                         "ew3": _frac_str(stats["ew3"])}
    _print_json(rec, out)
    return EXIT_OK


def _cmd_pn(args, out):
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if args.subcommand == "exact":
        v = matrixlab.exact_pn(args.n, jobs=jobs)
        out.write("%s = %s\n" % (_frac_str(v), float(v)))
        return EXIT_OK
    report = matrixlab.survey(args.n, args.samples, args.seed, jobs=jobs)
    hist = {}
    for key, c in sorted(report.histogram.items(), key=lambda t: (isinstance(t[0], str), t[0])):
        name = key if isinstance(key, str) else ",".join(str(x) for x in key)
        hist[name] = c
    _print_json({
        "n": report.n,
        "samples": report.samples,
        "seed": report.seed,
        "singular": report.singular,
        "histogram": hist,
        "generator": report.generator,
    }, out)
    return EXIT_OK


def _cmd_witness(args, out):
    w = novelty.minimal_witness(args.parts)
    rec = {
        "parts": list(args.parts.parts),
        "side": w.side,
        "rows": ["".join("+" if x == 1 else "-" for x in row) for row in w.rows],
    }
    if args.verify:
        corank, kern = matrixlab.integer_corank_and_kernel(w.rows)
        rec["verified"] = corank == 1 and tuple(
            sorted((abs(x) for x in kern if x), reverse=True)) == args.parts.parts
        if not rec["verified"]:
            _print_json(rec, out)
            raise VerificationError("witness failed independent verification")
    _print_json(rec, out)
    return EXIT_OK


def _cmd_bounds(args, out):
    if args.subcommand == "elo":
        out.write("%d\n" % bounds.elo_bound(args.k))
        return EXIT_OK
    report = bounds.runner_up_scan(args.k, args.max_part)
    report = dict(report)
    report["top"] = [{"r": _frac_str(item["r"]),
                      "partitions": [",".join(map(str, p)) for p in item["partitions"]]}
                     for item in report["top"]]
    _print_json(report, out)
    return EXIT_OK


def _cmd_ratio(args, out):
    p = args.parts
    if args.subcommand == "r11":
        v = expansion.conditional_ratio_r11(p, p.k)
    else:
        v = expansion.conditional_ratio_r11_r1111(p, p.k + 1)
    out.write("%s = %s\n" % (_frac_str(v), float(v)))
    return EXIT_OK


_DISPATCH = {
    "novel": _cmd_novel,
    "r": _cmd_r,
    "complement": _cmd_complement,
    "table": _cmd_table,
    "expansion": _cmd_expansion,
    "moments": _cmd_moments,
    "pn": _cmd_pn,
    "witness": _cmd_witness,
    "bounds": _cmd_bounds,
    "ratio": _cmd_ratio,
}


def run(argv, out=None, err=None):
    """Dispatch a command line; returns the exit status."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_INVALID
    try:
        return _DISPATCH[args.command](args, out)
    except InfeasibleSizeError as exc:
        err.write("infeasible: %s\n" % exc)
        return EXIT_INFEASIBLE
    except VerificationError as exc:
        err.write("verification failure: %s\n" % exc)
        return EXIT_VERIFICATION
    except (ValueError, NotFairlyDivisibleError) as exc:
        err.write("invalid input: %s\n" % exc)
        return EXIT_INVALID


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
