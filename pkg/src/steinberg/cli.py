"""Command-line driver.

    steinberg verify all [--format json] [--seed S] [--trials T] [--jobs N]
    steinberg verify bwb-tables --l 5
    steinberg verify identities --char 0
    steinberg verify span --char 5
    steinberg verify ideal --case n3-z --char 5 --degree-bound 5 [--trials T --seed S --symbolic]
    steinberg verify dims | multiplicities | classgroup
    steinberg compute chi --rep "wedge^2(b)*b"
    steinberg compute psupp --rep "wedge^2(b)*b" --i 2 --l 5
    steinberg compute hilbert --case n3-z --degree-bound 4 [--char 5]
    steinberg compute snf --file matrix.txt

Exit status: 0 when no check fails, 1 when any check fails, 2 on usage or
parse errors.  Reports go to standard output as json or markdown.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor

from . import bwb, campaigns
from .breps import RepParseError, build_rep, parse_rep
from .cases import CASE_TAGS, IdealCase, UnsupportedCase, make_ideal
from .liealg import CharacteristicError
from .polyalg import DomainError, IntMatrix, TruncationError, groebner, hilbert_function, snf
from .report import Emitter, Report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown"), default="markdown")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker threads for verify all")
    common.add_argument("--timings", action="store_true",
                        help="fill elapsed_ms (non-reproducible output)")

    top = argparse.ArgumentParser(prog="steinberg")
    sub = top.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify").add_subparsers(dest="campaign", required=True)
    verify.add_parser("all", parents=[common]).add_argument("--trials", type=int, default=200)
    p = verify.add_parser("bwb-tables", parents=[common])
    p.add_argument("--l", type=int, required=True)
    p = verify.add_parser("identities", parents=[common])
    p.add_argument("--char", type=int, default=0)
    p = verify.add_parser("span", parents=[common])
    p.add_argument("--char", type=int, default=0)
    p = verify.add_parser("ideal", parents=[common])
    p.add_argument("--case", dest="case_tag", choices=CASE_TAGS, required=True)
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--degree-bound", type=int, default=5)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--symbolic", action="store_true")
    verify.add_parser("dims", parents=[common])
    verify.add_parser("multiplicities", parents=[common])
    verify.add_parser("classgroup", parents=[common])

    compute = sub.add_parser("compute").add_subparsers(dest="computation", required=True)
    p = compute.add_parser("chi", parents=[common])
    p.add_argument("--rep", required=True)
    p = compute.add_parser("psupp", parents=[common])
    p.add_argument("--rep", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p = compute.add_parser("hilbert", parents=[common])
    p.add_argument("--case", dest="case_tag", choices=CASE_TAGS, required=True)
    p.add_argument("--degree-bound", type=int, required=True)
    p.add_argument("--char", type=int, default=0)
    p = compute.add_parser("snf", parents=[common])
    p.add_argument("--file", required=True)
    return top


def _verify(args) -> int:
    em = Emitter(timings=args.timings)
    if args.campaign == "all":
        if args.jobs > 1:
            _verify_all_parallel(em, args)
        else:
            campaigns.verify_all(em, seed=args.seed, trials=args.trials)
    elif args.campaign == "bwb-tables":
        campaigns.bwb_tables_campaign(em, args.l)
        campaigns._chi_alternating_rows_entry(em, args.l)
    elif args.campaign == "identities":
        campaigns.identities_campaign(em, args.char)
    elif args.campaign == "span":
        campaigns.span_campaign(em, args.char)
    elif args.campaign == "ideal":
        campaigns.ideal_campaign(em, args.case_tag, args.char, args.degree_bound,
                                 args.trials, args.seed, args.symbolic)
    elif args.campaign == "dims":
        campaigns.dims_campaign(em)
    elif args.campaign == "multiplicities":
        campaigns.multiplicities_campaign(em)
    elif args.campaign == "classgroup":
        campaigns.classgroup_campaign(em)
    report = Report(em.entries, seed=args.seed, jobs=args.jobs)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.to_markdown())
        if args.campaign in ("all", "bwb-tables"):
            sys.stdout.write("\n" + campaigns.tables_markdown())
    return report.exit_code


def _verify_all_parallel(em: Emitter, args) -> None:
    jobs = [
        lambda e: [campaigns.bwb_tables_campaign(e, 5), campaigns._chi_alternating_rows_entry(e, 5)],
        lambda e: [campaigns.bwb_tables_campaign(e, 7), campaigns._chi_alternating_rows_entry(e, 7)],
        lambda e: campaigns.identities_campaign(e, 0),
        lambda e: campaigns.identities_campaign(e, 5),
        lambda e: campaigns.identities_campaign(e, 7),
        lambda e: campaigns.span_campaign(e, 0),
        lambda e: campaigns.span_campaign(e, 5),
        lambda e: campaigns.ideal_campaign(e, "n2", 0, 6, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "n2", 5, 6, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "n3-z", 0, 5, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "n3-z", 5, 5, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "n3-z", 7, 5, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "n3-x", 5, 5, args.trials, args.seed),
        lambda e: campaigns.ideal_campaign(e, "gl-n2", 5, 4, args.trials, args.seed, True),
        lambda e: campaigns.ideal_campaign(e, "gl-n3", 5, 4, args.trials, args.seed, True),
        lambda e: campaigns.ideal_campaign(e, "cnil", 0, 4, args.trials, args.seed),
        lambda e: campaigns.dims_campaign(e),
        lambda e: campaigns.multiplicities_campaign(e),
        lambda e: campaigns.classgroup_campaign(e),
    ]

    def run(job):
        local = Emitter(timings=args.timings)
        job(local)
        return local.entries

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        for entries in pool.map(run, jobs):
            em.entries.extend(entries)


def _compute(args) -> int:
    if args.computation == "chi":
        rep = build_rep(parse_rep(args.rep))
        sys.stdout.write(str(bwb.euler_char(rep)) + "\n")
        return 0
    if args.computation == "psupp":
        rep = build_rep(parse_rep(args.rep))
        ms = bwb.psupp(rep, args.i, args.l)
        sys.stdout.write(campaigns.fmt_multiset(ms) + "\n")
        return 0
    if args.computation == "hilbert":
        case = IdealCase(args.case_tag, args.char,
                         q=1 if args.case_tag.startswith("gl") else None)
        gb = groebner(make_ideal(case), args.degree_bound)
        sys.stdout.write(str(hilbert_function(gb, args.degree_bound)) + "\n")
        return 0
    if args.computation == "snf":
        with open(args.file, "r", encoding="utf-8") as fh:
            matrix = IntMatrix.from_text(fh.read())
        sys.stdout.write("[" + ", ".join(str(d) for d in snf(matrix)) + "]\n")
        return 0
    raise AssertionError


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        return _compute(args)
    except RepParseError as e:
        sys.stderr.write(f"steinberg: bad rep expression: {e}\n")
        return 2
    except (UnsupportedCase, CharacteristicError, bwb.NotBWBGood, bwb.NotDecidable,
            DomainError, TruncationError) as e:
        sys.stderr.write(f"steinberg: {type(e).__name__}: {e}\n")
        return 2
    except (OSError, ValueError) as e:
        sys.stderr.write(f"steinberg: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
