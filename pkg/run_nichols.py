#!/usr/bin/env python3
"""
Nichols algebra workbench.
Main command-line entry point.

Usage:
    python run_nichols.py dims (--family TAG [params] | --file F) [--cap N] [--budget-secs S]
    python run_nichols.py verify TARGET [--n N] [--N N] [--sweep all|sample]
    python run_nichols.py classify (--family TAG [params] | --file F)
    python run_nichols.py rack {dihedral,derive,conjugate,iso,checks} ...
    python run_nichols.py families
    python run_nichols.py runs [--limit N]

Examples:
    python run_nichols.py dims --family Vabe --a 1 --b -1 --e 1
    python run_nichols.py dims --family Vabe --a z3^2 --b z3 --e 1 --cap 9
    python run_nichols.py verify k-lemmas --n 2 --N 1 --sweep all
    python run_nichols.py classify --family K --N 1 --n 2 --j 2 --k 0 --p 1 --s 1
    python run_nichols.py rack derive --family L --n 3
"""

import argparse
import sys
import traceback
from datetime import datetime, timezone

from braided.solutions import (
    conjugate_by_T, derived_rack, dihedral_rack, rack_isomorphic, solution_checks,
)
from config import DEFAULT_BUDGET_SECS, DEFAULT_CAP, DEFAULT_SAMPLES, FAMILY_TAGS, NICHOLS_CACHE
from families.cases import ParameterError, TotalityError
from families.registry import FAMILIES, UnknownFamilyError, get_family
from services import job_service, verify_service
from services.job_service import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE, JobSpec
from utils import tables
from utils.literals import ParseError
from utils.serialize import (
    braiding_from_json, dump_json, load_json, rack_from_json, rack_to_json,
    solution_from_json, solution_to_json,
)

PARAM_FLAGS = {
    "a": str, "b": str, "e": str,
    "N": int, "n": int, "j": int, "k": int, "p": int, "q": int, "s": int, "mu": int, "lam": int,
}

EXIT_CODES = """
Exit codes:
  0  success, all checks pass
  1  a verification failed, or an unexpected error
  2  usage or parse error
  3  budget exceeded (partial report still written)
"""


def progress(msg: str = "") -> None:
    """Progress goes to stderr so stdout stays machine-readable."""
    print(msg, file=sys.stderr)


def banner(title: str) -> None:
    progress(f"\n{'=' * 60}")
    progress(title)
    progress("=" * 60)


def emit(args, doc, table: str = "") -> None:
    if getattr(args, "table", False) and table:
        print(table)
    else:
        print(dump_json(doc))


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

def add_family_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--family", choices=FAMILY_TAGS, help="Family tag")
    parser.add_argument("--file", help="Braiding JSON or family descriptor JSON")
    group = parser.add_argument_group("family parameters")
    for name, kind in PARAM_FLAGS.items():
        group.add_argument(f"--{name}", type=kind, dest=f"param_{name}",
                           help="literal such as z3^2, -1, 1" if kind is str else None)


def add_output_args(parser: argparse.ArgumentParser) -> None:
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    mode.add_argument("--table", action="store_true", help="Aligned text table output")


def family_params(args) -> dict:
    return {
        name: getattr(args, f"param_{name}")
        for name in PARAM_FLAGS
        if getattr(args, f"param_{name}", None) is not None
    }


def parse_args(argv=None):
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        description="Graded dimensions of Nichols algebras and verification of braiding families",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EXIT_CODES,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dims = sub.add_parser("dims", help="Graded dimensions up to a degree cap",
                          formatter_class=argparse.RawDescriptionHelpFormatter, epilog=EXIT_CODES)
    add_family_args(dims)
    dims.add_argument("--cap", type=int, default=DEFAULT_CAP,
                      help=f"Highest degree to compute (default: {DEFAULT_CAP})")
    dims.add_argument("--budget-secs", type=float, default=DEFAULT_BUDGET_SECS,
                      help=f"Wall clock budget in seconds (default: {DEFAULT_BUDGET_SECS:g})")
    dims.add_argument("--cache-dir", default=None, help=f"Result cache directory (default: {NICHOLS_CACHE})")
    dims.add_argument("--no-cache", action="store_true", help="Neither read nor write the result cache")
    add_output_args(dims)

    verify = sub.add_parser("verify", help="Re-check family case tables and braid conditions")
    verify.add_argument("target", choices=verify_service.TARGETS)
    verify.add_argument("--n", type=int, default=2, help="Family rank n (default: 2)")
    verify.add_argument("--N", type=int, default=None, help="Field parameter N (required for --sweep all)")
    verify.add_argument("--sweep", choices=verify_service.SWEEPS, default="sample")
    verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    verify.add_argument("--family", choices=["K", "N"], default="K", help="Family for the cocycle sweep")
    verify.add_argument("--file", help="Braiding JSON for the braid/cocycle targets")
    add_output_args(verify)

    classify = sub.add_parser("classify", help="Dimension verdict for a family member")
    add_family_args(classify)
    add_output_args(classify)

    rack = sub.add_parser("rack", help="Rack and set-solution utilities")
    rack.add_argument("action", choices=["dihedral", "derive", "conjugate", "iso", "checks"])
    rack.add_argument("--size", type=int, help="Size of the dihedral rack")
    rack.add_argument("--file", help="Solution JSON (derive, conjugate, checks) or rack JSON (iso)")
    rack.add_argument("--other", help="Second rack JSON for iso")
    rack.add_argument("--dihedral", type=int, help="Compare against D_m for iso")
    rack.add_argument("--family", choices=["L", "I"], help="Use the L or I family solution")
    rack.add_argument("--n", type=int, help="Family rank n")
    add_output_args(rack)

    sub.add_parser("families", help="List the available families")

    runs = sub.add_parser("runs", help="Recent jobs from the run log")
    runs.add_argument("--limit", type=int, default=20)
    add_output_args(runs)

    return parser.parse_args(argv)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_dims(args) -> int:
    spec = JobSpec(
        command="dims",
        family=args.family,
        params=family_params(args),
        file=args.file,
        cap=args.cap,
        budget_secs=args.budget_secs,
        cache_dir=args.cache_dir,
        use_cache=not args.no_cache,
    )
    banner("Nichols Algebra Graded Dimensions")
    progress(f"Input: {args.file or args.family}   cap: {spec.cap}   budget: {spec.budget_secs:g}s\n")

    progress("Step 1: Scanning degrees...")
    progress("-" * 60)
    result = job_service.run_dims(spec)
    report = result.report

    progress("\nStep 2: Summary")
    progress("-" * 60)
    progress(f"[Total] dims = {report['dims']} ({report['verdict']})")
    if result.exit_code == EXIT_BUDGET:
        progress(f"[Scan] Budget exceeded: {report.get('reason')}")

    if args.table:
        print(tables.dims_table(report))
    else:
        print(result.text)

    job_service.record_run("dims", args.started_at, result.exit_code, family=args.family, result=result,
                           verdict=report["verdict"], total=report.get("total"), cap=spec.cap)
    return result.exit_code


def cmd_verify(args) -> int:
    banner(f"Verify: {args.target}")
    target = args.target
    if target == "k-lemmas":
        report = verify_service.verify_k_lemmas(args.n, args.N, args.sweep, args.samples)
    elif target == "n-lemmas":
        report = verify_service.verify_n_lemmas(args.n, args.N, args.sweep, args.samples)
    elif target == "l-rack":
        report = verify_service.verify_l_rack(args.n)
    elif target == "i-rack":
        report = verify_service.verify_i_rack(args.n)
    elif args.file:
        c = braiding_from_json(load_json(args.file))
        report = verify_service.verify_braid(c) if target == "braid" else verify_service.verify_cocycle(c)
    elif target == "cocycle":
        report = verify_service.verify_family_cocycles(args.family, args.n, args.N, args.sweep, args.samples)
    else:
        raise ParseError("verify braid needs --file")

    status = "PASS" if report.passed else "FAIL"
    progress(f"[Verify] {status}: {report.cases} cases, {report.failures} failures")
    if report.first_counterexample:
        progress(f"[Verify] First counterexample: {report.first_counterexample}")

    doc = report.as_dict()
    emit(args, doc, tables.render([{k: v for k, v in doc.items() if k != "details"}]))
    code = EXIT_OK if report.passed else EXIT_FAILED
    job_service.record_run("verify", args.started_at, code, notes=target)
    return code


def cmd_classify(args) -> int:
    spec = JobSpec(command="classify", family=args.family, params=family_params(args), file=args.file)
    verdict = job_service.run_classify(spec)
    progress(f"[Classify] {verdict.family}: {verdict.verdict} ({verdict.rule})")
    doc = verdict.as_dict()
    emit(args, doc, tables.verdict_table([doc]))
    job_service.record_run("classify", args.started_at, EXIT_OK, family=verdict.family,
                           verdict=verdict.verdict, total=verdict.total)
    return EXIT_OK


def _rack_solution(args):
    if args.family:
        if args.n is None:
            raise ParseError(f"--family {args.family} needs --n")
        family = get_family(args.family)["solution"](args.n)
        return family.solution, family
    if args.file:
        return solution_from_json(load_json(args.file)), None
    raise ParseError("give --file or --family")


def cmd_rack(args) -> int:
    action = args.action
    if action == "dihedral":
        if not args.size:
            raise ParseError("rack dihedral needs --size")
        rack = dihedral_rack(args.size)
        emit(args, rack_to_json(rack), tables.rack_table(rack))
        return EXIT_OK

    if action == "iso":
        if not args.file:
            raise ParseError("rack iso needs --file")
        a = rack_from_json(load_json(args.file))
        if args.other:
            b = rack_from_json(load_json(args.other))
        elif args.dihedral:
            b = dihedral_rack(args.dihedral)
        else:
            raise ParseError("rack iso needs --other or --dihedral")
        f = rack_isomorphic(a, b)
        progress(f"[Rack] {'isomorphic' if f is not None else 'not isomorphic'}")
        emit(args, {"isomorphic": f is not None, "map": list(f) if f is not None else None})
        return EXIT_OK if f is not None else EXIT_FAILED

    sol, family = _rack_solution(args)
    if action == "derive":
        rack = derived_rack(sol)
        doc = rack_to_json(rack)
        if family is not None:
            doc["f"] = [v + 1 for v in family.f]
            doc["dihedral"] = family.is_dihedral()
        emit(args, doc, tables.rack_table(rack))
    elif action == "conjugate":
        out = conjugate_by_T(sol)
        emit(args, solution_to_json(out), tables.solution_table(out))
    else:
        doc = solution_checks(sol).as_dict()
        emit(args, doc, tables.render([doc]))
    return EXIT_OK


def list_families() -> int:
    """Print the family registry."""
    print("\n" + "=" * 60)
    print("Available Families")
    print("=" * 60)
    status_icons = {"finite": "✓", "open": "?"}
    for tag, family in FAMILIES.items():
        icon = status_icons.get(family["status"], "~")
        print(f"  [{icon}] {tag:5} - {family['name']}")
        print(f"            {family['description']}")
        print(f"            params: {', '.join('--' + f for f in family['flags'])}")
    print("\n" + "-" * 60)
    print("Status Legend:  [✓] Finite cases known  [?] Dimension open")
    print("=" * 60 + "\n")
    return EXIT_OK


def cmd_runs(args) -> int:
    rows = job_service.recent_runs(args.limit)
    if args.table:
        print(tables.runs_table(rows))
    else:
        print(dump_json(rows))
    return EXIT_OK


COMMANDS = {
    "dims": cmd_dims,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "rack": cmd_rack,
    "families": lambda args: list_families(),
    "runs": cmd_runs,
}

def main(argv=None) -> int:
    """Dispatch a subcommand and map errors to exit codes."""
    args = parse_args(argv)
    args.started_at = datetime.now(timezone.utc)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, ParameterError, UnknownFamilyError) as e:
        progress(f"[ERROR] {e}")
        return EXIT_USAGE
    except TotalityError as e:
        progress(f"[ERROR] {e}")
        return EXIT_FAILED
    except Exception as e:
        progress(f"[ERROR] {e}")
        traceback.print_exc()
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
