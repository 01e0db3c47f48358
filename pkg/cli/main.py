import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

import pandas as pd

from config.settings import TABLE1, TABLE2_M, VERIFY_SELECTORS, Settings, load_settings
from models.reports import ReportSummary, VerificationReport
from services.codes24 import CodeDatabase, compute_h, get_code_database, resolve_code
from services.enumerator import EnumeratorService, configure_enumerator_service
from services.exceptions import BudgetExceededError, DomainError, PreconditionError, Type2Error
from services.theorems import TheoremVerifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("text", "json", "latex")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="type2-enumerators",
        description="Genus-g weight enumerators of the Type II codes of length 24",
    )
    parser.add_argument("--data", help="code data file (default: embedded database or TYPE2_DATA_PATH)")
    parser.add_argument("--jobs", type=int, help="worker processes for enumeration (default: TYPE2_JOBS or 1)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_enum = sub.add_parser("enumerate", help="print the genus-g weight enumerator of a named code")
    p_enum.add_argument("name", help="C1..C9, d4..d24, e7, e8, e8^2, golay, d16plus")
    p_enum.add_argument("genus", type=int)
    p_enum.add_argument("format", nargs="?", choices=FORMATS, default=None)
    p_enum.add_argument("--format", dest="format_flag", choices=FORMATS, default=None)

    p_verify = sub.add_parser("verify", help="check the enumerator identities")
    p_verify.add_argument("selector", nargs="?", default="all", choices=VERIFY_SELECTORS)
    p_verify.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"),
                          help="restrict congruence checks to one pair of records")
    p_verify.add_argument("--json", action="store_true", help="print reports as JSON")

    sub.add_parser("tables", help="regenerate the classification table and the table of moduli")
    return parser


def cmd_enumerate(service: EnumeratorService, database_path, name: str, genus: int, fmt: str) -> int:
    named = resolve_code(name, database=None if not name.startswith("C") else get_code_database(database_path))
    poly = service.weight_enumerator_decomposed(list(named.parts), genus)
    if fmt == "json":
        print(json.dumps(poly.to_json(), indent=2))
    elif fmt == "latex":
        print(poly.to_latex())
    else:
        print(poly.to_text())
    return EXIT_OK


def _render_report(report: VerificationReport) -> str:
    flag = "INFO" if report.informational else report.status.upper()
    line = f"{flag:<5} {report.claim}"
    if report.witness is not None and report.witness.exponent is not None:
        line += f"  [{','.join(map(str, report.witness.exponent))}] expected {report.witness.expected}, got {report.witness.actual}"
    return line


def cmd_verify(verifier: TheoremVerifier, selector: str, pair: Optional[Sequence[int]], as_json: bool) -> int:
    reports = verifier.run(selector, tuple(pair) if pair else None)
    summary = ReportSummary.from_reports(reports)
    payload = json.dumps([r.to_json() for r in reports], indent=2)
    if as_json:
        print(payload)
    else:
        for report in reports:
            print(_render_report(report))
        print(f"{summary.passed} passed, {summary.failed} failed, {summary.informational} informational")
    verifier.service.store.record_run(selector, summary.passed, summary.failed, payload)
    return EXIT_OK if summary.all_passed else EXIT_FAILED


def table1_frame(database: CodeDatabase) -> pd.DataFrame:
    rows = []
    for record in database:
        golden = TABLE1[record.index]
        h = compute_h(record.code)
        rows.append({
            "i": record.index,
            "components": record.components,
            "h": str(h),
            "expected h": str(golden.h),
            "match": h == golden.h and record.components == golden.components,
        })
    return pd.DataFrame(rows).set_index("i")


def table2_frame(database: CodeDatabase) -> pd.DataFrame:
    frame = pd.DataFrame("", index=[f"h{i}" for i in range(1, 8)], columns=[f"h{j}" for j in range(2, 9)])
    for (i, j) in TABLE2_M:
        frame.loc[f"h{i}", f"h{j}"] = str(abs(4 * database.h(i) - 4 * database.h(j)))
    return frame


def cmd_tables(database: CodeDatabase) -> int:
    t1 = table1_frame(database)
    t2 = table2_frame(database)
    print("Type II codes of length 24")
    print(t1.to_string())
    print()
    print("Possible m")
    print(t2.to_string())

    mismatches: List[str] = [f"h{i}" for i, ok in t1["match"].items() if not ok]
    for (i, j), m in TABLE2_M.items():
        if Fraction(t2.loc[f"h{i}", f"h{j}"]) != m:
            mismatches.append(f"m({i},{j})")
    print()
    if mismatches:
        print("mismatches: " + ", ".join(mismatches))
        return EXIT_FAILED
    print("all entries match")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, settings: Optional[Settings] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = (settings or load_settings()).with_overrides(data_path=args.data, jobs=args.jobs)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    service = configure_enumerator_service(settings)
    try:
        if args.cmd == "enumerate":
            fmt = args.format_flag or args.format or "text"
            return cmd_enumerate(service, settings.data_path, args.name, args.genus, fmt)
        database = get_code_database(settings.data_path)
        if args.cmd == "verify":
            verifier = TheoremVerifier(database=database, service=service)
            return cmd_verify(verifier, args.selector, args.pair, args.json)
        return cmd_tables(database)
    except (BudgetExceededError, DomainError, PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Type2Error as e:
        logger.error(f"{args.cmd} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
