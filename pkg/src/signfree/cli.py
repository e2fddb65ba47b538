"""Command-line front end: expression evaluator plus verification commands.

Subcommands:

* ``eval``   -- evaluate expressions given as arguments (or stdin lines);
* ``repl``   -- interactive evaluator loop;
* ``tables`` -- recompute all three 8x8 unit tables (192 cells) and
  compare each cell exactly; exit 0 only on a perfect score;
* ``verify`` -- seeded property checks of every algebraic invariant;
* ``roots``  -- confirm the eight square roots of 9 and locate the
  square roots of +1 and -1 among the sixteen named units.

``--machine`` switches reports to tab-separated records, one per item.
"""

from __future__ import annotations

import argparse
import sys
from typing import Mapping

from . import expressions, units, verify
from .matrices import CyclicMatrix, find_square_roots
from .units import (
    IMAGINARY_FAMILY,
    NINE,
    PLUS_FAMILY,
    ROOTS_OF_NINE,
    TABLE_IDS,
    UnitName,
    match_unit,
    unit_value,
)

__all__ = ["main", "main_entry", "run_tables", "run_verify", "run_roots"]


def _eval_line(text: str) -> int:
    try:
        value = expressions.eval_text(text)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(expressions.format_value(value))
    return 0


def run_eval(texts: list[str]) -> int:
    status = 0
    for text in texts:
        text = text.strip()
        if not text:
            continue
        status |= _eval_line(text)
    return status


def run_repl() -> int:
    print("sign-free calculator; type an expression, or 'quit' to leave")
    while True:
        try:
            line = input("> ")
        except EOFError:
            print()
            return 0
        line = line.strip()
        if not line:
            continue
        if line.lower() in ("quit", "exit"):
            return 0
        _eval_line(line)
    return 0


def _grid_lines(report: units.TableReport) -> list[str]:
    table = units.TABLES[report.table]
    width = 3
    lines = [report.table]
    header = "  x |" + "".join(f"{unit.label:>{width + 1}}" for unit in table.col_units)
    lines.append(header)
    lines.append("-" * len(header))
    by_cell = {(cell.row, cell.col): cell for cell in report.cells}
    for row in table.row_units:
        shown = []
        for col in table.col_units:
            cell = by_cell[(row, col)]
            label = cell.computed_name.label if cell.computed_name else "?"
            shown.append(f"{label:>{width}}" + ("" if cell.passed else "!"))
        lines.append(f"{row.label:>3} | " + " ".join(shown))
    for cell in report.failures:
        lines.append(
            f"FAIL [{cell.row.label} x {cell.col.label}]: expected {cell.expected.label},"
            f" computed {cell.computed}"
        )
    lines.append(f"{report.table}: {report.n_passed}/{len(report.cells)} cells pass")
    return lines


def run_tables(
    machine: bool = False,
    unit_values: "Mapping[UnitName, CyclicMatrix] | None" = None,
) -> int:
    total = passed = 0
    for which in TABLE_IDS:
        report = units.verify_unit_table(which, unit_values)
        total += len(report.cells)
        passed += report.n_passed
        if machine:
            for cell in report.cells:
                computed = cell.computed_name.label if cell.computed_name else str(cell.computed)
                print(
                    "\t".join(
                        (
                            cell.table,
                            cell.row.label,
                            cell.col.label,
                            cell.expected.label,
                            computed,
                            "pass" if cell.passed else "fail",
                        )
                    )
                )
        else:
            for line in _grid_lines(report):
                print(line)
            print()
    if not machine:
        print(f"all tables: {passed}/{total} cells pass")
    return 0 if passed == total else 1


def run_verify(samples: int, seed: int, machine: bool = False) -> int:
    results = verify.run_checks(samples=samples, seed=seed)
    ok = True
    for result in results:
        ok = ok and result.passed
        if machine:
            print(
                "\t".join(
                    (
                        result.name,
                        str(result.samples),
                        str(result.failures),
                        "pass" if result.passed else "fail",
                    )
                )
            )
        elif result.passed:
            print(f"PASS {result.name} ({result.samples} samples)")
        else:
            print(
                f"FAIL {result.name} ({result.failures}/{result.samples} failed):"
                f" {result.detail}"
            )
    if not machine:
        n_passed = sum(result.passed for result in results)
        print(f"{n_passed}/{len(results)} checks pass")
    return 0 if ok else 1


def run_roots(machine: bool = False) -> int:
    ok = True

    accepted = find_square_roots(NINE, ROOTS_OF_NINE)
    nine_ok = len(accepted) == len(ROOTS_OF_NINE)
    ok = ok and nine_ok
    if machine:
        for index, candidate in enumerate(ROOTS_OF_NINE):
            good = candidate in accepted
            print(f"roots-of-nine\t#{index}\t{'pass' if good else 'fail'}")
    else:
        print(f"square roots of 9: {len(accepted)}/{len(ROOTS_OF_NINE)} confirmed")
        for candidate in ROOTS_OF_NINE:
            square = (candidate * candidate).reduce()
            mark = "ok" if candidate in accepted else "FAIL"
            print(f"  {candidate} ^2 -> {square}  {mark}")

    all_units = [unit_value(u) for u in UnitName]
    for family, target_name, tag in (
        (PLUS_FAMILY, UnitName.ONE, "roots-of-plus-one"),
        (IMAGINARY_FAMILY, UnitName.NEG1, "roots-of-minus-one"),
    ):
        found = find_square_roots(unit_value(target_name), all_units)
        found_names = {match_unit(matrix) for matrix in found}
        family_ok = found_names == set(family)
        ok = ok and family_ok
        if machine:
            for unit in UnitName:
                expected_in = unit in family
                actually_in = unit in found_names
                print(f"{tag}\t{unit.label}\t{'pass' if expected_in == actually_in else 'fail'}")
        else:
            labels = " ".join(unit.label for unit in UnitName if unit in found_names)
            print(
                f"square roots of {target_name.label} among the 16 units: {labels}"
                f"  ({'ok' if family_ok else 'FAIL: unexpected set'})"
            )
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signfree",
        description=(
            "Exact calculator for sign-free number systems: pairs p{..,..},"
            " triples t{..,..,..} and 3x3 matrices m{[..];[..];[..]} over"
            " Q(sqrt 3), with the sixteen named unit constants"
            " (ONE NEG1 J NJ K NK L NL I NI JJ NJJ KK NKK LL NLL for"
            " 1 -1 J -J K -K L -L i -i j -j k -k l -l)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate expressions (arguments or stdin lines)")
    p_eval.add_argument("expressions", nargs="*", help="expressions; stdin is read if omitted")

    sub.add_parser("repl", help="interactive evaluator")

    p_tables = sub.add_parser("tables", help="verify all three 8x8 unit multiplication tables")
    p_tables.add_argument("--machine", action="store_true", help="tab-separated records")

    p_verify = sub.add_parser("verify", help="seeded property checks of all invariants")
    p_verify.add_argument(
        "--samples",
        type=int,
        default=1000,
        help="pair/triple sample count; matrix laws run at half, rotation"
        " zeros at a tenth per zero (default 1000)",
    )
    p_verify.add_argument("--seed", type=int, default=42, help="random seed (default 42)")
    p_verify.add_argument("--machine", action="store_true", help="tab-separated records")

    p_roots = sub.add_parser("roots", help="confirm the square-root families")
    p_roots.add_argument("--machine", action="store_true", help="tab-separated records")

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "eval":
        texts = args.expressions or list(sys.stdin)
        return run_eval(texts)
    if args.command == "repl":
        return run_repl()
    if args.command == "tables":
        return run_tables(machine=args.machine)
    if args.command == "verify":
        if args.samples <= 0:
            parser.error("--samples must be positive")
        return run_verify(samples=args.samples, seed=args.seed, machine=args.machine)
    if args.command == "roots":
        return run_roots(machine=args.machine)
    raise AssertionError(f"unhandled command {args.command!r}")


def main_entry() -> None:
    sys.exit(main())
