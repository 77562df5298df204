"""Command-line interface.

Subcommands: period, verify, match, mutate, db add, db search.  All output
is deterministic: JSON uses compact separators and fixed key order, and
sequences print as exact rational strings.
"""

import argparse
import json
import sys

from .db import (
    PeriodRecord,
    append_record,
    derive_sequence,
    graded_potential_spec,
    search_records,
)
from .errors import LgPeriodError
from .expressions import parse_expression, infer_rank, to_poly
from .laurent import poly_string
from .mutation import MutationData, NotMutable, check_period_invariance, mutate
from .period import (
    PeriodSequence,
    check_grading,
    classical_period,
    period_match,
)
from .references import ReferenceSpace, reference_potential, reference_quantum_period
from .rings import rational_string

MAX_CLI_DEGREE = 64


def _dump(data):
    return json.dumps(data, separators=(",", ":"))


def _sequence_text(sequence):
    return "[" + ", ".join(rational_string(e) for e in sequence.specialize()) + "]"


def _check_degree(degree):
    if degree < 0 or degree > MAX_CLI_DEGREE:
        raise LgPeriodError(
            f"--degree must be between 0 and {MAX_CLI_DEGREE}, got {degree}"
        )


def _parse_with_rank(text, rank):
    expr = parse_expression(text)
    return to_poly(expr, rank if rank is not None else infer_rank(expr))


def cmd_period(args):
    _check_degree(args.degree)
    if args.grading:
        with open(args.grading, "r", encoding="utf-8") as handle:
            grading = json.load(handle)
        spec = graded_potential_spec(args.potential, grading)
        report = check_grading(spec)
        if not report.ok:
            for violation in report.violations:
                print(violation.message, file=sys.stderr)
            return 2
        sequence = classical_period(spec.mori_potential(), args.degree)
    else:
        poly = _parse_with_rank(args.potential, args.rank)
        sequence = classical_period(poly, args.degree)
    print(_dump(sequence.to_json_dict()))
    return 0


def cmd_verify(args):
    _check_degree(args.degree)
    space = ReferenceSpace.from_name(args.space)
    computed = classical_period(reference_potential(space), args.degree)
    reference = reference_quantum_period(space, args.degree)
    index = period_match(computed, reference, args.degree)
    if args.json:
        print(
            _dump(
                {
                    "space": space.value,
                    "degree": args.degree,
                    "classical": [rational_string(e) for e in computed],
                    "reference": [rational_string(e) for e in reference],
                    "match": index is None,
                }
            )
        )
    else:
        print(f"space      {space.value}")
        print(f"classical  {_sequence_text(computed)}")
        print(f"reference  {_sequence_text(reference)}")
        print("PASS" if index is None else f"FAIL (first mismatch at degree {index})")
    return 0 if index is None else 1


def cmd_match(args):
    _check_degree(args.degree)
    left = _parse_with_rank(args.left, args.rank)
    right = _parse_with_rank(args.right, args.rank)
    left_seq = classical_period(left, args.degree)
    right_seq = classical_period(right, args.degree)
    index = period_match(left_seq, right_seq, args.degree)
    if args.json:
        print(
            _dump(
                {
                    "degree": args.degree,
                    "left": [rational_string(e) for e in left_seq],
                    "right": [rational_string(e) for e in right_seq],
                    "equal": index is None,
                    "mismatch": index,
                }
            )
        )
    else:
        print(f"left       {_sequence_text(left_seq)}")
        print(f"right      {_sequence_text(right_seq)}")
        print("EQUAL" if index is None else f"MISMATCH at degree {index}")
    return 0


def cmd_mutate(args):
    _check_degree(args.degree)
    try:
        direction = tuple(int(v) for v in args.w.split(","))
    except ValueError:
        raise LgPeriodError(f"--w must be comma-separated integers, got {args.w!r}")
    rank = args.rank if args.rank is not None else len(direction)
    poly = _parse_with_rank(args.potential, rank)
    factor = _parse_with_rank(args.h, rank)
    data = MutationData(direction, factor)
    outcome = mutate(poly, data)
    if isinstance(outcome, NotMutable):
        if args.json:
            print(_dump({"mutable": False, "level": outcome.level}))
        else:
            print(f"NotMutable at level {outcome.level}")
        return 0
    comparison = check_period_invariance(poly, outcome, args.degree)
    if args.json:
        print(
            _dump(
                {
                    "mutable": True,
                    "mutated": poly_string(outcome),
                    "degree": args.degree,
                    "periods_equal": comparison.equal,
                    "mismatch": comparison.mismatch_index,
                }
            )
        )
    else:
        print(f"mutated    {poly_string(outcome)}")
        print(f"original   {_sequence_text(comparison.left)}")
        print(f"mutated    {_sequence_text(comparison.right)}")
        if comparison.equal:
            print(f"periods agree to degree {args.degree}")
        else:
            print(f"PERIOD MISMATCH at degree {comparison.mismatch_index}")
    return 0 if comparison.equal else 1


def cmd_db_add(args):
    if args.record:
        with open(args.record, "r", encoding="utf-8") as handle:
            record = PeriodRecord.from_json_dict(json.load(handle))
    else:
        if not (args.name and args.potential and args.degree is not None):
            raise LgPeriodError("db add needs --record or --name/--potential/--degree")
        _check_degree(args.degree)
        sequence = derive_sequence(args.potential, args.degree)
        record = PeriodRecord(name=args.name, potential=args.potential, sequence=sequence)
    append_record(args.database, record)
    print(f"added {record.name} (degree {record.sequence.degree})")
    return 0


def cmd_db_search(args):
    _check_degree(args.degree)
    query = json.loads(args.query)
    sequence = PeriodSequence([str(v) for v in query])
    for record in search_records(args.database, sequence, args.degree):
        print(_dump(record.to_json_dict()))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lgperiod",
        description="Exact classical periods of Laurent-polynomial potentials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("period", help="period sequence of a potential (JSON)")
    p.add_argument("potential", help="potential as an expression, e.g. 'x + x^-1'")
    p.add_argument("--degree", type=int, required=True, help="truncation degree")
    p.add_argument("--grading", help="JSON grading file: rank/weights/tags")
    p.add_argument("--rank", type=int, help="ambient rank (default: inferred)")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="check a reference space against its mirror")
    p.add_argument("space", help="P1, P2, P1xP1 or P3")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("match", help="compare the periods of two potentials")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("mutate", help="mutate a potential and check its period")
    p.add_argument("potential")
    p.add_argument("--w", required=True, help="grading direction, e.g. 0,-1")
    p.add_argument("--h", required=True, help="mutation factor, e.g. '1+x'")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("db", help="period-record database (JSON lines)")
    dbsub = p.add_subparsers(dest="db_command", required=True)

    q = dbsub.add_parser("add", help="verify and append a record")
    q.add_argument("database")
    q.add_argument("--record", help="JSON file holding a full record")
    q.add_argument("--name", help="record name (with --potential/--degree)")
    q.add_argument("--potential", help="potential expression")
    q.add_argument("--degree", type=int)
    q.set_defaults(func=cmd_db_add)

    q = dbsub.add_parser("search", help="records matching a query sequence")
    q.add_argument("database")
    q.add_argument("--query", required=True, help='JSON list, e.g. "[1,0,2,0,6]"')
    q.add_argument("--degree", type=int, required=True)
    q.set_defaults(func=cmd_db_search)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LgPeriodError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
