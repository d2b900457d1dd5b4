"""Command-line front end: count, enumerate, map, verify, series, selftest.

Exit codes: 0 all good, 1 verification or class-membership failure, 2 usage
or parse error.  Output is deterministic; --format json-lines emits one JSON
record per line carrying the fields the plain rendering is built from.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .acceptance import CRITERIA, run_all
from .maps import b_to_c, c_to_b, d_lift, d_reduce, glaisher_to_distinct, glaisher_to_odd
from .partitions import (
    COUNT_METHODS,
    DEFAULT_ENUMERATION_CUTOFF,
    ClassMembershipError,
    Partition,
    PartitionClass,
    count_table,
    enumerate_class,
    normalize,
    parse_partition,
    render_class_d,
)
from .series import (
    C_FORMS,
    CHAIN_STAGES,
    IDENTITY_NAMES,
    gf_c_chain_stage,
    gf_c_variant,
    gf_class,
    verify_identity,
)

MAX_CUTOFF = 100

BIJECTIONS = ("glaisher", "glaisher-inv", "d-reduce", "d-lift", "c2b", "b2c")


class UsageError(ValueError):
    """Bad flag combination or value; maps to exit code 2."""


@dataclass
class RunConfig:
    """Validated knobs of one invocation."""

    subcommand: str
    partition_class: PartitionClass | None = None
    n_values: tuple[int, ...] = ()
    method: str = "dynamic-program"
    identity: str | None = None
    form: str | None = None
    stage: str | None = None
    bijection: str | None = None
    bit: int | None = None
    order: int = 200
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF
    fmt: str = "plain"
    partition_text: str = ""
    criteria: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.order < 1:
            raise UsageError("--order must be >= 1")
        if not 0 < self.cutoff <= MAX_CUTOFF:
            raise UsageError(f"--cutoff must be in 1..{MAX_CUTOFF}")


def parse_n_range(text: str) -> tuple[int, ...]:
    """'7' or inclusive '2..8'."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            values = tuple(range(lo, hi + 1))
        else:
            values = (int(text),)
    except ValueError as exc:
        raise UsageError(f"bad n range {text!r}") from exc
    if not values or values[0] < 0:
        raise UsageError(f"empty or negative n range {text!r}")
    return values


def _render(p: Partition, cls: PartitionClass | None) -> str:
    if cls is PartitionClass.D:
        return render_class_d(p)
    return str(p)


def record_to_plain(record: dict) -> str:
    """Regenerate the plain-format line from a json-lines record."""
    kind = record["type"]
    if kind == "count":
        return f"{record['n']} {record['class']} {record['count']}"
    if kind == "enumeration":
        cls = PartitionClass(record["class"])
        return _render(normalize(record["parts"]), cls)
    if kind == "map":
        cls = PartitionClass(record["output_class"])
        rendered = _render(normalize(record["parts"]), cls)
        if record.get("case_number") is not None:
            return f"{rendered} (case {record['case_number']}, bit {record['bit']})"
        return rendered
    if kind == "verify":
        if record["passed"]:
            return f"{record['name']} order={record['order']} PASS"
        where = f" [{record['context']}]" if record.get("context") else ""
        return (
            f"{record['name']} order={record['order']} FAIL at q^{record['exponent']}: "
            f"{record['lhs']} != {record['rhs']}{where}"
        )
    if kind == "series":
        return f"{record['exponent']}\t{record['coefficient']}"
    if kind == "selftest":
        status = "PASS" if record["passed"] else "FAIL"
        detail = f": {record['detail']}" if record.get("detail") else ""
        return f"[{status}] {record['criterion']}{detail}"
    raise UsageError(f"unknown record type {kind!r}")


def _emit(records: list[dict], fmt: str) -> None:
    for record in records:
        if fmt == "json-lines":
            print(json.dumps(record, sort_keys=True))
        else:
            print(record_to_plain(record))


def cmd_count(config: RunConfig) -> int:
    cls = config.partition_class
    table = count_table(cls, max(config.n_values), config.method, config.cutoff)
    records = [
        {"type": "count", "n": n, "class": cls.value, "count": table.values[n]}
        for n in config.n_values
    ]
    _emit(records, config.fmt)
    return 0


def cmd_enumerate(config: RunConfig) -> int:
    cls = config.partition_class
    (n,) = config.n_values
    records = [
        {"type": "enumeration", "n": n, "class": cls.value, "parts": list(p.parts)}
        for p in enumerate_class(n, cls, config.cutoff)
    ]
    _emit(records, config.fmt)
    return 0


def cmd_map(config: RunConfig) -> int:
    name = config.bijection
    allow_zeros = name == "d-reduce"
    p = parse_partition(config.partition_text, allow_zeros=allow_zeros)
    record = {"type": "map", "bijection": name, "input": list(p.parts)}
    if name == "glaisher":
        image, out_cls = glaisher_to_odd(p), PartitionClass.B
    elif name == "glaisher-inv":
        image, out_cls = glaisher_to_distinct(p), PartitionClass.A
    elif name == "c2b":
        image, out_cls = c_to_b(p), PartitionClass.B
    elif name == "b2c":
        image, out_cls = b_to_c(p), PartitionClass.C
    elif name == "d-lift":
        if config.bit is None:
            raise UsageError("d-lift needs --bit 0 or 1")
        image, out_cls = d_lift(p, config.bit), PartitionClass.D
    else:  # d-reduce
        image, tag = d_reduce(p)
        out_cls = PartitionClass.A
        record.update({"case": tag.case.value, "case_number": tag.case_number, "bit": tag.bit})
    record.update({"parts": list(image.parts), "output_class": out_cls.value})
    _emit([record], config.fmt)
    return 0


def cmd_verify(config: RunConfig) -> int:
    report = verify_identity(config.identity, config.order)
    record = {
        "type": "verify",
        "name": report.name,
        "order": report.order,
        "passed": report.passed,
        "exponent": report.exponent,
        "lhs": report.lhs,
        "rhs": report.rhs,
        "context": report.context,
    }
    _emit([record], config.fmt)
    return 0 if report.passed else 1


def cmd_series(config: RunConfig) -> int:
    if config.partition_class is not None:
        series = gf_class(config.partition_class, config.order)
    elif config.form is not None:
        series = gf_c_variant(config.form, config.order)
    elif config.stage is not None:
        series = gf_c_chain_stage(config.stage, config.order)
    else:
        raise UsageError("series needs one of --class, --form, --stage")
    records = [
        {"type": "series", "exponent": n, "coefficient": c}
        for n, c in enumerate(series.coeffs)
    ]
    _emit(records, config.fmt)
    return 0


def cmd_selftest(config: RunConfig) -> int:
    results = run_all(config.criteria or None)
    records = [
        {
            "type": "selftest",
            "criterion": r.name,
            "passed": r.passed,
            "detail": r.detail if not r.passed else "",
        }
        for r in results
    ]
    _emit(records, config.fmt)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerlab",
        description="Count, list, map, and verify the four partition classes.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json-lines"), default="plain")

    p_count = sub.add_parser("count", help="count partitions of one class")
    p_count.add_argument("--class", dest="cls", choices="ABCD", required=True)
    p_count.add_argument("--n", required=True, help="single value or inclusive range a..b")
    p_count.add_argument("--method", choices=COUNT_METHODS, default="dynamic-program")
    p_count.add_argument("--cutoff", type=int, default=DEFAULT_ENUMERATION_CUTOFF)
    add_common(p_count)

    p_enum = sub.add_parser("enumerate", help="list partitions of one class")
    p_enum.add_argument("--class", dest="cls", choices="ABCD", required=True)
    p_enum.add_argument("--n", required=True, help="single weight")
    p_enum.add_argument("--cutoff", type=int, default=DEFAULT_ENUMERATION_CUTOFF)
    add_common(p_enum)

    p_map = sub.add_parser("map", help="apply one of the class maps")
    p_map.add_argument("--bijection", choices=BIJECTIONS, required=True)
    p_map.add_argument("--bit", type=int, choices=(0, 1), default=None)
    p_map.add_argument("partition", help="partition string like 4+2+1")
    add_common(p_map)

    p_verify = sub.add_parser("verify", help="run one identity check")
    p_verify.add_argument("--identity", choices=IDENTITY_NAMES, required=True)
    p_verify.add_argument("--order", type=int, default=200)
    add_common(p_verify)

    p_series = sub.add_parser("series", help="dump a generating function as TSV")
    group = p_series.add_mutually_exclusive_group(required=True)
    group.add_argument("--class", dest="cls", choices="ABCD")
    group.add_argument("--form", choices=C_FORMS)
    group.add_argument("--stage", choices=CHAIN_STAGES)
    p_series.add_argument("--order", type=int, default=200)
    add_common(p_series)

    p_self = sub.add_parser("selftest", help="run the acceptance suite")
    p_self.add_argument("--only", action="append", choices=tuple(CRITERIA), default=None)
    add_common(p_self)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cls = PartitionClass(args.cls) if getattr(args, "cls", None) else None
    config = RunConfig(
        subcommand=args.subcommand,
        partition_class=cls,
        fmt=args.format,
        order=getattr(args, "order", 200),
        cutoff=getattr(args, "cutoff", DEFAULT_ENUMERATION_CUTOFF),
        method=getattr(args, "method", "dynamic-program"),
        bijection=getattr(args, "bijection", None),
        bit=getattr(args, "bit", None),
        identity=getattr(args, "identity", None),
        form=getattr(args, "form", None),
        stage=getattr(args, "stage", None),
        partition_text=getattr(args, "partition", ""),
        criteria=tuple(getattr(args, "only", None) or ()),
    )
    if args.subcommand in ("count", "enumerate"):
        config.n_values = parse_n_range(args.n)
        if args.subcommand == "enumerate" and len(config.n_values) != 1:
            raise UsageError("enumerate takes a single weight, not a range")
    return config


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "verify": cmd_verify,
    "series": cmd_series,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the usage message
        return int(exc.code or 0)
    try:
        config = _config_from_args(args)
        return COMMANDS[args.subcommand](config)
    except ClassMembershipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:  # UsageError, parse errors, cutoff, bad flags
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
