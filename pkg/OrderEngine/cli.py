"""
Command-line entry point.

    python OrderEngine/cli.py classify Data/3plus1.poset
    python OrderEngine/cli.py group-kai Data/lex_plane.group
    python OrderEngine/cli.py clifford-reduce "g(1) g(0)"
    python OrderEngine/cli.py corpus-verify --max-n 6

Exit codes: 0 confirmed, 1 refuted (or a library check failed), 2 bad input.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from config import REPO_ROOT, Settings, get_settings
from error_handler import (
    CriteriaDisagreement,
    DimensionError,
    InfeasibleSystem,
    InvalidKey,
    InvalidSegment,
    NonPositiveAlpha,
    NotIntervalOrder,
    NotSemiorder,
    OracleUndecided,
    OrderError,
    ParsingError,
    TheoremViolation,
    UnsupportedCarrier,
    WindowTooLarge,
)
from battery import Refuted, preceq_battery
from clifford_group import (
    FinalSegment,
    Witness,
    compare,
    format_element,
    parse_element,
    parse_word,
    probe_final_segment_normality,
    reduce,
)
from group_specs import Ordering, Window, format_point
from ogroup_engine import (
    classify_window,
    compatibility_sample,
    cover_check,
    inc0,
    inc0_structure,
    interior_margin,
    pattern_transfer_check,
    subgroups_KAI,
    trace_equality_check,
    verify_threshold,
    window_poset,
)
from order_classify import classify, critical_pairs, traces
from order_represent import (
    Exceeded,
    brute_force_dimension,
    interval_representation,
    realizer_dim3_threshold,
    unit_representation,
)
from parsers import parse_group, parse_poset, parse_window, read_text
from poset_core import FinitePoset, hasse_dot, named_patterns
import report_templates as templates

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

DEFAULT_RADIUS = 4
MAX_TRANSFER_N = 5

VERBS = (
    "classify",
    "traces",
    "critical",
    "represent",
    "dimension",
    "realizer3",
    "group-check",
    "group-inc0",
    "group-kai",
    "group-transfer",
    "preceq",
    "clifford-reduce",
    "clifford-cmp",
    "clifford-probe",
    "corpus-verify",
)

# Errors caused by the input rather than by the math.
_USAGE_ERRORS = (
    ParsingError,
    DimensionError,
    InvalidSegment,
    InvalidKey,
    NonPositiveAlpha,
    WindowTooLarge,
    UnsupportedCarrier,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiorder",
        description="Semiorders, interval orders and threshold groups on finite windows",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("inputs", nargs="*", help="input files, or words for clifford verbs")
    parser.add_argument("--window", help="window like -5..5 x -5..5, or a radius")
    parser.add_argument("--margin", type=int, default=0, help="pad the window on free coordinates")
    parser.add_argument("--max-n", type=int, help="largest n (transfer check or corpus size)")
    parser.add_argument("--trials", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--dot", type=Path, help="write the Hasse diagram here")
    parser.add_argument("--max-k", type=int, default=4, help="dimension search bound")
    parser.add_argument("--unit", action="store_true", help="unit interval representation")
    parser.add_argument("--open", action="store_true", help="open final segment {x > anchor}")
    parser.add_argument("--strategy", choices=("leftmost", "rightmost"), default="leftmost")
    parser.add_argument("--suite", choices=("quick", "standard", "full"), default="standard")
    return parser


# ============================================
# Input helpers
# ============================================


def _need(args: argparse.Namespace, count: int):
    if len(args.inputs) != count:
        raise ParsingError(f"{args.verb} takes {count} input(s), got {len(args.inputs)}")


def load_poset(source: str) -> FinitePoset:
    """A .poset file, or one of the named patterns (2+2, 3+1, 1+2)."""
    patterns = named_patterns()
    if source in patterns and not Path(source).exists():
        return patterns[source]
    return parse_poset(read_text(source))


def load_group(args: argparse.Namespace):
    parsed = parse_group(read_text(args.inputs[0]))
    if args.window:
        window = parse_window(args.window, parsed.spec)
    elif parsed.window is not None:
        window = parsed.window
    else:
        window = Window.for_group(parsed.spec, DEFAULT_RADIUS)
    if window.dim != parsed.spec.dim:
        raise ParsingError(f"window has {window.dim} coordinates, group has {parsed.spec.dim}")
    if args.margin:
        window = window.grow(args.margin, parsed.spec.moduli())
    return parsed.spec, window


def _write_dot(args: argparse.Namespace, P: FinitePoset, name: str):
    if args.dot is None:
        return
    args.dot.parent.mkdir(parents=True, exist_ok=True)
    args.dot.write_text(hasse_dot(P, name), encoding="utf-8")
    logger.info(f"Wrote Hasse diagram to {args.dot}")


def _write_group_dot(args: argparse.Namespace, spec, window: Window, cap: int):
    if args.dot is None:
        return
    P, _ = window_poset(spec, window, cap)
    _write_dot(args, P, "G")


def _relation_rows(matrix, P: FinitePoset) -> str:
    rows = []
    for x in range(P.n):
        above = [P.label(y) for y in range(P.n) if x != y and matrix[x, y]]
        rows.append(f"  {P.label(x)}: {' '.join(above) if above else '-'}")
    return "\n".join(rows)


# ============================================
# Poset verbs
# ============================================


def cmd_classify(args, settings: Settings) -> int:
    _need(args, 1)
    P = load_poset(args.inputs[0])
    result = classify(P)
    forbidden = "none"
    if result.forbidden_pattern:
        at = " ".join(P.label(i) for i in result.forbidden_witness.witness)
        forbidden = f"{result.forbidden_pattern} at {at}"
    print(
        templates.CLASSIFY_TEMPLATE.format(
            n=P.n,
            chain=templates.yes_no(result.is_chain),
            weak=templates.yes_no(result.is_weak),
            interval=templates.yes_no(result.is_interval),
            semiorder=templates.yes_no(result.is_semiorder),
            threshold=templates.yes_no(result.is_threshold),
            forbidden=forbidden,
        )
    )
    _write_dot(args, P, "P")
    return EXIT_OK


def cmd_traces(args, settings: Settings) -> int:
    _need(args, 1)
    P = load_poset(args.inputs[0])
    pred, succ = traces(P)
    print(
        templates.TRACES_TEMPLATE.format(
            pred=_relation_rows(pred.le, P),
            succ=_relation_rows(succ.le, P),
            equal=templates.yes_no(pred.equals(succ)),
        )
    )
    return EXIT_OK


def cmd_critical(args, settings: Settings) -> int:
    _need(args, 1)
    P = load_poset(args.inputs[0])
    pairs = sorted(critical_pairs(P))
    print(
        templates.CRITICAL_TEMPLATE.format(
            count=len(pairs),
            pairs="\n".join(f"  ({P.label(x)}, {P.label(y)})" for x, y in pairs),
        ).rstrip()
    )
    return EXIT_OK


def cmd_represent(args, settings: Settings) -> int:
    _need(args, 1)
    P = load_poset(args.inputs[0])
    try:
        if args.unit:
            rep = unit_representation(P)
            for x, offset in enumerate(rep.offsets):
                print(f"{P.label(x)} {offset}")
        else:
            rep = interval_representation(P)
            for x, (left, right) in enumerate(rep.intervals):
                print(f"{P.label(x)} {left} {right}")
    except (NotIntervalOrder, NotSemiorder) as e:
        print(f"not representable: {e}")
        return EXIT_REFUTED
    return EXIT_OK


def cmd_dimension(args, settings: Settings) -> int:
    _need(args, 1)
    P = load_poset(args.inputs[0])
    value = brute_force_dimension(P, args.max_k)
    if isinstance(value, Exceeded):
        print(templates.DIMENSION_EXCEEDED_TEMPLATE.format(max_k=value.max_k))
        return EXIT_REFUTED
    print(templates.DIMENSION_TEMPLATE.format(value=value))
    return EXIT_OK


def cmd_realizer3(args, settings: Settings) -> int:
    """realizer3 <alpha>: the three-order realizer of (ℤ, ≤_alpha) on -4α..4α."""
    _need(args, 1)
    try:
        alpha = int(args.inputs[0])
    except ValueError as e:
        raise ParsingError(f"alpha must be an integer, got {args.inputs[0]!r}") from e
    radius = 4 * alpha
    if args.window is not None:
        if not args.window.strip().isdigit():
            raise ParsingError(f"realizer3 --window takes a radius, got {args.window!r}")
        radius = int(args.window)
    elements = list(range(-radius, radius + 1))
    realizer = realizer_dim3_threshold(elements, lambda x: x, alpha)
    relation = {(x, y) for x in elements for y in elements if y - x >= alpha}
    extends = realizer.extends(relation)
    exact = realizer.intersection() == relation
    first, second, third = (" ".join(str(e) for e in order) for order in realizer.orders)
    print(
        templates.REALIZER_TEMPLATE.format(
            lo=-radius,
            hi=radius,
            alpha=alpha,
            first=first,
            second=second,
            third=third,
            extends=templates.yes_no(extends),
            exact=templates.yes_no(exact),
        )
    )
    return EXIT_OK if extends and exact else EXIT_REFUTED


# ============================================
# Group verbs
# ============================================


def _group_header(spec, window):
    print(
        templates.GROUP_HEADER_TEMPLATE.format(
            rule=templates.RULE,
            kind=spec.kind,
            window=window,
            size=window.size(),
            margin=interior_margin(spec),
        )
    )


def cmd_group_check(args, settings: Settings) -> int:
    _need(args, 1)
    spec, window = load_group(args)
    cap = settings.window_cap
    _group_header(spec, window)

    trials = settings.trials if settings.trials is not None else 2000
    compat = compatibility_sample(spec, window, trials, settings.seed)
    trace = trace_equality_check(spec, window, cap)
    covers = cover_check(spec, window, cap)
    result = classify_window(spec, window, cap)
    threshold = verify_threshold(spec, window, cap)
    print(
        templates.GROUP_CHECK_TEMPLATE.format(
            mark_compat=templates.mark(compat.ok),
            comparable=compat.comparable,
            trials=compat.trials,
            failures=len(compat.failures),
            mark_trace=templates.mark(trace.equal),
            interior=trace.interior,
            mark_cover=templates.mark(covers.ok),
            interval=templates.yes_no(result.is_interval),
            semiorder=templates.yes_no(result.is_semiorder),
            weak=templates.yes_no(result.is_weak),
            threshold=templates.yes_no(threshold.is_threshold),
            antisymmetric=templates.yes_no(threshold.pred_antisymmetric),
            total=templates.yes_no(threshold.pred_total),
            auxiliary=templates.yes_no(threshold.matches_auxiliary),
        )
    )
    for failure in compat.failures:
        print(templates.NOTE_TEMPLATE.format(note=failure))
    if trace.mismatch:
        x, y = trace.mismatch
        print(templates.NOTE_TEMPLATE.format(note=f"traces differ on {x}, {y}"))

    _write_group_dot(args, spec, window, cap)
    return EXIT_OK if compat.ok and trace.equal and covers.ok else EXIT_REFUTED


def cmd_group_inc0(args, settings: Settings) -> int:
    _need(args, 1)
    spec, window = load_group(args)
    _group_header(spec, window)
    report = inc0_structure(spec, window, settings.window_cap)
    points = sorted(inc0(spec, window))
    print(
        templates.INC0_TEMPLATE.format(
            size=report.size,
            points=" ".join(format_point(p) for p in points) or "-",
            bipartite=templates.yes_no(report.bipartite),
            prime=templates.yes_no(report.prime),
            isolated=" ".join(format_point(p) for p in report.isolated) or "none",
            mark_semi=templates.mark(report.semiorder_matches),
            semiorder=templates.yes_no(report.window_semiorder),
            mark_threshold=templates.mark(report.threshold_matches),
            threshold=templates.yes_no(report.window_threshold),
        )
    )
    _write_group_dot(args, spec, window, settings.window_cap)
    return EXIT_OK if report.semiorder_matches and report.threshold_matches else EXIT_REFUTED


def cmd_group_kai(args, settings: Settings) -> int:
    _need(args, 1)
    spec, window = load_group(args)
    report = subgroups_KAI(spec, window, settings.window_cap)
    checks = " ".join(
        f"{name}={templates.mark(ok)}" for name, ok in report.window_cross_check.items()
    )
    print(
        templates.KAI_TEMPLATE.format(
            K=report.K, A=report.A, I=report.I, exact=templates.yes_no(report.exact), checks=checks
        )
    )
    for note in report.notes:
        print(templates.NOTE_TEMPLATE.format(note=note))
    _write_group_dot(args, spec, window, settings.window_cap)
    return EXIT_OK if report.consistent else EXIT_REFUTED


def cmd_group_transfer(args, settings: Settings) -> int:
    _need(args, 1)
    max_n = args.max_n if args.max_n is not None else MAX_TRANSFER_N
    if not 2 <= max_n <= MAX_TRANSFER_N:
        raise ParsingError(f"--max-n must be between 2 and {MAX_TRANSFER_N}, got {max_n}")
    spec, window = load_group(args)
    _group_header(spec, window)
    _write_group_dot(args, spec, window, settings.window_cap)
    violation = False
    for n in range(2, max_n + 1):
        report = pattern_transfer_check(spec, window, n, settings.window_cap)
        rows = "\n".join(
            templates.TRANSFER_ROW_TEMPLATE.format(
                mark=templates.mark(row.found == report.one_plus_n),
                pattern=row.pattern,
                found=templates.yes_no(row.found),
                constructed=templates.yes_no(row.constructed),
            )
            for row in report.rows
        )
        grown = f" (grown to {report.grown_window})" if report.grown_window else ""
        print(
            templates.TRANSFER_TEMPLATE.format(
                n=n, one_plus_n=templates.yes_no(report.one_plus_n), grown=grown, rows=rows
            )
        )
        for note in report.notes:
            print(templates.NOTE_TEMPLATE.format(note=note))
        if report.violation:
            print(f"VIOLATION: 1+{n} and its (q+1)+p patterns do not co-occur")
            violation = True
    return EXIT_REFUTED if violation else EXIT_OK


def cmd_preceq(args, settings: Settings) -> int:
    _need(args, 2)
    P = load_poset(args.inputs[0])
    Q = load_poset(args.inputs[1])
    try:
        result = preceq_battery(P, Q)
    except ValueError as e:
        raise ParsingError(str(e)) from e
    if isinstance(result, Refuted):
        print(
            templates.REFUTED_TEMPLATE.format(
                group=result.group, reason=result.reason, witness=" ".join(result.q_witness)
            )
        )
        return EXIT_REFUTED
    print(templates.NOT_REFUTED_TEMPLATE.format(count=len(result.tried)))
    return EXIT_OK


# ============================================
# Clifford verbs
# ============================================


def cmd_clifford_reduce(args, settings: Settings) -> int:
    _need(args, 1)
    print(format_element(reduce(parse_word(args.inputs[0]), args.strategy)))
    return EXIT_OK


def cmd_clifford_cmp(args, settings: Settings) -> int:
    _need(args, 2)
    order = compare(parse_element(args.inputs[0]), parse_element(args.inputs[1]))
    print({Ordering.LESS: "<", Ordering.EQUAL: "=", Ordering.GREATER: ">"}[order])
    return EXIT_OK


def cmd_clifford_probe(args, settings: Settings) -> int:
    _need(args, 1)
    segment = FinalSegment(parse_element(args.inputs[0]), closed=not args.open)
    trials = settings.trials if settings.trials is not None else 1000
    result = probe_final_segment_normality(segment, trials, settings.seed)
    if isinstance(result, Witness):
        print(
            templates.WITNESS_TEMPLATE.format(
                segment=segment,
                f=format_element(result.f),
                u=format_element(result.u),
                result=format_element(result.result),
                strategy=result.strategy,
            )
        )
        return EXIT_OK
    print(templates.NONE_FOUND_TEMPLATE.format(segment=segment, trials=result.trials))
    # Not finding a witness only confirms something for the positive cone.
    return EXIT_OK if segment.is_positive_cone else EXIT_REFUTED


def cmd_corpus_verify(args, settings: Settings) -> int:
    verifier_dir = str(REPO_ROOT / "Verifier")
    if verifier_dir not in sys.path:
        sys.path.append(verifier_dir)
    from corpus_verifier import run_verification

    return EXIT_OK if run_verification(args.suite, settings) else EXIT_REFUTED


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], int]] = {
    "classify": cmd_classify,
    "traces": cmd_traces,
    "critical": cmd_critical,
    "represent": cmd_represent,
    "dimension": cmd_dimension,
    "realizer3": cmd_realizer3,
    "group-check": cmd_group_check,
    "group-inc0": cmd_group_inc0,
    "group-kai": cmd_group_kai,
    "group-transfer": cmd_group_transfer,
    "preceq": cmd_preceq,
    "clifford-reduce": cmd_clifford_reduce,
    "clifford-cmp": cmd_clifford_cmp,
    "clifford-probe": cmd_clifford_probe,
    "corpus-verify": cmd_corpus_verify,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    try:
        settings = get_settings().with_overrides(
            max_n=args.max_n if args.verb == "corpus-verify" else None,
            trials=args.trials,
            seed=args.seed,
        )
    except ValidationError as e:
        logger.error(f"Bad option: {e}")
        return EXIT_USAGE
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return COMMANDS[args.verb](args, settings)
    except _USAGE_ERRORS as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except (TheoremViolation, CriteriaDisagreement, InfeasibleSystem, OracleUndecided) as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"{type(e).__name__}: {e}")
        return EXIT_REFUTED
    except OrderError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_REFUTED
    except (IndexError, OSError) as e:
        logger.error(f"Bad input: {e}")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
