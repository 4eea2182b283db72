"""Command-line interface: schedule, validate, bench and oracle subcommands.

Exit codes: 0 success, 1 a validated schedule is infeasible, 2 usage or
input errors (missing files, malformed documents, bad scenario numbers).
"""

from __future__ import annotations

import argparse
import sys
import time

from .engine import IDLE_PREV_EVENT, IDLE_RESOURCE_PRED, EngineConfig, build_schedule
from .gantt import render_gantt
from .model import InstanceError, SchedulingError, UnknownTask
from .oracle import exact_max_weight
from .scenarios import SCENARIOS, BadScenario, generate_scenario
from .serialize import ParseError, dumps_schedule, parse_instance, parse_schedule
from .validate import validate_schedule


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plansched", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sched = sub.add_parser("schedule", help="build a schedule for an instance file")
    p_sched.add_argument("instance")
    p_sched.add_argument("--out", help="write the schedule document here")
    p_sched.add_argument("--gantt", help="write a gantt rendering here")
    p_sched.add_argument("--gantt-format", choices=["text", "svg"], default="text")
    p_sched.add_argument(
        "--idle-metric", choices=[IDLE_RESOURCE_PRED, IDLE_PREV_EVENT], default=IDLE_RESOURCE_PRED
    )
    p_sched.add_argument("--strict-plan-precedence", action="store_true")
    p_sched.add_argument("--priority-order", choices=["desc", "asc"], default="desc")
    p_sched.add_argument("--debug-events", action="store_true", help="include the event list in --out")

    p_val = sub.add_parser("validate", help="check a schedule file against an instance file")
    p_val.add_argument("instance")
    p_val.add_argument("schedule")

    p_bench = sub.add_parser("bench", help="run the benchmark scenarios")
    p_bench.add_argument("--scenario", default="all", help="1..8 or 'all'")
    p_bench.add_argument("--repeat", type=int, default=10, help="runs per scenario (mean is reported)")

    p_oracle = sub.add_parser("oracle", help="exact optimum for a small instance file")
    p_oracle.add_argument("instance")
    p_oracle.add_argument("--node-limit", type=int, default=None)
    p_oracle.add_argument("--time-limit", type=float, default=None)
    p_oracle.add_argument("--grid", action="store_true", help="try every integer start instant")
    return parser


def _cmd_schedule(args) -> int:
    instance = parse_instance(args.instance)
    config = EngineConfig(
        idle_metric=args.idle_metric,
        strict_plan_precedence=args.strict_plan_precedence,
        priority_descending=args.priority_order == "desc",
    )
    result = build_schedule(instance, config)
    report = validate_schedule(instance, result.schedule)
    print(
        f"scheduled {len(result.scheduled_plans)}/{len(instance.plans)} plans, "
        f"objective {report.objective}"
    )
    if args.out:
        events = result.events if args.debug_events else None
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps_schedule(result.schedule, instance, events))
    if args.gantt:
        with open(args.gantt, "w", encoding="utf-8") as fh:
            fh.write(render_gantt(result.schedule, instance, args.gantt_format))
    if not report.feasible:  # engine output always validates; kept as a safety net
        for v in report.violations:
            print(f"violation {v.kind}: plan {v.plan} task {v.task}: {v.detail}", file=sys.stderr)
        return 1
    return 0


def _cmd_validate(args) -> int:
    instance = parse_instance(args.instance)
    schedule = parse_schedule(args.schedule)
    report = validate_schedule(instance, schedule)
    for v in report.violations:
        print(f"violation {v.kind}: plan {v.plan} task {v.task}: {v.detail}")
    for v in report.warnings:
        print(f"warning {v.kind}: plan {v.plan}: {v.detail}")
    print(f"{'feasible' if report.feasible else 'infeasible'}, objective {report.objective}")
    return 0 if report.feasible else 1


def _cmd_bench(args) -> int:
    if args.scenario == "all":
        numbers = list(SCENARIOS)
    else:
        try:
            numbers = [int(args.scenario)]
        except ValueError as exc:
            raise BadScenario(f"scenario must be 1..8 or 'all', got {args.scenario!r}") from exc
    if args.repeat < 1:
        print("error: --repeat must be at least 1", file=sys.stderr)
        return 2
    print(f"{'scenario':>8} {'K':>4} {'sum_n':>6} {'scheduled':>9} {'sched_n':>8} {'mean_ms':>9}")
    for n in numbers:
        instance = generate_scenario(n)
        timings = []
        result = None
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            result = build_schedule(instance)
            timings.append(time.perf_counter() - t0)
        assert result is not None
        scheduled = set(result.scheduled_plans)
        sched_tasks = sum(p.task_count for p in instance.plans if p.id in scheduled)
        total_tasks = sum(p.task_count for p in instance.plans)
        mean_ms = 1000.0 * sum(timings) / len(timings)
        print(
            f"{n:>8} {len(instance.plans):>4} {total_tasks:>6} "
            f"{len(scheduled):>9} {sched_tasks:>8} {mean_ms:>9.2f}"
        )
    return 0


def _cmd_oracle(args) -> int:
    instance = parse_instance(args.instance)
    result = exact_max_weight(
        instance,
        node_limit=args.node_limit,
        time_limit=args.time_limit,
        exhaustive_grid=args.grid,
    )
    print(f"optimum {result.optimum}")
    print(f"plans {result.witness.scheduled_plans}")
    print(f"explored {result.explored} nodes{' (limit hit)' if result.time_limit_hit else ''}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "schedule": _cmd_schedule,
        "validate": _cmd_validate,
        "bench": _cmd_bench,
        "oracle": _cmd_oracle,
    }
    try:
        return handlers[args.command](args)
    except (OSError, ParseError, InstanceError, BadScenario, UnknownTask) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchedulingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
