"""Run the eight benchmark scenarios and print a results table.

Scenario 1 is a 32-plan mission set on 12 unary resources; the others widen
windows, add precedence chains, stagger releases, duplicate subsets of plans,
or shrink/grow the global window.  The engine is greedy and polynomial, so
even the doubled scenario 8 builds in milliseconds.
"""

import time

from plansched import build_schedule, generate_scenario, validate_schedule

REPEATS = 5

print(f"{'scenario':>8} {'plans':>6} {'tasks':>6} {'scheduled':>10} {'objective':>10} {'mean_ms':>8}")
for n in range(1, 9):
    instance = generate_scenario(n)
    timings = []
    result = None
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        result = build_schedule(instance)
        timings.append(time.perf_counter() - t0)
    report = validate_schedule(instance, result.schedule)
    assert report.feasible
    total_tasks = sum(p.task_count for p in instance.plans)
    mean_ms = 1000 * sum(timings) / len(timings)
    print(
        f"{n:>8} {len(instance.plans):>6} {total_tasks:>6} "
        f"{len(result.scheduled_plans):>10} {report.objective:>10} {mean_ms:>8.2f}"
    )
