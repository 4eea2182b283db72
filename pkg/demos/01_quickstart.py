"""Quickstart: build a tiny instance, schedule it, validate it, draw it.

Two plans compete for resource 1.  Plan 2's second task must wait for its
sibling, so it lands right after plan 1's task frees the resource.
"""

from plansched import (
    Plan,
    Task,
    TimeWindow,
    build_instance,
    build_schedule,
    render_gantt,
    validate_schedule,
)

plan_1 = Plan(
    id=1,
    priority=2,
    tasks=(Task(plan_id=1, index=1, processing_time=3, release=2, due=7, resources={1}),),
)
plan_2 = Plan(
    id=2,
    priority=1,
    tasks=(
        Task(plan_id=2, index=1, processing_time=2, release=3, due=8, resources={2}),
        Task(plan_id=2, index=2, processing_time=2, release=4, due=9, resources={1}, predecessors=((1, 0),)),
    ),
)

instance = build_instance([plan_1, plan_2], window=TimeWindow(0, 10))
result = build_schedule(instance)

print("start times:")
for (plan_id, index), start in sorted(result.schedule.starts.items()):
    task = instance.task((plan_id, index))
    print(f"  J{plan_id}.{index}: [{start}, {start + task.processing_time}) on {sorted(task.resources)}")

report = validate_schedule(instance, result.schedule)
print(f"\nfeasible: {report.feasible}, objective: {report.objective}")
print(f"scheduled plans (commit order): {result.scheduled_plans}")

print("\n" + render_gantt(result.schedule, instance, "text"))
