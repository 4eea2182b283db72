"""Pit the greedy engine against the exact oracle on small instances.

The oracle enumerates plan subsets and start times, so it is exponential and
only fit for desk-scale inputs; its role is ground truth.  The greedy engine
never beats it, matches it when no two tasks share a resource, and can fall
short under contention: the second half of this demo shows a two-plan
instance where greedy keeps the heavy plan and the oracle finds that the two
light plans together weigh more.
"""

from plansched import (
    Plan,
    Task,
    TimeWindow,
    build_instance,
    build_schedule,
    exact_max_weight,
    objective,
)
from plansched.data import load_bundled

print("engine vs oracle on the bundled examples:")
for name in ("example1.json", "example2.json", "idle_time.json"):
    instance = load_bundled(name)
    greedy = objective(instance, build_schedule(instance).schedule)
    exact = exact_max_weight(instance)
    print(f"  {name:<18} engine {greedy:>3}   oracle {exact.optimum:>3}   explored {exact.explored} nodes")


def single(plan_id, priority, p, r, d, rho):
    return Plan(
        id=plan_id,
        priority=priority,
        tasks=(Task(plan_id=plan_id, index=1, processing_time=p, release=r, due=d, resources={rho}),),
    )


# A gap the greedy order cannot see: the priority-5 plan occupies the whole
# window, crowding out two priority-3 plans that together are worth 6.
contended = build_instance(
    [
        single(1, 5, p=10, r=0, d=10, rho=1),
        single(2, 3, p=5, r=0, d=5, rho=1),
        single(3, 3, p=5, r=5, d=10, rho=1),
    ],
    window=TimeWindow(0, 10),
)
greedy = objective(contended, build_schedule(contended).schedule)
exact = exact_max_weight(contended)
print(f"\ncontended instance: engine {greedy}, oracle {exact.optimum} (witness {exact.witness.scheduled_plans})")
