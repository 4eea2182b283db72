"""Watch the event list evolve as plans are inserted one at a time.

The schedule is stored as a sequence of events; each event knows which tasks
start and complete at its instant and which resources are occupied until the
next event.  Inserting a plan means scanning that list for the earliest run
of free intervals long enough for each task.

This walkthrough uses the bundled five-plan example: plans 1 and 2 go in
first, then 3, 4 and 5 squeeze into the gaps.
"""

from plansched import Event, EventList, Schedule, schedule_plan
from plansched.data import load_bundled

instance = load_bundled("example2.json")
window = instance.window

events = EventList()
events.insert(Event(window.start))
working = Schedule()


def show(events, resources=(1, 2, 3)):
    print(f"  {'t':>3} {'starting':<24} {'completing':<24} " + " ".join(f"b{r}" for r in resources))
    for event in events:
        starting = ",".join(f"J{p}.{i}" for p, i in sorted(event.starting)) or "-"
        completing = ",".join(f"J{p}.{i}" for p, i in sorted(event.completing)) or "-"
        bits = "  ".join(str(event.busy(r)) for r in resources)
        print(f"  {event.time:>3} {starting:<24} {completing:<24} {bits}")


for plan in instance.plans:
    ok = schedule_plan(plan, working, events, window)
    print(f"\nafter inserting plan {plan.id} ({'placed' if ok else 'rejected'}):")
    show(events)

print("\nfinal start times:", {f"J{p}.{i}": s for (p, i), s in sorted(working.starts.items())})
