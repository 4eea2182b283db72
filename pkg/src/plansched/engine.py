"""The scheduling engine: serial insertion of plans driven by an event list.

Tasks are inserted one at a time at the earliest instant where their temporal
constraints hold and every resource they need is free for their whole
duration.  The schedule is decomposed into events: an event records the tasks
starting and completing at its instant and, per resource, whether the interval
up to the next event is occupied.  Candidate start instants are scanned along
the event list; an event is materialised only where a task actually starts or
completes, so the list stays linear in the number of placed tasks.

A plan is all-or-nothing: when one of its tasks cannot be placed, everything
the plan already put into the working state is taken out again, bit-exactly.
Equal-priority plans inside one frontier are committed in the order that keeps
resources busiest (smallest idle-time sum first).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import (
    Event,
    EventList,
    Instance,
    Plan,
    PredecessorUnscheduled,
    Schedule,
    Task,
    TimeWindow,
    completion_time,
)
from .ordering import sort_plans, topological_sort

IDLE_RESOURCE_PRED = "resource-pred"
IDLE_PREV_EVENT = "prev-event"


@dataclass(frozen=True)
class EngineConfig:
    """Tunables of the insertion heuristic.

    idle_metric: how the idle time of a trial placement is measured when
        ordering equal-priority plans.  ``resource-pred`` measures each task's
        gap to the latest completion on one of its own resources;
        ``prev-event`` measures the gap to the previous event regardless of
        resource.
    strict_plan_precedence: when True, a plan whose DAG predecessor was
        discarded is discarded as well instead of being attempted.
    priority_descending: larger priority value means scheduled earlier.
    """

    idle_metric: str = IDLE_RESOURCE_PRED
    strict_plan_precedence: bool = False
    priority_descending: bool = True

    def __post_init__(self):
        if self.idle_metric not in (IDLE_RESOURCE_PRED, IDLE_PREV_EVENT):
            raise ValueError(f"unknown idle metric {self.idle_metric!r}")


@dataclass
class ScheduleResult:
    """Outcome of a full build: the schedule plus the final event list."""

    schedule: Schedule
    events: EventList

    @property
    def scheduled_plans(self) -> list[int]:
        return self.schedule.scheduled_plans

    @property
    def discarded_plans(self) -> list[int]:
        return self.schedule.discarded_plans


def check_constraints(t: int, task: Task, window: TimeWindow) -> bool:
    """True iff ``task`` may run over ``[t, t + p)``.

    The start must lie in the task window and the global window; the
    completion must lie in the global window and must not pass the due date.
    """
    end = completion_time(task, t)
    return (
        task.release <= t <= task.due
        and window.contains(t)
        and window.contains(end)
        and end <= task.due
    )


def earliest_start(task: Task, plan: Plan, schedule: Schedule, window: TimeWindow) -> int:
    """Lower bound for the start of ``task``: window, release and predecessors.

    Every predecessor must already be placed in ``schedule``; each one pushes
    the bound to its completion plus the pair's lag.
    """
    bound = max(window.start, task.release)
    for j, lag in task.predecessors:
        pred_start = schedule.start_of((task.plan_id, j))
        if pred_start is None:
            raise PredecessorUnscheduled(f"task {task.id}: predecessor {j} has no start time")
        bound = max(bound, completion_time(plan.task(j), pred_start) + lag)
    return bound


def get_event(t: int, el: EventList) -> Event:
    """Event at instant ``t``, created (and inserted) if missing.

    A created event inherits the resource usage of the nearest preceding
    event: it splits that event's interval, which does not change what is
    occupied when.  With no preceding event everything is free.
    """
    existing = el.at(t)
    if existing is not None:
        return existing
    prev = el.prev_before(t)
    event = Event(t, usage=dict(prev.usage) if prev is not None else {})
    el.insert(event)
    return event


def schedule_task(
    task: Task,
    s_w: Schedule,
    el: EventList,
    window: TimeWindow,
    *,
    plan: Plan | None = None,
) -> bool:
    """Place ``task`` at its earliest feasible instant, or fail cleanly.

    The scan starts at the task's temporal lower bound and walks the event
    list.  A candidate start event is kept while every covered event interval
    has all needed resources free; on a conflict the candidate jumps to the
    conflicting position and the required duration resets.  On success the
    start and completion events hold the task and the covered intervals are
    marked busy; the function returns True.

    On failure nothing is changed, and when ``plan`` is given every sibling
    task already placed is removed as well (all-or-nothing plans), restoring
    the previous state exactly.
    """
    lower = earliest_start(task, plan, s_w, window) if plan is not None else _lower_bound_solo(task, s_w, window)
    if lower > window.end:
        _fail(task, plan, s_w, el)
        return False

    existed = el.at(lower) is not None
    start_event = get_event(lower, el)
    # get_event may materialise the candidate; if the scan abandons it, the
    # empty split event must not linger.
    created = None if existed else start_event
    remaining = task.processing_time
    scan = start_event
    while scan is not el.last() and remaining > 0:
        nxt = el.next_after(scan.time)
        if all(scan.busy(rho) == 0 for rho in task.resources) and check_constraints(
            start_event.time, task, window
        ):
            remaining = max(0, remaining - (nxt.time - scan.time))
            scan = nxt
        else:
            abandoned = start_event
            start_event = nxt
            scan = nxt
            remaining = task.processing_time
            if abandoned is created and abandoned.is_empty():
                el.remove(abandoned.time)
            created = None

    if not check_constraints(start_event.time, task, window):
        if created is not None and created.is_empty():
            el.remove(created.time)
        _fail(task, plan, s_w, el)
        return False

    start = start_event.time
    end = completion_time(task, start)
    end_event = get_event(end, el)
    start_event.add_start(task.id)
    end_event.add_completion(task.id)
    s_w.starts[task.id] = start
    for event in el.between(start, end):
        for rho in task.resources:
            event.set_busy(rho)
    return True


def _lower_bound_solo(task: Task, s_w: Schedule, window: TimeWindow) -> int:
    # Without the owning plan, predecessors cannot be resolved; only tasks
    # free of predecessors may be placed standalone.
    if task.predecessors:
        raise PredecessorUnscheduled(f"task {task.id} has predecessors; pass its plan")
    return max(window.start, task.release)


def _fail(task: Task, plan: Plan | None, s_w: Schedule, el: EventList) -> None:
    if plan is not None:
        rollback_plan(plan, s_w, el)


def rollback_plan(plan: Plan, s_w: Schedule, el: EventList) -> None:
    """Remove every placed task of ``plan`` from the schedule and event list.

    Resource markings are cleared over each removed task's interval (safe:
    resources are unary, so nobody else holds them there) and events that end
    up carrying no task are dropped, except the window sentinel.  The state
    afterwards equals the state before the plan was attempted.
    """
    sentinel = el.first()
    touched: set[int] = set()
    for task in plan.tasks:
        start = s_w.starts.pop(task.id, None)
        if start is None:
            continue
        end = completion_time(task, start)
        el.at(start).starting.discard(task.id)
        el.at(end).completing.discard(task.id)
        touched.update((start, end))
        for event in el.between(start, end):
            for rho in task.resources:
                event.clear_busy(rho)
            touched.add(event.time)
    for t in sorted(touched):
        event = el.at(t)
        if event is not None and event is not sentinel and event.is_empty():
            el.remove(t)
    if plan.id in s_w.scheduled_plans:
        s_w.scheduled_plans.remove(plan.id)


def schedule_plan(plan: Plan, s_w: Schedule, el: EventList, window: TimeWindow) -> bool:
    """Insert all tasks of ``plan`` in order; False (and no state change) if any fails."""
    for task in plan.tasks:
        if not schedule_task(task, s_w, el, window, plan=plan):
            return False
    s_w.scheduled_plans.append(plan.id)
    return True


def idle_time_sum(
    plan: Plan,
    trial: Schedule,
    el: EventList,
    window: TimeWindow,
    *,
    metric: str = IDLE_RESOURCE_PRED,
) -> int:
    """Total idle time the placed ``plan`` leaves behind it.

    For each task: the gap between its start and the latest completion on one
    of its own resources (``resource-pred``), or between its start event and
    the previous event of the list (``prev-event``).  With nothing before it
    the gap is measured from the window start.  Requires the plan to be placed
    in ``trial``/``el`` already.
    """
    total = 0
    for task in plan.tasks:
        start = trial.start_of(task.id)
        if start is None:
            raise PredecessorUnscheduled(f"task {task.id} is not placed in the trial schedule")
        if metric == IDLE_PREV_EVENT:
            prev = el.prev_before(start)
            total += start - (prev.time if prev is not None else window.start)
        else:
            total += start - _latest_release_on(el, task.resources, start, window.start)
    return total


def _latest_release_on(el: EventList, resources, start: int, w_s: int) -> int:
    """Latest instant <= start at which one of ``resources`` turned free.

    Walks event pairs: an occupied interval ending at an event time is a
    completion on that resource.  At ``start`` itself the resource may already
    carry the candidate task's own marking, so the transition test is relaxed
    there.  Falls back to the window start when the resources were never used.
    """
    best = w_s
    prev: Event | None = None
    for event in el.between(w_s, start + 1):
        if prev is not None:
            for rho in resources:
                if prev.busy(rho) and (not event.busy(rho) or event.time == start):
                    best = max(best, event.time)
                    break
        prev = event
    return best


def schedule_plan_set(
    plans: list[Plan],
    s_w: Schedule,
    el: EventList,
    window: TimeWindow,
    *,
    idle_metric: str = IDLE_RESOURCE_PRED,
) -> set[int]:
    """Commit a group of equal-priority plans, lowest idle-time first.

    Each round trial-places every remaining plan on a private copy of the
    working state, measures its idle-time sum, and commits the plan with the
    smallest one (on ties the last examined wins).  Plans whose trial fails
    are dropped from the group for good: more commitments only make placement
    harder.  Returns the ids of the plans that could not be scheduled.
    """
    pending = list(plans)
    unscheduled: set[int] = set()
    while pending:
        best: Plan | None = None
        best_idle: int | None = None
        for plan in list(pending):
            trial_schedule = s_w.copy()
            trial_events = el.copy()
            if schedule_plan(plan, trial_schedule, trial_events, window):
                idle = idle_time_sum(plan, trial_schedule, trial_events, window, metric=idle_metric)
                if best_idle is None or idle <= best_idle:
                    best_idle = idle
                    best = plan
            else:
                pending.remove(plan)
                unscheduled.add(plan.id)
        if best is None:
            break
        if not schedule_plan(best, s_w, el, window):
            unscheduled.add(best.id)  # cannot happen: the trial ran on an identical state
        pending.remove(best)
    return unscheduled


def build_schedule(instance: Instance, config: EngineConfig | None = None) -> ScheduleResult:
    """Build a feasible schedule for the whole instance.

    Plans are processed frontier by frontier in priority order.  A plan whose
    priority is unique within its frontier is inserted directly; plans sharing
    a priority are handed to :func:`schedule_plan_set`.  Because failed
    insertions restore the working state exactly, the working schedule is
    feasible after every step and is returned as the result.
    """
    config = config or EngineConfig()
    window = instance.window
    el = EventList()
    el.insert(Event(window.start))  # window sentinel: scans may start at W_s
    s_w = Schedule()

    _, partition = topological_sort(instance)
    queue = deque(sort_plans(instance, descending=config.priority_descending))
    while queue:
        plan = queue.popleft()
        if config.strict_plan_precedence and _has_discarded_predecessor(instance, plan.id, s_w):
            s_w.discarded_plans.append(plan.id)
            continue
        group = [plan]
        while (
            queue
            and queue[0].priority == plan.priority
            and partition.frontier_of[queue[0].id] == partition.frontier_of[plan.id]
        ):
            group.append(queue.popleft())
        if config.strict_plan_precedence and len(group) > 1:
            kept = []
            for member in group:
                if _has_discarded_predecessor(instance, member.id, s_w):
                    s_w.discarded_plans.append(member.id)
                else:
                    kept.append(member)
            group = kept
            if not group:
                continue
        if len(group) == 1:
            if not schedule_plan(group[0], s_w, el, window):
                s_w.discarded_plans.append(group[0].id)
        else:
            unscheduled = schedule_plan_set(group, s_w, el, window, idle_metric=config.idle_metric)
            for member in group:  # group order keeps the discard list deterministic
                if member.id in unscheduled:
                    s_w.discarded_plans.append(member.id)
    return ScheduleResult(schedule=s_w, events=el)


def _has_discarded_predecessor(instance: Instance, plan_id: int, s_w: Schedule) -> bool:
    discarded = set(s_w.discarded_plans)
    return any(pred in discarded for pred in instance.predecessors_of_plan(plan_id))
