"""Domain types for plan scheduling: tasks, plans, instances, events and schedules.

Immutable inputs (``TimeWindow``, ``Task``, ``Plan``, ``Instance``) validate their
structural invariants at construction time.  Mutable working state
(``EventList``, ``Schedule``) is owned by a single scheduler run.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass, field

# A task is identified by (plan id, task index within the plan).
TaskId = tuple[int, int]


class SchedulingError(Exception):
    """Base class for every error raised by this package."""


class InstanceError(SchedulingError):
    """A problem instance violates a structural invariant."""


class CyclicPlanDag(InstanceError):
    """The plan-level precedence graph contains a cycle."""


class CyclicTaskGraph(InstanceError):
    """The task-level precedence graph of a plan contains a cycle."""


class UnknownResource(InstanceError):
    """A task references a resource the instance does not declare."""


class BadWindow(InstanceError):
    """A time attribute is out of range (release after due, non-positive duration, ...)."""


class PredecessorUnscheduled(SchedulingError):
    """A task was placed before one of its predecessors; indicates an ordering bug."""


class UnknownTask(SchedulingError):
    """A schedule references a task that does not exist in the instance."""


@dataclass(frozen=True)
class TimeWindow:
    """Closed interval ``[start, end]`` of integer time ticks."""

    start: int
    end: int

    def __post_init__(self):
        if self.start > self.end:
            raise BadWindow(f"window start {self.start} exceeds end {self.end}")

    def contains(self, t: int) -> bool:
        return self.start <= t <= self.end


@dataclass(frozen=True)
class Task:
    """One atomic operation of a plan.

    ``predecessors`` holds ``(task_index, lag)`` pairs: this task may start no
    earlier than ``lag`` ticks after each named sibling task completes.
    """

    plan_id: int
    index: int
    processing_time: int
    release: int
    due: int
    resources: frozenset[int]
    predecessors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "resources", frozenset(self.resources))
        object.__setattr__(self, "predecessors", tuple((int(j), int(lag)) for j, lag in self.predecessors))
        if self.processing_time < 1:
            raise BadWindow(f"task {self.id}: processing time must be >= 1, got {self.processing_time}")
        if self.release > self.due:
            raise BadWindow(f"task {self.id}: release {self.release} exceeds due {self.due}")
        if not self.resources:
            raise InstanceError(f"task {self.id}: resource set is empty")
        for j, lag in self.predecessors:
            if lag < 0:
                raise BadWindow(f"task {self.id}: negative lag {lag} on predecessor {j}")
            if j == self.index:
                raise CyclicTaskGraph(f"task {self.id} lists itself as predecessor")

    @property
    def id(self) -> TaskId:
        return (self.plan_id, self.index)


def completion_time(task: Task, start: int) -> int:
    """Completion instant of ``task`` when started at ``start``."""
    return start + task.processing_time


@dataclass(frozen=True)
class Plan:
    """An all-or-nothing vector of tasks with a priority weight.

    The task list is normalised to respect the intra-plan precedence graph
    (stable reordering: tasks already in a consistent order are untouched).
    """

    id: int
    priority: int
    tasks: tuple[Task, ...]

    def __post_init__(self):
        tasks = tuple(self.tasks)
        if not tasks:
            raise InstanceError(f"plan {self.id} has no tasks")
        indices = [t.index for t in tasks]
        if len(set(indices)) != len(indices):
            raise InstanceError(f"plan {self.id} has duplicate task indices")
        for t in tasks:
            if t.plan_id != self.id:
                raise InstanceError(f"plan {self.id} contains task tagged for plan {t.plan_id}")
            for j, _ in t.predecessors:
                if j not in set(indices):
                    raise InstanceError(f"plan {self.id}: task {t.index} names unknown predecessor {j}")
        object.__setattr__(self, "tasks", _topo_order_tasks(self.id, tasks))

    @property
    def task_count(self) -> int:
        return len(self.tasks)

    def task(self, index: int) -> Task:
        for t in self.tasks:
            if t.index == index:
                return t
        raise UnknownTask(f"plan {self.id} has no task {index}")


def _topo_order_tasks(plan_id: int, tasks: tuple[Task, ...]) -> tuple[Task, ...]:
    """Stable Kahn ordering of a plan's tasks; raises on precedence cycles."""
    by_index = {t.index: t for t in tasks}
    remaining_preds = {t.index: {j for j, _ in t.predecessors} for t in tasks}
    order: list[Task] = []
    pending = [t.index for t in tasks]
    while pending:
        ready = [i for i in pending if not remaining_preds[i]]
        if not ready:
            raise CyclicTaskGraph(f"plan {plan_id}: task precedence graph has a cycle")
        chosen = ready[0]
        pending.remove(chosen)
        order.append(by_index[chosen])
        for deps in remaining_preds.values():
            deps.discard(chosen)
    return tuple(order)


@dataclass(frozen=True)
class Instance:
    """A full scheduling problem: plans, plan-level DAG, resources, global window.

    ``resources`` maps resource id to its per-tick availability; only unary
    resources (availability 1) are supported, the field is kept so richer
    capacities stay expressible in the serialised format.
    """

    plans: tuple[Plan, ...]
    plan_dag: frozenset[tuple[int, int]]
    resources: dict[int, int]
    window: TimeWindow

    def __post_init__(self):
        object.__setattr__(self, "plans", tuple(self.plans))
        object.__setattr__(self, "plan_dag", frozenset((int(a), int(b)) for a, b in self.plan_dag))
        ids = [p.id for p in self.plans]
        if len(set(ids)) != len(ids):
            raise InstanceError("duplicate plan ids")
        known = set(ids)
        for a, b in self.plan_dag:
            if a not in known or b not in known:
                raise InstanceError(f"plan precedence edge ({a}, {b}) names unknown plan")
            if a == b:
                raise CyclicPlanDag(f"plan {a} precedes itself")
        _check_plan_dag_acyclic(known, self.plan_dag)
        for rho, avail in self.resources.items():
            if avail != 1:
                raise InstanceError(f"resource {rho}: only availability 1 is supported, got {avail}")
        declared = set(self.resources)
        for plan in self.plans:
            for task in plan.tasks:
                missing = task.resources - declared
                if missing:
                    raise UnknownResource(f"task {task.id} uses undeclared resources {sorted(missing)}")

    def plan(self, plan_id: int) -> Plan:
        for p in self.plans:
            if p.id == plan_id:
                return p
        raise UnknownTask(f"no plan {plan_id}")

    def task(self, task_id: TaskId) -> Task:
        return self.plan(task_id[0]).task(task_id[1])

    def iter_tasks(self):
        for plan in self.plans:
            yield from plan.tasks

    def predecessors_of_plan(self, plan_id: int) -> set[int]:
        return {a for a, b in self.plan_dag if b == plan_id}


def _check_plan_dag_acyclic(nodes: set[int], edges: frozenset[tuple[int, int]]) -> None:
    succs: dict[int, list[int]] = {n: [] for n in nodes}
    indeg = {n: 0 for n in nodes}
    for a, b in edges:
        succs[a].append(b)
        indeg[b] += 1
    queue = [n for n in nodes if indeg[n] == 0]
    seen = 0
    while queue:
        n = queue.pop()
        seen += 1
        for m in succs[n]:
            indeg[m] -= 1
            if indeg[m] == 0:
                queue.append(m)
    if seen != len(nodes):
        raise CyclicPlanDag("plan precedence graph has a cycle")


def build_instance(plans, plan_dag=(), resources=None, window=None) -> Instance:
    """Assemble and validate an :class:`Instance` from parsed raw inputs.

    ``resources`` may be an iterable of ids (availability defaults to 1) or a
    mapping id -> availability.  Raises :class:`CyclicPlanDag`,
    :class:`CyclicTaskGraph`, :class:`UnknownResource` or :class:`BadWindow`
    when the inputs break an invariant.
    """
    if window is None:
        raise BadWindow("an instance needs a global time window")
    if resources is None:
        res: dict[int, int] = {}
        for plan in plans:
            for task in plan.tasks:
                for rho in task.resources:
                    res[rho] = 1
    elif isinstance(resources, dict):
        res = {int(k): int(v) for k, v in resources.items()}
    else:
        res = {int(rho): 1 for rho in resources}
    return Instance(plans=tuple(plans), plan_dag=frozenset(plan_dag), resources=res, window=window)


@dataclass
class Event:
    """A time instant of the schedule, with the tasks starting/completing there.

    ``usage`` is sparse: it holds an entry ``rho -> 1`` exactly for the
    resources occupied during the interval from this event to the next one.
    """

    time: int
    starting: set[TaskId] = field(default_factory=set)
    completing: set[TaskId] = field(default_factory=set)
    usage: dict[int, int] = field(default_factory=dict)

    def busy(self, rho: int) -> int:
        return self.usage.get(rho, 0)

    def set_busy(self, rho: int) -> None:
        self.usage[rho] = 1

    def clear_busy(self, rho: int) -> None:
        self.usage.pop(rho, None)

    def is_empty(self) -> bool:
        return not self.starting and not self.completing

    def add_start(self, task_id: TaskId) -> None:
        assert task_id not in self.completing, "a task cannot start and complete at the same instant"
        self.starting.add(task_id)

    def add_completion(self, task_id: TaskId) -> None:
        assert task_id not in self.starting, "a task cannot start and complete at the same instant"
        self.completing.add(task_id)

    def copy(self) -> "Event":
        return Event(self.time, set(self.starting), set(self.completing), dict(self.usage))


@dataclass
class EventList:
    """Events ordered by time, at most one per instant.

    Supports order queries (next/previous event) and range iteration, which is
    what the insertion scan of the scheduler needs.
    """

    _times: list[int] = field(default_factory=list)
    _events: dict[int, Event] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self._times)

    def __iter__(self):
        return (self._events[t] for t in self._times)

    def __bool__(self) -> bool:
        return bool(self._times)

    def times(self) -> list[int]:
        return list(self._times)

    def at(self, t: int) -> Event | None:
        return self._events.get(t)

    def first(self) -> Event | None:
        return self._events[self._times[0]] if self._times else None

    def last(self) -> Event | None:
        return self._events[self._times[-1]] if self._times else None

    def insert(self, event: Event) -> None:
        if event.time in self._events:
            raise ValueError(f"event already present at t={event.time}")
        insort(self._times, event.time)
        self._events[event.time] = event

    def remove(self, t: int) -> None:
        del self._events[t]
        self._times.pop(bisect_left(self._times, t))

    def next_after(self, t: int) -> Event | None:
        """First event strictly after ``t``."""
        i = bisect_right(self._times, t)
        return self._events[self._times[i]] if i < len(self._times) else None

    def prev_before(self, t: int) -> Event | None:
        """Last event strictly before ``t``."""
        i = bisect_left(self._times, t)
        return self._events[self._times[i - 1]] if i > 0 else None

    def at_or_before(self, t: int) -> Event | None:
        """Last event at or before ``t``."""
        i = bisect_right(self._times, t)
        return self._events[self._times[i - 1]] if i > 0 else None

    def between(self, lo: int, hi: int) -> list[Event]:
        """Events with ``lo <= time < hi`` in time order."""
        i = bisect_left(self._times, lo)
        j = bisect_left(self._times, hi)
        return [self._events[t] for t in self._times[i:j]]

    def copy(self) -> "EventList":
        return EventList(list(self._times), {t: e.copy() for t, e in self._events.items()})


@dataclass
class Schedule:
    """Assigned start times plus the sets of kept and dropped plans.

    ``scheduled_plans`` preserves commit order, which makes tie-breaking
    between equal-priority plans observable and keeps output deterministic.
    Completion times are always derived as ``start + processing_time`` and
    never stored.
    """

    starts: dict[TaskId, int] = field(default_factory=dict)
    scheduled_plans: list[int] = field(default_factory=list)
    discarded_plans: list[int] = field(default_factory=list)

    def start_of(self, task_id: TaskId) -> int | None:
        return self.starts.get(task_id)

    def is_scheduled(self, plan_id: int) -> bool:
        return plan_id in self.scheduled_plans

    def copy(self) -> "Schedule":
        return Schedule(dict(self.starts), list(self.scheduled_plans), list(self.discarded_plans))
