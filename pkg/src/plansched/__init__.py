"""plansched: scheduling of prioritised task plans on unary resources.

A plan is an all-or-nothing vector of tasks tied by release/due windows,
precedence lags and resource needs.  The engine inserts plans one by one at
their earliest feasible position inside a fixed global time window, in
priority order layered by the plan precedence DAG, maximising the summed
priority of the plans that fit.  An independent validator, an exact
brute-force oracle for small instances, a benchmark generator and a Gantt
exporter round out the package.
"""

from .engine import (
    EngineConfig,
    IDLE_PREV_EVENT,
    IDLE_RESOURCE_PRED,
    ScheduleResult,
    build_schedule,
    check_constraints,
    earliest_start,
    get_event,
    idle_time_sum,
    rollback_plan,
    schedule_plan,
    schedule_plan_set,
    schedule_task,
)
from .gantt import render_gantt
from .model import (
    BadWindow,
    CyclicPlanDag,
    CyclicTaskGraph,
    Event,
    EventList,
    Instance,
    InstanceError,
    Plan,
    PredecessorUnscheduled,
    Schedule,
    SchedulingError,
    Task,
    TaskId,
    TimeWindow,
    UnknownResource,
    UnknownTask,
    build_instance,
    completion_time,
)
from .oracle import OracleResult, exact_max_weight
from .ordering import FrontierPartition, sort_plans, topological_sort
from .scenarios import SCENARIOS, BadScenario, generate_scenario
from .serialize import (
    ParseError,
    dumps_instance,
    dumps_schedule,
    emit_instance,
    emit_schedule,
    parse_instance,
    parse_schedule,
)
from .validate import (
    GLOBAL_WINDOW,
    INTRA_PLAN_PRECEDENCE,
    PARTIAL_PLAN,
    PLAN_ORDERING,
    RESOURCE_OVERLAP,
    TEMPORAL_WINDOW,
    TIME_LAG,
    ValidationReport,
    Violation,
    objective,
    validate_schedule,
)

__version__ = "0.1.0"

__all__ = [
    "BadScenario",
    "BadWindow",
    "CyclicPlanDag",
    "CyclicTaskGraph",
    "EngineConfig",
    "Event",
    "EventList",
    "FrontierPartition",
    "GLOBAL_WINDOW",
    "IDLE_PREV_EVENT",
    "IDLE_RESOURCE_PRED",
    "INTRA_PLAN_PRECEDENCE",
    "Instance",
    "InstanceError",
    "OracleResult",
    "PARTIAL_PLAN",
    "PLAN_ORDERING",
    "ParseError",
    "Plan",
    "PredecessorUnscheduled",
    "RESOURCE_OVERLAP",
    "SCENARIOS",
    "Schedule",
    "ScheduleResult",
    "SchedulingError",
    "TEMPORAL_WINDOW",
    "TIME_LAG",
    "Task",
    "TaskId",
    "TimeWindow",
    "UnknownResource",
    "UnknownTask",
    "ValidationReport",
    "Violation",
    "build_instance",
    "build_schedule",
    "check_constraints",
    "completion_time",
    "dumps_instance",
    "dumps_schedule",
    "earliest_start",
    "emit_instance",
    "emit_schedule",
    "exact_max_weight",
    "generate_scenario",
    "get_event",
    "idle_time_sum",
    "objective",
    "parse_instance",
    "parse_schedule",
    "render_gantt",
    "rollback_plan",
    "schedule_plan",
    "schedule_plan_set",
    "schedule_task",
    "sort_plans",
    "topological_sort",
    "validate_schedule",
]
