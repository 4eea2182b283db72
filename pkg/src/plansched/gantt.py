"""Gantt rendering of a schedule, as fixed-width text or standalone SVG.

Both formats draw one row per resource with one bar per task over
``[start, start + p)``.  Output is a pure function of the inputs: rendering
the same schedule twice yields byte-identical documents.
"""

from __future__ import annotations

from .model import Instance, Schedule, completion_time

_SVG_PX_PER_TICK = 6
_SVG_ROW_HEIGHT = 26
_SVG_LEFT_MARGIN = 64
_SVG_TOP_MARGIN = 30


def _bars_by_resource(schedule: Schedule, instance: Instance) -> dict[int, list[tuple[int, int, str]]]:
    bars: dict[int, list[tuple[int, int, str]]] = {rho: [] for rho in sorted(instance.resources)}
    for plan in instance.plans:
        for task in plan.tasks:
            start = schedule.starts.get(task.id)
            if start is None:
                continue
            label = f"J{plan.id}.{task.index}"
            for rho in task.resources:
                bars[rho].append((start, completion_time(task, start), label))
    for rows in bars.values():
        rows.sort()
    return bars


def render_gantt(schedule: Schedule, instance: Instance, fmt: str = "text") -> str:
    """Render ``schedule`` as ``text`` or ``svg``."""
    if fmt == "text":
        return _render_text(schedule, instance)
    if fmt == "svg":
        return _render_svg(schedule, instance)
    raise ValueError(f"unknown gantt format {fmt!r}")


def _render_text(schedule: Schedule, instance: Instance) -> str:
    w = instance.window
    span = w.end - w.start
    bars = _bars_by_resource(schedule, instance)
    lines = [f"window [{w.start},{w.end}]"]
    if not schedule.starts:
        return "\n".join(lines) + "\n"
    ruler = [" "] * span
    for t in range(w.start, w.end + 1, 10):
        pos = t - w.start
        if pos < span:
            ruler[pos] = "|"
    label_width = max(len(f"rho {rho}") for rho in bars)
    lines.append(" " * (label_width + 3) + "".join(ruler))
    for rho, rows in bars.items():
        timeline = ["."] * span
        for start, end, _label in rows:
            for t in range(max(start, w.start), min(end, w.end)):
                timeline[t - w.start] = "#"
        legend = "  ".join(f"{label} [{start},{end})" for start, end, label in rows)
        lines.append(f"{f'rho {rho}':<{label_width}} | " + "".join(timeline) + ("  " + legend if legend else ""))
    return "\n".join(lines) + "\n"


def _render_svg(schedule: Schedule, instance: Instance) -> str:
    w = instance.window
    bars = _bars_by_resource(schedule, instance)
    rows = sorted(bars)
    width = _SVG_LEFT_MARGIN + (w.end - w.start) * _SVG_PX_PER_TICK + 20
    height = _SVG_TOP_MARGIN + len(rows) * _SVG_ROW_HEIGHT + 10

    def x(t: int) -> int:
        return _SVG_LEFT_MARGIN + (t - w.start) * _SVG_PX_PER_TICK

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f'<text x="4" y="14" font-family="monospace" font-size="12">window [{w.start},{w.end}]</text>',
    ]
    tick_step = max(1, (w.end - w.start) // 18)
    for t in range(w.start, w.end + 1, tick_step):
        parts.append(
            f'<line x1="{x(t)}" y1="{_SVG_TOP_MARGIN - 6}" x2="{x(t)}" y2="{height - 10}" '
            'stroke="#cccccc" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x(t)}" y="{_SVG_TOP_MARGIN - 10}" font-family="monospace" font-size="9" '
            f'text-anchor="middle">{t}</text>'
        )
    for row, rho in enumerate(rows):
        y = _SVG_TOP_MARGIN + row * _SVG_ROW_HEIGHT
        parts.append(
            f'<text x="4" y="{y + 15}" font-family="monospace" font-size="11">rho {rho}</text>'
        )
        for start, end, label in bars[rho]:
            parts.append(
                f'<rect x="{x(start)}" y="{y + 4}" width="{(end - start) * _SVG_PX_PER_TICK}" '
                f'height="{_SVG_ROW_HEIGHT - 8}" fill="#7aa6d6" stroke="#2b4c73" stroke-width="1"/>'
            )
            parts.append(
                f'<text x="{x(start) + 2}" y="{y + 16}" font-family="monospace" font-size="9">{label}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
