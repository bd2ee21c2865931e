"""Local shopping-list and timer services driven by List/Timer intents.

Timer arithmetic uses an injected clock value; firing is checked lazily at
each turn rather than by background threads.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Optional

from .errors import InvalidTimerState, ItemNotFound
from .model import (
    DialogueContext,
    TIMER_CANCELLED,
    TIMER_FIRED,
    TIMER_PAUSED,
    TIMER_RUNNING,
    TimerRecord,
)


def list_add(ctx: DialogueContext, item: str) -> DialogueContext:
    """Append unless already present (case-insensitive)."""
    if not item.strip():
        raise ValueError("item must be non-empty")
    item = item.strip()
    if any(existing.lower() == item.lower() for existing in ctx.shopping_list):
        return ctx
    return replace(ctx, shopping_list=ctx.shopping_list + (item,))


def list_remove(ctx: DialogueContext, item: str) -> DialogueContext:
    """Delete the first case-insensitive match."""
    if not item.strip():
        raise ValueError("item must be non-empty")
    target = item.strip().lower()
    for i, existing in enumerate(ctx.shopping_list):
        if existing.lower() == target:
            remaining = ctx.shopping_list[:i] + ctx.shopping_list[i + 1 :]
            return replace(ctx, shopping_list=remaining)
    raise ItemNotFound(item)


def _active_timer(ctx: DialogueContext) -> Optional[tuple[int, TimerRecord]]:
    for i, timer in enumerate(ctx.timers):
        if timer.state in (TIMER_RUNNING, TIMER_PAUSED):
            return i, timer
    return None


def _swap(ctx: DialogueContext, index: int, timer: TimerRecord) -> DialogueContext:
    timers = ctx.timers[:index] + (timer,) + ctx.timers[index + 1 :]
    return replace(ctx, timers=timers)


def timer_set(ctx: DialogueContext, duration: float, now: float,
              label: str | None = None) -> DialogueContext:
    if duration <= 0:
        raise ValueError("duration must be positive")
    timer = TimerRecord(
        id=f"timer-{len(ctx.timers) + 1}",
        duration=duration,
        started_at=now,
        state=TIMER_RUNNING,
        label=label,
    )
    return replace(ctx, timers=ctx.timers + (timer,))


def timer_pause(ctx: DialogueContext, now: float) -> DialogueContext:
    active = _active_timer(ctx)
    if active is None or active[1].state != TIMER_RUNNING:
        current = active[1].state if active else "none"
        raise InvalidTimerState(current, "pause")
    index, timer = active
    remaining = max(0.0, timer.duration - (now - timer.started_at))
    return _swap(ctx, index, replace(timer, state=TIMER_PAUSED, remaining=remaining))


def timer_resume(ctx: DialogueContext, now: float) -> DialogueContext:
    active = _active_timer(ctx)
    if active is None or active[1].state != TIMER_PAUSED:
        current = active[1].state if active else "none"
        raise InvalidTimerState(current, "resume")
    index, timer = active
    # restart the clock so that elapsed + remaining = duration
    started_at = now - (timer.duration - (timer.remaining or 0.0))
    return _swap(ctx, index, replace(
        timer, state=TIMER_RUNNING, started_at=started_at, remaining=None))


def timer_cancel(ctx: DialogueContext, now: float) -> DialogueContext:
    active = _active_timer(ctx)
    if active is None:
        raise InvalidTimerState("none", "cancel")
    index, timer = active
    return _swap(ctx, index, replace(timer, state=TIMER_CANCELLED, remaining=None))


def fire_elapsed_timers(ctx: DialogueContext, now: float) -> tuple[DialogueContext, list[TimerRecord]]:
    """Mark running timers whose time has elapsed as fired; returns the
    updated context and the timers that just fired."""
    fired: list[TimerRecord] = []
    timers = list(ctx.timers)
    for i, timer in enumerate(timers):
        if timer.state == TIMER_RUNNING and now - timer.started_at >= timer.duration:
            timers[i] = replace(timer, state=TIMER_FIRED)
            fired.append(timers[i])
    if not fired:
        return ctx, []
    return replace(ctx, timers=tuple(timers)), fired
