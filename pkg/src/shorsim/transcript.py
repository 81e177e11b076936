"""Rendering and serialization of factoring histories.

A history is flattened to an ordered stream of TranscriptEvents; the
stream renders to the human transcript line by line and serializes to
line-delimited JSON that parses back to an equal history.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterator

from .factorizer import AttemptRecord, FactoringHistory, Outcome
from .model import FactoringParams, safe_qubits
from .orderfinder import OrderResult

BANNER = "The number to be factored is {n}."
SAFE_QUBITS_HINT = "The safe number of qubits needed to factor this number is {qubits}."
PRIME_WARNING = "THE NUMBER YOU PICKED IS PRIME, PLEASE TRY AGAIN!!!"
NEW_BASE = "Finding order of y = {y}."
TRIAL_HEADER = "Trial #{index}."
READOUT_LINE = "The readout value from the work register is {readout}."
CANDIDATE_LINE = "The order found using this readout value is {candidate}."
ORDER_INCORRECT = "The order is incorrect, the quantum computer will be reset to try again."
ORDER_CORRECT = "The quantum computer has found the correct order."
ORDER_ODD_LINE = "The order is odd, hence a new value of y will be chosen."
FACTORS_LINE = "The factors of {n} are determined to be {f1} and {f2}."
FACTORING_FAILED = "The factoring has failed, hence a new value of y will be chosen."
SUCCESS_LINE = "The program has succeeded and will now terminate."
CEILING_LINE = (
    "The order of y = {y} exceeds the ceiling of {ceiling}, "
    "hence a new value of y will be chosen."
)
SHARED_FACTOR_LINE = "The randomly chosen y = {y} shares a factor with {n}."
BUDGET_LINE = (
    "The maximum of {max_trials} trials has been reached without finding the factors."
)
FAILURE_LINE = "The program has failed and will now terminate."
SUMMARY_SUCCESS = (
    "This simulation took {elapsed:.3f} seconds and {trials} trials to factor {n}."
)
SUMMARY_FAILURE = (
    "This simulation took {elapsed:.3f} seconds and {trials} trials "
    "without factoring {n}."
)


@dataclass(frozen=True)
class TranscriptEvent:
    """One step of a session: a kind tag plus its payload fields."""

    kind: str
    payload: dict[str, Any]


def history_to_events(history: FactoringHistory) -> list[TranscriptEvent]:
    """Flatten a history into its ordered event stream."""
    p = history.params
    events = [
        TranscriptEvent(
            "banner",
            {
                "n": p.n,
                "qubits": p.qubits,
                "max_trials": p.max_trials,
                "order_ceiling": p.order_ceiling,
                "seed": p.seed,
                "tail_threshold": p.tail_threshold,
            },
        ),
        TranscriptEvent("safe_qubits_hint", {"qubits": safe_qubits(p.n)}),
    ]
    for attempt in history.attempts:
        events.extend(_attempt_events(attempt, p))
    events.append(
        TranscriptEvent(
            "summary",
            {
                "n": p.n,
                "elapsed": history.elapsed,
                "total_trials": history.total_trials,
                "factors": list(history.factors) if history.factors else None,
                "failure": history.failure.value if history.failure else None,
                "warnings": list(history.warnings),
            },
        )
    )
    return events


def _attempt_events(
    attempt: AttemptRecord, params: FactoringParams
) -> Iterator[TranscriptEvent]:
    if attempt.outcome is Outcome.ORDER_CEILING_REJECTED:
        yield TranscriptEvent(
            "ceiling_rejection", {"y": attempt.y, "ceiling": params.order_ceiling}
        )
        return
    if attempt.outcome is Outcome.SHARED_FACTOR:
        yield TranscriptEvent(
            "shared_factor", {"y": attempt.y, "factors": list(attempt.factors)}
        )
        return
    yield TranscriptEvent("new_base", {"y": attempt.y})
    for trial in attempt.trials:
        yield TranscriptEvent(
            "trial",
            {
                "index": trial.trial_index,
                "readout": trial.readout,
                "candidate": trial.candidate_order,
                "verified": trial.verified,
            },
        )
    verdict: dict[str, Any] = {"status": attempt.outcome.value}
    if attempt.order is not None:
        verdict["order"] = attempt.order
    if attempt.factors is not None:
        verdict["factors"] = list(attempt.factors)
    yield TranscriptEvent("attempt_verdict", verdict)


def events_to_history(events: list[TranscriptEvent]) -> FactoringHistory:
    """Rebuild the history a stream of events came from."""
    banner = next(e for e in events if e.kind == "banner").payload
    params = FactoringParams.build(
        banner["n"],
        banner["qubits"],
        banner["seed"],
        max_trials=banner["max_trials"],
        order_ceiling=banner["order_ceiling"],
        tail_threshold=banner["tail_threshold"],
    )
    attempts: list[AttemptRecord] = []
    open_y: int | None = None
    open_trials: list[OrderResult] = []
    for event in events:
        kind, data = event.kind, event.payload
        if kind == "ceiling_rejection":
            attempts.append(AttemptRecord(data["y"], Outcome.ORDER_CEILING_REJECTED))
        elif kind == "shared_factor":
            attempts.append(
                AttemptRecord(
                    data["y"],
                    Outcome.SHARED_FACTOR,
                    factors=tuple(data["factors"]),
                )
            )
        elif kind == "new_base":
            open_y = data["y"]
            open_trials = []
        elif kind == "trial":
            open_trials.append(
                OrderResult(
                    data["index"], data["readout"], data["candidate"], data["verified"]
                )
            )
        elif kind == "attempt_verdict":
            attempts.append(
                AttemptRecord(
                    open_y,
                    Outcome(data["status"]),
                    order=data.get("order"),
                    trials=tuple(open_trials),
                    factors=tuple(data["factors"]) if data.get("factors") else None,
                )
            )
            open_y = None
            open_trials = []
    summary = next(e for e in events if e.kind == "summary").payload
    return FactoringHistory(
        params=params,
        attempts=tuple(attempts),
        total_trials=summary["total_trials"],
        elapsed=summary["elapsed"],
        factors=tuple(summary["factors"]) if summary["factors"] else None,
        failure=Outcome(summary["failure"]) if summary["failure"] else None,
        warnings=tuple(summary["warnings"]),
    )


def render_text(history: FactoringHistory) -> list[str]:
    """Render a history to the transcript, one line per list element."""
    lines: list[str] = []
    n = history.params.n
    for event in history_to_events(history):
        kind, data = event.kind, event.payload
        if kind == "banner":
            lines.append(BANNER.format(n=data["n"]))
        elif kind == "safe_qubits_hint":
            lines.append(SAFE_QUBITS_HINT.format(qubits=data["qubits"]))
        elif kind == "ceiling_rejection":
            lines.append(CEILING_LINE.format(y=data["y"], ceiling=data["ceiling"]))
        elif kind == "shared_factor":
            f1, f2 = data["factors"]
            lines.append(SHARED_FACTOR_LINE.format(y=data["y"], n=n))
            lines.append(FACTORS_LINE.format(n=n, f1=f1, f2=f2))
            lines.append(SUCCESS_LINE)
        elif kind == "new_base":
            lines.append(NEW_BASE.format(y=data["y"]))
        elif kind == "trial":
            lines.append(TRIAL_HEADER.format(index=data["index"]))
            lines.append(READOUT_LINE.format(readout=data["readout"]))
            lines.append(CANDIDATE_LINE.format(candidate=data["candidate"]))
            lines.append(ORDER_CORRECT if data["verified"] else ORDER_INCORRECT)
        elif kind == "attempt_verdict":
            lines.extend(_verdict_lines(data, history))
        elif kind == "summary":
            template = SUMMARY_SUCCESS if data["factors"] else SUMMARY_FAILURE
            lines.append(
                template.format(
                    elapsed=data["elapsed"], trials=data["total_trials"], n=n
                )
            )
            for warning in data["warnings"]:
                lines.append(f"Warning: {warning}.")
    return lines


def _verdict_lines(data: dict[str, Any], history: FactoringHistory) -> list[str]:
    n = history.params.n
    status = Outcome(data["status"])
    if status is Outcome.ORDER_ODD:
        return [ORDER_ODD_LINE]
    if status is Outcome.TRIAL_BUDGET_EXHAUSTED:
        return [
            BUDGET_LINE.format(max_trials=history.params.max_trials),
            FAILURE_LINE,
        ]
    f1, f2 = data["factors"]
    lines = [FACTORS_LINE.format(n=n, f1=f1, f2=f2)]
    if status is Outcome.TRIVIAL_FACTORS:
        lines.append(FACTORING_FAILED)
    else:
        lines.append(SUCCESS_LINE)
    return lines


def to_jsonl(history: FactoringHistory) -> str:
    """Serialize a history to line-delimited JSON, one event per line."""
    return "\n".join(
        json.dumps({"event": e.kind, **e.payload}, sort_keys=True)
        for e in history_to_events(history)
    )


def from_jsonl(text: str) -> FactoringHistory:
    """Parse the output of to_jsonl back into an equal history."""
    events = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        data = json.loads(line)
        kind = data.pop("event")
        events.append(TranscriptEvent(kind, data))
    return events_to_history(events)
