"""The classical factoring loop around the simulated order finder.

A session draws random bases y. A base sharing a factor with N ends the
session immediately (the shortcut the final gcd would find anyway). An
honest base has its order found through the simulated measurement
trials; an even verified order r is then split as x = y**(r/2) and the
session reports gcd(x + 1, N) and gcd(x - 1, N), retrying with a new
base when the split is trivial or r is odd. One global trial budget
spans all bases.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass

from .model import FactoringParams
from .numtheory import NotCoprime, is_prime, multiplicative_order
from .orderfinder import OrderResult, TrialCounter, find_order
from .sampler import RandomSource, ReadoutSampler


class Outcome(str, enum.Enum):
    """How one attempt (one chosen base) ended."""

    SHARED_FACTOR = "shared_factor_shortcut"
    ORDER_ODD = "order_odd"
    TRIVIAL_FACTORS = "trivial_factors"
    SUCCESS = "success"
    ORDER_CEILING_REJECTED = "order_ceiling_rejected"
    TRIAL_BUDGET_EXHAUSTED = "trial_budget_exhausted"


@dataclass(frozen=True)
class AttemptRecord:
    """One base and everything that happened with it.

    order is the verified order for ORDER_ODD / TRIVIAL_FACTORS / SUCCESS
    and None otherwise; factors carries the gcd pair whenever one was
    computed, including trivial pairs.
    """

    y: int
    outcome: Outcome
    order: int | None = None
    trials: tuple[OrderResult, ...] = ()
    factors: tuple[int, int] | None = None


@dataclass(frozen=True)
class FactoringHistory:
    """Complete record of one factoring session."""

    params: FactoringParams
    attempts: tuple[AttemptRecord, ...]
    total_trials: int
    elapsed: float
    factors: tuple[int, int] | None
    failure: Outcome | None
    warnings: tuple[str, ...] = ()

    @property
    def succeeded(self) -> bool:
        return self.factors is not None


@dataclass(frozen=True)
class SharedFactorHit:
    """A drawn base that already shares a factor with the modulus."""

    y: int
    factor: int


def pick_y(
    n: int,
    rng: RandomSource,
    ceiling: int | None = None,
    rejected: list[int] | None = None,
) -> SharedFactorHit | tuple[int, int]:
    """Draw bases uniformly from [2, n - 1] until one is usable.

    Returns a SharedFactorHit when gcd(y, n) > 1, else (y, exact order).
    Bases whose order exceeds `ceiling` are appended to `rejected` and
    redrawn.
    """
    while True:
        y = rng.randint(2, n - 1)
        g = math.gcd(y, n)
        if g > 1:
            return SharedFactorHit(y, g)
        r = multiplicative_order(y, n, ceiling)
        if r is None:
            if rejected is not None:
                rejected.append(y)
            continue
        return y, r


def extract_factors(y: int, r: int, n: int) -> tuple[Outcome, tuple[int, int] | None]:
    """Try the even-order split for a verified order r of y mod n.

    Returns (ORDER_ODD, None) for odd r; otherwise the gcd pair
    (gcd(x + 1, n), gcd(x - 1, n)) for x = y**(r/2), flagged SUCCESS when
    both members are proper factors and TRIVIAL_FACTORS when either
    is 1 or n.
    """
    if pow(y, r, n) != 1:
        raise ValueError(f"{r} is not an annihilating exponent of {y} mod {n}")
    if r % 2:
        return Outcome.ORDER_ODD, None
    x = pow(y, r // 2, n)
    p1 = math.gcd(x + 1, n)
    p2 = math.gcd(x - 1, n)
    if p1 in (1, n) or p2 in (1, n):
        return Outcome.TRIVIAL_FACTORS, (p1, p2)
    return Outcome.SUCCESS, (p1, p2)


def factor(
    n: int,
    qubits: int | None = None,
    seed: int | None = None,
    *,
    max_trials: int = 100,
    order_ceiling: int | str | None = "sqrt",
    tail_threshold: float = 1e-12,
) -> FactoringHistory:
    """Factor n through a full simulated session. See FactoringParams.build."""
    params = FactoringParams.build(
        n,
        qubits,
        seed,
        max_trials=max_trials,
        order_ceiling=order_ceiling,
        tail_threshold=tail_threshold,
    )
    return run_session(params)


def run_session(params: FactoringParams) -> FactoringHistory:
    """Run one factoring session to completion under fixed parameters."""
    rng = RandomSource(params.seed)
    counter = TrialCounter(params.max_trials)
    attempts: list[AttemptRecord] = []
    factors: tuple[int, int] | None = None
    failure: Outcome | None = None
    # The work register must be able to index any accepted order, so the
    # effective ceiling never exceeds q.
    if params.order_ceiling is None:
        ceiling = params.q
    else:
        ceiling = min(params.order_ceiling, params.q)
    start = time.perf_counter()
    while True:
        if counter.remaining == 0:
            failure = Outcome.TRIAL_BUDGET_EXHAUSTED
            break
        rejected: list[int] = []
        choice = pick_y(params.n, rng, ceiling, rejected)
        attempts.extend(
            AttemptRecord(y, Outcome.ORDER_CEILING_REJECTED) for y in rejected
        )
        if isinstance(choice, SharedFactorHit):
            pair = (choice.factor, params.n // choice.factor)
            attempts.append(
                AttemptRecord(choice.y, Outcome.SHARED_FACTOR, factors=pair)
            )
            factors = pair
            break
        y, true_order = choice
        sampler = ReadoutSampler(y, true_order, params.q, params.tail_threshold)
        trials = find_order(y, params, sampler, rng, counter)
        if not trials or not trials[-1].verified:
            attempts.append(
                AttemptRecord(
                    y, Outcome.TRIAL_BUDGET_EXHAUSTED, trials=tuple(trials)
                )
            )
            failure = Outcome.TRIAL_BUDGET_EXHAUSTED
            break
        found = trials[-1].candidate_order
        outcome, pair = extract_factors(y, found, params.n)
        attempts.append(
            AttemptRecord(y, outcome, order=found, trials=tuple(trials), factors=pair)
        )
        if outcome is Outcome.SUCCESS:
            factors = pair
            break
    elapsed = time.perf_counter() - start
    return FactoringHistory(
        params=params,
        attempts=tuple(attempts),
        total_trials=counter.count,
        elapsed=elapsed,
        factors=factors,
        failure=failure,
        warnings=tuple(_session_warnings(params.n, factors)),
    )


def _session_warnings(n: int, factors: tuple[int, int] | None) -> list[str]:
    if factors is None:
        return []
    out = []
    a, b = factors
    if a * b != n:
        out.append(f"reported factors {a} * {b} != {n}; {n} has more than two prime factors")
    for f in factors:
        if not is_prime(f):
            out.append(f"reported factor {f} of {n} is composite")
    return out


__all__ = [
    "Outcome",
    "AttemptRecord",
    "FactoringHistory",
    "SharedFactorHit",
    "NotCoprime",
    "pick_y",
    "extract_factors",
    "factor",
    "run_session",
]
