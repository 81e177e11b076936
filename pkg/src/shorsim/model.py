"""Register sizing and the exact readout-probability model.

A work register of L qubits has q = 2**L basis states. When the hidden
order of the base y mod N is r, a measurement of the work register
returns readout c with probability

    P(c) = (r / q**2) * sin(theta_c * q / (2 r))**2 / sin(theta_c / 2)**2

where theta_c = 2 pi (r c - m_c q) / q and m_c q is the multiple of q
nearest to r c. The residual d = r c - m_c q is kept in exact integer
arithmetic: r c overflows the 53-bit float mantissa long before the
angles involved become small, so rounding r c / q in floats would place
whole peaks on the wrong readout.

Limits of the formula are taken exactly: P = 1/r where theta_c = 0, and
P = 0 wherever d is a nonzero multiple of r (everywhere off the peaks
when r divides q).
"""

from __future__ import annotations

import math
import secrets
from dataclasses import dataclass

from .numtheory import is_prime

MAX_MODULUS = 10**10  # inputs are capped at ten decimal digits
MAX_QUBITS = 96


class PrimeInput(ValueError):
    """The number to be factored must be composite."""


class InputTooLarge(ValueError):
    """The number to be factored exceeds the supported ten-digit range."""


def safe_qubits(n: int) -> int:
    """Smallest work-register size L with 2**L >= n**2.

    At this size every order r <= n is recoverable from a dominant
    readout by the continued-fraction step; smaller registers make the
    extraction increasingly likely to overshoot to a spurious convergent.
    """
    _check_modulus(n)
    return (n * n - 1).bit_length()


def aux_qubits(n: int) -> int:
    """Smallest auxiliary register size holding residues mod n."""
    if n < 2:
        raise ValueError("n must be >= 2")
    return (n - 1).bit_length()


def _check_modulus(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("n must be an int")
    if n < 4:
        raise ValueError("n must be >= 4")
    if n > MAX_MODULUS:
        raise InputTooLarge(f"{n} has more than ten digits")
    if is_prime(n):
        raise PrimeInput(f"{n} is prime")


@dataclass(frozen=True)
class FactoringParams:
    """Configuration for one factoring session.

    q and aux_qubits are derived from qubits and n; build() is the
    validating constructor and fills them in.
    """

    n: int
    qubits: int
    q: int
    aux_qubits: int
    max_trials: int = 100
    order_ceiling: int | None = None
    seed: int = 0
    tail_threshold: float = 1e-12

    @classmethod
    def build(
        cls,
        n: int,
        qubits: int | None = None,
        seed: int | None = None,
        *,
        max_trials: int = 100,
        order_ceiling: int | str | None = "sqrt",
        tail_threshold: float = 1e-12,
    ) -> "FactoringParams":
        """Validate inputs and derive the register sizes.

        qubits defaults to the safe size for n. order_ceiling accepts
        "sqrt" (the default cap isqrt(n)), None (no cap), or a positive
        int. seed defaults to a fresh 64-bit value.
        """
        _check_modulus(n)
        if qubits is None:
            qubits = safe_qubits(n)
        if not 1 <= qubits <= MAX_QUBITS:
            raise ValueError(f"qubits must be in [1, {MAX_QUBITS}]")
        if max_trials < 1:
            raise ValueError("max_trials must be >= 1")
        if order_ceiling == "sqrt":
            ceiling: int | None = math.isqrt(n)
        elif order_ceiling is None:
            ceiling = None
        elif isinstance(order_ceiling, int) and order_ceiling >= 1:
            ceiling = order_ceiling
        else:
            raise ValueError("order_ceiling must be 'sqrt', None, or a positive int")
        if seed is None:
            seed = secrets.randbits(64)
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not 0.0 <= tail_threshold < 1.0:
            raise ValueError("tail_threshold must be in [0, 1)")
        return cls(
            n=n,
            qubits=qubits,
            q=1 << qubits,
            aux_qubits=aux_qubits(n),
            max_trials=max_trials,
            order_ceiling=ceiling,
            seed=seed,
            tail_threshold=tail_threshold,
        )


@dataclass(frozen=True)
class ThetaGeometry:
    """The phasor angle behind one readout's probability.

    offset is the exact integer residual r*c - m*q with m*q the nearest
    multiple of q; angle = 2*pi*offset/q lies in (-pi, pi].
    """

    c: int
    m: int
    offset: int
    angle: float


def _offset(c: int, r: int, q: int) -> tuple[int, int]:
    # Nearest integer to r*c/q; a half-integer tie rounds m down so the
    # angle lands on +pi rather than -pi.
    m = (2 * r * c + q - 1) // (2 * q)
    return m, r * c - m * q


def theta(c: int, r: int, q: int) -> ThetaGeometry:
    """Angle between successive phasor terms for readout c at order r."""
    _check_cr(c, r, q)
    m, d = _offset(c, r, q)
    return ThetaGeometry(c=c, m=m, offset=d, angle=2.0 * math.pi * d / q)


def prob(c: int, r: int, q: int) -> float:
    """Probability of measuring readout c when the hidden order is r."""
    _check_cr(c, r, q)
    m, d = _offset(c, r, q)
    if d == 0:
        return 1.0 / r
    if d % r == 0:
        return 0.0
    # |d| <= q/2 keeps the denominator argument in [-pi/2, pi/2]; the
    # numerator argument is reduced mod 2r before the division.
    num = math.sin(math.pi * ((d % (2 * r)) / r))
    den = math.sin(math.pi * (d / q))
    return (r / (q * q)) * (num * num) / (den * den)


def _check_cr(c: int, r: int, q: int) -> None:
    if q < 1 or q & (q - 1):
        raise ValueError("q must be a power of two")
    if not 1 <= r <= q:
        raise ValueError("require 1 <= r <= q")
    if not 0 <= c < q:
        raise ValueError("require 0 <= c < q")


def dominant_readouts(r: int, q: int) -> list[int]:
    """The r readouts carrying nearly all probability mass, ascending.

    One readout per m in [0, r): the integer nearest m*q/r, with
    half-integer ties rounded down. Pairwise distinct whenever r <= q.
    """
    if q < 1 or q & (q - 1):
        raise ValueError("q must be a power of two")
    if not 1 <= r <= q:
        raise ValueError("require 1 <= r <= q")
    return [(2 * m * q + r - 1) // (2 * r) for m in range(r)]


def dominant_mass(r: int, q: int) -> float:
    """Total probability carried by the dominant readouts."""
    return math.fsum(prob(c, r, q) for c in dominant_readouts(r, q))
