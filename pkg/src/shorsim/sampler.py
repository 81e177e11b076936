"""Readout sampling through lazily built probability bins.

Enumerating all q = 2**L readout probabilities up front is hopeless at
the register sizes where factoring is interesting (q ~ N**2), so bins
are built only as far as each uniform draw requires: first the r
dominant readouts in descending probability, then rings of neighbors at
growing distance from those peaks, wrapping mod q. Ring expansion stops
once a whole ring carries less mass than the tail threshold or the ring
radius passes the midpoint between peaks; whatever probability remains
is spread uniformly over the readouts never binned. Bins built for one
draw are kept for the next, so a subcycle of several trials pays the
construction cost once.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_right

from .model import dominant_readouts, prob

_FIFTY_THREE = 1 << 53


class RandomSource:
    """Seeded deterministic uniform source.

    Wraps random.Random (the Mersenne Twister) but touches only its
    random() method, whose stream for a fixed seed is guaranteed stable
    across CPython versions and platforms. Integer draws are assembled
    from 53-bit chunks of that stream, so every consumer sees one
    portable sequence.
    """

    def __init__(self, seed: int):
        if not isinstance(seed, int) or isinstance(seed, bool):
            raise TypeError("seed must be an int")
        if not 0 <= seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")
        self.seed = seed
        self._rng = random.Random(seed)

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return self._rng.random()

    def randbits(self, k: int) -> int:
        """Uniform k-bit integer."""
        if k < 1:
            raise ValueError("k must be >= 1")
        chunks = (k + 52) // 53
        v = 0
        for _ in range(chunks):
            v = (v << 53) | int(self._rng.random() * _FIFTY_THREE)
        return v >> (chunks * 53 - k)

    def randrange(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if n == 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            v = self.randbits(k)
            if v < n:
                return v

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], endpoints included."""
        if b < a:
            raise ValueError("empty range")
        return a + self.randrange(b - a + 1)


class ReadoutSampler:
    """Lazy bin table for the readout distribution of one (y, r, q) subcycle.

    entries pairs each binned readout with its cumulative upper edge;
    covered_mass is the last edge. bins_built and ring_radius expose how
    far construction actually went.
    """

    def __init__(self, y: int, r: int, q: int, tail_threshold: float = 1e-12):
        if q < 1 or q & (q - 1):
            raise ValueError("q must be a power of two")
        if not 1 <= r <= q:
            raise ValueError("require 1 <= r <= q")
        if not 0.0 <= tail_threshold < 1.0:
            raise ValueError("tail_threshold must be in [0, 1)")
        self.y = y
        self.r = r
        self.q = q
        self.tail_threshold = tail_threshold
        self.reset()

    def reset(self) -> None:
        """Drop every cached bin; the next draw rebuilds from scratch."""
        self.values: list[int] = []
        self.edges: list[float] = []
        self.covered_mass = 0.0
        self.ring_radius = 0
        self.bins_built = 0
        self.exhausted = False
        self._binned: set[int] = set()
        self._dominant: list[int] = []
        self._phase: list[tuple[float, int]] = []
        self._phase_pos = 0
        self._started = False

    @property
    def entries(self) -> list[tuple[int, float]]:
        """(readout, cumulative upper edge) pairs in construction order."""
        return list(zip(self.values, self.edges))

    def draw(self, rng: RandomSource) -> int:
        """Sample one readout value."""
        while True:
            u = rng.random()
            while u >= self.covered_mass and self._extend():
                pass
            if u < self.covered_mass:
                return self.values[bisect_right(self.edges, u)]
            c = self._tail_draw(rng)
            if c is not None:
                return c
            # Every readout is binned and u fell beyond their summed mass
            # (the model's normalization defect): redraw, i.e. sample the
            # fully enumerated distribution renormalized.

    def _extend(self) -> bool:
        """Append one bin; False when no further bin can ever be appended."""
        while self._phase_pos == len(self._phase):
            if not self._next_phase():
                return False
        p, c = self._phase[self._phase_pos]
        self._phase_pos += 1
        self.values.append(c)
        self.covered_mass += p
        self.edges.append(self.covered_mass)
        self.bins_built += 1
        return True

    def _next_phase(self) -> bool:
        """Stage the next batch of bins: the peaks, then ring after ring."""
        if self.exhausted:
            return False
        if not self._started:
            self._started = True
            self._dominant = dominant_readouts(self.r, self.q)
            self._binned.update(self._dominant)
            batch = [(prob(c, self.r, self.q), c) for c in self._dominant]
        else:
            k = self.ring_radius + 1
            if 2 * self.r * k > self.q:
                # past the midpoint between neighboring peaks
                self.exhausted = True
                return False
            cells = set()
            for c in self._dominant:
                cells.add((c + k) % self.q)
                cells.add((c - k) % self.q)
            cells -= self._binned
            batch = [(prob(c, self.r, self.q), c) for c in cells]
            if math.fsum(p for p, _ in batch) < self.tail_threshold:
                self.exhausted = True
                return False
            self.ring_radius = k
            self._binned.update(cells)
        # Zero-probability cells are marked binned but get no bin: a bin
        # of width zero can trap no draw, and equal cumulative edges would
        # break the strict monotonicity of the edge list.
        batch = [(p, c) for p, c in batch if p > 0.0]
        batch.sort(key=lambda t: (-t[0], t[1]))
        self._phase = batch
        self._phase_pos = 0
        return True

    def _tail_draw(self, rng: RandomSource) -> int | None:
        """Uniform draw over the never-binned readouts; None if none remain."""
        unbinned = self.q - len(self._binned)
        if unbinned <= 0:
            return None
        if self.q <= 1 << 16:
            pool = [c for c in range(self.q) if c not in self._binned]
            return pool[rng.randrange(len(pool))]
        while True:
            c = rng.randrange(self.q)
            if c not in self._binned:
                return c
