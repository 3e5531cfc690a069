"""Seeded forest generators for property tests and scaling benchmarks.

Randomness comes from splitmix64, chosen because five lines of integer
arithmetic reproduce the stream in any language.  State is a 64-bit integer;
every draw does (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

Bounded draws use the multiply-shift reduction ``below(k) = (draw * k) >> 64``
and ``split()`` seeds an independent child generator with the next draw.
Identical GenSpec values therefore produce byte-identical forests everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpecError
from .forest import Forest

_MASK = (1 << 64) - 1

FAMILIES = ("random-forest", "path", "star", "caterpillar", "spider", "broom")


class SplitMix64:
    """splitmix64 stream; the module docstring states the exact algorithm."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound) via multiply-shift."""
        return (self.next_u64() * bound) >> 64

    def split(self) -> "SplitMix64":
        """Independent child generator seeded with the next draw."""
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class GenSpec:
    """What to generate: family, size, component count, seed."""

    family: str
    n: int
    components: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidSpecError(
                f"unknown family {self.family!r}, expected one of {FAMILIES}")
        if self.n < 1:
            raise InvalidSpecError("n must be at least 1")
        if not 1 <= self.components <= self.n:
            raise InvalidSpecError("components must satisfy 1 <= components <= n")
        if self.family != "random-forest" and self.components != 1:
            raise InvalidSpecError(
                "components is only meaningful for the random-forest family")


def _path(n: int) -> np.ndarray:
    a = np.arange(n - 1, dtype=np.int64)
    return np.column_stack((a, a + 1))


def _star(n: int) -> np.ndarray:
    leaves = np.arange(1, n, dtype=np.int64)
    return np.column_stack((np.zeros(n - 1, dtype=np.int64), leaves))


def _caterpillar(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # spine 0..s-1, remaining vertices hang off seeded spine positions
    s = 1 + rng.below(n)
    edges = [(i, i + 1) for i in range(s - 1)]
    for v in range(s, n):
        edges.append((rng.below(s), v))
    return edges


def _spider(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # center 0; n-1 vertices distributed round-robin over seeded leg count
    if n == 1:
        return []
    legs = 1 + rng.below(n - 1)
    tip = [0] * legs
    edges = []
    for i, v in enumerate(range(1, n)):
        leg = i % legs
        edges.append((tip[leg], v))
        tip[leg] = v
    return edges


def _broom(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # handle path 0..h-1, bristles attached to its far end
    h = 1 + rng.below(n)
    edges = [(i, i + 1) for i in range(h - 1)]
    edges.extend((h - 1, v) for v in range(h, n))
    return edges


def _random_forest(n: int, comp: int, rng: SplitMix64) -> list[tuple[int, int]]:
    # vertices 0..comp-1 seed the components; every later vertex picks a
    # component, then attaches to a uniformly chosen earlier member of it
    members = [[c] for c in range(comp)]
    edges = []
    for v in range(comp, n):
        grp = members[rng.below(comp)]
        parent = grp[rng.below(len(grp))]
        edges.append((parent, v))
        grp.append(v)
    return edges


def generate(spec: GenSpec) -> Forest:
    """Deterministic forest for the given spec (identical spec, identical bytes)."""
    rng = SplitMix64(spec.seed)
    n = spec.n
    if spec.family == "path":
        edges = _path(n) if n > 1 else []
    elif spec.family == "star":
        edges = _star(n) if n > 1 else []
    elif spec.family == "caterpillar":
        edges = _caterpillar(n, rng)
    elif spec.family == "spider":
        edges = _spider(n, rng)
    elif spec.family == "broom":
        edges = _broom(n, rng)
    else:
        edges = _random_forest(n, spec.components, rng)
    return Forest(n, edges)
