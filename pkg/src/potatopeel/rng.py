"""Seeded, splittable random streams.

Every randomized routine in the package draws from a :class:`RandomSource`,
a thin wrapper over numpy's counter-based Philox generator.  A source is
identified by ``(master_seed, stream_id)`` and two sources with the same
identity produce bit-identical output forever.  Child streams are derived
by mixing tags (ints or strings) into the stream id, so logically distinct
tasks (an iteration of the main loop, an edge within it, a purpose such as
"hull" vs "anchor" samples) get independent, reproducible streams without
any shared state.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1

# splitmix64 constants
_SM_GAMMA = 0x9E3779B97F4A7C15
_SM_MUL1 = 0xBF58476D1CE4E5B9
_SM_MUL2 = 0x94D049BB133111EB


def _splitmix64(x: int) -> int:
    x = (x + _SM_GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * _SM_MUL1) & _MASK64
    x = ((x ^ (x >> 27)) * _SM_MUL2) & _MASK64
    return x ^ (x >> 31)


def _mix_tag(state: int, tag: int | str) -> int:
    if isinstance(tag, str):
        # FNV-1a over utf-8 bytes; stable across processes (unlike hash()).
        h = 0xCBF29CE484222325
        for byte in tag.encode("utf-8"):
            h = ((h ^ byte) * 0x100000001B3) & _MASK64
        tag_int = h
    elif isinstance(tag, (int, np.integer)):
        tag_int = int(tag) & _MASK64
    else:
        raise TypeError(f"stream tag must be int or str, got {type(tag).__name__}")
    return _splitmix64(state ^ tag_int)


@dataclass(frozen=True)
class RandomSource:
    """Identity of one deterministic random stream."""

    master_seed: int
    stream_id: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "master_seed", int(self.master_seed) & _MASK64)
        object.__setattr__(self, "stream_id", int(self.stream_id) & _MASK64)

    def derive(self, *tags: int | str) -> "RandomSource":
        """Child source whose stream id mixes in the given tags."""
        state = self.stream_id
        for tag in tags:
            state = _mix_tag(state, tag)
        return RandomSource(self.master_seed, state)

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        key = np.array([self.master_seed, self.stream_id], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))
