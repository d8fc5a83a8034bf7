#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class CycleType:
    """the cycle type of a permutation: counts[a] is the number of cycles of length a"""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: list[int]) -> "CycleType":
        return cls(tuple(sorted(Counter(lengths).items())))

    @property
    def degree(self) -> int:
        """the number of points the permutation acts on"""
        return sum(length * count for length, count in self.counts)

    @property
    def cycle_count(self) -> int:
        return sum(count for _, count in self.counts)

    @property
    def all_even(self) -> bool:
        """whether every cycle has even length, 1 if so and 0 otherwise in the usual notation"""
        return all(length % 2 == 0 for length, _ in self.counts)

    def multiplicity(self, length: int) -> int:
        return dict(self.counts).get(length, 0)
