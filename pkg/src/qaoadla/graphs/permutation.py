#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Sequence
from math import lcm

from .cycle_type import CycleType
from ..errors.input_error import InputError


class Permutation:
    """a bijection on 0..n-1, stored as its image tuple"""

    __slots__ = ("image",)

    def __init__(self, image: Sequence[int]):
        if sorted(image) != list(range(len(image))):
            raise InputError(f"{list(image)} is not a permutation")
        self.image: tuple[int, ...] = tuple(image)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        """construct from 1-based cycles like [[2, 3], [4, 5]]"""
        image: list[int] = list(range(n))
        for cycle in cycles:
            for i, v in enumerate(cycle):
                image[v - 1] = cycle[(i + 1) % len(cycle)] - 1
        return cls(image)

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, vertex: int) -> int:
        return self.image[vertex]

    def compose(self, other: "Permutation") -> "Permutation":
        """the permutation applying other first and then self"""
        return Permutation([self.image[v] for v in other.image])

    def inverse(self) -> "Permutation":
        image: list[int] = [0] * self.n
        for u, v in enumerate(self.image):
            image[v] = u
        return Permutation(image)

    def is_identity(self) -> bool:
        return all(u == v for u, v in enumerate(self.image))

    def cycles(self) -> list[tuple[int, ...]]:
        """all cycles including fixed points, each starting at its smallest vertex"""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(self.n):
            if start in seen:
                continue
            cycle: list[int] = [start]
            seen.add(start)
            while (v := self.image[cycle[-1]]) != start:
                cycle.append(v)
                seen.add(v)
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> CycleType:
        return CycleType.from_lengths([len(c) for c in self.cycles()])

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def cycle_notation(self) -> str:
        """1-based cycle notation without fixed points, '()' for the identity"""
        cycles: list[str] = [f"({','.join(str(v + 1) for v in c)})" for c in self.cycles() if len(c) > 1]
        return "".join(cycles) or "()"

    def __eq__(self, other: object) -> bool:
        if type(other) != Permutation:
            return False
        return self.image == other.image

    def __lt__(self, other: "Permutation") -> bool:
        return self.image < other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_notation()})"
