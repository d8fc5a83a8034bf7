#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Iterable

from .permutation import Permutation
from ..errors.resource_error import ResourceError


class PermGroup:
    """a permutation group with all of its elements materialized, in sorted order"""

    # groups larger than this are never materialized
    max_order: int = 1 << 20

    def __init__(self, n: int, elements: Iterable[Permutation], generators: Iterable[Permutation] | None = None):
        self.n: int = n
        self.elements: list[Permutation] = sorted(set(elements))
        self._members: frozenset[Permutation] = frozenset(self.elements)
        self.generators: list[Permutation] = (
            list(generators) if generators is not None else self._greedy_generators(self.elements)
        )

    @classmethod
    def generated_by(cls, n: int, generators: Iterable[Permutation]) -> "PermGroup":
        generators = [g for g in generators if not g.is_identity()]
        return cls(n, cls._closure(n, generators), generators)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        return cls(n, [Permutation.identity(n)], [])

    @classmethod
    def _closure(cls, n: int, generators: list[Permutation]) -> set[Permutation]:
        elements: set[Permutation] = {Permutation.identity(n)}
        frontier: list[Permutation] = list(elements)
        while frontier:
            next_frontier: list[Permutation] = []
            for element in frontier:
                for generator in generators:
                    product: Permutation = generator.compose(element)
                    if product not in elements:
                        elements.add(product)
                        next_frontier.append(product)
            if len(elements) > cls.max_order:
                raise ResourceError(f"group order exceeds {cls.max_order}")
            frontier = next_frontier
        return elements

    @classmethod
    def _greedy_generators(cls, elements: list[Permutation]) -> list[Permutation]:
        """walk the sorted elements and keep those outside of the group generated so far"""
        if not elements:
            return []
        n: int = elements[0].n
        generators: list[Permutation] = []
        generated: set[Permutation] = {Permutation.identity(n)}
        for element in elements:
            if element not in generated:
                generators.append(element)
                generated = cls._closure(n, generators)
            if len(generated) == len(elements):
                break
        return generators

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        return all(a.compose(b) == b.compose(a) for a in self.generators for b in self.generators)

    def contains(self, permutation: Permutation) -> bool:
        return permutation in self._members

    def stabilizer(self, points: Iterable[int]) -> list[Permutation]:
        """the elements fixing every given point"""
        fixed: list[int] = list(points)
        return [g for g in self.elements if all(g(p) == p for p in fixed)]

    def __repr__(self) -> str:
        return f"PermGroup(order={self.order}, generators={[g.cycle_notation() for g in self.generators]})"
