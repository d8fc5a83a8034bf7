#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from itertools import permutations
from math import factorial

from .trivial_bounds import TrivialBounds
from .natural_character import NaturalCharacter
from ..errors.input_error import InputError
from ..graphs.edge_saturation import EdgeSaturation
from ..graphs.graph import Graph
from ..graphs.perm_group import PermGroup
from ..graphs.permutation import Permutation
from ..graphs.refinement_search import RefinementSearch


@dataclass(frozen=True)
class CycleSumRow:
    n: int
    # sum of 2^c over the symmetric group and the same sum restricted to all-even cycle types
    cycle_sum: int
    even_sum: int

    @property
    def cycle_sum_holds(self) -> bool:
        return self.cycle_sum == factorial(self.n + 1)

    @property
    def even_sum_holds(self) -> bool:
        # odd degrees have no all-even permutations
        return self.even_sum == (factorial(self.n) if self.n % 2 == 0 else 0)


class CycleIdentities:
    """brute force checks of the two cycle counting identities behind the trivial multiplicity bounds"""

    max_n: int = 8

    @classmethod
    def row(cls, n: int) -> CycleSumRow:
        if not 1 <= n <= cls.max_n:
            raise InputError(f"brute force over S_n is limited to 1 <= n <= {cls.max_n}, got {n}")
        cycle_sum: int = 0
        even_sum: int = 0
        for image in permutations(range(n)):
            cycle_type = Permutation(image).cycle_type()
            cycle_sum += 2**cycle_type.cycle_count
            even_sum += 2**cycle_type.cycle_count if cycle_type.all_even else 0
        return CycleSumRow(n, cycle_sum, even_sum)

    @classmethod
    def verify(cls, limit_n: int) -> list[CycleSumRow]:
        return [cls.row(n) for n in range(1, limit_n + 1)]

    @classmethod
    def trivial_bounds(cls, graph: Graph, group: PermGroup | None = None) -> TrivialBounds:
        group = group or RefinementSearch(graph).automorphism_group()
        trivial: int = NaturalCharacter.trivial_multiplicity(graph, group)
        return TrivialBounds(trivial, graph.n, group.order, EdgeSaturation.is_complete(graph))
