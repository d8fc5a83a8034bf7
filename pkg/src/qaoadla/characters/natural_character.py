#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from fractions import Fraction

from .flip import Flip
from ..graphs.graph import Graph
from ..graphs.perm_group import PermGroup
from ..graphs.permutation import Permutation
from ..graphs.refinement_search import RefinementSearch


class NaturalCharacter:
    """the character of the natural symmetry group, the bit flips times the automorphisms, on all basis states"""

    @classmethod
    def chi_nat(cls, flip: Flip, permutation: Permutation) -> int:
        # a flipped permutation fixes a basis state only when every cycle has even length
        cycle_type = permutation.cycle_type()
        if flip == Flip.ID or cycle_type.all_even:
            return 2**cycle_type.cycle_count
        return 0

    @classmethod
    def trivial_multiplicity(cls, graph: Graph, group: PermGroup | None = None) -> int:
        group = group or RefinementSearch(graph).automorphism_group()
        total: int = sum(cls.chi_nat(Flip.ID, g) + cls.chi_nat(Flip.FLIP, g) for g in group.elements)
        multiplicity: Fraction = Fraction(total, 2 * group.order)
        assert multiplicity.denominator == 1, "orthogonality relations give an integral multiplicity"
        return int(multiplicity)
