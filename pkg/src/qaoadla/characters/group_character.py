#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from ..graphs.permutation import Permutation


@dataclass(frozen=True)
class GroupCharacter:
    """a one-dimensional character of an abelian permutation group"""

    label: str
    values: dict[Permutation, complex]

    def __call__(self, permutation: Permutation) -> complex:
        return self.values[permutation]

    def __hash__(self) -> int:
        return hash(self.label)
