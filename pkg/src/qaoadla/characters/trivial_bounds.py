#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class TrivialBounds:
    """the trivial multiplicity against its lower bound and the complete and asymmetric limiting cases"""

    trivial: int
    n: int
    group_order: int
    complete: bool

    @property
    def lower_bound(self) -> Fraction:
        return Fraction(2 ** (self.n - 1), self.group_order)

    @property
    def complete_value(self) -> int:
        return self.n // 2 + 1

    @property
    def asymmetric_value(self) -> int:
        return 2 ** (self.n - 1)

    @property
    def holds(self) -> bool:
        if self.trivial < self.lower_bound:
            return False
        if self.complete and self.trivial != self.complete_value:
            return False
        return self.group_order != 1 or self.trivial == self.asymmetric_value

    def to_dict(self) -> dict[str, object]:
        return {
            "m_tt": self.trivial,
            "lower_bound": str(self.lower_bound),
            "complete_value": self.complete_value if self.complete else None,
            "asymmetric_value": self.asymmetric_value if self.group_order == 1 else None,
            "holds": self.holds,
        }
