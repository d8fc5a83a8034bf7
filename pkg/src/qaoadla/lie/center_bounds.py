#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass(frozen=True)
class CenterBounds:
    """upper bounds on the center of a generated algebra.

    the center never exceeds the number of generators, a subalgebra of the free algebra has a center at least two
    smaller than the center of its commutant, and the standard ansatz adds the absolute bound two.
    """

    center_dim: int
    generator_count: int
    commutant_center_dim: int
    # the algebra lies inside the free algebra of its graph (no extra Z generators)
    free_subalgebra: bool
    standard: bool

    @property
    def generator_bound_holds(self) -> bool:
        return self.center_dim <= self.generator_count

    @property
    def subalgebra_bound_holds(self) -> bool | None:
        if not self.free_subalgebra:
            return None
        return self.center_dim <= self.commutant_center_dim - 2

    @property
    def standard_bound_holds(self) -> bool | None:
        if not self.standard:
            return None
        return self.center_dim <= min(2, self.commutant_center_dim - 2)

    @property
    def holds(self) -> bool:
        verdicts = (self.generator_bound_holds, self.subalgebra_bound_holds, self.standard_bound_holds)
        return all(v is not False for v in verdicts)

    def to_dict(self) -> dict[str, object]:
        return {
            "generator_bound": self.generator_bound_holds,
            "subalgebra_bound": self.subalgebra_bound_holds,
            "standard_bound": self.standard_bound_holds,
        }
