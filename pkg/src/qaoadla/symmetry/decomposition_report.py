#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from dataclasses import field

from .block import Block


@dataclass
class DecompositionReport:
    commutant_dim: int
    center_dim: int
    blocks: list[Block] = field(default_factory=list)
    # natural and hidden symmetries, only known when the generators come from a graph
    nat_dim: int | None = None
    hidden_dim: int | None = None

    @property
    def total_dimension(self) -> int:
        return sum(b.dimension * b.multiplicity for b in self.blocks)

    @property
    def bookkeeping_holds(self) -> bool:
        """the blocks fill the space, their squared multiplicities fill the commutant, one block per center element"""
        if not self.blocks:
            return False
        space: int = self.blocks[0].vectors.shape[0]
        return (
            self.total_dimension == space
            and sum(b.multiplicity**2 for b in self.blocks) == self.commutant_dim
            and len(self.blocks) == self.center_dim
        )

    def dimensions(self) -> list[int]:
        return [b.dimension for b in self.blocks]

    def to_dict(self) -> dict[str, object]:
        return {
            "commutant_dim": self.commutant_dim,
            "center_dim": self.center_dim,
            "blocks": [b.to_dict() for b in self.blocks],
            "nat_dim": self.nat_dim,
            "hidden_dim": self.hidden_dim,
        }
