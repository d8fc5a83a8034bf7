#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from dataclasses import field

import numpy as np

from .block_half import BlockHalf
from .block_type import BlockType


@dataclass
class Block:
    """one isotypical component: an irreducible subspace of dimension d occurring m times"""

    dimension: int
    multiplicity: int
    half: BlockHalf
    # orthonormal columns spanning the whole component (d * m of them)
    vectors: np.ndarray = field(repr=False)
    block_type: BlockType = BlockType.UNDETERMINED

    @property
    def rank(self) -> int:
        return self.dimension * self.multiplicity

    @property
    def projector(self) -> np.ndarray:
        return self.vectors @ self.vectors.conj().T

    def to_dict(self) -> dict[str, object]:
        return {
            "d": self.dimension,
            "m": self.multiplicity,
            "half": self.half.value,
            "type": self.block_type.value,
        }
