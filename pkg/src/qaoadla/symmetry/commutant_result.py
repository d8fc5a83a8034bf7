#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from dataclasses import field

import numpy as np

from ..pauli.dense import Dense
from ..pauli.echelon_basis import EchelonBasis


@dataclass
class CommutantResult:
    """the matrices commuting with every generator, as a basis of hermitian elements.

    the complex span of the rows is the commutant, so its complex dimension is the number of rows.
    """

    basis: EchelonBasis
    _matrices: list[np.ndarray] | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return self.basis.dim()

    @property
    def n(self) -> int:
        return self.basis.n

    def matrices(self) -> list[np.ndarray]:
        if self._matrices is None:
            self._matrices = [Dense.matrix(row) for row in self.basis.rows]
        return self._matrices

    def is_commutative(self, tolerance: float = 1e-8) -> bool:
        matrices: list[np.ndarray] = self.matrices()
        return all(
            np.abs(a @ b - b @ a).max(initial=0.0) <= tolerance
            for i, a in enumerate(matrices)
            for b in matrices[i + 1 :]
        )
