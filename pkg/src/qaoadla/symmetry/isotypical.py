#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
from math import isqrt

import numpy as np
from scipy.linalg import eigh
from scipy.linalg import svd

from .bilinear_type import BilinearType
from .block import Block
from .block_half import BlockHalf
from .commutant import Commutant
from .commutant_result import CommutantResult
from .decomposition_report import DecompositionReport
from ..errors.algebra_error import AlgebraError
from ..errors.numerical_error import NumericalError
from ..pauli.dense import Dense
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Isotypical:
    """splits the state space into isotypical components using the center of the commutant.

    a random self-adjoint element of the center has one eigenvalue per component, the component of dimension
    d * m carries a commutant part of dimension m^2.
    """

    attempts: int = 5
    tolerance: float = 1e-8

    @classmethod
    def decompose(
        cls,
        n: int,
        generators: list[PauliVector],
        config: RunConfig | None = None,
        commutant: CommutantResult | None = None,
        classify_blocks: bool = True,
    ) -> DecompositionReport:
        config = config or RunConfig()
        commutant = commutant or Commutant.of(n, generators, config)
        center: EchelonBasis = Commutant.center(commutant)
        center_matrices: list[np.ndarray] = [Dense.matrix(row) for row in center.rows]

        blocks: list[Block] | None = None
        for attempt in range(cls.attempts):
            blocks = cls._blocks(center_matrices, commutant.matrices(), config.rng(attempt))
            if blocks is not None and len(blocks) == center.dim():
                break
            logger.debug(f"isotypical split attempt {attempt} failed, reseeding")
            blocks = None
        if blocks is None:
            raise NumericalError(f"no integral isotypical split after {cls.attempts} attempts")

        blocks.sort(key=cls._order)
        if classify_blocks:
            matrices: list[np.ndarray] = [Dense.matrix(g) for g in generators]
            for block in blocks:
                if block.multiplicity == 1 and matrices:
                    block.block_type = BilinearType.of(cls.project(matrices, block))
        return DecompositionReport(commutant.dim, center.dim(), blocks)

    @classmethod
    def _blocks(
        cls, center: list[np.ndarray], commutant: list[np.ndarray], rng: np.random.Generator
    ) -> list[Block] | None:
        combination: np.ndarray = sum((rng.standard_normal() * z for z in center), np.zeros_like(center[0]))
        values, vectors = eigh(combination)

        blocks: list[Block] = []
        for group in Commutant.group_eigenvalues(values, cls.tolerance):
            basis: np.ndarray = vectors[:, group]
            rank: int = len(group)

            # m^2 is the dimension of the commutant compressed to the component
            compressed: np.ndarray = np.array([(basis.conj().T @ c @ basis).ravel() for c in commutant])
            singular: np.ndarray = svd(compressed, compute_uv=False)
            square: int = int((singular > cls.tolerance * max(float(singular[0]), 1.0)).sum())
            m: int = isqrt(square)
            if m == 0 or m * m != square or rank % m:
                return None
            blocks.append(Block(rank // m, m, cls._half(basis), basis))
        return blocks

    @classmethod
    def _half(cls, basis: np.ndarray) -> BlockHalf:
        # X on every qubit maps the index a to d - 1 - a
        flipped: float = float(np.vdot(basis, basis[::-1]).real) / basis.shape[1]
        if flipped > 1 - 1e-6:
            return BlockHalf.PLUS
        if flipped < -1 + 1e-6:
            return BlockHalf.MINUS
        return BlockHalf.MIXED

    @classmethod
    def _order(cls, block: Block) -> tuple[object, ...]:
        halves: list[BlockHalf] = [BlockHalf.PLUS, BlockHalf.MINUS, BlockHalf.MIXED]
        diagonal: tuple[float, ...] = tuple(-float(x) for x in np.round(np.diag(block.projector).real, 6))
        return -block.dimension, halves.index(block.half), -block.multiplicity, diagonal

    @classmethod
    def project(cls, generators: list[np.ndarray], block: Block) -> list[np.ndarray]:
        """the generators restricted to a multiplicity-free block, as d x d matrices"""
        if block.multiplicity != 1:
            raise AlgebraError(f"block of multiplicity {block.multiplicity} is not irreducible")
        return [block.vectors.conj().T @ h @ block.vectors for h in generators]

    @classmethod
    def block_projected_generators(cls, generators: list[PauliVector], block: Block) -> list[np.ndarray]:
        return cls.project([Dense.matrix(g) for g in generators], block)
