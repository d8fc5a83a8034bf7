#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .algebra_result import AlgebraResult
from ..errors.algebra_error import AlgebraError
from ..errors.resource_error import ResourceError
from ..pauli.coefficient_mode import CoefficientMode
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class LieClosure:
    """the lie algebra generated by a list of pauli vectors.

    elements found in one epoch are commutated with every generator in the next one, so only
    left-normed brackets are formed. candidates of an epoch may be built in parallel, they are
    inserted in the fixed order (generator index, then element index).
    """

    def __init__(self, generators: list[PauliVector], config: RunConfig | None = None):
        if not generators:
            raise AlgebraError("a lie closure needs at least one generator")
        n: int = generators[0].n
        if any(g.n != n for g in generators):
            raise AlgebraError("generators act on different qubit counts")

        self.config: RunConfig = config or RunConfig()
        self.n: int = n
        self.mode: CoefficientMode = self._mode(generators)
        self.generators: list[PauliVector] = [g.to_float() if self.mode != g.mode else g for g in generators]

    def _mode(self, generators: list[PauliVector]) -> CoefficientMode:
        inferred: CoefficientMode = CoefficientMode.EXACT
        if any(g.mode == CoefficientMode.FLOAT for g in generators):
            inferred = CoefficientMode.FLOAT
        if self.config.mode == CoefficientMode.EXACT and inferred == CoefficientMode.FLOAT:
            raise AlgebraError("float generators cannot be closed in exact mode")
        return self.config.mode or inferred

    def compute(self) -> AlgebraResult:
        if self.mode == CoefficientMode.EXACT and self.n > self.config.max_exact_qubits:
            message: str = f"exact closure is limited to {self.config.max_exact_qubits} qubits, got {self.n}"
            raise ResourceError(message, "pass --allow-n8 for eight qubits")

        basis: EchelonBasis = EchelonBasis(self.n, self.mode)
        frontier: list[PauliVector] = [r for g in self.generators if (r := basis.insert_remainder(g)) is not None]
        cap: int = self.dimension_bound()
        depth: int = 0

        while frontier:
            depth += 1
            pairs: list[tuple[PauliVector, PauliVector]] = [(g, r) for g in self.generators for r in frontier]
            candidates: list[PauliVector] = self.config.map(lambda pair: pair[0].commutator(pair[1]), pairs)

            # insertion is serial and in the order of the pairs
            frontier = []
            for candidate in candidates:
                if candidate.is_zero():
                    continue
                if (remainder := basis.insert_remainder(candidate)) is not None:
                    frontier.append(remainder)
            logger.debug(f"closure epoch {depth}: {len(pairs)} commutators, dimension {basis.dim()}")

            if basis.dim() > cap:
                logger.warning(f"closure passed the dimension bound {cap}")
                raise AlgebraError(f"lie closure exceeded {cap} rows without stabilizing")

        logger.info(f"lie closure of {len(self.generators)} generators on {self.n} qubits has dimension {basis.dim()}")
        return AlgebraResult(basis, len(self.generators), depth)

    def dimension_bound(self) -> int:
        # commutators never produce the identity, it is only there when a generator carries it
        carries_identity: bool = any(s.is_identity() for g in self.generators for s in g.terms)
        return 4**self.n - 1 + int(carries_identity)

    @classmethod
    def of(cls, generators: list[PauliVector], config: RunConfig | None = None) -> AlgebraResult:
        return cls(generators, config).compute()
