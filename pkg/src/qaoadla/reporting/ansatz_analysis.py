#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from ..lie.algebra_center import AlgebraCenter
from ..lie.algebra_result import AlgebraResult
from ..lie.ansatz_spec import AnsatzSpec
from ..lie.center_bounds import CenterBounds
from ..lie.generators import Generators
from ..lie.lie_closure import LieClosure
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector
from ..symmetry.commutant import Commutant
from ..symmetry.commutant_result import CommutantResult
from ..symmetry.decomposition_report import DecompositionReport
from ..symmetry.eigenvectors import Eigenvectors
from ..symmetry.isotypical import Isotypical
from ..symmetry.max_cut_support import MaxCutSupport
from ..symmetry.natural_symmetries import NaturalSymmetries
from ..symmetry.natural_symmetry_report import NaturalSymmetryReport
from ..symmetry.odd_pairing import OddPairing
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class AnsatzAnalysis:
    """the algebra, symmetries and invariant subspaces of one ansatz on one graph"""

    def __init__(self, spec: AnsatzSpec, config: RunConfig | None = None):
        self.spec: AnsatzSpec = spec
        self.config: RunConfig = config or RunConfig()
        self.generators: list[PauliVector] = Generators.of(spec, self.config)

    def run(self) -> tuple[dict[str, object], bool]:
        n: int = self.spec.n
        logger.info(f"analysing the {self.spec.kind.value} ansatz on {self.spec.graph!r}")

        algebra: AlgebraResult = LieClosure.of(self.generators, self.config)
        commutant: CommutantResult = Commutant.of(n, self.generators, self.config)
        commutant_center: EchelonBasis = Commutant.center(commutant)
        algebra_center: EchelonBasis = AlgebraCenter.center_of_algebra(algebra, commutant.basis)
        decomposition: DecompositionReport = Isotypical.decompose(n, self.generators, self.config, commutant)

        # extra Z terms may break the natural symmetries, contained is false then
        natural: NaturalSymmetryReport = NaturalSymmetries.of(self.spec.graph, commutant)
        decomposition.nat_dim = natural.nat_dim
        decomposition.hidden_dim = natural.hidden_dim

        bounds: CenterBounds = AlgebraCenter.center_bounds(
            algebra_center.dim(), len(self.generators), commutant_center.dim(), self.spec.kind, bool(self.spec.extra_z)
        )
        # extra Z terms do not commute with X^n, so the two halves are not defined
        pairing: bool | None = None
        if n % 2 and not self.spec.extra_z:
            pairing = OddPairing.check(n, decomposition)

        payload: dict[str, object] = {
            "ansatz": self.spec.kind.value,
            "extra_z": [w + 1 for w in self.spec.extra_z],
            "generator_count": len(self.generators),
            "dim_algebra": algebra.dim,
            "dim_commutant": commutant.dim,
            "dim_commutant_center": commutant_center.dim(),
            "dim_algebra_center": algebra_center.dim(),
            "decomposition": decomposition.to_dict(),
            "natural_symmetries_contained": natural.contained,
            "center_bounds": bounds.to_dict(),
            "odd_pairing": pairing,
            "one_dim_eigenvectors": [
                e.to_dict() for e in Eigenvectors.one_dim_eigenvectors(self.generators, decomposition)
            ],
            "max_cut_support": MaxCutSupport.of(self.spec.graph, decomposition),
        }
        holds: bool = decomposition.bookkeeping_holds and bounds.holds and pairing is not False
        if not holds:
            logger.warning(f"checks of the {self.spec.kind.value} ansatz on {self.spec.graph!r} failed")
        return payload, holds
