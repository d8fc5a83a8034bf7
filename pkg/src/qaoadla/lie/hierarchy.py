#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
from fractions import Fraction

from .algebra_result import AlgebraResult
from .generators import Generators
from .hierarchy_report import HierarchyReport
from .lie_closure import LieClosure
from .natural_algebra import NaturalAlgebra
from ..classify.family import Family
from ..classify.family_classifier import FamilyClassifier
from ..graphs.graph import Graph
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Hierarchy:
    """checks the chain standard <= orbit <= natural <= free of one connected graph"""

    @classmethod
    def check(cls, graph: Graph, config: RunConfig | None = None) -> HierarchyReport:
        free: AlgebraResult = LieClosure.of(Generators.free(graph), config)
        std: AlgebraResult = LieClosure.of(Generators.standard(graph), config)
        orbit: AlgebraResult = LieClosure.of(Generators.orbit(graph), config)
        nat: AlgebraResult = NaturalAlgebra.natural_basis(graph, free, config)

        u_nat_dim: int | None = None
        u_nat_spanned: bool | None = None
        if FamilyClassifier.classify(graph).family == Family.ARCHETYPAL:
            u_nat: AlgebraResult = NaturalAlgebra.u_nat_basis(graph, config)
            u_nat_dim = u_nat.dim
            u_nat_spanned = cls.projectors_complete(nat, u_nat)

        report: HierarchyReport = HierarchyReport(
            dim_std=std.dim,
            dim_orbit=orbit.dim,
            dim_nat=nat.dim,
            dim_free=free.dim,
            std_in_orbit=orbit.contains_algebra(std),
            orbit_in_nat=nat.contains_algebra(orbit),
            nat_in_free=free.contains_algebra(nat),
            std_equals_nat=std.basis.span_equals(nat.basis),
            u_nat_dim=u_nat_dim,
            u_nat_spanned=u_nat_spanned,
        )
        if not report.holds:
            logger.warning(f"hierarchy of {graph!r} is violated: {report}")
        return report

    @classmethod
    def projectors_complete(cls, nat: AlgebraResult, u_nat: AlgebraResult) -> bool:
        """whether the natural algebra plus the two projectors (I +- X^n) / 2 spans the unitary counterpart"""
        n: int = nat.n
        half: Fraction = Fraction(1, 2)
        identity: PauliVector = PauliVector.from_string(PauliString.identity(n), half)
        flip: PauliVector = PauliVector.from_string(PauliString.all_x(n), half)

        extended: EchelonBasis = nat.basis.copy()
        extended.insert(identity + flip)
        extended.insert(identity - flip)
        return extended.span_equals(u_nat.basis)
