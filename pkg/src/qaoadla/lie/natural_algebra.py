#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .algebra_result import AlgebraResult
from .generators import Generators
from .lie_closure import LieClosure
from .symmetrizer import Symmetrizer
from ..errors.resource_error import ResourceError
from ..graphs.graph import Graph
from ..graphs.perm_group import PermGroup
from ..graphs.refinement_search import RefinementSearch
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class NaturalAlgebra:
    """the natural-symmetry invariant parts of the free algebra and of the full unitary algebra"""

    @classmethod
    def natural_basis(
        cls, graph: Graph, free: AlgebraResult | None = None, config: RunConfig | None = None
    ) -> AlgebraResult:
        """symmetrize every row of the free closure, the images span the natural algebra"""
        free = free or LieClosure.of(Generators.free(graph), config)
        symmetrizer: Symmetrizer = Symmetrizer(RefinementSearch(graph).automorphism_group())

        basis: EchelonBasis = EchelonBasis(graph.n, free.basis.mode)
        for row in free.basis.rows:
            image: PauliVector = symmetrizer.nat(row)
            if not image.is_zero():
                basis.insert(image)
        logger.info(f"natural algebra of {graph!r} has dimension {basis.dim()}")
        return AlgebraResult(basis, free.generator_count, free.depth)

    @classmethod
    def u_nat_basis(cls, graph: Graph, config: RunConfig | None = None) -> AlgebraResult:
        """the symmetrized images of all pauli strings, identity included.

        the image of a string is proportional to the sum over its automorphism orbit, so the orbit sums of the
        strings commuting with X on every qubit form a basis.
        """
        config = config or RunConfig()
        if graph.n > config.max_exact_qubits:
            raise ResourceError(f"symmetrizing all 4^{graph.n} strings is limited to {config.max_exact_qubits} qubits")

        group: PermGroup = RefinementSearch(graph).automorphism_group()
        basis: EchelonBasis = EchelonBasis(graph.n)
        seen: set[PauliString] = set()
        for code in range(4**graph.n):
            string: PauliString = PauliString.from_code(graph.n, code)
            if string in seen or not string.commutes_with_all_x():
                continue
            orbit: set[PauliString] = {string.permute(g.image) for g in group.elements}
            seen.update(orbit)
            basis.insert(PauliVector.sum_of(graph.n, orbit))
        return AlgebraResult(basis, 0)
