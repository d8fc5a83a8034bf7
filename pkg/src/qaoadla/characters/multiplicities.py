#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

import numpy as np

from .abelian_characters import AbelianCharacters
from .flip import Flip
from .group_character import GroupCharacter
from .multiplicity_entry import MultiplicityEntry
from .multiplicity_table import MultiplicityTable
from .natural_character import NaturalCharacter
from ..errors.numerical_error import NumericalError
from ..errors.resource_error import ResourceError
from ..graphs.graph import Graph
from ..graphs.perm_group import PermGroup
from ..graphs.refinement_search import RefinementSearch
from ..lie.natural_algebra import NaturalAlgebra
from ..symmetry.decomposition_report import DecompositionReport
from ..symmetry.isotypical import Isotypical
from ..symmetry.natural_symmetries import NaturalSymmetries
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Multiplicities:
    """multiplicities of the characters of the natural symmetry group by the orthogonality relations.

    the natural group has order 2 |Aut(G)|, the bit flip sign character is labeled s.
    """

    # dense group averages materialize 2^n x 2^n matrices
    max_dense_qubits: int = 8

    @classmethod
    def multiplicity_table(cls, graph: Graph, group: PermGroup | None = None) -> MultiplicityTable:
        group = group or RefinementSearch(graph).automorphism_group()
        if not group.is_abelian():
            trivial: int = NaturalCharacter.trivial_multiplicity(graph, group)
            return MultiplicityTable((MultiplicityEntry(("t", "t"), trivial),), trivial_only=True)

        entries: list[MultiplicityEntry] = []
        for flip_label in ("t", "s"):
            for character in AbelianCharacters.of(group):
                multiplicity: int = cls._multiplicity(group, flip_label, character)
                entries.append(MultiplicityEntry((flip_label, character.label), multiplicity))
        logger.debug(f"multiplicities of {graph!r}: {[(e.label, e.multiplicity) for e in entries]}")
        return MultiplicityTable(tuple(entries))

    @classmethod
    def _multiplicity(cls, group: PermGroup, flip_label: str, character: GroupCharacter) -> int:
        total: complex = 0
        for flip in Flip:
            flip_value: int = -1 if flip_label == "s" and flip == Flip.FLIP else 1
            for g in group.elements:
                total += np.conj(flip_value * character(g)) * NaturalCharacter.chi_nat(flip, g)
        value: complex = total / (2 * group.order)
        if abs(value - round(value.real)) > 1e-6:
            raise NumericalError(f"multiplicity {value} of {(flip_label, character.label)} is not an integer")
        return int(round(value.real))

    @classmethod
    def projector_rank(cls, graph: Graph, label: tuple[str, str], group: PermGroup | None = None) -> int:
        """the rank of the group average of the conjugated character times the natural operators"""
        if graph.n > cls.max_dense_qubits:
            raise ResourceError(f"dense group averages are limited to {cls.max_dense_qubits} qubits")
        group = group or RefinementSearch(graph).automorphism_group()
        flip_label, character_label = label
        if character_label == "t":
            values: dict = {g: 1.0 for g in group.elements}
        else:
            character: GroupCharacter = next(c for c in AbelianCharacters.of(group) if c.label == character_label)
            values = character.values

        d: int = 1 << graph.n
        average: np.ndarray = np.zeros((d, d), dtype=complex)
        for g in group.elements:
            zeta: np.ndarray = NaturalSymmetries.permutation_matrix(g)
            sign: int = -1 if flip_label == "s" else 1
            # the flipped operator X^n zeta reverses the rows
            average += np.conj(values[g]) * (zeta + sign * zeta[::-1])
        average /= 2 * group.order
        return int(np.linalg.matrix_rank(average, tol=1e-8))

    @classmethod
    def u_nat_decomposition(cls, graph: Graph, config: RunConfig | None = None) -> DecompositionReport:
        u_nat = NaturalAlgebra.u_nat_basis(graph, config)
        return Isotypical.decompose(graph.n, u_nat.basis.rows, config, classify_blocks=False)

    @classmethod
    def duality_holds(cls, table: MultiplicityTable, decomposition: DecompositionReport) -> bool:
        """the multiplicities are the dimensions of the invariant subspaces of the natural unitary algebra"""
        dimensions: list[int] = sorted(
            (b.dimension for b in decomposition.blocks for _ in range(b.multiplicity)), reverse=True
        )
        if table.trivial_only:
            return table.trivial in dimensions
        return dimensions == table.dual_dimensions()
