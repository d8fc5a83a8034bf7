#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
from collections import Counter

from .command_result import CommandResult
from .survey_row import SurveyRow
from ..errors.resource_error import ResourceError
from ..graphs.graph import Graph
from ..graphs.graph_enumerator import GraphEnumerator
from ..graphs.graph_io import GraphIO
from ..pauli.pauli_vector import PauliVector
from ..symmetry.block_reduction import BlockReduction
from ..symmetry.commutant import Commutant
from ..symmetry.commutant_result import CommutantResult
from ..symmetry.decomposition_report import DecompositionReport
from ..symmetry.isotypical import Isotypical
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Survey:
    """the gap between the symmetric block of the standard ansatz and the full block for asymmetric graphs.

    without automorphisms the natural symmetries reduce to X^n, so any further splitting of the +1 eigenspace
    comes from hidden symmetries.
    """

    @classmethod
    def row(cls, graph: Graph, config: RunConfig | None = None) -> SurveyRow:
        generators: list[PauliVector] = BlockReduction.standard_plus_generators(graph)
        n: int = graph.n - 1
        commutant: CommutantResult = Commutant.of(n, generators, config)
        decomposition: DecompositionReport = Isotypical.decompose(
            n, generators, config, commutant, classify_blocks=False
        )
        largest: int = max(decomposition.dimensions())
        return SurveyRow(GraphIO.to_graph6(graph), graph.n, commutant.dim, decomposition.center_dim, largest)

    @classmethod
    def rows(cls, n: int, config: RunConfig | None = None) -> list[SurveyRow]:
        config = config or RunConfig()
        if n > config.max_exact_qubits:
            raise ResourceError(
                f"surveys are limited to n <= {config.max_exact_qubits}", "pass --allow-n8 for the long n = 8 survey"
            )

        graphs: list[Graph] = GraphEnumerator().asymmetric_connected_graphs(n)
        logger.info(f"surveying {len(graphs)} asymmetric connected graphs on {n} vertices")
        rows: list[SurveyRow] = config.map(lambda g: cls.row(g, config), graphs)
        return sorted(rows, key=lambda r: r.graph6)

    @classmethod
    def histogram(cls, rows: list[SurveyRow]) -> dict[int, int]:
        counts: Counter[int] = Counter(r.delta for r in rows)
        return dict(sorted(counts.items()))

    @classmethod
    def run(cls, n: int, config: RunConfig | None = None) -> CommandResult:
        rows: list[SurveyRow] = cls.rows(n, config)
        # hidden symmetries of the +1 block show up as a second commutant and center dimension
        consistent: bool = all((r.delta == 0) == (r.commutant_dim == 1) for r in rows)
        payload: dict[str, object] = {
            "n": n,
            "count": len(rows),
            "histogram": {str(delta): count for delta, count in cls.histogram(rows).items()},
            "rows": [r.to_dict() for r in rows],
        }
        return CommandResult("survey", payload, consistent)
