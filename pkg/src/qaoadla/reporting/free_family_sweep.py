#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .command_result import CommandResult
from ..classify.family import Family
from ..classify.family_classifier import FamilyClassifier
from ..classify.family_report import FamilyReport
from ..errors.input_error import InputError
from ..graphs.edge_saturation import EdgeSaturation
from ..graphs.graph import Graph
from ..graphs.graph_enumerator import GraphEnumerator
from ..graphs.graph_io import GraphIO
from ..lie.algebra_result import AlgebraResult
from ..lie.generators import Generators
from ..lie.lie_closure import LieClosure
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class FreeFamilySweep:
    """closes the free ansatz of every connected graph up to max_n and compares it to the six closed forms"""

    max_n: int = 6

    @classmethod
    def entry(cls, graph: Graph, config: RunConfig | None = None) -> dict[str, object]:
        family: FamilyReport = FamilyClassifier.classify(graph)
        closure: AlgebraResult = LieClosure.of(Generators.free(graph), config)
        predicate: EchelonBasis = EchelonBasis.spanned_by(
            graph.n, [PauliVector.from_string(s) for s in FamilyClassifier.free_basis(graph, family)]
        )

        # saturation keeps the family, and with it the closed form
        saturation: bool | None = None
        if family.family not in (Family.PATH, Family.CYCLE):
            saturated: Graph = EdgeSaturation.saturate(graph)
            shape_holds: bool = EdgeSaturation.is_complete(saturated) or EdgeSaturation.is_complete_bipartite(saturated)
            saturation = shape_holds and FamilyClassifier.classify(saturated).dim_free == family.dim_free

        return {
            "graph6": GraphIO.to_graph6(graph),
            "family": family.family.value,
            "dim_free": family.dim_free,
            "closure_dim": closure.dim,
            "predicate_span": predicate.span_equals(closure.basis),
            "saturation": saturation,
        }

    @classmethod
    def holds(cls, entry: dict[str, object]) -> bool:
        dims: bool = entry["closure_dim"] == entry["dim_free"]
        return dims and entry["predicate_span"] is True and entry["saturation"] is not False

    @classmethod
    def run(cls, max_n: int, config: RunConfig | None = None) -> CommandResult:
        if not 2 <= max_n <= cls.max_n:
            raise InputError(f"the sweep covers 2 <= n <= {cls.max_n}, got --max-n {max_n}")
        config = config or RunConfig()
        enumerator: GraphEnumerator = GraphEnumerator()
        graphs: list[Graph] = [g for n in range(2, max_n + 1) for g in enumerator.connected_graphs(n)]
        logger.info(f"verifying the free ansatz of {len(graphs)} connected graphs")

        entries: list[dict[str, object]] = config.map(lambda g: cls.entry(g, config), graphs)
        failures: list[str] = [str(e["graph6"]) for e in entries if not cls.holds(e)]
        for graph6 in failures:
            logger.warning(f"free ansatz closed form falsified for {graph6}")
        payload: dict[str, object] = {"max_n": max_n, "count": len(entries), "failures": failures, "graphs": entries}
        return CommandResult("verify-free-families", payload, not failures)
