#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .ansatz_analysis import AnsatzAnalysis
from .command_result import CommandResult
from ..characters.cycle_identities import CycleIdentities
from ..characters.multiplicities import Multiplicities
from ..characters.multiplicity_table import MultiplicityTable
from ..characters.trivial_bounds import TrivialBounds
from ..classify.family_classifier import FamilyClassifier
from ..classify.family_report import FamilyReport
from ..graphs.edge_saturation import EdgeSaturation
from ..graphs.graph import Graph
from ..graphs.graph_io import GraphIO
from ..graphs.graph_orbits import GraphOrbits
from ..graphs.perm_group import PermGroup
from ..graphs.refinement_search import RefinementSearch
from ..lie.algebra_result import AlgebraResult
from ..lie.ansatz_kind import AnsatzKind
from ..lie.ansatz_spec import AnsatzSpec
from ..lie.generators import Generators
from ..lie.hierarchy import Hierarchy
from ..lie.lie_closure import LieClosure
from ..pauli.echelon_basis import EchelonBasis
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class GraphReport:
    """the single-graph commands: classify, report, saturate and characters"""

    # the duality check symmetrizes all 4^n strings and decomposes the result densely
    max_duality_qubits: int = 5

    @classmethod
    def classify(cls, graph: Graph, verify: bool = False, config: RunConfig | None = None) -> CommandResult:
        family: FamilyReport = FamilyClassifier.classify(graph)
        payload: dict[str, object] = {"graph": GraphIO.to_dict(graph)} | family.to_dict()
        payload["dim_nat_closed_form"] = FamilyClassifier.nat_dim_closed_form(graph)

        holds: bool = True
        if verify:
            closure: AlgebraResult = LieClosure.of(Generators.free(graph), config)
            predicate: EchelonBasis = EchelonBasis.spanned_by(
                graph.n, [PauliVector.from_string(s) for s in FamilyClassifier.free_basis(graph, family)]
            )
            verification: dict[str, object] = {
                "closure_dim": closure.dim,
                "dim_matches": closure.dim == family.dim_free,
                "predicate_span_matches": predicate.span_equals(closure.basis),
            }
            holds = bool(verification["dim_matches"] and verification["predicate_span_matches"])
            payload["verification"] = verification
        return CommandResult("classify", payload, holds)

    @classmethod
    def report(
        cls,
        graph: Graph,
        kinds: list[AnsatzKind],
        extra_z: tuple[int, ...] = (),
        config: RunConfig | None = None,
    ) -> CommandResult:
        config = config or RunConfig()
        group: PermGroup = RefinementSearch(graph).automorphism_group()
        orbits: GraphOrbits = GraphOrbits.of(graph, group)

        ansatz_reports: list[dict[str, object]] = []
        holds: bool = True
        for kind in kinds:
            payload, ansatz_holds = AnsatzAnalysis(AnsatzSpec(graph, kind, extra_z), config).run()
            ansatz_reports.append(payload)
            holds = holds and ansatz_holds

        table: MultiplicityTable = Multiplicities.multiplicity_table(graph, group)
        bounds: TrivialBounds = CycleIdentities.trivial_bounds(graph, group)
        payload: dict[str, object] = {
            "graph": GraphIO.to_dict(graph),
            "automorphisms": [g.cycle_notation() for g in group.elements],
            "orbits": orbits.one_based(),
            "ansatze": ansatz_reports,
            "multiplicities": table.to_dict(),
            "trivial_bounds": bounds.to_dict(),
        }
        if graph.is_connected():
            hierarchy = Hierarchy.check(graph, config)
            payload["hierarchy"] = hierarchy.to_dict()
            holds = holds and hierarchy.holds
        return CommandResult("report", payload, holds and bounds.holds)

    @classmethod
    def saturate(cls, graph: Graph) -> CommandResult:
        saturated: Graph = EdgeSaturation.saturate(graph)
        payload: dict[str, object] = {
            "graph": GraphIO.to_dict(graph),
            "saturated": GraphIO.to_dict(saturated),
            "complete": EdgeSaturation.is_complete(saturated),
            "complete_bipartite": EdgeSaturation.is_complete_bipartite(saturated),
        }
        return CommandResult("saturate", payload, bool(payload["complete"] or payload["complete_bipartite"]))

    @classmethod
    def characters(cls, graph: Graph, config: RunConfig | None = None) -> CommandResult:
        group: PermGroup = RefinementSearch(graph).automorphism_group()
        table: MultiplicityTable = Multiplicities.multiplicity_table(graph, group)
        bounds: TrivialBounds = CycleIdentities.trivial_bounds(graph, group)

        duality: bool | None = None
        if graph.n <= cls.max_duality_qubits:
            duality = Multiplicities.duality_holds(table, Multiplicities.u_nat_decomposition(graph, config))
        else:
            logger.info(f"skipping the duality check above {cls.max_duality_qubits} vertices")

        payload: dict[str, object] = {
            "graph": GraphIO.to_dict(graph),
            "group_order": group.order,
            "abelian": group.is_abelian(),
            "multiplicities": table.to_dict(),
            "trivial_bounds": bounds.to_dict(),
            "duality": duality,
        }
        return CommandResult("characters", payload, bounds.holds and duality is not False)
