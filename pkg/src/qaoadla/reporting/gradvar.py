#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import csv
import io
import logging

import numpy as np

from .command_result import CommandResult
from .gradvar_row import GradvarRow
from ..classify.family import Family
from ..classify.family_classifier import FamilyClassifier
from ..graphs.graph import Graph
from ..graphs.graph_io import GraphIO
from ..lie.ansatz_kind import AnsatzKind
from ..lie.ansatz_spec import AnsatzSpec
from ..simulator.barren_plateau import BarrenPlateau
from ..simulator.variance_prediction import VariancePrediction
from ..simulator.gradient_stats import GradientStats
from ..simulator.parameter_domain import ParameterDomain
from ..simulator.variance_survey import VarianceSurvey
from ..utils.run_config import RunConfig

logger = logging.getLogger(__name__)


class Gradvar:
    """gradient variance tables over graphs, with the deep circuit prediction next to the sampled value"""

    csv_header: list[str] = ["n", "graph6", "edges", "variance", "prediction", "bound"]

    @classmethod
    def row(
        cls,
        graph: Graph,
        kind: AnsatzKind,
        layers: int,
        samples: int,
        config: RunConfig,
        normalize: bool = False,
        domain: ParameterDomain = ParameterDomain.PI,
    ) -> GradvarRow:
        stats: GradientStats = VarianceSurvey.run(AnsatzSpec(graph, kind), layers, samples, config, normalize, domain)
        prediction: VariancePrediction | None = None
        if graph.n > 3 and graph.is_connected() and FamilyClassifier.classify(graph).family == Family.ARCHETYPAL:
            prediction = BarrenPlateau.variance_prediction(graph)
        logger.info(f"n={graph.n}: gradient variance {stats.mean_variance:.6g}")
        return GradvarRow(
            GraphIO.to_graph6(graph),
            graph.n,
            graph.edge_count(),
            stats,
            prediction.value if prediction else None,
            prediction.bound if prediction else None,
        )

    @classmethod
    def slope(cls, rows: list[GradvarRow]) -> float | None:
        """least squares slope of log2 variance against n"""
        points: list[GradvarRow] = [r for r in rows if r.variance > 0]
        if len({r.n for r in points}) < 2:
            return None
        return float(np.polyfit([r.n for r in points], [r.log2_variance for r in points], 1)[0])

    @classmethod
    def run(
        cls,
        graphs: list[Graph],
        kind: AnsatzKind,
        layers: int,
        samples: int,
        config: RunConfig | None = None,
        normalize: bool = False,
        domain: ParameterDomain = ParameterDomain.PI,
    ) -> CommandResult:
        config = config or RunConfig()
        # samples already run in parallel, graphs are processed in order
        rows: list[GradvarRow] = [cls.row(g, kind, layers, samples, config, normalize, domain) for g in graphs]
        payload: dict[str, object] = {
            "ansatz": kind.value,
            "layers": layers,
            "samples": samples,
            "seed": config.seed,
            "normalized": normalize,
            "domain": domain.value,
            "slope": cls.slope(rows),
            "rows": [r.to_dict() for r in rows],
        }
        return CommandResult("gradvar", payload)

    @classmethod
    def to_csv(cls, result: CommandResult) -> str:
        buffer: io.StringIO = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(cls.csv_header)
        rows = result.payload["rows"]
        assert isinstance(rows, list)
        for row in rows:
            writer.writerow([row[key] if key != "variance" else repr(row[key]) for key in cls.csv_header])
        return buffer.getvalue()
