#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import json
from pathlib import Path

import numpy as np

from .fixture import Fixture
from ..graphs.graph import Graph
from ..graphs.graph_io import GraphIO
from ..pauli.dense import Dense
from ..pauli.pauli_vector import PauliVector


class Fixtures:
    """the checked-in generator sets and graphs of the data folder"""

    data_folder: Path = Path(__file__).parents[1] / "data"

    @classmethod
    def generator_sets(cls) -> dict[str, Fixture]:
        document: dict = json.loads((cls.data_folder / "fixtures.json").read_text())
        return {name: cls._fixture(name, entry) for name, entry in document.items()}

    @classmethod
    def _fixture(cls, name: str, entry: dict) -> Fixture:
        # irrational entries are given as dense matrices and force float coefficients
        if "matrices" in entry:
            generators: list[PauliVector] = [Dense.to_vector(np.array(m, dtype=complex)) for m in entry["matrices"]]
        else:
            generators = [PauliVector.from_labels(labels) for labels in entry["generators"]]
        return Fixture(name, entry["n"], generators, entry["dim"], entry["commutant_dim"], entry["center_dim"])

    @classmethod
    def house(cls) -> Graph:
        return GraphIO.parse_json((cls.data_folder / "house.json").read_text())
