#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from .ansatz_kind import AnsatzKind
from .ansatz_spec import AnsatzSpec
from ..errors.input_error import InputError
from ..graphs.graph import Graph
from ..graphs.graph_orbits import GraphOrbits
from ..graphs.refinement_search import RefinementSearch
from ..pauli.pauli_string import PauliString
from ..pauli.pauli_vector import PauliVector
from ..utils.run_config import RunConfig


class Generators:
    """the generator lists of the four ansätze, problem terms first and mixer terms second"""

    @classmethod
    def of(cls, spec: AnsatzSpec, config: RunConfig | None = None) -> list[PauliVector]:
        if spec.kind != AnsatzKind.FREE and not spec.graph.is_connected():
            raise InputError("graph must be connected")

        match spec.kind:
            case AnsatzKind.FREE:
                generators: list[PauliVector] = cls.free(spec.graph)
            case AnsatzKind.STANDARD:
                generators = cls.standard(spec.graph)
            case AnsatzKind.ORBIT:
                generators = cls.orbit(spec.graph)
            case AnsatzKind.NATURAL:
                # lazy import, the natural algebra itself is built from the free generators
                from .natural_algebra import NaturalAlgebra

                generators = NaturalAlgebra.natural_basis(spec.graph, config=config).basis.rows

        return generators + [PauliVector.from_string(cls.z(spec.n, w)) for w in spec.extra_z]

    @classmethod
    def zz(cls, n: int, u: int, v: int) -> PauliString:
        return PauliString.from_letters(n, {u: "Z", v: "Z"})

    @classmethod
    def x(cls, n: int, v: int) -> PauliString:
        return PauliString.from_letters(n, {v: "X"})

    @classmethod
    def z(cls, n: int, v: int) -> PauliString:
        return PauliString.from_letters(n, {v: "Z"})

    @classmethod
    def free(cls, graph: Graph) -> list[PauliVector]:
        problem: list[PauliVector] = [PauliVector.from_string(cls.zz(graph.n, u, v)) for u, v in graph.edges]
        mixers: list[PauliVector] = [PauliVector.from_string(cls.x(graph.n, v)) for v in range(graph.n)]
        return problem + mixers

    @classmethod
    def problem_hamiltonian(cls, graph: Graph) -> PauliVector:
        return PauliVector.sum_of(graph.n, (cls.zz(graph.n, u, v) for u, v in graph.edges))

    @classmethod
    def mixer_hamiltonian(cls, n: int) -> PauliVector:
        return PauliVector.sum_of(n, (cls.x(n, v) for v in range(n)))

    @classmethod
    def standard(cls, graph: Graph) -> list[PauliVector]:
        return [cls.problem_hamiltonian(graph), cls.mixer_hamiltonian(graph.n)]

    @classmethod
    def orbit(cls, graph: Graph) -> list[PauliVector]:
        orbits: GraphOrbits = GraphOrbits.of(graph, RefinementSearch(graph).automorphism_group())
        problem: list[PauliVector] = [
            PauliVector.sum_of(graph.n, (cls.zz(graph.n, u, v) for u, v in orbit)) for orbit in orbits.edge_orbits
        ]
        mixers: list[PauliVector] = [
            PauliVector.sum_of(graph.n, (cls.x(graph.n, v) for v in orbit)) for orbit in orbits.vertex_orbits
        ]
        return problem + mixers
