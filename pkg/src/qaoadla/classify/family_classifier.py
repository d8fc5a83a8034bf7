#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass
from math import comb

from .family import Family
from .family_report import FamilyReport
from ..errors.algebra_error import AlgebraError
from ..errors.input_error import InputError
from ..graphs.graph import Graph
from ..graphs.graph_shape import GraphShape
from ..graphs.graph_shape import ShapeKind
from ..pauli.pauli_string import PauliString


@dataclass(frozen=True)
class FormWitness:
    """the string S with S H + H^t S = 0 for every free generator H of a connected bipartite graph"""

    string: PauliString
    symmetric: bool


class FamilyClassifier:
    """closed forms for the free-ansatz lie algebra of a connected graph.

    six families cover all connected graphs: paths, cycles, three bipartite families told apart by the
    parities of the part sizes, and the archetypal graphs.
    """

    @classmethod
    def classify(cls, graph: Graph) -> FamilyReport:
        if graph.n < 2:
            raise InputError("classification needs at least two vertices")
        shape: GraphShape = GraphShape.of(graph)
        if shape.kind == ShapeKind.DISCONNECTED:
            raise InputError("graph must be connected")

        n: int = graph.n
        half: int = 2 ** (n - 1)
        match shape.kind:
            case ShapeKind.PATH:
                return FamilyReport(Family.PATH, f"so({2 * n})", 2 * n * n - n, shape.parts)
            case ShapeKind.CYCLE:
                return FamilyReport(Family.CYCLE, f"so({2 * n})+so({2 * n})", 4 * n * n - 2 * n, shape.parts)
            case ShapeKind.BIPARTITE:
                assert shape.parts is not None
                return cls._bipartite(n, half, shape.parts)
            case _:
                return FamilyReport(Family.ARCHETYPAL, f"su({half})+su({half})", 2 ** (2 * n - 1) - 2)

    @classmethod
    def _bipartite(cls, n: int, half: int, parts: tuple[frozenset[int], frozenset[int]]) -> FamilyReport:
        odd_parts: int = sum(len(part) % 2 for part in parts)
        if odd_parts == 0:
            return FamilyReport(Family.BIPARTITE_EVEN_EVEN, f"so({half})+so({half})", 4 ** (n - 1) - half, parts)
        if odd_parts == 1:
            return FamilyReport(Family.BIPARTITE_EVEN_ODD, f"su({half})", 4 ** (n - 1) - 1, parts)
        return FamilyReport(Family.BIPARTITE_ODD_ODD, f"sp({half})+sp({half})", 4 ** (n - 1) + half, parts)

    @classmethod
    def free_basis_predicate(cls, graph: Graph, string: PauliString, report: FamilyReport | None = None) -> bool:
        """whether i times the string is one of the basis elements of the free-ansatz lie algebra"""
        if string.n != graph.n:
            raise AlgebraError(f"qubit count mismatch: graph has {graph.n} vertices, string has {string.n} qubits")
        report = report or cls.classify(graph)

        # the conditions shared by every family
        if not string.commutes_with_all_x() or string.is_identity() or string == PauliString.all_x(graph.n):
            return False

        match report.family:
            case Family.PATH:
                return cls._path_pattern(string.label, cls._walk(graph))
            case Family.CYCLE:
                return cls._cycle_pattern(string.label, cls._walk(graph))
            case Family.ARCHETYPAL:
                return True
            case _:
                assert report.parts is not None
                _, n_x, _, _ = string.letter_counts()
                _, _, first_y, first_z = string.letter_counts(report.parts[0])
                return (n_x + first_y + first_z) % 2 == 1

    @classmethod
    def _walk(cls, graph: Graph) -> list[int]:
        """the vertices of a path or cycle in walk order, starting at the smallest end (or at vertex 0)"""
        ends: list[int] = [v for v in range(graph.n) if graph.degree(v) == 1]
        walk: list[int] = [min(ends) if ends else 0]
        while len(walk) < graph.n:
            options: list[int] = sorted(graph.neighbors(walk[-1]) - set(walk))
            walk.append(options[0])
        return walk

    @classmethod
    def _path_pattern(cls, label: str, walk: list[int]) -> bool:
        # a single X, or a window with ends in {Y, Z}, X strictly inside and I outside
        letters: str = "".join(label[v] for v in walk)
        if letters.count("X") == 1 and letters.count("I") == len(letters) - 1:
            return True
        ends: list[int] = [i for i, letter in enumerate(letters) if letter in "YZ"]
        if len(ends) != 2:
            return False
        a, b = ends
        inside: str = letters[a + 1 : b]
        outside: str = letters[:a] + letters[b + 1 :]
        return set(inside) <= {"X"} and set(outside) <= {"I"}

    @classmethod
    def _cycle_pattern(cls, label: str, walk: list[int]) -> bool:
        # a single X, a single I with X elsewhere, or a cyclic arc with ends in {Y, Z} and X inside
        letters: str = "".join(label[v] for v in walk)
        n: int = len(letters)
        if letters.count("X") == 1 and letters.count("I") == n - 1:
            return True
        if letters.count("I") == 1 and letters.count("X") == n - 1:
            return True
        ends: list[int] = [i for i, letter in enumerate(letters) if letter in "YZ"]
        if len(ends) != 2:
            return False

        # either arc between the two ends may carry the X letters, the other one the I letters
        a, b = ends
        forward: str = letters[a + 1 : b]
        backward: str = letters[b + 1 :] + letters[:a]
        return (set(forward) <= {"X"} and set(backward) <= {"I"}) or (set(forward) <= {"I"} and set(backward) <= {"X"})

    @classmethod
    def count_free_basis(cls, graph: Graph) -> int:
        report: FamilyReport = cls.classify(graph)
        return sum(1 for string in cls.free_basis(graph, report))

    @classmethod
    def free_basis(cls, graph: Graph, report: FamilyReport | None = None) -> list[PauliString]:
        report = report or cls.classify(graph)
        strings = (PauliString.from_code(graph.n, code) for code in range(4**graph.n))
        return [s for s in strings if cls.free_basis_predicate(graph, s, report)]

    @classmethod
    def nat_dim_closed_form(cls, graph: Graph) -> int | None:
        """the natural-ansatz dimension for paths, cycles and complete graphs, None for other graphs"""
        shape: GraphShape = GraphShape.of(graph)
        n: int = graph.n
        if shape.kind == ShapeKind.PATH:
            return n * n
        if shape.kind == ShapeKind.CYCLE:
            return 3 * (n - 1) + 2
        if n >= 3 and graph.edge_count() == n * (n - 1) // 2:
            # twice the dimension to stay integral: C(n+3, 3) - 4, or C(n+3, 3) + n/2 - 3
            doubled: int = comb(n + 3, 3) - 4 if n % 2 else comb(n + 3, 3) + n // 2 - 3
            return doubled // 2
        return None

    @classmethod
    def bipartite_form_witness(cls, graph: Graph) -> FormWitness:
        shape: GraphShape = GraphShape.of(graph)
        if shape.kind == ShapeKind.DISCONNECTED or shape.parts is None:
            raise InputError("the form witness needs a connected bipartite graph")
        letters: dict[int, str] = {v: "Z" for v in shape.parts[0]} | {v: "Y" for v in shape.parts[1]}
        return FormWitness(PauliString.from_letters(graph.n, letters), len(shape.parts[1]) % 2 == 0)
