#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging

from .graph import Graph
from .perm_group import PermGroup
from .permutation import Permutation
from ..errors.resource_error import ResourceError

logger = logging.getLogger(__name__)

Cells = list[list[int]]
Invariant = tuple[tuple[int, tuple[int, ...]], ...]


class RefinementSearch:
    """individualization-refinement search over ordered vertex partitions.

    every node of the search tree is an equitable ordered partition; a child individualizes one vertex of the
    first non-singleton cell. the leaves are vertex orderings, which give both the automorphism group and
    a canonical form (the largest adjacency certificate over all leaves).
    """

    # the automorphism group is materialized, so the graphs stay small
    max_vertices: int = 12

    def __init__(self, graph: Graph):
        if graph.n > self.max_vertices:
            raise ResourceError(f"automorphism search is limited to {self.max_vertices} vertices, got {graph.n}")

        self.graph: Graph = graph
        self._group: PermGroup | None = None
        self._canonical: tuple[int, tuple[int, ...]] | None = None

    def _refine(self, cells: Cells) -> Cells:
        """split cells by neighbor counts into splitter cells until the partition is equitable"""
        while True:
            split: Cells | None = self._split_once(cells)
            if split is None:
                return cells
            cells = split

    def _split_once(self, cells: Cells) -> Cells | None:
        for splitter in cells:
            members: frozenset[int] = frozenset(splitter)
            for index, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                counts: dict[int, int] = {v: len(self.graph.neighbors(v) & members) for v in cell}
                values: list[int] = sorted(set(counts.values()))
                if len(values) > 1:
                    # the new cells are ordered by ascending count, vertices keep their relative order
                    new_cells: Cells = [[v for v in cell if counts[v] == c] for c in values]
                    return cells[:index] + new_cells + cells[index + 1 :]
        return None

    def _individualize(self, cells: Cells, index: int, vertex: int) -> Cells:
        rest: list[int] = [v for v in cells[index] if v != vertex]
        return self._refine(cells[:index] + [[vertex], rest] + cells[index + 1 :])

    def _target(self, cells: Cells) -> int | None:
        return next((i for i, cell in enumerate(cells) if len(cell) > 1), None)

    def _invariant(self, cells: Cells) -> Invariant:
        # cell sizes and the quotient matrix of neighbor counts, well defined for equitable partitions
        sets: list[frozenset[int]] = [frozenset(cell) for cell in cells]
        return tuple((len(cell), tuple(len(self.graph.neighbors(cell[0]) & s) for s in sets)) for cell in cells)

    def _certificate(self, ordering: list[int]) -> int:
        """the upper triangle adjacency bits in graph6 order after relabeling ordering[i] to i"""
        certificate: int = 0
        for j in range(1, len(ordering)):
            for i in range(j):
                certificate = (certificate << 1) | self.graph.has_edge(ordering[i], ordering[j])
        return certificate

    def automorphism_group(self) -> PermGroup:
        if self._group is not None:
            return self._group

        # follow the leftmost path down to the first leaf
        cells: Cells = self._refine([list(range(self.graph.n))])
        path: list[tuple[Invariant, int]] = []
        while (target := self._target(cells)) is not None:
            path.append((self._invariant(cells), target))
            cells = self._individualize(cells, target, cells[target][0])
        first_leaf: list[int] = [cell[0] for cell in cells]
        invariants: list[Invariant] = [invariant for invariant, _ in path] + [self._invariant(cells)]

        # search all leaves that match the leftmost path in every invariant
        found: list[Permutation] = []
        self._match(self._refine([list(range(self.graph.n))]), 0, path, invariants, first_leaf, found)

        self._group = PermGroup(self.graph.n, found)
        logger.debug(f"automorphism group of {self.graph} has order {self._group.order}")
        return self._group

    def _match(
        self,
        cells: Cells,
        depth: int,
        path: list[tuple[Invariant, int]],
        invariants: list[Invariant],
        first_leaf: list[int],
        found: list[Permutation],
    ) -> None:
        if self._invariant(cells) != invariants[depth]:
            return

        if depth == len(path):
            image: list[int] = [0] * self.graph.n
            for u, v in zip(first_leaf, (cell[0] for cell in cells)):
                image[u] = v
            if all(self.graph.has_edge(image[u], image[v]) for u, v in self.graph.edges):
                found.append(Permutation(image))
                if len(found) > PermGroup.max_order:
                    raise ResourceError(f"automorphism group order exceeds {PermGroup.max_order}")
            return

        target: int = path[depth][1]
        for vertex in cells[target]:
            self._match(self._individualize(cells, target, vertex), depth + 1, path, invariants, first_leaf, found)

    def canonical_ordering(self) -> tuple[int, tuple[int, ...]]:
        """(certificate, ordering) of the largest certificate, ordering[i] is the vertex relabeled to i"""
        if self._canonical is None:
            group: PermGroup = self.automorphism_group()
            best: list[tuple[int, tuple[int, ...]]] = []
            self._canonical_search(self._refine([list(range(self.graph.n))]), [], group, best)
            self._canonical = best[0]
        return self._canonical

    def _canonical_search(
        self, cells: Cells, prefix: list[int], group: PermGroup, best: list[tuple[int, tuple[int, ...]]]
    ) -> None:
        target: int | None = self._target(cells)
        if target is None:
            ordering: tuple[int, ...] = tuple(cell[0] for cell in cells)
            certificate: int = self._certificate(list(ordering))
            if not best or certificate > best[0][0]:
                best[:] = [(certificate, ordering)]
            return

        # children in one orbit of the prefix stabilizer have subtrees with the same certificates
        stabilizer: list[Permutation] = group.stabilizer(prefix)
        covered: set[int] = set()
        for vertex in cells[target]:
            if vertex in covered:
                continue
            covered.update(g(vertex) for g in stabilizer)
            self._canonical_search(self._individualize(cells, target, vertex), prefix + [vertex], group, best)

    def canonical_graph(self) -> Graph:
        _, ordering = self.canonical_ordering()
        position: list[int] = [0] * self.graph.n
        for i, vertex in enumerate(ordering):
            position[vertex] = i
        return self.graph.relabel(position)

    def certificate(self) -> tuple[int, int]:
        """a key equal for two graphs exactly when they are isomorphic"""
        return self.graph.n, self.canonical_ordering()[0]
