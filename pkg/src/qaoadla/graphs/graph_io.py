#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import json
from enum import Enum

import networkx as nx

from .graph import Graph
from ..errors.input_error import InputError


class GraphFormat(Enum):
    GRAPH6 = "graph6"
    JSON = "json"


class GraphIO:
    """reading and writing graphs as graph6 text or as edge-list json"""

    # graph6 stores n in a single byte for n <= 62
    max_graph6_vertices: int = 62

    @classmethod
    def parse(cls, text: str, graph_format: GraphFormat | None = None) -> Graph:
        text = text.strip()
        # without an explicit format, json objects start with a brace
        if graph_format is None:
            graph_format = GraphFormat.JSON if text.startswith("{") else GraphFormat.GRAPH6

        match graph_format:
            case GraphFormat.GRAPH6:
                return cls.parse_graph6(text)
            case GraphFormat.JSON:
                return cls.parse_json(text)

    @classmethod
    def parse_graph6(cls, text: str) -> Graph:
        data: bytes = text.strip().removeprefix(">>graph6<<").encode("ascii", errors="replace")
        if not data or not all(63 <= b <= 126 for b in data):
            raise InputError(f"malformed graph6 text '{text}'")
        if data[0] - 63 > cls.max_graph6_vertices:
            raise InputError(f"graph6 inputs are limited to {cls.max_graph6_vertices} vertices")

        # the expected length follows from the vertex count
        n: int = data[0] - 63
        expected: int = 1 + (n * (n - 1) // 2 + 5) // 6
        if len(data) != expected:
            raise InputError(f"graph6 text '{text}' has {len(data)} bytes, expected {expected} for n = {n}")

        try:
            graph: nx.Graph = nx.from_graph6_bytes(data)
        except nx.NetworkXError as e:
            raise InputError(f"malformed graph6 text '{text}': {e}")
        return Graph(n, list(graph.edges))

    @classmethod
    def parse_json(cls, text: str) -> Graph:
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed edge-list json: {e}")

        # validate the shape of the document before building the graph
        if not isinstance(document, dict) or "n" not in document or "edges" not in document:
            raise InputError('edge-list json must be an object with "n" and "edges"')
        n = document["n"]
        edges = document["edges"]
        if not isinstance(n, int) or not isinstance(edges, list):
            raise InputError('"n" must be an integer and "edges" a list of vertex pairs')
        if not all(isinstance(e, list) and len(e) == 2 and all(isinstance(v, int) for v in e) for e in edges):
            raise InputError("every edge must be a pair of integer vertices")
        return Graph.from_one_based(n, edges)

    @classmethod
    def to_graph6(cls, graph: Graph) -> str:
        return nx.to_graph6_bytes(graph.to_networkx(), nodes=list(range(graph.n)), header=False).decode().strip()

    @classmethod
    def to_json(cls, graph: Graph) -> str:
        return json.dumps({"n": graph.n, "edges": graph.one_based_edges()})

    @classmethod
    def to_dict(cls, graph: Graph) -> dict[str, object]:
        return {"graph6": cls.to_graph6(graph), "n": graph.n, "edges": graph.one_based_edges()}
