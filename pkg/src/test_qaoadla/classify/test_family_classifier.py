#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

import numpy as np

from qaoadla.classify.family import Family
from qaoadla.classify.family_classifier import FamilyClassifier
from qaoadla.errors.input_error import InputError
from qaoadla.graphs.graph import Graph
from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.graphs.graph_enumerator import GraphEnumerator
from qaoadla.lie.generators import Generators
from qaoadla.pauli.dense import Dense
from qaoadla.pauli.pauli_string import PauliString


class TestFamilyClassifier(unittest.TestCase):
    def test_families(self):
        cases: list[tuple[Graph, Family, int]] = [
            (GraphFamilies.path(4), Family.PATH, 28),
            (GraphFamilies.cycle(3), Family.CYCLE, 30),
            (GraphFamilies.cycle(4), Family.CYCLE, 56),
            (GraphFamilies.star(3), Family.BIPARTITE_ODD_ODD, 72),
            (GraphFamilies.complete_bipartite(2, 3), Family.BIPARTITE_EVEN_ODD, 255),
            (GraphFamilies.complete_bipartite(2, 4), Family.BIPARTITE_EVEN_EVEN, 992),
            (GraphFamilies.house(), Family.ARCHETYPAL, 510),
        ]
        for graph, family, dim in cases:
            report = FamilyClassifier.classify(graph)
            self.assertEqual((family, dim), (report.family, report.dim_free), graph)

    def test_iso_types(self):
        self.assertEqual("so(8)", FamilyClassifier.classify(GraphFamilies.path(4)).iso_type)
        self.assertEqual("su(16)+su(16)", FamilyClassifier.classify(GraphFamilies.house()).iso_type)

    def test_report_dict(self):
        report = FamilyClassifier.classify(GraphFamilies.house()).to_dict()
        self.assertEqual("archetypal", report["family"])
        self.assertEqual(510, report["dim_free"])
        self.assertIsNone(report["parts"])

    def test_invalid_graphs(self):
        with self.assertRaises(InputError):
            FamilyClassifier.classify(Graph(4, [(0, 1), (2, 3)]))
        with self.assertRaises(InputError):
            FamilyClassifier.classify(Graph(1))

    def test_predicate_counts(self):
        # the predicate picks exactly dim_free strings for every connected graph with up to four vertices
        enumerator: GraphEnumerator = GraphEnumerator()
        for n in range(2, 5):
            for graph in enumerator.connected_graphs(n):
                report = FamilyClassifier.classify(graph)
                self.assertEqual(report.dim_free, FamilyClassifier.count_free_basis(graph), graph)

    def test_predicate_examples(self):
        path: Graph = GraphFamilies.path(3)
        self.assertTrue(FamilyClassifier.free_basis_predicate(path, PauliString.from_label("ZXY")))
        self.assertTrue(FamilyClassifier.free_basis_predicate(path, PauliString.from_label("IXI")))
        self.assertFalse(FamilyClassifier.free_basis_predicate(path, PauliString.from_label("XXX")))
        self.assertFalse(FamilyClassifier.free_basis_predicate(path, PauliString.from_label("ZIZ")))

    def test_nat_closed_forms(self):
        self.assertEqual(16, FamilyClassifier.nat_dim_closed_form(GraphFamilies.path(4)))
        self.assertEqual(14, FamilyClassifier.nat_dim_closed_form(GraphFamilies.cycle(5)))
        complete: list[int | None] = [
            FamilyClassifier.nat_dim_closed_form(GraphFamilies.complete(n)) for n in range(3, 7)
        ]
        self.assertEqual([8, 17, 26, 42], complete)
        self.assertIsNone(FamilyClassifier.nat_dim_closed_form(GraphFamilies.house()))

    def test_bipartite_form_witness(self):
        # S H + H^t S = 0 for every free generator H of a connected bipartite graph
        for graph in (GraphFamilies.path(4), GraphFamilies.star(3), GraphFamilies.complete_bipartite(2, 3)):
            witness = FamilyClassifier.bipartite_form_witness(graph)
            form: np.ndarray = Dense.string_matrix(witness.string)
            self.assertEqual(np.allclose(form, form.T), witness.symmetric)
            for generator in Generators.free(graph):
                h: np.ndarray = Dense.matrix(generator)
                self.assertTrue(np.allclose(form @ h + h.T @ form, 0))

        with self.assertRaises(InputError):
            FamilyClassifier.bipartite_form_witness(GraphFamilies.house())
