#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import unittest

from qaoadla.graphs.graph_families import GraphFamilies
from qaoadla.lie.algebra_center import AlgebraCenter
from qaoadla.lie.algebra_result import AlgebraResult
from qaoadla.lie.ansatz_kind import AnsatzKind
from qaoadla.lie.center_bounds import CenterBounds
from qaoadla.lie.generators import Generators
from qaoadla.lie.lie_closure import LieClosure
from qaoadla.pauli.echelon_basis import EchelonBasis
from qaoadla.pauli.pauli_vector import PauliVector
from qaoadla.reporting.fixtures import Fixtures
from qaoadla.symmetry.commutant import Commutant


class TestAlgebraCenter(unittest.TestCase):
    def test_house(self):
        house = GraphFamilies.house()
        for generators, center_dim in ((Generators.free(house), 0), (Generators.standard(house), 2)):
            algebra: AlgebraResult = LieClosure.of(generators)
            commutant = Commutant.of(5, generators)
            center: EchelonBasis = AlgebraCenter.center_of_algebra(algebra, commutant.basis)
            self.assertEqual(center_dim, center.dim())
            for row in center.rows:
                self.assertTrue(algebra.basis.contains(row))

    def test_fixtures(self):
        for name, fixture in Fixtures.generator_sets().items():
            algebra: AlgebraResult = LieClosure.of(fixture.generators)
            commutant = Commutant.of(fixture.n, fixture.generators)
            center: EchelonBasis = AlgebraCenter.center_of_algebra(algebra, commutant.basis)
            for row in center.rows:
                self.assertTrue(algebra.basis.contains(row), name)
                for generator in fixture.generators:
                    self.assertTrue(row.commutator(generator).is_zero(1e-9), name)

    def test_abelian_algebra_is_its_own_center(self):
        generators: list[PauliVector] = [PauliVector.from_label("ZZ"), PauliVector.from_label("XX")]
        algebra: AlgebraResult = LieClosure.of(generators)
        center: EchelonBasis = AlgebraCenter.center_of_algebra(algebra, Commutant.of(2, generators).basis)
        self.assertEqual(2, center.dim())

    def test_bounds(self):
        bounds: CenterBounds = AlgebraCenter.center_bounds(2, 2, 6, AnsatzKind.STANDARD)
        self.assertTrue(bounds.holds)
        self.assertEqual({"generator_bound": True, "subalgebra_bound": True, "standard_bound": True}, bounds.to_dict())

        extra: CenterBounds = AlgebraCenter.center_bounds(3, 4, 4, AnsatzKind.STANDARD, extra_z=True)
        self.assertIsNone(extra.subalgebra_bound_holds)
        self.assertIsNone(extra.standard_bound_holds)
        self.assertTrue(extra.holds)

        self.assertFalse(AlgebraCenter.center_bounds(3, 11, 4, AnsatzKind.FREE).holds)
