#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import cmath

import numpy as np
from scipy.linalg import eigh

from .group_character import GroupCharacter
from ..errors.algebra_error import AlgebraError
from ..errors.numerical_error import NumericalError
from ..graphs.perm_group import PermGroup
from ..graphs.permutation import Permutation


class AbelianCharacters:
    """all irreducible characters of an abelian group, read off the joint eigenvectors of its regular representation"""

    seed: int = 0

    @classmethod
    def of(cls, group: PermGroup) -> list[GroupCharacter]:
        if not group.is_abelian():
            raise AlgebraError("only abelian groups have one-dimensional characters only")

        elements: list[Permutation] = group.elements
        index: dict[Permutation, int] = {g: i for i, g in enumerate(elements)}
        regular: list[np.ndarray] = [cls._regular(g, elements, index) for g in elements]

        # a random hermitian element of the group algebra has simple eigenvalues
        rng: np.random.Generator = np.random.default_rng(cls.seed)
        combination: np.ndarray = np.zeros((len(elements), len(elements)), dtype=complex)
        for r in regular:
            combination += rng.standard_normal() * (r + r.T) + 1j * rng.standard_normal() * (r - r.T)
        _, vectors = eigh(combination)

        tables: list[tuple[complex, ...]] = []
        for vector in vectors.T:
            tables.append(tuple(cls._snap(np.vdot(vector, r @ vector), g.order()) for g, r in zip(elements, regular)))
        if len(set(tables)) != len(elements):
            raise NumericalError("regular representation did not split into distinct characters")
        return cls._label(elements, tables)

    @classmethod
    def _regular(cls, g: Permutation, elements: list[Permutation], index: dict[Permutation, int]) -> np.ndarray:
        matrix: np.ndarray = np.zeros((len(elements), len(elements)))
        for h in elements:
            matrix[index[g.compose(h)], index[h]] = 1.0
        return matrix

    @classmethod
    def _snap(cls, value: complex, order: int) -> complex:
        # character values are roots of unity of the element order
        k: int = round(cmath.phase(value) * order / (2 * cmath.pi)) % order
        root: complex = cmath.exp(2j * cmath.pi * k / order)
        if abs(root - value) > 1e-6:
            raise NumericalError(f"character value {value} is not a root of unity of order {order}")
        return complex(round(root.real, 12), round(root.imag, 12))

    @classmethod
    def _label(cls, elements: list[Permutation], tables: list[tuple[complex, ...]]) -> list[GroupCharacter]:
        def key(table: tuple[complex, ...]) -> tuple[float, ...]:
            return tuple(x for value in table for x in (-value.real, -value.imag))

        # the trivial character sorts first
        tables = sorted(tables, key=key)
        characters: list[GroupCharacter] = []
        for k, table in enumerate(tables):
            if k == 0:
                label = "t"
            elif len(tables) == 2:
                label = "s"
            else:
                label = f"x{k}"
            characters.append(GroupCharacter(label, dict(zip(elements, table))))
        return characters
