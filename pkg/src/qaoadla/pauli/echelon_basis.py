#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Iterable
from fractions import Fraction
from math import gcd
from math import lcm

from .coefficient_mode import CoefficientMode
from .pauli_string import PauliString
from .pauli_vector import PauliVector
from ..errors.algebra_error import AlgebraError

# integer rows in exact mode, float rows otherwise
Row = dict


class EchelonBasis:
    """a reduced, pivot ordered spanning set of pauli vectors.

    rows are kept as sparse maps from string codes to coefficients.
    exact rows hold integers with content 1 and a positive pivot entry (fraction-free elimination),
    float rows are normalized to a unit pivot entry.
    every pivot code appears in its own row only, so a vector is reduced in a single pass over its codes.
    """

    # relative tolerance of the float zero test
    tolerance: float = 1e-9

    def __init__(self, n: int, mode: CoefficientMode = CoefficientMode.EXACT):
        self.n: int = n
        self.mode: CoefficientMode = mode
        self._rows: dict[int, Row] = {}
        self._vectors: list[PauliVector] | None = None

    @classmethod
    def spanned_by(
        cls, n: int, vectors: Iterable[PauliVector], mode: CoefficientMode = CoefficientMode.EXACT
    ) -> "EchelonBasis":
        basis: EchelonBasis = cls(n, mode)
        for vector in vectors:
            basis.insert(vector)
        return basis

    def dim(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[PauliString]:
        return [PauliString.from_code(self.n, code) for code in sorted(self._rows)]

    @property
    def rows(self) -> list[PauliVector]:
        """the rows as pauli vectors, sorted by pivot"""
        if self._vectors is None:
            self._vectors = [self._to_vector(self._rows[code]) for code in sorted(self._rows)]
        return self._vectors

    def copy(self) -> "EchelonBasis":
        other: EchelonBasis = EchelonBasis(self.n, self.mode)
        other._rows = {code: dict(row) for code, row in self._rows.items()}
        return other

    def insert(self, vector: PauliVector) -> bool:
        """reduce the vector against the rows and insert the remainder when it is nonzero"""
        return self.insert_remainder(vector) is not None

    def insert_remainder(self, vector: PauliVector) -> PauliVector | None:
        """as insert, but returns the inserted (normalized) remainder, or None when nothing was added"""
        row: Row | None = self._reduced_row(vector)
        if row is None:
            return None

        if self.mode == CoefficientMode.EXACT:
            pivot: int = self._insert_exact(row)
        else:
            pivot: int = self._insert_float(row)
        self._vectors = None
        return self._to_vector(self._rows[pivot])

    def reduce(self, vector: PauliVector) -> PauliVector:
        """the remainder of the vector after elimination, zero when the vector lies in the span"""
        row: Row | None = self._reduced_row(vector)
        return self._to_vector(row) if row is not None else PauliVector.zero(self.n, self.mode)

    def remainder(self, vector: PauliVector) -> PauliVector:
        """the unscaled remainder v - sum_r (v[pivot_r] / r[pivot_r]) r, linear in v unlike reduce"""
        self._check(vector)
        terms: dict[int, Fraction | float] = {s.code: c for s, c in vector.terms.items()}
        for code in [c for c in terms if c in self._rows]:
            row: Row = self._rows[code]
            numerator = terms[code] if self.mode == CoefficientMode.FLOAT else Fraction(terms[code])
            factor = numerator / row[code]
            for other_code, value in row.items():
                terms[other_code] = terms.get(other_code, 0) - factor * value
            terms.pop(code)
        return PauliVector(self.n, {PauliString.from_code(self.n, c): v for c, v in terms.items()}, self.mode)

    def contains(self, vector: PauliVector) -> bool:
        return self._reduced_row(vector) is None

    def contains_all(self, vectors: Iterable[PauliVector]) -> bool:
        return all(self.contains(v) for v in vectors)

    def span_equals(self, other: "EchelonBasis") -> bool:
        return self.dim() == other.dim() and other.contains_all(self.rows)

    def _check(self, vector: PauliVector) -> None:
        if vector.n != self.n:
            raise AlgebraError(f"qubit count mismatch: basis has {self.n}, vector has {vector.n}")
        if vector.mode != self.mode:
            raise AlgebraError(f"coefficient mode mismatch: basis is {self.mode.name}, vector is {vector.mode.name}")

    def _reduced_row(self, vector: PauliVector) -> Row | None:
        self._check(vector)
        if self.mode == CoefficientMode.EXACT:
            return self._reduce_exact(self._exact_row(vector))
        return self._reduce_float({s.code: float(c) for s, c in vector.terms.items()}, vector.max_abs())

    def _exact_row(self, vector: PauliVector) -> dict[int, int]:
        # clear the denominators
        coefficients: list[Fraction] = [Fraction(c) for c in vector.terms.values()]
        scale: int = lcm(*(c.denominator for c in coefficients)) if coefficients else 1
        return {s.code: int(Fraction(c) * scale) for s, c in vector.terms.items()}

    def _reduce_exact(self, row: dict[int, int]) -> dict[int, int] | None:
        for code in [c for c in row if c in self._rows]:
            b: int = row.get(code, 0)
            if b == 0:
                continue
            pivot_row: dict[int, int] = self._rows[code]
            row = self._combine(row, pivot_row, pivot_row[code], b)
        return self._normalize_exact(row) if row else None

    def _combine(self, row: dict[int, int], pivot_row: dict[int, int], a: int, b: int) -> dict[int, int]:
        """returns (a * row - b * pivot_row) / gcd(a, b), which cancels the pivot entry"""
        g: int = gcd(a, b)
        a, b = a // g, b // g
        result: dict[int, int] = {code: a * value for code, value in row.items()}
        for code, value in pivot_row.items():
            updated: int = result.get(code, 0) - b * value
            if updated:
                result[code] = updated
            else:
                result.pop(code, None)
        return result

    def _normalize_exact(self, row: dict[int, int]) -> dict[int, int]:
        # content 1 and a positive pivot entry
        content: int = gcd(*row.values())
        if row[min(row)] < 0:
            content = -content
        return {code: value // content for code, value in row.items()}

    def _insert_exact(self, row: dict[int, int]) -> int:
        pivot: int = min(row)
        a: int = row[pivot]

        # eliminate the new pivot from all other rows
        for code, other in self._rows.items():
            b: int = other.get(pivot, 0)
            if b:
                self._rows[code] = self._normalize_exact(self._combine(other, row, a, b))
        self._rows[pivot] = row
        return pivot

    def _reduce_float(self, row: dict[int, float], scale: float) -> dict[int, float] | None:
        cutoff: float = self.tolerance * scale
        for code in [c for c in row if c in self._rows]:
            b: float = row.get(code, 0.0)
            if b == 0.0:
                continue
            for other_code, value in self._rows[code].items():
                row[other_code] = row.get(other_code, 0.0) - b * value
            row.pop(code, None)

        row = {code: value for code, value in row.items() if abs(value) > cutoff}
        return row or None

    def _insert_float(self, row: dict[int, float]) -> int:
        pivot: int = min(row)
        a: float = row[pivot]
        row = {code: value / a for code, value in row.items()}
        row[pivot] = 1.0

        # eliminate the new pivot from all other rows, dropping entries that cancel
        cutoff: float = self.tolerance
        for code, other in self._rows.items():
            b: float = other.get(pivot, 0.0)
            if b:
                updated: dict[int, float] = dict(other)
                for other_code, value in row.items():
                    updated[other_code] = updated.get(other_code, 0.0) - b * value
                updated.pop(pivot, None)
                self._rows[code] = {c: v for c, v in updated.items() if abs(v) > cutoff}
        self._rows[pivot] = row
        return pivot

    def _to_vector(self, row: Row) -> PauliVector:
        terms: dict[PauliString, int | float] = {PauliString.from_code(self.n, c): v for c, v in row.items()}
        return PauliVector(self.n, terms, self.mode)

    def __repr__(self) -> str:
        return f"EchelonBasis(n={self.n}, dim={self.dim()}, mode={self.mode.name})"
