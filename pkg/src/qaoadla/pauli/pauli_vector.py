#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Iterable
from collections.abc import Mapping
from fractions import Fraction

from .coefficient_mode import CoefficientMode
from .pauli_string import PauliString
from ..errors.algebra_error import AlgebraError

Coefficient = Fraction | float
Number = int | Fraction | float


class PauliVector:
    """a sparse real combination of i * pauli strings.

    the vector {P: c} stands for the lie algebra element sum_P c * iP, the factor i is never stored.
    exact vectors carry fractions, float vectors carry doubles, and the two never mix.
    """

    __slots__ = ("n", "terms", "mode")

    def __init__(
        self, n: int, terms: Mapping[PauliString, Number] | None = None, mode: CoefficientMode = CoefficientMode.EXACT
    ):
        self.n: int = n
        self.mode: CoefficientMode = mode
        self.terms: dict[PauliString, Coefficient] = {}

        for string, value in (terms or {}).items():
            if string.n != n:
                raise AlgebraError(f"string {string.label} does not act on {n} qubits")
            coefficient: Coefficient = self._coerce(value)
            if coefficient != 0:
                self.terms[string] = coefficient

    def _coerce(self, value: Number) -> Coefficient:
        if self.mode == CoefficientMode.FLOAT:
            return float(value)
        if isinstance(value, float):
            raise AlgebraError(f"float coefficient {value} in an exact vector")
        return Fraction(value)

    @classmethod
    def from_string(
        cls, string: PauliString, coefficient: Number = 1, mode: CoefficientMode = CoefficientMode.EXACT
    ) -> "PauliVector":
        return cls(string.n, {string: coefficient}, mode)

    @classmethod
    def from_label(cls, label: str, coefficient: Number = 1) -> "PauliVector":
        return cls.from_string(PauliString.from_label(label), coefficient)

    @classmethod
    def from_labels(cls, labels: Mapping[str, Number], mode: CoefficientMode = CoefficientMode.EXACT) -> "PauliVector":
        """construct a vector like {'XI': 1, 'IX': 1}"""
        strings: dict[PauliString, Number] = {PauliString.from_label(k): v for k, v in labels.items()}
        n: int = next(iter(strings)).n if strings else 1
        return cls(n, strings, mode)

    @classmethod
    def sum_of(
        cls,
        n: int,
        strings: Iterable[PauliString],
        coefficient: Number = 1,
        mode: CoefficientMode = CoefficientMode.EXACT,
    ) -> "PauliVector":
        terms: dict[PauliString, Number] = {}
        for string in strings:
            terms[string] = terms.get(string, 0) + coefficient
        return cls(n, terms, mode)

    @classmethod
    def zero(cls, n: int, mode: CoefficientMode = CoefficientMode.EXACT) -> "PauliVector":
        return cls(n, {}, mode)

    def _check(self, other: "PauliVector") -> None:
        if self.n != other.n:
            raise AlgebraError(f"qubit count mismatch: {self.n} vs {other.n}")
        if self.mode != other.mode:
            raise AlgebraError(f"coefficient mode mismatch: {self.mode.name} vs {other.mode.name}")

    def commutator(self, other: "PauliVector") -> "PauliVector":
        """the element [self, other], again as a real combination of i * strings.

        for single strings [iP, iQ] is zero when P and Q commute, and otherwise -2 i^(k - 1) * iR for PQ = i^k R.
        """
        self._check(other)
        result: dict[PauliString, Coefficient] = {}
        for p, a in self.terms.items():
            for q, b in other.terms.items():
                if p.commutes_with(q):
                    continue
                # anticommuting strings have an odd product phase
                k, r = p.multiply(q)
                value = -2 * a * b if k == 1 else 2 * a * b
                result[r] = result.get(r, 0) + value
        return PauliVector(self.n, result, self.mode)

    def scale(self, factor: Number) -> "PauliVector":
        return PauliVector(self.n, {s: c * self._coerce(factor) for s, c in self.terms.items()}, self.mode)

    def to_float(self) -> "PauliVector":
        return PauliVector(self.n, {s: float(c) for s, c in self.terms.items()}, CoefficientMode.FLOAT)

    def coefficient(self, string: PauliString) -> Coefficient:
        return self.terms.get(string, self._coerce(0))

    def strings(self) -> list[PauliString]:
        return sorted(self.terms)

    def is_zero(self, tolerance: float = 0.0) -> bool:
        return self.max_abs() <= tolerance

    def max_abs(self) -> float:
        return max((abs(float(c)) for c in self.terms.values()), default=0.0)

    def commutes_with_all_x(self) -> bool:
        return all(s.commutes_with_all_x() for s in self.terms)

    def __add__(self, other: "PauliVector") -> "PauliVector":
        self._check(other)
        terms: dict[PauliString, Coefficient] = dict(self.terms)
        for s, c in other.terms.items():
            terms[s] = terms.get(s, 0) + c
        return PauliVector(self.n, terms, self.mode)

    def __neg__(self) -> "PauliVector":
        return self.scale(-1)

    def __sub__(self, other: "PauliVector") -> "PauliVector":
        return self + (-other)

    def __mul__(self, factor: Number) -> "PauliVector":
        return self.scale(factor)

    __rmul__ = __mul__

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if type(other) != PauliVector:
            return False
        return self.n == other.n and self.mode == other.mode and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "PauliVector(0)"
        parts: list[str] = [f"{c}*i{s.label}" for s, c in sorted(self.terms.items())]
        return f"PauliVector({' + '.join(parts)})"
