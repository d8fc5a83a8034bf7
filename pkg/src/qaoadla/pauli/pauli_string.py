#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from collections.abc import Iterable
from collections.abc import Sequence

from ..errors.algebra_error import AlgebraError
from ..errors.input_error import InputError


class PauliString:
    """a tensor product of I, X, Y and Z letters, encoded as two bitmasks.

    qubit u (0-based) lives at bit n - 1 - u of both masks, so qubit 0 is the most significant bit,
    the same convention as the computational basis index of a state.
    the letter at a qubit is I = (0, 0), X = (1, 0), Z = (0, 1) and Y = (1, 1) for (x bit, z bit).
    the string itself is the hermitian operator i^{|x & z|} X^x Z^z.
    """

    __slots__ = ("n", "x_mask", "z_mask", "_hash")

    letters: str = "IXZY"

    def __init__(self, n: int, x_mask: int = 0, z_mask: int = 0):
        if n < 1:
            raise AlgebraError(f"a pauli string needs at least one qubit, got n = {n}")
        if (x_mask | z_mask) >> n:
            raise AlgebraError(f"masks {x_mask:#x}/{z_mask:#x} have bits outside of {n} qubits")

        self.n: int = n
        self.x_mask: int = x_mask
        self.z_mask: int = z_mask
        self._hash: int = hash((n, x_mask, z_mask))

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n)

    @classmethod
    def all_x(cls, n: int) -> "PauliString":
        return cls(n, (1 << n) - 1, 0)

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """parse a label like 'XIZY', the first letter belongs to qubit 0"""
        n: int = len(label)
        x_mask: int = 0
        z_mask: int = 0
        for u, letter in enumerate(label.upper()):
            if letter not in cls.letters:
                raise InputError(f"unknown pauli letter '{letter}' in '{label}'")
            code: int = cls.letters.index(letter)
            bit: int = 1 << (n - 1 - u)
            x_mask |= bit if code & 1 else 0
            z_mask |= bit if code & 2 else 0
        return cls(n, x_mask, z_mask)

    @classmethod
    def from_letters(cls, n: int, letters: dict[int, str]) -> "PauliString":
        """construct a string from a sparse {qubit: letter} map, all other qubits carry I"""
        label: list[str] = ["I"] * n
        for u, letter in letters.items():
            if not 0 <= u < n:
                raise InputError(f"qubit {u} is outside of the {n} qubits")
            label[u] = letter
        return cls.from_label("".join(label))

    @classmethod
    def from_code(cls, n: int, code: int) -> "PauliString":
        return cls(n, code & ((1 << n) - 1), code >> n)

    @property
    def code(self) -> int:
        """integer key with the same ordering as the string ordering within one qubit count"""
        return (self.z_mask << self.n) | self.x_mask

    @property
    def label(self) -> str:
        return "".join(self.letter(u) for u in range(self.n))

    def bit(self, u: int) -> int:
        return 1 << (self.n - 1 - u)

    def letter(self, u: int) -> str:
        bit: int = self.bit(u)
        x: int = 1 if self.x_mask & bit else 0
        z: int = 2 if self.z_mask & bit else 0
        return self.letters[x | z]

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0

    def y_count(self) -> int:
        return (self.x_mask & self.z_mask).bit_count()

    def multiply(self, other: "PauliString") -> tuple[int, "PauliString"]:
        """returns (k, R) with self * other = i^k R, k taken mod 4"""
        self._check_n(other)
        x: int = self.x_mask ^ other.x_mask
        z: int = self.z_mask ^ other.z_mask

        # collect the phases of both hermitian strings, the swap of Z^z1 past X^x2 and the phase of the result
        k: int = self.y_count() + other.y_count() + 2 * (self.z_mask & other.x_mask).bit_count()
        k -= (x & z).bit_count()
        return k % 4, PauliString(self.n, x, z)

    def commutes_with(self, other: "PauliString") -> bool:
        self._check_n(other)
        overlap: int = (self.x_mask & other.z_mask).bit_count() + (self.z_mask & other.x_mask).bit_count()
        return overlap % 2 == 0

    def commutes_with_all_x(self) -> bool:
        """whether the string commutes with X on every qubit, i.e. #Y + #Z is even"""
        return self.z_mask.bit_count() % 2 == 0

    def letter_counts(self, subset: Iterable[int] | None = None) -> tuple[int, int, int, int]:
        """returns (#I, #X, #Y, #Z), restricted to the given 0-based qubits when a subset is passed"""
        mask: int = (1 << self.n) - 1
        if subset is not None:
            mask = 0
            for u in subset:
                if not 0 <= u < self.n:
                    raise InputError(f"qubit {u} is outside of the {self.n} qubits")
                mask |= self.bit(u)

        x: int = self.x_mask & mask
        z: int = self.z_mask & mask
        n_y: int = (x & z).bit_count()
        n_x: int = x.bit_count() - n_y
        n_z: int = z.bit_count() - n_y
        return mask.bit_count() - n_x - n_y - n_z, n_x, n_y, n_z

    def permute(self, image: Sequence[int]) -> "PauliString":
        """moves the letter at qubit u to qubit image[u], for a 0-based permutation"""
        x_mask: int = 0
        z_mask: int = 0
        for u in range(self.n):
            bit: int = self.bit(u)
            target: int = self.bit(image[u])
            x_mask |= target if self.x_mask & bit else 0
            z_mask |= target if self.z_mask & bit else 0
        return PauliString(self.n, x_mask, z_mask)

    def without_first(self) -> "PauliString":
        """drop qubit 0, leaving a string on the remaining n - 1 qubits"""
        mask: int = (1 << (self.n - 1)) - 1
        return PauliString(self.n - 1, self.x_mask & mask, self.z_mask & mask)

    def _check_n(self, other: "PauliString") -> None:
        if self.n != other.n:
            raise AlgebraError(f"qubit count mismatch: {self.n} vs {other.n}")

    def sort_key(self) -> tuple[int, int, int]:
        return self.n, self.z_mask, self.x_mask

    def __lt__(self, other: "PauliString") -> bool:
        return self.sort_key() < other.sort_key()

    def __eq__(self, other: object) -> bool:
        if type(other) != PauliString:
            return False
        return self.n == other.n and self.x_mask == other.x_mask and self.z_mask == other.z_mask

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"PauliString('{self.label}')"
