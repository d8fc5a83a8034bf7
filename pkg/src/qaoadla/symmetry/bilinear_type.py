#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import numpy as np
from scipy.linalg import svd

from .block_type import BlockType
from ..errors.numerical_error import NumericalError


class BilinearType:
    """decides whether an irreducible block preserves a symmetric or a skew-symmetric bilinear form.

    a form S with S H + H^t S = 0 for every generator H is unique up to scale when it exists, symmetric forms
    put the block into an orthogonal algebra and skew ones into a symplectic algebra.
    """

    cutoff: float = 1e-8
    # how much one of the symmetric and skew parts has to dominate the other
    dominance: float = 1e6

    @classmethod
    def of(cls, generators: list[np.ndarray]) -> BlockType:
        form: np.ndarray | None = cls.invariant_form(generators)
        if form is None:
            return BlockType.UNITARY

        symmetric: float = float(np.linalg.norm(form + form.T))
        skew: float = float(np.linalg.norm(form - form.T))
        if symmetric > cls.dominance * skew:
            block_type, sign = BlockType.ORTHOGONAL, 1.0
        elif skew > cls.dominance * symmetric:
            block_type, sign = BlockType.SYMPLECTIC, -1.0
        else:
            raise NumericalError("invariant form is neither symmetric nor skew-symmetric")

        # S conj(S) is a real multiple of the identity, positive for symmetric forms
        d: int = form.shape[0]
        square: np.ndarray = form @ form.conj()
        alpha: complex = np.trace(square) / d
        if sign * alpha.real <= 0 or np.abs(square - alpha * np.eye(d)).max() > 1e-6 * abs(alpha):
            expected: str = "positive" if sign > 0 else "negative"
            raise NumericalError(f"S conj(S) is not a {expected} multiple of the identity")
        return block_type

    @classmethod
    def invariant_form(cls, generators: list[np.ndarray]) -> np.ndarray | None:
        d: int = generators[0].shape[0]
        identity: np.ndarray = np.eye(d)
        # row-major vec: vec(S H) = (1 x H^t) vec(S) and vec(H^t S) = (H^t x 1) vec(S)
        system: np.ndarray = np.vstack([np.kron(identity, h.T) + np.kron(h.T, identity) for h in generators])

        _, values, vh = svd(system, full_matrices=system.shape[0] < system.shape[1])
        threshold: float = cls.cutoff * float(values[0]) if values.size else 0.0
        kernel: np.ndarray = vh[int((values > threshold).sum()) :]
        if kernel.shape[0] == 0:
            return None
        if kernel.shape[0] > 1:
            raise NumericalError(f"{kernel.shape[0]} independent invariant forms, the block is not irreducible")
        return kernel[0].reshape(d, d)
