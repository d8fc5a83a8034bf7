#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import argparse
import os
from collections.abc import Callable
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

import numpy as np

from ..errors.input_error import InputError
from ..pauli.coefficient_mode import CoefficientMode

T = TypeVar("T")
R = TypeVar("R")


@dataclass(frozen=True)
class RunConfig:
    """deterministic configuration of a single run.

    identical configurations and inputs produce identical reports, whatever the thread count.
    """

    seed: int = 0
    threads: int | None = None
    mode: CoefficientMode | None = None
    allow_n8: bool = False

    # environment variable consulted when no thread count is given on the command line
    threads_variable = "QAOADLA_THREADS"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seed: int = getattr(args, "seed", 0) or 0
        threads: int | None = getattr(args, "threads", None)
        allow_n8: bool = bool(getattr(args, "allow_n8", False))

        # the environment variable is the fallback for a missing --threads
        if threads is None and (value := os.environ.get(cls.threads_variable)):
            try:
                threads = int(value)
            except ValueError:
                raise InputError(f"{cls.threads_variable} must be an integer, got '{value}'")
        if threads is not None and threads < 1:
            raise InputError(f"thread count must be positive, got {threads}")

        # an explicit mode override is given by name
        mode_name: str | None = getattr(args, "mode", None)
        mode: CoefficientMode | None = CoefficientMode[mode_name.upper()] if mode_name else None
        return cls(seed=seed, threads=threads, mode=mode, allow_n8=allow_n8)

    @property
    def worker_count(self) -> int:
        return self.threads or os.cpu_count() or 1

    @property
    def max_exact_qubits(self) -> int:
        return 8 if self.allow_n8 else 7

    def rng(self, stream: int = 0) -> np.random.Generator:
        """an independent generator for the given stream, e.g. a sample or graph index"""
        return np.random.default_rng(np.random.SeedSequence((self.seed, stream)))

    def map(self, function: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """apply the function to all items, possibly in parallel, returning the results in input order"""
        items = list(items)
        if self.worker_count == 1 or len(items) < 2:
            return [function(item) for item in items]

        with ThreadPoolExecutor(max_workers=self.worker_count) as executor:
            return list(executor.map(function, items))
