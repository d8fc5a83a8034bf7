#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from .family import Family


@dataclass(frozen=True)
class FamilyReport:
    family: Family
    # e.g. 'so(8)' or 'su(16)+su(16)'
    iso_type: str
    dim_free: int
    # bipartition (0-based) for every bipartite graph, including paths and even cycles
    parts: tuple[frozenset[int], frozenset[int]] | None = None

    def to_dict(self) -> dict[str, object]:
        parts: list[list[int]] | None = None
        if self.parts is not None:
            parts = [sorted(v + 1 for v in part) for part in self.parts]
        return {"family": self.family.value, "iso_type": self.iso_type, "dim_free": self.dim_free, "parts": parts}
