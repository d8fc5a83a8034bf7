#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass

from .multiplicity_entry import MultiplicityEntry


@dataclass(frozen=True)
class MultiplicityTable:
    """multiplicities of the irreducible characters of the natural symmetry group.

    nonabelian automorphism groups only get the trivial character.
    """

    entries: tuple[MultiplicityEntry, ...]
    trivial_only: bool = False

    @property
    def trivial(self) -> int:
        return next(e.multiplicity for e in self.entries if e.label == ("t", "t"))

    def total_dimension(self) -> int:
        return sum(e.multiplicity * e.degree for e in self.entries)

    def entry(self, label: tuple[str, str]) -> MultiplicityEntry:
        return next(e for e in self.entries if e.label == label)

    def dual_dimensions(self) -> list[int]:
        """every nonzero multiplicity repeated by its degree, sorted descending"""
        return sorted((e.multiplicity for e in self.entries for _ in range(e.degree) if e.multiplicity), reverse=True)

    def to_dict(self) -> dict[str, object]:
        return {"trivial_only": self.trivial_only, "entries": [e.to_dict() for e in self.entries]}
