#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass(frozen=True)
class MultiplicityEntry:
    # (flip label, automorphism character label), e.g. ("s", "t")
    label: tuple[str, str]
    multiplicity: int
    degree: int = 1

    def to_dict(self) -> dict[str, object]:
        return {"label": list(self.label), "m": self.multiplicity, "d": self.degree}
