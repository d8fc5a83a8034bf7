#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from dataclasses import dataclass


@dataclass(frozen=True)
class HierarchyReport:
    """dimensions of the standard, orbit, natural and free algebras of one graph and their inclusions"""

    dim_std: int
    dim_orbit: int
    dim_nat: int
    dim_free: int
    std_in_orbit: bool
    orbit_in_nat: bool
    nat_in_free: bool
    std_equals_nat: bool
    # only decided for archetypal graphs
    u_nat_dim: int | None = None
    u_nat_spanned: bool | None = None

    @property
    def chain_holds(self) -> bool:
        return self.std_in_orbit and self.orbit_in_nat and self.nat_in_free

    @property
    def holds(self) -> bool:
        return self.chain_holds and self.u_nat_spanned is not False

    def to_dict(self) -> dict[str, object]:
        return {
            "dims": {"standard": self.dim_std, "orbit": self.dim_orbit, "natural": self.dim_nat, "free": self.dim_free},
            "std_in_orbit": self.std_in_orbit,
            "orbit_in_nat": self.orbit_in_nat,
            "nat_in_free": self.nat_in_free,
            "std_equals_nat": self.std_equals_nat,
            "u_nat_dim": self.u_nat_dim,
            "u_nat_spanned": self.u_nat_spanned,
        }
