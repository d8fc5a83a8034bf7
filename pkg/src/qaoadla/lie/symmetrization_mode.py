#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class SymmetrizationMode(Enum):
    # average with the conjugation by X on every qubit
    Z2 = "z2"
    # average over the graph automorphisms
    AUT = "aut"
    # both averages, in either order
    NAT = "nat"
