#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class BlockType(Enum):
    ORTHOGONAL = "orthogonal"
    SYMPLECTIC = "symplectic"
    UNITARY = "unitary"
    # blocks with a multiplicity above one are not tested
    UNDETERMINED = "undetermined"
