#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class AnsatzKind(Enum):
    # one parameter per vertex and per edge term
    FREE = "free"
    # the two summed generators of the original qaoa
    STANDARD = "standard"
    # one generator per vertex orbit and per edge orbit of the automorphism group
    ORBIT = "orbit"
    # the symmetrized free algebra, used as its own generator set
    NATURAL = "natural"
