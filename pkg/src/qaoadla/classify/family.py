#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class Family(Enum):
    PATH = "path"
    CYCLE = "cycle"
    BIPARTITE_EVEN_EVEN = "bipartite-even-even"
    BIPARTITE_EVEN_ODD = "bipartite-even-odd"
    BIPARTITE_ODD_ODD = "bipartite-odd-odd"
    # connected, neither bipartite nor a cycle
    ARCHETYPAL = "archetypal"
