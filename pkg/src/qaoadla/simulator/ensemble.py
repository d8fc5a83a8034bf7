#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

from enum import Enum


class Ensemble(Enum):
    COMPLETE = "complete"
    THREE_REGULAR = "3regular"
