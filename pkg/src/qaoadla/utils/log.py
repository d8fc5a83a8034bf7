#!/usr/bin/env python
#
# Copyright (c) 2026 Tim Klein Nijenhuis <tim@hetorus.nl>
#
# This file is part of qaoadla, a QAOA dynamical Lie algebra toolkit.

import logging
import sys

from .colors import Colors


class ColorFormatter(logging.Formatter):
    """colors the level name of every record, the message itself is left untouched"""

    level_colors: dict[int, tuple[str, ...]] = {
        logging.DEBUG: (Colors.BRIGHT_BLACK,),
        logging.INFO: (Colors.CYAN,),
        logging.WARNING: (Colors.YELLOW,),
        logging.ERROR: (Colors.BOLD, Colors.RED),
        logging.CRITICAL: (Colors.BOLD, Colors.RED),
    }

    def __init__(self, use_colors: bool = True):
        super().__init__("%(levelname)s %(name)s: %(message)s")
        self.use_colors: bool = use_colors

    def format(self, record: logging.LogRecord) -> str:
        message: str = super().format(record)
        if not self.use_colors:
            return message

        # only replace the leading level name, so messages containing it stay intact
        codes: tuple[str, ...] = self.level_colors.get(record.levelno, ())
        return message.replace(record.levelname, Colors.paint(record.levelname, *codes), 1)


class Log:
    # the logger every module logger of the package propagates to
    root_name: str = "qaoadla"

    @classmethod
    def setup(cls, level: int = logging.INFO) -> logging.Logger:
        logger: logging.Logger = logging.getLogger(cls.root_name)
        logger.setLevel(level)

        # remove handlers of an earlier setup, so repeated cli runs don't duplicate lines
        for handler in list(logger.handlers):
            logger.removeHandler(handler)

        # all logging goes to stderr, reports are written to stdout
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(ColorFormatter(use_colors=sys.stderr.isatty()))
        logger.addHandler(handler)
        logger.propagate = False
        return logger

    @classmethod
    def level_from_flags(cls, verbose: bool, quiet: bool) -> int:
        if verbose:
            return logging.DEBUG
        if quiet:
            return logging.WARNING
        return logging.INFO
