#!/usr/bin/env python3

"""
script to define utility functions
"""

import logging
import time

import yaml
from rich.console import Console
from rich.logging import RichHandler

_HANDLER = None

console = Console(stderr=True)


def get_logger(name, level=None):
    """Return a logger wired to the shared rich handler"""
    global _HANDLER
    if _HANDLER is None:
        _HANDLER = RichHandler(console=console, show_path=False, markup=False)
        _HANDLER.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger = logging.getLogger(name)
    if _HANDLER not in logger.handlers:
        logger.addHandler(_HANDLER)
        logger.propagate = False
    if level is not None:
        logger.setLevel(level)
    return logger


def set_log_level(level):
    """Apply a level to every logger already handed out by get_logger"""
    for logger in logging.Logger.manager.loggerDict.values():
        if isinstance(logger, logging.Logger) and _HANDLER in logger.handlers:
            logger.setLevel(level)


def measure(operation):
    """Run operation once and return (result, elapsed seconds)"""
    start = time.perf_counter()
    result = operation()
    return result, time.perf_counter() - start


def read_yaml(file_path):
    """Read YAML file"""
    with open(file_path, "r", encoding="utf-8") as file:
        data = yaml.safe_load(file)
    return data or {}
