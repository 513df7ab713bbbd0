#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Utility modules
"""

from .logging_setup import setup_logging, reset_logging

__all__ = [
    "setup_logging",
    "reset_logging",
]
